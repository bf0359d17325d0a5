"""Neural codes, their neural rings, and monomial code maps."""

from .core import (
    Code,
    closed_support,
    constant_zero_neuron,
    recognize_trunk,
    redundant_neuron,
    simple_trunks,
    trunk,
)
from .errors import GuardError, NeuralCodeError, ParseError, PreconditionError
from .factor import (
    Factorization,
    IsoMove,
    del_iso_check,
    factor_linear_monomial,
    factor_monomial,
    factor_monomial_iso,
    is_monomial_iso,
    replay,
)
from .maps import (
    BasicMap,
    CodeMap,
    MapKind,
    RingHom,
    SubsetVector,
    apply_basic,
    check_H_conditions,
    classify,
    compose,
    defining_vector,
    hom_to_code_map,
    identity,
    inverse_image_hom,
    map_from_vector,
)
from .poly import MultilinearPoly, evaluate, lagrange, parse_poly
from .ring import AbstractRing, PowerSetRing, STCandidate, search_ST

__version__ = "0.1.0"
