"""Code maps, their inverse-image homomorphisms, and monomial classification."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from typing import Optional, Sequence

from .core import (
    Code,
    format_index_set,
    format_subset,
    format_word,
    recognize_trunk,
    trunk,
)
from .errors import GuardError, NeuralCodeError, PreconditionError

MAX_FULL_TABLE = 8


@dataclass(frozen=True, eq=False)
class CodeMap:
    """A total map ``domain -> codomain`` given by its table."""

    domain: Code
    codomain: Code
    table: dict

    def __post_init__(self):
        table = dict(self.table)
        if set(table) != self.domain.words:
            missing = self.domain.words - set(table)
            extra = set(table) - self.domain.words
            if missing:
                raise NeuralCodeError(f"map is not total: no image for {format_subset(missing)}")
            raise NeuralCodeError(f"map has inputs outside the domain: {format_subset(extra)}")
        for u, v in table.items():
            if v not in self.codomain.words:
                raise NeuralCodeError(
                    f"image {format_word(v)} of {format_word(u)} is not in the codomain"
                )
        object.__setattr__(self, "table", table)

    def __call__(self, u: str) -> str:
        return self.table[u]

    def __eq__(self, other):
        if not isinstance(other, CodeMap):
            return NotImplemented
        return (
            self.domain == other.domain
            and self.codomain == other.codomain
            and self.table == other.table
        )

    def __hash__(self):
        return hash((self.domain, self.codomain, frozenset(self.table.items())))

    def __repr__(self):
        pairs = ", ".join(f"{format_word(u)}->{format_word(v)}" for u, v in self.items())
        return f"CodeMap({pairs})"

    def items(self):
        return sorted(self.table.items())

    def image(self) -> Code:
        return Code(self.codomain.n, frozenset(self.table.values()))

    def preimage(self, subset) -> frozenset:
        subset = frozenset(subset)
        return frozenset(u for u, v in self.table.items() if v in subset)

    def is_injective(self) -> bool:
        return len(set(self.table.values())) == len(self.table)

    def is_bijective(self) -> bool:
        return self.is_injective() and set(self.table.values()) == self.codomain.words

    def inverse(self) -> CodeMap:
        if not self.is_bijective():
            raise PreconditionError("map is not bijective")
        return CodeMap(self.codomain, self.domain, {v: u for u, v in self.table.items()})


def identity(code: Code) -> CodeMap:
    return CodeMap(code, code, {w: w for w in code.words})


def compose(p: CodeMap, q: CodeMap) -> CodeMap:
    """``p`` after ``q``."""
    if q.codomain != p.domain:
        raise NeuralCodeError("cannot compose: codomain of the first map is not the domain of the second")
    return CodeMap(q.domain, p.codomain, {u: p.table[v] for u, v in q.table.items()})


def equal(q: CodeMap, r: CodeMap) -> bool:
    return q == r


def same_table(q: CodeMap, r: CodeMap) -> bool:
    """Equal as functions on the same domain, ignoring the declared codomains."""
    return q.domain == r.domain and q.table == r.table


# -- ring homomorphisms P(D) -> P(C) ----------------------------------------------


@dataclass(frozen=True, eq=False)
class RingHom:
    """A map ``P(D) -> P(C)`` stored by its values on singletons.

    ``full_table``, when present, holds values on every subset of ``D`` as
    supplied from outside; it is checked against the singleton values by H2.
    """

    domain_code: Code  # D
    codomain_code: Code  # C
    singleton_images: dict
    full_table: Optional[dict] = None

    def __post_init__(self):
        images = {v: frozenset() for v in self.domain_code.words}
        for v, img in self.singleton_images.items():
            if v not in self.domain_code.words:
                raise NeuralCodeError(f"{format_word(v)} is not a word of the domain code")
            images[v] = self.codomain_code.check_subset(img)
        object.__setattr__(self, "singleton_images", images)
        if self.full_table is not None:
            table = {}
            for b, img in self.full_table.items():
                table[self.domain_code.check_subset(b)] = self.codomain_code.check_subset(img)
            object.__setattr__(self, "full_table", table)

    @classmethod
    def from_full_table(cls, domain_code: Code, codomain_code: Code, table: dict) -> RingHom:
        if len(domain_code) > MAX_FULL_TABLE:
            raise GuardError(f"|D|={len(domain_code)} exceeds the full-table bound {MAX_FULL_TABLE}")
        table = {frozenset(b): frozenset(img) for b, img in table.items()}
        missing = [b for b in _all_subsets(domain_code) if b not in table]
        if missing:
            raise NeuralCodeError(f"full table has no value for {format_subset(missing[0])}")
        singles = {v: table[frozenset([v])] for v in domain_code.words}
        return cls(domain_code, codomain_code, singles, table)

    def __call__(self, subset) -> frozenset:
        subset = self.domain_code.check_subset(subset)
        if self.full_table is not None:
            return self.full_table[subset]
        return _union(self.singleton_images, subset)

    def __eq__(self, other):
        if not isinstance(other, RingHom):
            return NotImplemented
        return (
            self.domain_code == other.domain_code
            and self.codomain_code == other.codomain_code
            and self.singleton_images == other.singleton_images
            and self._table_or_none() == other._table_or_none()
        )

    def __hash__(self):
        return hash((self.domain_code, self.codomain_code, frozenset(self.singleton_images.items())))

    def _table_or_none(self):
        # a full table consistent with unions is the same homomorphism
        if self.full_table is None:
            return None
        if all(self.full_table[b] == _union(self.singleton_images, b) for b in self.full_table):
            return None
        return frozenset(self.full_table.items())


def _union(images: dict, subset) -> frozenset:
    out = frozenset()
    for v in subset:
        out |= images[v]
    return out


def _all_subsets(code: Code) -> list:
    words = sorted(code.words)
    return [frozenset(c) for k in range(len(words) + 1) for c in combinations(words, k)]


def inverse_image_hom(q: CodeMap) -> RingHom:
    images = {v: frozenset() for v in q.codomain.words}
    for u, v in q.table.items():
        images[v] = images[v] | {u}
    return RingHom(q.codomain, q.domain, images)


@dataclass
class HReport:
    h1: bool = True
    h2: bool = True
    h3: bool = True
    h2_structural: bool = True
    h1_witness: Optional[tuple] = None  # (v1, v2, shared words)
    h2_witness: Optional[frozenset] = None  # a subset B where phi(B) is not the union
    h3_witness: Optional[frozenset] = None  # words of C not covered

    @property
    def ok(self) -> bool:
        return self.h1 and self.h2 and self.h3


def check_H_conditions(phi: RingHom) -> HReport:
    report = HReport()
    images = phi.singleton_images
    for v1, v2 in combinations(sorted(images), 2):
        shared = images[v1] & images[v2]
        if shared:
            report.h1 = False
            report.h1_witness = (v1, v2, shared)
            break
    if phi.full_table is not None:
        report.h2_structural = False
        for b in _all_subsets(phi.domain_code):
            if phi.full_table[b] != _union(images, b):
                report.h2 = False
                report.h2_witness = b
                break
    covered = phi(phi.domain_code.words)
    if covered != phi.codomain_code.words:
        report.h3 = False
        report.h3_witness = phi.codomain_code.words - covered
    return report


def hom_to_code_map(phi: RingHom) -> CodeMap:
    report = check_H_conditions(phi)
    if not report.ok:
        raise PreconditionError(describe_h_report(report))
    table = {}
    for v, img in phi.singleton_images.items():
        for u in img:
            table[u] = v
    return CodeMap(phi.codomain_code, phi.domain_code, table)


def is_ring_hom(phi: RingHom) -> bool:
    """Direct check on all of P(D) that ``phi`` preserves +, * and 1."""
    subsets = _all_subsets(phi.domain_code)
    values = {b: phi(b) for b in subsets}
    if values[phi.domain_code.words] != phi.codomain_code.words:
        return False
    for a in subsets:
        for b in subsets:
            if values[a ^ b] != values[a] ^ values[b]:
                return False
            if values[a & b] != values[a] & values[b]:
                return False
    return True


def describe_h_report(report: HReport) -> str:
    parts = []
    if not report.h1:
        v1, v2, shared = report.h1_witness
        parts.append(
            f"H1 fails: images of {format_word(v1)} and {format_word(v2)} share {format_subset(shared)}"
        )
    if not report.h2:
        parts.append(f"H2 fails: value on {format_subset(report.h2_witness)} is not the union")
    if not report.h3:
        parts.append(f"H3 fails: image of D misses {format_subset(report.h3_witness)}")
    return "; ".join(parts) if parts else "H1, H2, H3 hold"


# -- subset vectors ---------------------------------------------------------------


@dataclass(frozen=True)
class SubsetVector:
    base: Code
    parts: tuple

    def __post_init__(self):
        object.__setattr__(
            self, "parts", tuple(self.base.check_subset(p) for p in self.parts)
        )

    def __len__(self):
        return len(self.parts)


def map_from_vector(svec: SubsetVector) -> CodeMap:
    """The unique map ``C -> F2^n`` pulling the i-th simple trunk back to ``parts[i]``."""
    n = len(svec.parts)
    table = {
        u: "".join("1" if u in part else "0" for part in svec.parts) for u in svec.base.words
    }
    return CodeMap(svec.base, Code.full(n), table)


def defining_vector(q: CodeMap) -> SubsetVector:
    return SubsetVector(
        q.domain, tuple(q.preimage(trunk(q.codomain, {i})) for i in q.codomain.indices)
    )


# -- classification ---------------------------------------------------------------


class MapKind(str, Enum):
    GENERAL = "general"
    MONOMIAL = "monomial"
    LINEAR_MONOMIAL = "linear_monomial"


@dataclass(frozen=True)
class CoordinateEvidence:
    index: int
    preimage: frozenset
    trunk: Optional[frozenset]  # maximal alpha if the preimage is a nonempty trunk
    simple: Optional[int]  # smallest j with Tk_j equal to the preimage
    empty: bool
    whole: bool

    @property
    def monomial(self) -> bool:
        return self.empty or self.trunk is not None

    @property
    def linear(self) -> bool:
        return self.empty or self.whole or self.simple is not None

    def describe(self) -> str:
        if self.empty:
            return "empty"
        if self.whole:
            return "whole code"
        if self.simple is not None:
            return f"simple trunk {self.simple}"
        if self.trunk is not None:
            return f"trunk {format_index_set(self.trunk)}"
        return "not a trunk"


@dataclass(frozen=True)
class MapClass:
    kind: MapKind
    evidence: tuple = field(default=())

    @property
    def is_monomial(self) -> bool:
        return self.kind in (MapKind.MONOMIAL, MapKind.LINEAR_MONOMIAL)

    @property
    def is_linear_monomial(self) -> bool:
        return self.kind is MapKind.LINEAR_MONOMIAL


def coordinate_evidence(code: Code, index: int, preimage: frozenset) -> CoordinateEvidence:
    alpha = recognize_trunk(code, preimage) if preimage else None
    simple = next((j for j in code.indices if trunk(code, {j}) == preimage), None)
    return CoordinateEvidence(
        index=index,
        preimage=preimage,
        trunk=alpha,
        simple=simple,
        empty=not preimage,
        whole=preimage == code.words,
    )


def classify(q: CodeMap) -> MapClass:
    evidence = tuple(
        coordinate_evidence(q.domain, i, part)
        for i, part in enumerate(defining_vector(q).parts, start=1)
    )
    if all(e.linear for e in evidence):
        kind = MapKind.LINEAR_MONOMIAL
    elif all(e.monomial for e in evidence):
        kind = MapKind.MONOMIAL
    else:
        kind = MapKind.GENERAL
    return MapClass(kind, evidence)


# -- basic maps -------------------------------------------------------------------

BASIC_KINDS = ("acz", "aco", "del", "rep", "per", "inj", "atn")
LINEAR_KINDS = ("acz", "aco", "del", "rep", "per", "inj")


@dataclass(frozen=True)
class BasicMap:
    """Descriptor of one of the seven basic monomial maps.

    ``index`` is used by del/rep, ``perm`` by per (one-line images, 1-based),
    ``alpha`` by atn and ``target`` by inj.
    """

    kind: str
    index: Optional[int] = None
    perm: Optional[tuple] = None
    alpha: Optional[frozenset] = None
    target: Optional[Code] = None

    def __post_init__(self):
        if self.kind not in BASIC_KINDS:
            raise NeuralCodeError(f"unknown basic map {self.kind!r}")
        if self.alpha is not None:
            object.__setattr__(self, "alpha", frozenset(self.alpha))
        if self.perm is not None:
            object.__setattr__(self, "perm", tuple(self.perm))

    def __str__(self):
        if self.kind in ("del", "rep"):
            return f"{self.kind} {self.index}"
        if self.kind == "per":
            return "per " + " ".join(str(k) for k in self.perm)
        if self.kind == "atn":
            return "aco" if not self.alpha else f"atn {format_index_set(self.alpha)}"
        return self.kind


def _word_map(code: Code, fn) -> dict:
    return {w: fn(w) for w in code.words}


def _check_perm(perm: Sequence[int], n: int) -> None:
    if sorted(perm) != list(range(1, n + 1)):
        raise NeuralCodeError(f"{list(perm)} is not a permutation of 1..{n}")


def apply_basic(desc: BasicMap, code: Code) -> CodeMap:
    kind = desc.kind
    if kind == "acz":
        table = _word_map(code, lambda w: w + "0")
    elif kind == "aco":
        table = _word_map(code, lambda w: w + "1")
    elif kind == "del":
        code.check_index(desc.index)
        i = desc.index
        table = _word_map(code, lambda w: w[: i - 1] + w[i:])
    elif kind == "rep":
        code.check_index(desc.index)
        i = desc.index
        table = _word_map(code, lambda w: w + w[i - 1])
    elif kind == "per":
        _check_perm(desc.perm, code.n)
        table = _word_map(code, lambda w: "".join(w[k - 1] for k in desc.perm))
    elif kind == "atn":
        members = trunk(code, desc.alpha or ())
        table = _word_map(code, lambda w: w + ("1" if w in members else "0"))
    else:  # inj
        target = desc.target
        if target is None or target.n != code.n or not code.words <= target.words:
            raise NeuralCodeError("inj needs a target code containing the domain")
        return CodeMap(code, target, _word_map(code, lambda w: w))
    n_out = len(next(iter(table.values()))) if table else _out_len(desc, code.n)
    return CodeMap(code, Code(n_out, frozenset(table.values())), table)


def _out_len(desc: BasicMap, n: int) -> int:
    if desc.kind in ("acz", "aco", "rep", "atn"):
        return n + 1
    if desc.kind == "del":
        return n - 1
    return n
