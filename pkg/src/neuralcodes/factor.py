"""Factorization of monomial maps into basic maps, and of monomial
isomorphisms into the five isomorphism moves.

For ``q: C -> D`` with ``C`` on ``m`` neurons and ``D`` on ``n`` neurons the
pipeline is always the same: append the ``n`` coordinates of ``q(u)`` to each
``u`` one at a time, swap the blocks ``u v -> v u``, delete the ``m`` trailing
coordinates of ``u`` starting from the last, then include the image into
``D``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .core import (
    Code,
    constant_zero_neuron,
    format_index_set,
    recognize_trunk,
    redundant_neuron,
    trunk,
)
from .errors import NeuralCodeError, PreconditionError
from .maps import (
    BasicMap,
    CodeMap,
    apply_basic,
    classify,
    compose,
    defining_vector,
    identity,
)

ISO_KINDS = ("permute", "add-redundant", "del-redundant", "add-zero", "del-zero")


@dataclass(frozen=True)
class IsoMove:
    """One of the five bijective moves.

    ``permute`` uses ``perm``; ``add-redundant`` appends a neuron redundant
    to ``alpha``; ``del-redundant`` deletes neuron ``index`` with witness
    ``alpha``; ``add-zero`` appends a constant-zero neuron; ``del-zero``
    deletes the constant-zero neuron ``index``.
    """

    kind: str
    index: Optional[int] = None
    perm: Optional[tuple] = None
    alpha: Optional[frozenset] = None

    def __post_init__(self):
        if self.kind not in ISO_KINDS:
            raise NeuralCodeError(f"unknown isomorphism move {self.kind!r}")
        if self.alpha is not None:
            object.__setattr__(self, "alpha", frozenset(self.alpha))
        if self.perm is not None:
            object.__setattr__(self, "perm", tuple(self.perm))

    def __str__(self):
        if self.kind == "permute":
            return "permute " + " ".join(str(k) for k in self.perm)
        if self.kind == "add-redundant":
            return f"add-redundant {format_index_set(self.alpha)}"
        if self.kind == "del-redundant":
            return f"del-redundant {self.index} {format_index_set(self.alpha)}"
        if self.kind == "del-zero":
            return f"del-zero {self.index}"
        return self.kind


def apply_move(move: IsoMove, code: Code) -> CodeMap:
    """Apply a move after validating its witness against ``code``."""
    kind = move.kind
    if kind == "permute":
        return apply_basic(BasicMap("per", perm=move.perm), code)
    if kind == "add-zero":
        return apply_basic(BasicMap("acz"), code)
    if kind == "add-redundant":
        if not trunk(code, move.alpha):
            raise NeuralCodeError(
                f"trunk {format_index_set(move.alpha)} is empty; the new neuron would be constant zero"
            )
        return apply_basic(BasicMap("atn", alpha=move.alpha), code)
    code.check_index(move.index)
    i = move.index
    if kind == "del-zero":
        if not constant_zero_neuron(code, i):
            raise NeuralCodeError(f"neuron {i} is not constant zero")
    else:
        alpha = move.alpha
        ti = trunk(code, {i})
        if i in alpha or not ti or trunk(code, alpha) != ti:
            raise NeuralCodeError(f"neuron {i} is not redundant to {format_index_set(alpha)}")
    return apply_basic(BasicMap("del", index=i), code)


@dataclass(frozen=True)
class Factorization:
    """Steps and the codes between them: ``codes[k]`` is the domain of ``steps[k]``."""

    steps: tuple
    codes: tuple

    def __iter__(self):
        return iter(self.steps)

    def __len__(self):
        return len(self.steps)


def _apply_step(step, code: Code) -> CodeMap:
    if isinstance(step, IsoMove):
        return apply_move(step, code)
    return apply_basic(step, code)


def replay(f: Factorization, start: Code) -> CodeMap:
    result = identity(start)
    for k, step in enumerate(f.steps):
        try:
            result = compose(_apply_step(step, result.codomain), result)
        except NeuralCodeError as exc:
            raise NeuralCodeError(f"step {k + 1} ({step}) is not applicable: {exc}") from exc
    return result


def _block_swap(m: int, n: int) -> tuple:
    # new position k takes old coordinate perm[k-1]: u (m bits) v (n bits) -> v u
    return tuple(m + k for k in range(1, n + 1)) + tuple(range(1, m + 1))


def _append_steps(q: CodeMap, linear: bool) -> list:
    c = q.domain
    steps = []
    for part in defining_vector(q).parts:
        if not part:
            steps.append(BasicMap("acz"))
        elif linear:
            if part == c.words:
                steps.append(BasicMap("aco"))
            else:
                j = next(j for j in c.indices if trunk(c, {j}) == part)
                steps.append(BasicMap("rep", index=j))
        else:
            steps.append(BasicMap("atn", alpha=recognize_trunk(c, part)))
    return steps


def _build(q: CodeMap, steps: list) -> Factorization:
    codes = [q.domain]
    for step in steps:
        codes.append(_apply_step(step, codes[-1]).codomain)
    return Factorization(tuple(steps), tuple(codes))


def _pipeline(q: CodeMap, linear: bool) -> Factorization:
    m, n = q.domain.n, q.codomain.n
    steps = _append_steps(q, linear)
    steps.append(BasicMap("per", perm=_block_swap(m, n)))
    steps.extend(BasicMap("del", index=n + m + 1 - i) for i in range(1, m + 1))
    steps.append(BasicMap("inj", target=q.codomain))
    return _build(q, steps)


def factor_monomial(q: CodeMap) -> Factorization:
    if not classify(q).is_monomial:
        raise PreconditionError("map is not monomial")
    return _pipeline(q, linear=False)


def factor_linear_monomial(q: CodeMap) -> Factorization:
    if not classify(q).is_linear_monomial:
        raise PreconditionError("map is not linear monomial")
    return _pipeline(q, linear=True)


# -- monomial isomorphisms ----------------------------------------------------------


@dataclass(frozen=True)
class IsoVerdict:
    iso: bool
    reason: str

    def __bool__(self):
        return self.iso


def is_monomial_iso(q: CodeMap) -> IsoVerdict:
    if not q.is_injective():
        return IsoVerdict(False, "not injective")
    if not q.is_bijective():
        return IsoVerdict(False, "not surjective")
    if not classify(q).is_monomial:
        return IsoVerdict(False, "forward map is not monomial")
    if not classify(q.inverse()).is_monomial:
        return IsoVerdict(False, "inverse map is not monomial")
    return IsoVerdict(True, "bijective and monomial in both directions")


@dataclass(frozen=True)
class DeletionCheck:
    iso: bool
    reason: str
    witness: Optional[frozenset] = None


def del_iso_check(code: Code, i: int) -> DeletionCheck:
    """Decide whether deleting neuron ``i`` is a monomial isomorphism.

    The answer comes from the redundancy / constant-zero test and is
    cross-checked against the direct definition.
    """
    code.check_index(i)
    if constant_zero_neuron(code, i):
        result = DeletionCheck(True, "constant zero")
    else:
        alpha = redundant_neuron(code, i)
        if alpha is not None:
            result = DeletionCheck(True, f"redundant to {format_index_set(alpha)}", alpha)
        else:
            result = DeletionCheck(False, "neither redundant nor constant zero")
    direct = is_monomial_iso(apply_basic(BasicMap("del", index=i), code))
    if direct.iso != result.iso:
        raise AssertionError(
            f"deletion of neuron {i}: redundancy test says {result.iso}, "
            f"direct check says {direct.iso} ({direct.reason})"
        )
    return result


def factor_monomial_iso(q: CodeMap) -> Factorization:
    verdict = is_monomial_iso(q)
    if not verdict:
        raise PreconditionError(f"map is not a monomial isomorphism: {verdict.reason}")
    c = q.domain
    m, n = c.n, q.codomain.n
    moves = []
    for part in defining_vector(q).parts:
        if part:
            moves.append(IsoMove("add-redundant", alpha=recognize_trunk(c, part)))
        else:
            moves.append(IsoMove("add-zero"))
    moves.append(IsoMove("permute", perm=_block_swap(m, n)))

    codes = [c]
    for move in moves:
        codes.append(apply_move(move, codes[-1]).codomain)
    for i in range(1, m + 1):
        pos = n + m + 1 - i
        check = del_iso_check(codes[-1], pos)
        if not check.iso:
            raise PreconditionError(f"deletion of neuron {pos} cannot be certified")
        if check.witness is None:
            move = IsoMove("del-zero", index=pos)
        else:
            move = IsoMove("del-redundant", index=pos, alpha=check.witness)
        moves.append(move)
        codes.append(apply_move(move, codes[-1]).codomain)
    return Factorization(tuple(moves), tuple(codes))
