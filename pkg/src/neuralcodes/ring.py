"""Power-set neural rings and recognition of neural rings from Cayley tables.

A finite commutative ring given by tables is the neural ring of some code
exactly when it has a subset ``S`` and a sequence ``T`` satisfying:

* N1: every element is a unique sum of distinct elements of ``S``;
* N2: ``t * s`` is ``0`` or ``s`` for every ``t`` in ``T`` and ``s`` in ``S``;
* N3: every pair of distinct ``s, s'`` in ``S`` is separated by some ``t``,
  meaning exactly one of ``t * s``, ``t * s'`` is zero.

Given such ``S`` and ``T``, each ``s`` becomes a codeword whose ``i``-th bit
records whether ``t_i * s`` is nonzero.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import log2
from typing import Optional, Sequence

from .core import Code, format_subset, trunk
from .errors import GuardError, NeuralCodeError, PreconditionError

MAX_S = 16
MAX_RING = 1 << 16


# -- (P(C), symmetric difference, intersection) ---------------------------------


def _same_base(code: Code, a, b):
    return code.check_subset(a), code.check_subset(b)


def ps_add(code: Code, a, b) -> frozenset:
    a, b = _same_base(code, a, b)
    return a ^ b


def ps_mul(code: Code, a, b) -> frozenset:
    a, b = _same_base(code, a, b)
    return a & b


@dataclass(frozen=True)
class PowerSetRing:
    base: Code

    @property
    def zero(self) -> frozenset:
        return frozenset()

    @property
    def one(self) -> frozenset:
        return self.base.words

    def add(self, a, b) -> frozenset:
        return ps_add(self.base, a, b)

    def mul(self, a, b) -> frozenset:
        return ps_mul(self.base, a, b)

    def elements(self) -> list:
        """All subsets, ordered by size then lexicographically."""
        words = sorted(self.base.words)
        out = []
        for k in range(len(words) + 1):
            out.extend(frozenset(c) for c in combinations(words, k))
        return out

    def to_abstract(self) -> AbstractRing:
        elems = self.elements()
        pos = {e: i for i, e in enumerate(elems)}
        add = tuple(tuple(pos[a ^ b] for b in elems) for a in elems)
        mul = tuple(tuple(pos[a & b] for b in elems) for a in elems)
        return AbstractRing(
            tuple(format_subset(e) for e in elems),
            add,
            mul,
            pos[self.zero],
            pos[self.one],
        )


# -- rings given by tables ----------------------------------------------------


@dataclass(frozen=True)
class AbstractRing:
    """A finite ring given by Cayley tables over element indices."""

    elements: tuple
    add: tuple
    mul: tuple
    zero: int
    one: int

    def __post_init__(self):
        k = len(self.elements)
        if k == 0:
            raise NeuralCodeError("a ring needs at least one element")
        if len(set(self.elements)) != k:
            raise NeuralCodeError("element labels must be distinct")
        for name, table in (("add", self.add), ("mul", self.mul)):
            if len(table) != k or any(len(row) != k for row in table):
                raise NeuralCodeError(f"{name} table is not {k}x{k}")
            if any(not 0 <= x < k for row in table for x in row):
                raise NeuralCodeError(f"{name} table is not closed")
        if not (0 <= self.zero < k and 0 <= self.one < k):
            raise NeuralCodeError("zero/one must be elements")

    @classmethod
    def from_labels(cls, elements, add_rows, mul_rows, zero, one) -> AbstractRing:
        elements = tuple(elements)
        pos = {e: i for i, e in enumerate(elements)}

        def lookup(label):
            if label not in pos:
                raise NeuralCodeError(f"unknown element {label!r}")
            return pos[label]

        add = tuple(tuple(lookup(x) for x in row) for row in add_rows)
        mul = tuple(tuple(lookup(x) for x in row) for row in mul_rows)
        return cls(elements, add, mul, lookup(zero), lookup(one))

    @property
    def order(self) -> int:
        return len(self.elements)

    def label(self, x: int) -> str:
        return self.elements[x]

    def index(self, label: str) -> int:
        try:
            return self.elements.index(label)
        except ValueError:
            raise NeuralCodeError(f"unknown element {label!r}") from None

    def relabel(self, perm: Sequence[int]) -> AbstractRing:
        """Reorder elements so that new element ``j`` is old element ``perm[j]``."""
        inv = {old: new for new, old in enumerate(perm)}
        k = self.order
        add = tuple(tuple(inv[self.add[perm[a]][perm[b]]] for b in range(k)) for a in range(k))
        mul = tuple(tuple(inv[self.mul[perm[a]][perm[b]]] for b in range(k)) for a in range(k))
        return AbstractRing(
            tuple(self.elements[p] for p in perm), add, mul, inv[self.zero], inv[self.one]
        )


def zmod(m: int) -> AbstractRing:
    return AbstractRing(
        tuple(str(i) for i in range(m)),
        tuple(tuple((a + b) % m for b in range(m)) for a in range(m)),
        tuple(tuple((a * b) % m for b in range(m)) for a in range(m)),
        0,
        1 % m,
    )


def gf2_quotient(modulus: int) -> AbstractRing:
    """F2[x]/(f) where ``f`` is given as a coefficient bitmask (bit k for x^k)."""
    deg = modulus.bit_length() - 1
    if deg < 1:
        raise NeuralCodeError("modulus must have degree at least 1")
    size = 1 << deg

    def mulmod(a, b):
        r = 0
        while b:
            if b & 1:
                r ^= a
            b >>= 1
            a <<= 1
            if a >> deg & 1:
                a ^= modulus
        return r

    return AbstractRing(
        tuple(format(a, f"0{deg}b") for a in range(size)),
        tuple(tuple(a ^ b for b in range(size)) for a in range(size)),
        tuple(tuple(mulmod(a, b) for b in range(size)) for a in range(size)),
        0,
        1,
    )


def direct_product(r: AbstractRing, s: AbstractRing) -> AbstractRing:
    pairs = [(a, b) for a in range(r.order) for b in range(s.order)]
    pos = {p: i for i, p in enumerate(pairs)}
    return AbstractRing(
        tuple(f"({r.label(a)},{s.label(b)})" for a, b in pairs),
        tuple(tuple(pos[(r.add[a][c], s.add[b][d])] for c, d in pairs) for a, b in pairs),
        tuple(tuple(pos[(r.mul[a][c], s.mul[b][d])] for c, d in pairs) for a, b in pairs),
        pos[(r.zero, s.zero)],
        pos[(r.one, s.one)],
    )


@dataclass
class AxiomReport:
    violations: list = field(default_factory=list)  # (axiom, witness labels)

    @property
    def ok(self) -> bool:
        return not self.violations


def check_ring_axioms(ring: AbstractRing) -> AxiomReport:
    """Check the commutative ring axioms by full enumeration."""
    report = AxiomReport()
    els = range(ring.order)
    add, mul, lab = ring.add, ring.mul, ring.label

    def bad(axiom, *xs):
        report.violations.append((axiom, tuple(lab(x) for x in xs)))

    for a in els:
        if add[ring.zero][a] != a:
            bad("additive identity", a)
        if mul[ring.one][a] != a:
            bad("multiplicative identity", a)
        if not any(add[a][b] == ring.zero for b in els):
            bad("additive inverse", a)
        for b in els:
            if add[a][b] != add[b][a]:
                bad("additive commutativity", a, b)
            if mul[a][b] != mul[b][a]:
                bad("multiplicative commutativity", a, b)
            for c in els:
                if add[add[a][b]][c] != add[a][add[b][c]]:
                    bad("additive associativity", a, b, c)
                if mul[mul[a][b]][c] != mul[a][mul[b][c]]:
                    bad("multiplicative associativity", a, b, c)
                if mul[a][add[b][c]] != add[mul[a][b]][mul[a][c]]:
                    bad("distributivity", a, b, c)
    return report


# -- N1-N3 ----------------------------------------------------------------------


@dataclass(frozen=True)
class STCandidate:
    S: tuple  # element indices
    T: tuple  # element indices, may repeat


@dataclass
class NReport:
    n1: bool = True
    n2: bool = True
    n3: bool = True
    n1_witness: Optional[str] = None
    n2_witness: Optional[tuple] = None  # (t_i position, s)
    n3_witness: Optional[tuple] = None  # (s, s')
    notes: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.n1 and self.n2 and self.n3


def _subset_sums(ring: AbstractRing, S: Sequence[int]) -> list:
    """Sum of each subset of ``S``; subset ``mask`` selects ``S[j]`` when bit j is set."""
    sums = [ring.zero]
    for s in S:
        sums += [ring.add[x][s] for x in sums]
    return sums


def verify_N_conditions(
    ring: AbstractRing, cand: STCandidate, max_s: int = MAX_S
) -> NReport:
    S, T = tuple(cand.S), tuple(cand.T)
    if not S:
        raise NeuralCodeError("S must be nonempty")
    if len(S) > max_s:
        raise GuardError(f"|S|={len(S)} exceeds the enumeration bound {max_s}")
    if ring.order == 1:
        raise PreconditionError("the zero ring is excluded")
    lab = ring.label
    report = NReport()
    if len(set(S)) != len(S):
        report.n1 = False
        report.n1_witness = "S contains a repeated element"
    else:
        sums = _subset_sums(ring, S)
        seen = {}
        for mask, x in enumerate(sums):
            if x in seen:
                report.n1 = False
                report.n1_witness = (
                    f"{lab(x)} is the sum of two different subsets of S"
                    f" (masks {seen[x]} and {mask})"
                )
                break
            seen[x] = mask
        if report.n1:
            missing = [x for x in range(ring.order) if x not in seen]
            if missing:
                report.n1 = False
                report.n1_witness = f"{lab(missing[0])} is not a sum of elements of S"

    for i, t in enumerate(T, start=1):
        for s in S:
            if ring.mul[t][s] not in (ring.zero, s):
                report.n2 = False
                report.n2_witness = (i, lab(s))
                break
        if not report.n2:
            break

    if not T:
        report.notes.append(
            "T is empty (n = 0); only sequences of length n >= 1 are considered"
        )
        report.n3 = False
    for j, k in combinations(S, 2):
        if not any(
            (ring.mul[t][j] == ring.zero) != (ring.mul[t][k] == ring.zero) for t in T
        ):
            report.n3 = False
            report.n3_witness = (lab(j), lab(k))
            break
    return report


def decompose(ring: AbstractRing, S: Sequence[int]) -> dict:
    """Map each element to the set of positions in ``S`` whose sum it is (assumes N1)."""
    out = {}
    for mask, x in enumerate(_subset_sums(ring, S)):
        out[x] = frozenset(j for j in range(len(S)) if mask >> j & 1)
    return out


def is_ring_isomorphism(ring: AbstractRing, code: Code, phi: dict) -> bool:
    """Check that ``phi`` (element index -> subset of code) is a ring isomorphism."""
    if len(set(phi.values())) != ring.order or ring.order != 1 << len(code):
        return False
    if phi[ring.zero] != frozenset() or phi[ring.one] != code.words:
        return False
    for a in range(ring.order):
        for b in range(ring.order):
            if phi[ring.add[a][b]] != phi[a] ^ phi[b]:
                return False
            if phi[ring.mul[a][b]] != phi[a] & phi[b]:
                return False
    return True


def construct_code_from_ring(ring: AbstractRing, cand: STCandidate):
    """Build the code whose neural ring is ``ring``, with the isomorphism.

    Returns ``(code, words, phi)``: ``words[j]`` is the codeword for ``S[j]``
    and ``phi`` maps element indices to subsets of the code.
    """
    report = verify_N_conditions(ring, cand)
    if not report.ok:
        raise PreconditionError(f"N conditions fail: {describe_n_report(ring, report)}")
    S, T = tuple(cand.S), tuple(cand.T)
    words = [
        "".join("0" if ring.mul[t][s] == ring.zero else "1" for t in T) for s in S
    ]
    if len(set(words)) != len(words):
        raise PreconditionError("constructed words are not distinct")
    code = Code(len(T), frozenset(words))
    parts = decompose(ring, S)
    phi = {x: frozenset(words[j] for j in js) for x, js in parts.items()}

    if not is_ring_isomorphism(ring, code, phi):
        raise PreconditionError("constructed map is not a ring isomorphism")
    for j, s in enumerate(S):
        if phi[s] != {words[j]}:
            raise PreconditionError(f"phi({ring.label(s)}) is not a singleton codeword")
    for i, t in enumerate(T, start=1):
        if phi[t] != trunk(code, {i}):
            raise PreconditionError(f"phi(t_{i}) is not the simple trunk {i}")
    return code, words, phi


def search_ST(
    ring: AbstractRing, max_ring: int = MAX_RING, max_s: int = MAX_S
) -> Optional[STCandidate]:
    """Find ``S`` and ``T`` satisfying N1-N3, or None if the ring is not neural.

    ``S`` ranges over subsets of the nonzero elements of size log2|R| (N1
    forces ``2^|S| = |R|``), in element order. For each ``S`` satisfying N1,
    ``T`` is every nonzero element satisfying N2; N3 only gets easier as
    ``T`` grows and zero never separates anything, so this ``T`` decides it.
    """
    if ring.order > max_ring:
        raise GuardError(f"ring order {ring.order} exceeds the bound {max_ring}")
    if ring.order == 1:
        raise PreconditionError("the zero ring is excluded")
    k = log2(ring.order)
    if k != int(k):
        return None
    k = int(k)
    if k > max_s:
        raise GuardError(f"|S|={k} exceeds the enumeration bound {max_s}")
    nonzero = [x for x in range(ring.order) if x != ring.zero]
    for S in combinations(nonzero, k):
        sums = _subset_sums(ring, S)
        if len(set(sums)) != ring.order:
            continue
        T = tuple(
            t for t in nonzero if all(ring.mul[t][s] in (ring.zero, s) for s in S)
        )
        cand = STCandidate(S, T)
        if T and verify_N_conditions(ring, cand, max_s).ok:
            return cand
    return None


def describe_n_report(ring: AbstractRing, report: NReport) -> str:
    parts = []
    if not report.n1:
        parts.append(f"N1 fails: {report.n1_witness}")
    if not report.n2:
        i, s = report.n2_witness
        parts.append(f"N2 fails: t_{i}*{s} is neither 0 nor {s}")
    if not report.n3:
        if report.n3_witness:
            a, b = report.n3_witness
            parts.append(f"N3 fails: no t separates {a} and {b}")
        else:
            parts.append("N3 fails")
    return "; ".join(parts) if parts else "N1, N2, N3 hold"
