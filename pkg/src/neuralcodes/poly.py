"""Multilinear polynomials over F2 and the ideal of a code.

Polynomials are kept in normal form modulo the Boolean ideal
``(X1^2 - X1, ..., Xn^2 - Xn)``: every monomial is squarefree and occurs at
most once. A monomial is stored as a bitmask (bit ``i-1`` set for ``Xi``), so
the constant 1 is the mask 0.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import product

from .core import Code, format_word
from .errors import GuardError, NeuralCodeError, ParseError

MAX_N = 20


def _mask_indices(mask: int) -> tuple:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def _word_mask(w: str) -> int:
    m = 0
    for i, ch in enumerate(w):
        if ch == "1":
            m |= 1 << i
    return m


@dataclass(frozen=True)
class MultilinearPoly:
    n: int
    monomials: frozenset  # of int bitmasks

    @classmethod
    def zero(cls, n: int) -> MultilinearPoly:
        return cls(n, frozenset())

    @classmethod
    def one(cls, n: int) -> MultilinearPoly:
        return cls(n, frozenset([0]))

    @classmethod
    def variable(cls, n: int, i: int) -> MultilinearPoly:
        if not 1 <= i <= n:
            raise NeuralCodeError(f"variable X{i} out of range 1..{n}")
        return cls(n, frozenset([1 << (i - 1)]))

    @classmethod
    def from_index_sets(cls, n: int, sets) -> MultilinearPoly:
        """Build from an iterable of index collections; repeats cancel mod 2."""
        acc = set()
        for s in sets:
            m = 0
            for i in s:
                if not 1 <= i <= n:
                    raise NeuralCodeError(f"variable X{i} out of range 1..{n}")
                m |= 1 << (i - 1)
            acc ^= {m}
        return cls(n, frozenset(acc))

    def _check(self, other):
        if not isinstance(other, MultilinearPoly):
            return NotImplemented
        if other.n != self.n:
            raise NeuralCodeError(f"variable counts differ: {self.n} vs {other.n}")
        return None

    def __add__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return MultilinearPoly(self.n, self.monomials ^ other.monomials)

    __sub__ = __add__

    def __mul__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        acc = set()
        for a in self.monomials:
            for b in other.monomials:
                acc ^= {a | b}
        return MultilinearPoly(self.n, frozenset(acc))

    def __bool__(self):
        return bool(self.monomials)

    def index_sets(self) -> list:
        """Monomials as sorted index tuples, in lexicographic order."""
        return sorted(_mask_indices(m) for m in self.monomials)

    def __str__(self):
        if not self.monomials:
            return "0"
        terms = []
        for idx in self.index_sets():
            terms.append("*".join(f"X{i}" for i in idx) if idx else "1")
        return " + ".join(terms)


def evaluate(f: MultilinearPoly, w: str) -> int:
    if len(w) != f.n:
        raise NeuralCodeError(
            f"word {format_word(w)} has length {len(w)}, polynomial has {f.n} variables"
        )
    ones = _word_mask(w)
    return sum(1 for m in f.monomials if m & ones == m) % 2


def _guard(n: int, max_n: int) -> None:
    if n > max_n:
        raise GuardError(f"n={n} exceeds the enumeration bound {max_n}")


def lagrange(w: str, max_n: int = MAX_N) -> MultilinearPoly:
    """Indicator polynomial of ``w``: prod_{w_i=1} X_i * prod_{w_j=0} (1 + X_j)."""
    n = len(w)
    _guard(n, max_n)
    ones = _word_mask(w)
    zeros = [1 << j for j, ch in enumerate(w) if ch == "0"]
    monos = set()
    for picks in product((0, 1), repeat=len(zeros)):
        m = ones
        for bit, pick in zip(zeros, picks):
            if pick:
                m |= bit
        monos.add(m)
    return MultilinearPoly(n, frozenset(monos))


def ideal_generators(code: Code, max_n: int = MAX_N):
    """Generators of I(C): Lagrange polynomials of non-codewords, then the
    Boolean relations as unreduced expressions ``Xi^2 + Xi``."""
    _guard(code.n, max_n)
    lagranges = [
        lagrange(w, max_n) for w in sorted(Code.full(code.n).words - code.words)
    ]
    boolean = [f"X{i}^2 + X{i}" for i in code.indices]
    return lagranges, boolean


def ideal_member(code: Code, f: MultilinearPoly) -> bool:
    return ideal_witness(code, f) is None


def ideal_witness(code: Code, f: MultilinearPoly):
    """First codeword (in sorted order) where ``f`` does not vanish, or None."""
    if f.n != code.n:
        raise NeuralCodeError(f"polynomial has {f.n} variables, code has {code.n} neurons")
    for w in code:
        if evaluate(f, w):
            return w
    return None


def poly_to_subset(code: Code, f: MultilinearPoly) -> frozenset:
    if f.n != code.n:
        raise NeuralCodeError(f"polynomial has {f.n} variables, code has {code.n} neurons")
    return frozenset(w for w in code.words if evaluate(f, w))


def subset_to_poly(code: Code, subset, max_n: int = MAX_N) -> MultilinearPoly:
    subset = code.check_subset(subset)
    f = MultilinearPoly.zero(code.n)
    for w in sorted(subset):
        f = f + lagrange(w, max_n)
    return f


# -- parsing -----------------------------------------------------------------

_TOKEN = re.compile(r"(X)(\d+)|(\d+)|(\+)|(\*)|(\^)")


def _tokenize(text: str):
    pos = 0
    tokens = []
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", pos=pos + 1)
        start = pos
        if m.group(1):
            tokens.append(("VAR", int(m.group(2)), start))
        elif m.group(3):
            tokens.append(("NUM", int(m.group(3)), start))
        else:
            tokens.append((m.group(0), None, start))
        pos = m.end()
    tokens.append(("EOF", None, len(text)))
    return tokens


_KIND_NAMES = {"VAR": "a variable", "NUM": "a number", "EOF": "end of input"}


class _Parser:
    # expr   := term ('+' term)*
    # term   := '0' | '1' | factor ('*' factor)*
    # factor := 'X' INT ('^' INT)?

    def __init__(self, text: str, n: int):
        self.tokens = _tokenize(text)
        self.i = 0
        self.n = n

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind):
        tok = self.peek()
        if tok[0] != kind:
            raise ParseError(
                f"expected {_KIND_NAMES.get(kind, repr(kind))}, found {_KIND_NAMES.get(tok[0], repr(tok[0]))}",
                pos=tok[2] + 1,
            )
        self.i += 1
        return tok

    def expr(self) -> MultilinearPoly:
        f = self.term()
        while self.peek()[0] == "+":
            self.take("+")
            f = f + self.term()
        self.take("EOF")
        return f

    def term(self) -> MultilinearPoly:
        tok = self.peek()
        if tok[0] == "NUM":
            self.i += 1
            if tok[1] == 1:
                return MultilinearPoly.one(self.n)
            if tok[1] == 0:
                return MultilinearPoly.zero(self.n)
            raise ParseError(f"constant {tok[1]} is not 0 or 1", pos=tok[2] + 1)
        m = self.factor()
        while self.peek()[0] == "*":
            self.take("*")
            m |= self.factor()
        return MultilinearPoly(self.n, frozenset([m]))

    def factor(self) -> int:
        _, k, pos = self.take("VAR")
        if not 1 <= k <= self.n:
            raise ParseError(f"variable X{k} out of range 1..{self.n}", pos=pos + 1)
        if self.peek()[0] == "^":
            self.take("^")
            _, e, epos = self.take("NUM")
            if e < 1:
                raise ParseError("exponent must be at least 1", pos=epos + 1)
        return 1 << (k - 1)


def parse_poly(text: str, n: int) -> MultilinearPoly:
    """Parse a sum of monomials in X1..Xn and reduce it to normal form."""
    return _Parser(text, n).expr()


def max_variable(text: str) -> int:
    """Largest variable index mentioned in ``text`` (0 if none)."""
    return max((tok[1] for tok in _tokenize(text) if tok[0] == "VAR"), default=0)
