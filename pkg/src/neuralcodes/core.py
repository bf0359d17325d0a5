"""Codewords, codes and trunks.

A codeword of length ``n`` is stored as a string of ``'0'``/``'1'``
characters; the empty word (the only word of length 0) is ``""`` and prints
as ``-``. Index sets are ``frozenset`` of 1-based coordinates, and subsets of
a code are ``frozenset`` of words.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Optional

from .errors import NeuralCodeError

EMPTY_WORD = ""
EMPTY_WORD_TOKEN = "-"


def format_word(w: str) -> str:
    return w if w else EMPTY_WORD_TOKEN


def format_subset(words: Iterable[str]) -> str:
    return "{" + ",".join(format_word(w) for w in sorted(words)) + "}"


def format_index_set(alpha: Iterable[int]) -> str:
    return "{" + ",".join(str(i) for i in sorted(alpha)) + "}"


def _check_word(w: str) -> None:
    if not isinstance(w, str) or any(ch not in "01" for ch in w):
        raise NeuralCodeError(f"not a binary word: {w!r}")


@dataclass(frozen=True)
class Code:
    """A finite set of binary words of common length ``n``."""

    n: int
    words: frozenset

    def __post_init__(self):
        if self.n < 0:
            raise NeuralCodeError("neuron count must be non-negative")
        object.__setattr__(self, "words", frozenset(self.words))
        for w in self.words:
            _check_word(w)
            if len(w) != self.n:
                raise NeuralCodeError(
                    f"word {format_word(w)} has length {len(w)}, expected {self.n}"
                )

    @classmethod
    def from_words(cls, words: Iterable[str], n: Optional[int] = None) -> Code:
        words = list(words)
        if n is None:
            if not words:
                raise NeuralCodeError("cannot infer n for an empty code")
            n = len(words[0])
        if len(set(words)) != len(words):
            raise NeuralCodeError("duplicate words in code")
        return cls(n, frozenset(words))

    @classmethod
    def full(cls, n: int) -> Code:
        return cls(n, frozenset("".join(bits) for bits in product("01", repeat=n)))

    @classmethod
    def empty_word_code(cls) -> Code:
        return cls(0, frozenset([EMPTY_WORD]))

    def __iter__(self):
        return iter(sorted(self.words))

    def __len__(self):
        return len(self.words)

    def __contains__(self, w):
        return w in self.words

    def __str__(self):
        return format_subset(self.words)

    @property
    def indices(self) -> range:
        return range(1, self.n + 1)

    def check_index(self, i: int) -> None:
        if not 1 <= i <= self.n:
            raise NeuralCodeError(f"neuron index {i} out of range 1..{self.n}")

    def check_subset(self, subset: Iterable[str]) -> frozenset:
        subset = frozenset(subset)
        extra = subset - self.words
        if extra:
            raise NeuralCodeError(f"{format_subset(extra)} not contained in code {self}")
        return subset


def trunk(code: Code, alpha: Iterable[int]) -> frozenset:
    alpha = frozenset(alpha)
    for i in alpha:
        code.check_index(i)
    return frozenset(w for w in code.words if all(w[i - 1] == "1" for i in alpha))


def closed_support(subset: Iterable[str], n: int) -> frozenset:
    """Coordinates equal to 1 in every word of ``subset`` (all of 1..n if empty)."""
    support = set(range(1, n + 1))
    for w in subset:
        support = {i for i in support if w[i - 1] == "1"}
    return frozenset(support)


def simple_trunks(code: Code) -> list:
    return [trunk(code, {i}) for i in code.indices]


def recognize_trunk(code: Code, subset: Iterable[str]) -> Optional[frozenset]:
    """Return the maximal ``alpha`` with ``trunk(code, alpha) == subset``, or None."""
    subset = code.check_subset(subset)
    alpha = closed_support(subset, code.n)
    if trunk(code, alpha) == subset:
        return alpha
    return None


def constant_zero_neuron(code: Code, i: int) -> bool:
    return not trunk(code, {i})


def redundant_neuron(code: Code, i: int) -> Optional[frozenset]:
    """Canonical witness ``alpha`` for neuron ``i`` being redundant, or None.

    The witness is the largest ``alpha`` not containing ``i`` whose trunk
    contains the simple trunk of ``i``; any other witness is a subset of it.
    """
    ti = trunk(code, {i})
    if not ti:
        return None
    alpha = frozenset(j for j in code.indices if j != i and ti <= trunk(code, {j}))
    if trunk(code, alpha) == ti:
        return alpha
    return None
