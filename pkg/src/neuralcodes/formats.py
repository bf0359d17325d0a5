"""Readers and writers for the plain-text file formats.

Code file::

    # one word per line, '-' for the empty word
    001
    110

Map file (one line per domain word)::

    001 -> 1001

Hom file, either singleton images (omitted words map to the empty set)::

    1 : 10 11

or a full table over every subset of the domain code::

    {} :
    {0,1} : 00 10

Ring file::

    elements: 0 1
    zero: 0
    one: 1
    add:
    0 1
    1 0
    mul:
    0 0
    0 1
"""

from __future__ import annotations

from .core import EMPTY_WORD, EMPTY_WORD_TOKEN, Code, format_word
from .errors import NeuralCodeError, ParseError
from .maps import CodeMap, RingHom
from .ring import AbstractRing


def _lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def _word(token: str, lineno: int) -> str:
    if token == EMPTY_WORD_TOKEN:
        return EMPTY_WORD
    if not token or any(ch not in "01" for ch in token):
        raise ParseError(f"not a 0/1 word: {token!r}", line=lineno)
    return token


def parse_code(text: str) -> Code:
    words = []
    seen = {}
    n = None
    for lineno, line in _lines(text):
        w = _word(line, lineno)
        if n is None:
            n = len(w)
        elif len(w) != n:
            raise ParseError(f"word {line} has length {len(w)}, expected {n}", line=lineno)
        if w in seen:
            raise ParseError(f"duplicate word {line} (first on line {seen[w]})", line=lineno)
        seen[w] = lineno
        words.append(w)
    if n is None:
        raise ParseError("code file contains no words")
    return Code(n, frozenset(words))


def format_code(code: Code) -> str:
    return "".join(format_word(w) + "\n" for w in code)


def parse_map(text: str, domain: Code, codomain: Code) -> CodeMap:
    table = {}
    for lineno, line in _lines(text):
        if "->" not in line:
            raise ParseError("expected 'u -> v'", line=lineno)
        left, right = (part.strip() for part in line.split("->", 1))
        u, v = _word(left, lineno), _word(right, lineno)
        if u not in domain:
            raise ParseError(f"{left} is not a word of the domain code", line=lineno)
        if v not in codomain:
            raise ParseError(f"{right} is not a word of the codomain code", line=lineno)
        if u in table:
            raise ParseError(f"second image given for {left}", line=lineno)
        table[u] = v
    missing = domain.words - set(table)
    if missing:
        raise ParseError(f"no image given for {format_word(min(missing))}")
    return CodeMap(domain, codomain, table)


def format_map(q: CodeMap) -> str:
    return "".join(f"{format_word(u)} -> {format_word(v)}\n" for u, v in q.items())


def _subset_token(token: str, lineno: int) -> frozenset:
    inner = token[1:-1].strip()
    if not inner:
        return frozenset()
    return frozenset(_word(t.strip(), lineno) for t in inner.split(","))


def parse_hom(text: str, domain_code: Code, codomain_code: Code) -> RingHom:
    """Parse ``phi: P(D) -> P(C)``; ``domain_code`` is D and ``codomain_code`` is C."""
    singles = {}
    full = {}
    for lineno, line in _lines(text):
        if ":" not in line:
            raise ParseError("expected 'v : u1 u2 ...'", line=lineno)
        left, right = (part.strip() for part in line.split(":", 1))
        image = frozenset(_word(t, lineno) for t in right.split())
        for u in image:
            if u not in codomain_code:
                raise ParseError(f"{format_word(u)} is not a word of the codomain code", line=lineno)
        if left.startswith("{") and left.endswith("}"):
            key = _subset_token(left, lineno)
            if not key <= domain_code.words:
                raise ParseError(f"{left} is not a subset of the domain code", line=lineno)
            if key in full:
                raise ParseError(f"second value given for {left}", line=lineno)
            full[key] = image
        else:
            v = _word(left, lineno)
            if v not in domain_code:
                raise ParseError(f"{left} is not a word of the domain code", line=lineno)
            if v in singles:
                raise ParseError(f"second value given for {left}", line=lineno)
            singles[v] = image
    if full and singles:
        raise ParseError("mix of singleton lines and full-table lines")
    if full:
        try:
            return RingHom.from_full_table(domain_code, codomain_code, full)
        except NeuralCodeError as exc:
            raise ParseError(str(exc)) from exc
    return RingHom(domain_code, codomain_code, singles)


def parse_ring(text: str) -> AbstractRing:
    lines = list(_lines(text))
    header = {}
    tables = {}
    k = 0
    while k < len(lines):
        lineno, line = lines[k]
        key, sep, rest = line.partition(":")
        key = key.strip()
        if not sep or key not in ("elements", "zero", "one", "add", "mul"):
            raise ParseError(f"unexpected line {line!r}", line=lineno)
        if key in header or key in tables:
            raise ParseError(f"section {key!r} given twice", line=lineno)
        if key in ("add", "mul"):
            if "elements" not in header:
                raise ParseError("'elements:' must come before the tables", line=lineno)
            size = len(header["elements"])
            rows = [lines[k + 1 + r] for r in range(size) if k + 1 + r < len(lines)]
            if len(rows) < size:
                raise ParseError(f"{key} table has fewer than {size} rows", line=lineno)
            table = []
            for rlineno, row in rows:
                cells = row.split()
                if len(cells) != size:
                    raise ParseError(f"row has {len(cells)} entries, expected {size}", line=rlineno)
                table.append(cells)
            tables[key] = table
            k += 1 + size
            continue
        header[key] = rest.split()
        k += 1
    for key in ("elements", "zero", "one", "add", "mul"):
        if key not in header and key not in tables:
            raise ParseError(f"missing section {key!r}")
    for key in ("zero", "one"):
        if len(header[key]) != 1:
            raise ParseError(f"{key!r} must name exactly one element")
    try:
        return AbstractRing.from_labels(
            header["elements"], tables["add"], tables["mul"], header["zero"][0], header["one"][0]
        )
    except NeuralCodeError as exc:
        raise ParseError(str(exc)) from exc


def format_ring(ring: AbstractRing) -> str:
    lab = ring.label
    out = [
        "elements: " + " ".join(ring.elements),
        f"zero: {lab(ring.zero)}",
        f"one: {lab(ring.one)}",
        "add:",
    ]
    out += [" ".join(lab(x) for x in row) for row in ring.add]
    out.append("mul:")
    out += [" ".join(lab(x) for x in row) for row in ring.mul]
    return "\n".join(out) + "\n"
