"""Enumeration helpers and brute-force oracles shared by the test modules.

The oracles here work straight from definitions and deliberately avoid the
library's own shortcuts (closed supports, bitmask polynomials, N1 decomposition).
"""

from itertools import combinations, permutations, product

from neuralcodes import Code


def words(n):
    return ["".join(bits) for bits in product("01", repeat=n)]


def all_codes(max_n, max_size=None, min_size=0):
    """Every code on 0..max_n neurons with a size in [min_size, max_size]."""
    out = []
    for n in range(max_n + 1):
        ws = words(n)
        top = len(ws) if max_size is None else min(max_size, len(ws))
        for k in range(min_size, top + 1):
            out.extend(Code(n, frozenset(c)) for c in combinations(ws, k))
    return out


def subsets(iterable):
    items = sorted(iterable)
    return [frozenset(c) for k in range(len(items) + 1) for c in combinations(items, k)]


def all_maps(domain, codomain):
    dom = sorted(domain.words)
    for images in product(sorted(codomain.words), repeat=len(dom)):
        yield dict(zip(dom, images))


# -- oracles --------------------------------------------------------------------


def trunk_by_definition(code, alpha):
    return frozenset(w for w in code.words if all(w[i - 1] == "1" for i in alpha))


def redundant_by_search(code, i):
    """True iff some alpha not containing i has Tk_alpha = Tk_i and Tk_i is nonempty."""
    ti = trunk_by_definition(code, {i})
    if not ti:
        return False
    others = [j for j in range(1, code.n + 1) if j != i]
    return any(
        trunk_by_definition(code, set(alpha)) == ti
        for k in range(len(others) + 1)
        for alpha in combinations(others, k)
    )


def lagrange_value(w, v):
    """prod_{w_i=1} v_i * prod_{w_j=0} (1 - v_j) evaluated directly over the integers."""
    out = 1
    for wi, vi in zip(w, v):
        out *= int(vi) if wi == "1" else 1 - int(vi)
    return out


def find_ring_isomorphism(r, s):
    """Backtracking search for a bijection r -> s preserving +, *, 0, 1."""
    if r.order != s.order:
        return None
    k = r.order
    image = {r.zero: s.zero}
    if r.one in image:
        if image[r.one] != s.one:
            return None
    else:
        image[r.one] = s.one
    order = [x for x in range(k) if x not in image]

    def consistent():
        for a, fa in image.items():
            for b, fb in image.items():
                for table_r, table_s in ((r.add, s.add), (r.mul, s.mul)):
                    c = table_r[a][b]
                    if c in image and image[c] != table_s[fa][fb]:
                        return False
        return True

    def extend(pos):
        if pos == len(order):
            return dict(image)
        x = order[pos]
        used = set(image.values())
        for y in range(k):
            if y in used:
                continue
            image[x] = y
            if consistent():
                found = extend(pos + 1)
                if found:
                    return found
            del image[x]
        return None

    if not consistent():
        return None
    return extend(0)


def is_bijective_monomial_both_ways(q, classify):
    vals = list(q.table.values())
    if len(set(vals)) != len(vals) or set(vals) != q.codomain.words:
        return False
    inv = type(q)(q.codomain, q.domain, {v: u for u, v in q.table.items()})
    return classify(q).is_monomial and classify(inv).is_monomial


def random_permutation(rng, n):
    p = list(range(1, n + 1))
    rng.shuffle(p)
    return tuple(p)


def all_permutations(n):
    return [tuple(p) for p in permutations(range(1, n + 1))]
