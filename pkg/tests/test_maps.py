import random

import pytest

from helpers import all_codes, all_maps, subsets
from neuralcodes import (
    BasicMap,
    GuardError,
    Code,
    CodeMap,
    MapKind,
    NeuralCodeError,
    PreconditionError,
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
    trunk,
)
from neuralcodes.maps import is_ring_hom, same_table

C4 = Code.from_words(["001", "110", "101", "111"])
C3 = Code.from_words(["00", "10", "01"])
C6 = Code.from_words(["100", "010", "001", "110"])
C9 = Code.from_words(["100", "011", "101", "111"])
F1 = Code.full(1)


def tk(code, *alpha):
    return trunk(code, set(alpha))


def table(q):
    return dict(q.items())


def test_codemap_validation():
    with pytest.raises(NeuralCodeError):
        CodeMap(F1, F1, {"0": "0"})
    with pytest.raises(NeuralCodeError):
        CodeMap(F1, Code.from_words(["0"]), {"0": "0", "1": "1"})


def test_inverse_image_examples():
    phi = inverse_image_hom(identity(C3))
    for b in subsets(C3.words):
        assert phi(b) == b
    const = CodeMap(C3, F1, {w: "1" for w in C3.words})
    phi = inverse_image_hom(const)
    assert phi({"1"}) == C3.words and phi({"0"}) == frozenset()
    del2 = apply_basic(BasicMap("del", index=2), C3)
    phi = inverse_image_hom(CodeMap(C3, F1, del2.table))
    assert phi({"1"}) == {"10"} and phi({"0"}) == {"00", "01"}


def test_h_conditions():
    q = CodeMap(C3, F1, {"00": "0", "10": "1", "01": "0"})
    assert check_H_conditions(inverse_image_hom(q)).ok
    overlap = RingHom(F1, C3, {"0": {"00", "01"}, "1": {"01", "10"}})
    report = check_H_conditions(overlap)
    assert not report.h1 and report.h1_witness == ("0", "1", frozenset(["01"]))
    short = RingHom(F1, C3, {"0": {"00"}, "1": {"10"}})
    report = check_H_conditions(short)
    assert report.h1 and not report.h3 and report.h3_witness == {"01"}


def test_full_table_h2_is_checked():
    q = CodeMap(C3, F1, {"00": "0", "10": "1", "01": "0"})
    good = {b: inverse_image_hom(q)(b) for b in subsets(F1.words)}
    phi = RingHom.from_full_table(F1, C3, good)
    assert check_H_conditions(phi).ok and not check_H_conditions(phi).h2_structural
    bad = dict(good)
    bad[frozenset()] = frozenset(["00"])
    report = check_H_conditions(RingHom.from_full_table(F1, C3, bad))
    assert not report.h2 and report.h2_witness == frozenset()
    with pytest.raises(GuardError):
        RingHom.from_full_table(Code.full(4), C3, {})


def test_hom_to_code_map_examples():
    assert hom_to_code_map(inverse_image_hom(identity(C3))) == identity(C3)
    q = CodeMap(C3, F1, {"00": "0", "10": "1", "01": "0"})
    assert hom_to_code_map(inverse_image_hom(q)) == q
    with pytest.raises(PreconditionError):
        hom_to_code_map(RingHom(F1, C3, {"0": {"00", "01"}, "1": {"01", "10"}}))


# -- the nine vector-of-subsets examples -----------------------------------------------------


def test_example_1_general_map():
    S = SubsetVector(C4, [{"101", "001"}, {"101", "111"}, {"101", "111"}, {"101", "001"}])
    assert table(map_from_vector(S)) == {"001": "1001", "110": "0000", "101": "1111", "111": "0110"}


def test_example_2_constant_map():
    S = SubsetVector(C4, [C4.words, set(), set(), C4.words, C4.words])
    assert set(map_from_vector(S).table.values()) == {"10011"}


@pytest.mark.parametrize(
    "code, parts, desc, expected",
    [
        (C3, [(1,), (2,), None], BasicMap("aco"), {"00": "001", "10": "101", "01": "011"}),
        (C3, [(1,), (2,), ()], BasicMap("acz"), {"00": "000", "10": "100", "01": "010"}),
        (
            Code.from_words(["000", "101", "011"]),
            [(1,), (3,)],
            BasicMap("del", index=2),
            {"000": "00", "101": "11", "011": "01"},
        ),
        (
            C6,
            [(3,), (2,), (1,)],
            BasicMap("per", perm=(3, 2, 1)),
            {"100": "001", "010": "010", "001": "100", "110": "011"},
        ),
        (
            C6,
            [(1,), (2,), (3,), (2,)],
            BasicMap("rep", index=2),
            {"100": "1000", "010": "0101", "001": "0010", "110": "1101"},
        ),
        (
            C6,
            [(1,), (2,), (3,)],
            BasicMap("inj", target=Code.full(3)),
            {"100": "100", "010": "010", "001": "001", "110": "110"},
        ),
        (
            C9,
            [(1,), (2,), (3,), (1, 3)],
            BasicMap("atn", alpha={1, 3}),
            {"100": "1000", "011": "0110", "101": "1011", "111": "1111"},
        ),
    ],
    ids=["3-aco", "4-acz", "5-del2", "6-per13", "7-rep2", "8-inj", "9-atn13"],
)
def test_examples_3_to_9(code, parts, desc, expected):
    # None stands for the whole code, () for the empty set
    subsets_ = [code.words if p is None else (frozenset() if p == () else tk(code, *p)) for p in parts]
    q_s = map_from_vector(SubsetVector(code, subsets_))
    basic = apply_basic(desc, code)
    assert table(q_s) == expected
    assert same_table(q_s, basic)
    assert defining_vector(basic).parts == tuple(subsets_)


def test_defining_vector_of_constant_map():
    q = CodeMap(C4, Code.from_words(["10011"]), {w: "10011" for w in C4.words})
    assert defining_vector(q).parts == (C4.words, frozenset(), frozenset(), C4.words, C4.words)


# -- classification -----------------------------------------------------------------------------


def test_classify_examples():
    S = SubsetVector(C4, [{"101", "001"}, {"101", "111"}, {"101", "111"}, {"101", "001"}])
    mc = classify(map_from_vector(S))
    assert mc.kind is MapKind.GENERAL
    assert mc.evidence[0].describe() == "not a trunk"
    atn = classify(apply_basic(BasicMap("atn", alpha={1, 3}), C9))
    assert atn.kind is MapKind.MONOMIAL
    assert atn.evidence[3].describe() == "trunk {1,3}"


SAMPLE_CODES = [C3, C4, C6, C9, Code.from_words(["000", "101", "011"]), F1, Code.from_words(["11", "10"])]


def _basic_descriptors(code):
    n = code.n
    out = [BasicMap("acz"), BasicMap("aco"), BasicMap("inj", target=Code.full(n))]
    for i in code.indices:
        out += [BasicMap("del", index=i), BasicMap("rep", index=i)]
    out.append(BasicMap("per", perm=tuple(range(n, 0, -1))))
    for alpha in subsets(code.indices):
        out.append(BasicMap("atn", alpha=alpha))
    return out


def test_basic_maps_are_monomial_and_linear_ones_linear():
    for code in SAMPLE_CODES:
        for desc in _basic_descriptors(code):
            mc = classify(apply_basic(desc, code))
            assert mc.is_monomial, (code, desc)
            if desc.kind != "atn":
                assert mc.is_linear_monomial, (code, desc)


def test_atn_remark_identities():
    for code in SAMPLE_CODES:
        assert apply_basic(BasicMap("atn", alpha=set()), code) == apply_basic(BasicMap("aco"), code)
        for i in code.indices:
            assert apply_basic(BasicMap("atn", alpha={i}), code) == apply_basic(BasicMap("rep", index=i), code)
        if "1" * code.n not in code:
            full = set(code.indices)
            assert apply_basic(BasicMap("atn", alpha=full), code) == apply_basic(BasicMap("acz"), code)


def test_basic_map_errors():
    with pytest.raises(NeuralCodeError):
        apply_basic(BasicMap("del", index=4), C4)
    with pytest.raises(NeuralCodeError):
        apply_basic(BasicMap("per", perm=(1, 1, 2)), C4)
    with pytest.raises(NeuralCodeError):
        apply_basic(BasicMap("inj", target=C3), C4)
    with pytest.raises(NeuralCodeError):
        BasicMap("xyz")


def test_delete_last_neuron_gives_empty_word_code():
    q = apply_basic(BasicMap("del", index=1), F1)
    assert q.codomain == Code.empty_word_code()
    assert set(q.table.values()) == {""}


def test_composition():
    q = apply_basic(BasicMap("rep", index=2), C6)
    assert compose(identity(q.codomain), q) == q
    assert compose(q, identity(C6)) == q
    with pytest.raises(NeuralCodeError):
        compose(q, q)


def _random_trunk_vector(rng, code, width):
    options = [frozenset()] + [trunk(code, a) for a in subsets(code.indices)]
    return SubsetVector(code, [rng.choice(options) for _ in range(width)])


def test_composition_of_monomial_maps_is_monomial():
    rng = random.Random(3)
    codes = [c for c in all_codes(3) if c.words]
    for _ in range(300):
        c = rng.choice(codes)
        q = map_from_vector(_random_trunk_vector(rng, c, rng.randint(0, 3)))
        q = CodeMap(q.domain, q.image(), q.table)
        p = map_from_vector(_random_trunk_vector(rng, q.codomain, rng.randint(0, 3)))
        assert classify(q).is_monomial and classify(p).is_monomial
        assert classify(compose(p, q)).is_monomial


def test_contravariant_functoriality():
    rng = random.Random(5)
    codes = [c for c in all_codes(2) if c.words]
    for _ in range(200):
        a, b, c = rng.choice(codes), rng.choice(codes), rng.choice(codes)
        q = CodeMap(a, b, {u: rng.choice(sorted(b.words)) for u in a.words})
        p = CodeMap(b, c, {u: rng.choice(sorted(c.words)) for u in b.words})
        pq = inverse_image_hom(compose(p, q))
        phi_p, phi_q = inverse_image_hom(p), inverse_image_hom(q)
        for s in subsets(c.words):
            assert pq(s) == phi_q(phi_p(s))
    for c in codes:
        ident = inverse_image_hom(identity(c))
        assert all(ident(s) == s for s in subsets(c.words))


def test_inverse_image_preserves_ring_structure():
    codes = [c for c in all_codes(2, max_size=4) if c.words]
    for c in codes[::2]:
        for d in codes[::3]:
            for tab in all_maps(c, d):
                phi = inverse_image_hom(CodeMap(c, d, tab))
                assert phi(d.words) == c.words
                assert is_ring_hom(phi)


def test_classify_invariant_under_widening():
    rng = random.Random(11)
    codes = [c for c in all_codes(3) if c.words]
    for _ in range(300):
        c = rng.choice(codes)
        q = map_from_vector(_random_trunk_vector(rng, c, rng.randint(1, 3)))
        if rng.random() < 0.5:
            q = map_from_vector(SubsetVector(c, [rng.choice(subsets(c.words)) for _ in range(2)]))
        narrow = CodeMap(q.domain, q.image(), q.table)
        widened = map_from_vector(defining_vector(narrow))
        assert same_table(widened, narrow)
        assert classify(widened).kind == classify(narrow).kind


def test_map_from_vector_uniqueness():
    for c in [C3, C9, F1]:
        for parts in [[c.words, frozenset()], [tk(c, 1), c.words]]:
            svec = SubsetVector(c, parts)
            q = map_from_vector(svec)
            for tab in all_maps(c, q.codomain):
                r = CodeMap(c, q.codomain, tab)
                if defining_vector(r).parts == svec.parts:
                    assert r == q
