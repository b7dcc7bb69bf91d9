import itertools

import pytest

from tamari import tamari_a as ta
from tamari.oracle import FinitePoset

FIG1 = (0, 0, 0, 2, 4)


def test_figure1_encode():
    t = ta.decode_a(FIG1, 4)
    assert ta.encode_a(t) == FIG1
    assert ta.red_set_a(t) == {(1, 4), (0, 5)}


def test_figure1_psi():
    p = ta.psi_a(ta.decode_a(FIG1, 4))
    assert p == frozenset({frozenset({1, 4}), frozenset({2, 3}), frozenset({5})})
    assert ta.partition_a_to_json(p) == [[1, 4], [2, 3], [5]]


def test_color_examples():
    t = ta.decode_a(FIG1, 4)
    for c in ta.red_set_a(t):
        assert ta.color_a(t, c) == "red"
    for c in t.chords - ta.red_set_a(t):
        assert ta.color_a(t, c) == "green"
    # fan from n+2: all green
    fan = ta.decode_a((0,) * 5, 4)
    assert all(ta.color_a(fan, c) == "green" for c in fan.chords)
    # any chord touching n+2 is green
    for c in fan.chords:
        assert 6 in c
    with pytest.raises(ValueError):
        ta.color_a(fan, (0, 1))


def test_fan_vectors():
    n = 4
    fan0 = ta.decode_a(tuple(i for i in range(n + 1)), n)
    assert all(0 in c for c in fan0.chords)
    assert ta.encode_a(fan0) == (0, 1, 2, 3, 4)
    fan_top = ta.decode_a((0,) * (n + 1), n)
    assert ta.encode_a(fan_top) == (0,) * (n + 1)


def test_validate_examples():
    assert ta.is_valid_a(FIG1, 4)
    assert ta.validate_a((0, 2, 0, 0, 0), 4) == ("ii", 2)
    assert ta.validate_a((0, 1, 1, 0, 0), 4) is not None


def test_catalan_counts():
    expected = {1: 2, 2: 5, 3: 14, 4: 42, 5: 132, 6: 429}
    for n, cnt in expected.items():
        assert ta.catalan(n + 1) == cnt
        assert len(ta.enumerate_a(n)) == cnt


def test_decode_rejects_invalid():
    with pytest.raises(ValueError):
        ta.decode_a((0, 2, 0, 0, 0), 4)


def test_meet_example():
    assert ta.meet_a(FIG1, (0, 1, 2, 3, 4), 4) == FIG1
    a = (0, 1, 0, 1, 0)
    assert ta.join_a(a, (0,) * 5, 4) == a


def test_componentwise_min_always_valid():
    for n in range(1, 6):
        vecs = ta.enumerate_a(n)
        for a, b in itertools.combinations(vecs, 2):
            m = tuple(min(x, y) for x, y in zip(a, b))
            assert ta.is_valid_a(m, n), (a, b, m)


def test_up_a_semantic():
    for n in range(1, 5):
        vecs = ta.enumerate_a(n)
        domain = itertools.product(*(range(i + 1) for i in range(n + 1)))
        for x in domain:
            above = [r for r in vecs if ta.leq_a(x, r)]
            assert ta.up_a(x, n) == min(above)


def test_covers_match_flips():
    for n in range(1, 5):
        vecs = ta.enumerate_a(n)
        tris = {v: ta.decode_a(v, n) for v in vecs}
        for a in vecs:
            for b in vecs:
                assert ta.covers_a(a, b, n) == ta.covers_by_flip_a(tris[a], tris[b])


def test_lattice_ops_match_oracle():
    for n in range(1, 5):
        vecs = ta.enumerate_a(n)
        po = FinitePoset.build(vecs, ta.leq_a)
        meets, joins = po.all_meets(), po.all_joins()
        for a in vecs:
            for b in vecs:
                assert ta.meet_a(a, b, n) == meets[(a, b)]
                assert ta.join_a(a, b, n) == joins[(a, b)]


def test_psi_a_bijective():
    for n in range(1, 6):
        vecs = ta.enumerate_a(n)
        images = {ta.psi_a(ta.decode_a(v, n)) for v in vecs}
        assert len(images) == ta.catalan(n + 1)


def test_json_round_trip():
    t = ta.decode_a(FIG1, 4)
    assert ta.TriangulationA.from_json(t.to_json()) == t
