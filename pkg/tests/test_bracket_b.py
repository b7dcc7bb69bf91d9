import itertools
import math
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tamari import bracket_b as bb
from tamari import tri_b
from tamari.bracket_b import INF


def all_tuples(n):
    vals = list(range(n)) + [INF]
    return (tuple(t) for t in itertools.product(vals, repeat=n))


def test_validate_examples():
    assert bb.is_valid((0, INF, 0, 0, 2, 0), 6)
    assert bb.violation((1, 0, 0), 3) == ("ii", 1)
    assert bb.is_valid((0, 0, 0), 3)
    assert bb.violation((INF, 1, 2), 3) == ("i", (1, 2))
    with pytest.raises(ValueError):
        bb.violation((0, 0, 5), 3)


def test_m1_m2_split():
    assert bb.in_m1((1, 0, 0), 3) and not bb.in_m2((1, 0, 0), 3)
    assert bb.in_m2((INF, 1, 2), 3) and not bb.in_m1((INF, 1, 2), 3)


def test_encode_examples():
    assert bb.encode(bb.decode((0, INF, 0, 0, 2, 0), 6)) == (0, INF, 0, 0, 2, 0)
    assert bb.encode(tri_b.bottom(3)) == (0, 0, 0)
    top = bb.decode((INF, INF, INF), 3)
    assert bb.encode(top) == (INF, INF, INF)
    # every scan chord of the top goes to a barred vertex
    assert all(tri_b.c_i(top, i) is not None for i in (1, 2, 3))


def test_decode_examples():
    assert bb.decode((0,) * 4, 4) == tri_b.bottom(4)
    # infinite-entry decode rule by hand: C_1 of the n=3 top is the diameter 1-1bar
    top = bb.decode((INF, INF, INF), 3)
    from tamari.polygon import chord_from_labels

    assert chord_from_labels(("1", "-1"), 3) in top.chords
    with pytest.raises(ValueError):
        bb.decode((1, 0, 0), 3)


def test_enumeration_counts_match_binomial():
    for n in range(1, 7):
        assert len(bb.enumerate_vectors(n)) == math.comb(2 * n, n)


def test_encode_decode_bijection(vectors_by_n, triangulations_by_n):
    for n, tris in triangulations_by_n.items():
        assert len(set(tris.values())) == len(vectors_by_n[n])
        for v, t in tris.items():
            assert bb.encode(t) == v


def test_leq_examples():
    assert bb.leq((0, 0, 0), (INF, INF, INF))
    assert not bb.leq((0, 1, 0), (0, 0, 1)) and not bb.leq((0, 0, 1), (0, 1, 0))
    assert bb.leq((0, 1, 0), (0, 1, 0))


def test_covers_examples():
    assert bb.covers((0, 0, 0), (INF, 0, 0), 3)
    assert not bb.covers((0, 0, 0), (0, INF, 0), 3)
    covs = {w for w in bb.enumerate_vectors(3) if bb.covers((0, 0, 0), w, 3)}
    assert covs == {(0, 1, 0), (0, 0, 1), (INF, 0, 0)}


def test_up_examples():
    assert bb.up((0, 1, 1), 3) == (0, 1, 2)
    for v in bb.enumerate_vectors(3):
        assert bb.up(v, 3) == v
    assert bb.up((0, 0, 0, 0), 4) == (0, 0, 0, 0)
    with pytest.raises(ValueError):
        bb.up((1, 0, 0), 3)


def test_down_examples():
    assert bb.down((1, 0, 0), 3) == (0, 0, 0)
    for v in bb.enumerate_vectors(3):
        assert bb.down(v, 3) == v
    assert bb.down((INF, INF, INF), 3) == (INF, INF, INF)
    with pytest.raises(ValueError):
        bb.down((INF, 1, 2), 3)


def test_up_down_semantics_exhaustive(vectors_by_n):
    # up(f) is the least valid vector above f; down(f) the greatest below
    for n in (1, 2, 3):
        vecs = vectors_by_n[n]
        for f in all_tuples(n):
            if bb.in_m2(f, n):
                above = [r for r in vecs if bb.leq(f, r)]
                assert bb.up(f, n) == min(above)
                assert all(bb.leq(min(above), r) for r in above)
            if bb.in_m1(f, n):
                below = [r for r in vecs if bb.leq(r, f)]
                assert bb.down(f, n) == max(below)
                assert all(bb.leq(r, max(below)) for r in below)


def test_galois_equivalences(vectors_by_n):
    # the closure/kernel adjunctions
    for n in (1, 2, 3):
        vecs = vectors_by_n[n]
        for f in all_tuples(n):
            if bb.in_m2(f, n):
                uf = bb.up(f, n)
                assert all(bb.leq(f, r) == bb.leq(uf, r) for r in vecs)
            if bb.in_m1(f, n):
                df = bb.down(f, n)
                assert all(bb.leq(r, f) == bb.leq(r, df) for r in vecs)


def test_closure_kernel_operator_laws():
    n = 3
    m2 = [f for f in all_tuples(n) if bb.in_m2(f, n)]
    for f in m2:
        uf = bb.up(f, n)
        assert bb.leq(f, uf)
        assert bb.up(uf, n) == uf
    for f, g in itertools.product(m2, repeat=2):
        if bb.leq(f, g):
            assert bb.leq(bb.up(f, n), bb.up(g, n))
    m1 = [f for f in all_tuples(n) if bb.in_m1(f, n)]
    for f in m1:
        df = bb.down(f, n)
        assert bb.leq(df, f)
        assert bb.down(df, n) == df


def test_meet_join_examples():
    assert bb.join((0, 1, 0), (0, 0, 1), 3) == (0, 1, 2)
    assert bb.meet((0, 1, 0), (0, 0, 1), 3) == (0, 0, 0)
    top, bot = (INF, INF, INF), (0, 0, 0)
    for a in bb.enumerate_vectors(3):
        assert bb.meet(a, top, 3) == a
        assert bb.join(a, bot, 3) == a
        assert bb.meet(a, a, 3) == a == bb.join(a, a, 3)


def test_lattice_algebra_exhaustive_small(vectors_by_n):
    for n in (1, 2, 3, 4):
        vecs = vectors_by_n[n]
        meets = {(a, b): bb.meet(a, b, n) for a in vecs for b in vecs}
        joins = {(a, b): bb.join(a, b, n) for a in vecs for b in vecs}
        for a, b in itertools.product(vecs, repeat=2):
            assert meets[(a, b)] == meets[(b, a)]
            assert joins[(a, b)] == joins[(b, a)]
            assert joins[(a, meets[(a, b)])] == a
            assert meets[(a, joins[(a, b)])] == a
        for a, b, c in itertools.product(vecs, repeat=3):
            assert joins[(joins[(a, b)], c)] == joins[(a, joins[(b, c)])]
            assert meets[(meets[(a, b)], c)] == meets[(a, meets[(b, c)])]


def test_lattice_algebra_sampled_n5(vectors_by_n):
    import os

    rng = random.Random(int(os.environ.get("TAMARI_SEED", "0")))
    vecs = vectors_by_n[5]
    for _ in range(300):
        a, b, c = rng.choices(vecs, k=3)
        assert bb.join(bb.join(a, b, 5), c, 5) == bb.join(a, bb.join(b, c, 5), 5)
        assert bb.meet(bb.meet(a, b, 5), c, 5) == bb.meet(a, bb.meet(b, c, 5), 5)
        assert bb.join(a, bb.meet(a, b, 5), 5) == a
        assert bb.meet(a, bb.join(a, b, 5), 5) == a


def test_cover_red_set_consequences(vectors_by_n, triangulations_by_n):
    # across a cover the red sets differ by C_k(T) and its
    # partner, and every red chord of S stays a chord of T
    from tamari.polygon import chord_partner

    for n in (1, 2, 3, 4):
        tris = triangulations_by_n[n]
        for a in vectors_by_n[n]:
            for b in bb.upper_covers(a, n):
                k = next(k for k in range(n) if a[k] != b[k])
                s_t, t_t = tris[a], tris[b]
                reds_s, reds_t = tri_b.red_set(s_t), tri_b.red_set(t_t)
                ck = tri_b.c_i(t_t, k + 1)
                assert ck is not None
                assert reds_t - reds_s == {ck, chord_partner(ck, n)}
                assert reds_s <= t_t.chords


@given(st.data())
def test_meet_join_bound_properties(vectors_by_n, data):
    n = data.draw(st.sampled_from([2, 3, 4]))
    vecs = vectors_by_n[n]
    a = data.draw(st.sampled_from(vecs))
    b = data.draw(st.sampled_from(vecs))
    m, j = bb.meet(a, b, n), bb.join(a, b, n)
    assert bb.leq(m, a) and bb.leq(m, b)
    assert bb.leq(a, j) and bb.leq(b, j)


def test_json_round_trip():
    v = (0, INF, 0, 0, 2, 0)
    data = bb.vector_to_json(v)
    assert data == [0, "inf", 0, 0, 2, 0]
    assert bb.vector_from_json(data) == v
    with pytest.raises(ValueError):
        bb.vector_from_json([0, "oops"])
    with pytest.raises(ValueError):
        bb.vector_from_json([0.5, 1])
