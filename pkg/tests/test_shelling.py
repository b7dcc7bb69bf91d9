import pytest

from conftest import all_subsets
from tamari import bracket_b as bb
from tamari import quotient_bds as q
from tamari import shelling as sh
from tamari.bracket_b import INF
from tamari.oracle import FinitePoset


def test_irreducible_vectors_n3():
    want = [
        ((3, 1), (0, 0, 1)),
        ((3, 2), (0, 0, 2)),
        ((3, INF), (0, 0, INF)),
        ((2, 1), (0, 1, 0)),
        ((2, 2), (0, 2, INF)),
        ((2, INF), (0, INF, 0)),
        ((1, 1), (1, 0, INF)),
        ((1, 2), (2, INF, 0)),
        ((1, INF), (INF, 0, 0)),
    ]
    assert sh.join_irreducibles(3) == want
    got = sh.join_irreducibles(3, frozenset({3}))
    assert len(got) == 8 and ((3, 2), (0, 0, 2)) not in got


def test_irreducibles_match_oracle():
    for n in (1, 2, 3, 4):
        for s in all_subsets(n):
            if n == 1 and s == frozenset({1}):
                continue  # one-element lattice; see ledger
            elems = list(sh.lattice_elements(n, s))
            po = FinitePoset.build(elems, bb.leq)
            assert po.join_irreducible_elements() == {
                w for _, w in sh.join_irreducibles(n, s)
            }


def test_every_element_is_join_of_irreducibles():
    for n in (1, 2, 3):
        for s in all_subsets(n):
            irr = sh.join_irreducibles(n, s)
            for v in sh.lattice_elements(n, s):
                acc = sh.left_modular_chain(n, s)[0]
                for _, w in irr:
                    if bb.leq(w, v):
                        acc = q.join_s(acc, w, s, n)
                assert acc == v


def test_chain_n3():
    assert sh.left_modular_chain(3) == [
        (0, 0, 0),
        (0, 0, 1),
        (0, 0, 2),
        (0, 0, INF),
        (0, 1, INF),
        (0, 2, INF),
        (0, INF, INF),
        (1, INF, INF),
        (2, INF, INF),
        (INF, INF, INF),
    ]
    merged = sh.left_modular_chain(3, frozenset({3}))
    assert len(merged) == 9 and (0, 0, 2) not in merged


def test_chain_is_unrefinable():
    for n in (1, 2, 3, 4):
        for s in all_subsets(n):
            ch = sh.left_modular_chain(n, s)
            assert ch[-1] == bb.top_vector(n)
            for a, b in zip(ch, ch[1:]):
                assert q.covers_s(a, b, s, n)
            assert len(ch) - 1 == len(sh.join_irreducibles(n, s)) or (
                n == 1 and s == frozenset({1})
            )


def test_chain_elements_left_modular():
    for n in (1, 2, 3):
        for s in all_subsets(n):
            for x in sh.left_modular_chain(n, s):
                assert sh.is_left_modular(x, n, s)


def test_extremes_left_modular():
    assert sh.is_left_modular(bb.bottom_vector(3), 3)
    assert sh.is_left_modular(bb.top_vector(3), 3)


def test_non_left_modular_witness():
    # regression: the test is not vacuous
    assert not sh.is_left_modular((INF, 0), 2)
    non_chain = set(sh.lattice_elements(3, frozenset())) - set(sh.left_modular_chain(3))
    assert any(not sh.is_left_modular(x, 3) for x in non_chain)


def test_el_label_examples():
    assert sh.el_label((0, 0, 0), (INF, 0, 0), 3) == (1, INF)
    assert sh.el_label((0, 0, 0), (0, 0, 1), 3) == (3, 1)
    with pytest.raises(ValueError):
        sh.el_label((0, 0, 0), (0, 1, 2), 3)


def test_label_coordinate_is_cover_coordinate():
    # the label index equals the changed coordinate: n <= 4, s empty; n <= 3, all s
    for n, subsets in ((4, [frozenset()]), (3, all_subsets(3))):
        for s in subsets:
            for a in sh.lattice_elements(n, s):
                for b in q.upper_covers_s(a, s, n):
                    k = next(i for i in range(n) if a[i] != b[i])
                    lab = sh.el_label(a, b, n, s)
                    assert lab[0] == k + 1


def test_gamma_chain_labelling_agrees():
    for n in (1, 2, 3):
        for s in all_subsets(n):
            for a in sh.lattice_elements(n, s):
                for b in q.upper_covers_s(a, s, n):
                    lab = sh.el_label(a, b, n, s)
                    m, step = sh.gamma_chain_label(a, b, n, s)
                    assert [l for l, _ in step] == [lab]
                    assert sh.left_modular_chain(n, s)[m - 1 : m + 1]


def test_decreasing_chain_trivial_cases():
    y = (0, 0, 0)
    assert sh.decreasing_chains(y, y, 3) == [[y]]
    assert sh.mobius(y, y, 3) == 1
    z = (0, 0, 1)
    assert sh.decreasing_chains(y, z, 3) == [[y, z]]
    assert sh.mobius(y, z, 3) == -1
    assert sh.interval_homotopy(y, z, 3) == ("sphere", -1)
    with pytest.raises(ValueError):
        sh.mobius(z, y, 3)


def test_decreasing_chain_uniqueness_and_builder():
    for n in (1, 2, 3):
        for s in all_subsets(n):
            elems = sh.lattice_elements(n, s)
            for y in elems:
                for z in elems:
                    if not bb.leq(y, z):
                        continue
                    found = sh.decreasing_chains(y, z, n, s)
                    assert len(found) <= 1
                    built = sh.decreasing_chain_build(y, z, n, s)
                    assert ([built] if built is not None else []) == found


def test_mobius_matches_oracle():
    for n, subsets in ((4, [frozenset()]), (3, all_subsets(3))):
        for s in subsets:
            elems = list(sh.lattice_elements(n, s))
            po = FinitePoset.build(elems, bb.leq)
            for y in elems:
                for z in elems:
                    if bb.leq(y, z):
                        mu = sh.mobius(y, z, n, s)
                        assert mu in (-1, 0, 1)
                        assert mu == po.mobius(y, z)


def test_homotopy_report_shape():
    rows = sh.homotopy_report(2)
    assert all(set(r) == {"interval", "mobius", "homotopy", "chains_checked"} for r in rows)
    assert sum(r["chains_checked"] for r in rows) >= 1


def test_verify_el_passes():
    for n in (1, 2, 3):
        for s in all_subsets(n):
            rep = sh.verify_el(n, s)
            assert rep["passed"], (n, s, rep["violations"][:3])
    assert sh.verify_el(4)["passed"]


def test_verify_el_negative_control():
    rank = {lab: k for k, (lab, _) in enumerate(sh.join_irreducibles(3))}
    rep = sh.verify_el(3, labeller=lambda a, b: -rank[sh.el_label(a, b, 3)])
    assert not rep["passed"] and rep["violations"]
