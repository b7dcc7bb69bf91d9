import pytest

from tamari.oracle import FinitePoset, PosetError


def divisibility(elems):
    return FinitePoset.build(elems, lambda a, b: b % a == 0)


def test_build_and_extremes():
    po = divisibility([1, 2, 3, 6])
    assert po.bottom() == 1 and po.top() == 6
    assert po.le(2, 6) and not po.le(2, 3)
    assert set(po.cover_pairs()) == {(1, 2), (1, 3), (2, 6), (3, 6)}


def test_single_element():
    po = FinitePoset.build(["x"], lambda a, b: True)
    assert po.bottom() == po.top() == "x"
    assert po.is_lattice()


def test_axiom_violations():
    with pytest.raises(PosetError, match="reflexive"):
        FinitePoset.build([1, 2], lambda a, b: a < b)
    with pytest.raises(PosetError, match="antisymmetric"):
        FinitePoset.build([1, 2], lambda a, b: True)
    # non-transitive: 1<=2, 2<=3, but not 1<=3
    with pytest.raises(PosetError, match="transitive"):
        FinitePoset.build(
            [1, 2, 3], lambda a, b: a == b or (a, b) in {(1, 2), (2, 3)}
        )


def test_bowtie_is_not_a_lattice():
    # two minimal, two maximal elements, all cross relations
    rel = {("a", "c"), ("a", "d"), ("b", "c"), ("b", "d")}
    po = FinitePoset.build(
        ["a", "b", "c", "d"], lambda x, y: x == y or (x, y) in rel
    )
    assert po.join("a", "b") is None
    assert po.meet("c", "d") is None
    assert not po.is_lattice()


def test_meet_join_scan_and_bulk_agree():
    po = divisibility([1, 2, 3, 4, 6, 12])
    meets, joins = po.all_meets(), po.all_joins()
    for a in po.elements:
        for b in po.elements:
            assert po.meet(a, b) == meets[(a, b)]
            assert po.join(a, b) == joins[(a, b)]
    assert po.meet(4, 6) == 2 and po.join(4, 6) == 12
    assert po.meet(4, 4) == 4


def test_chain_mobius():
    po = FinitePoset.build(list(range(5)), lambda a, b: a <= b)
    assert po.mobius(0, 0) == 1
    assert po.mobius(0, 1) == -1
    assert po.mobius(0, 2) == 0
    assert po.mobius(0, 4) == 0
    with pytest.raises(PosetError):
        po.mobius(3, 1)


def test_boolean_lattice_mobius_and_irreducibles():
    elems = [frozenset(s) for s in ((), ("x",), ("y",), ("x", "y"))]
    po = FinitePoset.build(elems, lambda a, b: a <= b)
    assert po.mobius(elems[0], elems[3]) == 1
    assert po.join_irreducible_elements() == {elems[1], elems[2]}


def test_chain_irreducibles():
    po = FinitePoset.build(list(range(4)), lambda a, b: a <= b)
    assert po.join_irreducible_elements() == {1, 2, 3}
