"""Named verification suites run against the brute-force oracle.

Each suite is a thin composition of module-level operations; it returns a
report dict with a "passed" flag and a list of human-readable failure
strings.  The CLI maps suite failures to exit code 2.
"""

from __future__ import annotations

import itertools
import math
import os
import random

from . import bracket_b as bb
from . import noncross as nc
from . import quotient_bds as q
from . import shelling as sh
from . import tamari_a as ta
from . import tri_b
from .oracle import FinitePoset


def _seed() -> int:
    return int(os.environ.get("TAMARI_SEED", "0"))


def _report(name: str, failures: list[str], checked: int) -> dict:
    return {
        "suite": name,
        "checked": checked,
        "failures": failures,
        "passed": not failures,
    }


def _subsets(n: int):
    for r in range(n + 1):
        yield from (frozenset(c) for c in itertools.combinations(range(1, n + 1), r))


def _parse_s(s) -> frozenset:
    return frozenset(s or ())


def suite_lattice(kind: str, n: int, s=()) -> dict:
    """Poset is a lattice per oracle; formula meet/join match on all pairs."""
    s = _parse_s(s)
    failures: list[str] = []
    checked = 0
    if kind == "a":
        elems = ta.enumerate_a(n)
        po = FinitePoset.build(elems, ta.leq_a)
        meets, joins = po.all_meets(), po.all_joins()
        for a in elems:
            for b in elems:
                checked += 1
                if ta.meet_a(a, b, n) != meets[(a, b)]:
                    failures.append(f"meet_a({a},{b}) != oracle {meets[(a, b)]}")
                if ta.join_a(a, b, n) != joins[(a, b)]:
                    failures.append(f"join_a({a},{b}) != oracle {joins[(a, b)]}")
    else:
        elems = list(sh.lattice_elements(n, s))
        po = FinitePoset.build(elems, bb.leq)
        meets, joins = po.all_meets(), po.all_joins()
        for a in elems:
            for b in elems:
                checked += 1
                m = q.meet_s(a, b, s, n) if s else bb.meet(a, b, n)
                j = q.join_s(a, b, s, n) if s else bb.join(a, b, n)
                if m != meets[(a, b)]:
                    failures.append(f"meet({a},{b}) != oracle {meets[(a, b)]}")
                if j != joins[(a, b)]:
                    failures.append(f"join({a},{b}) != oracle {joins[(a, b)]}")
        if any(v is None for v in meets.values()) or any(
            v is None for v in joins.values()
        ):
            failures.append("oracle: not a lattice")
        # lattice algebra: exhaustive triples at small n, seeded sample beyond
        rng = random.Random(_seed())
        triples = (
            list(itertools.product(elems, repeat=3))
            if len(elems) ** 3 <= 10_000
            else [tuple(rng.choices(elems, k=3)) for _ in range(2000)]
        )
        join = (lambda a, b: q.join_s(a, b, s, n)) if s else (lambda a, b: bb.join(a, b, n))
        meet = (lambda a, b: q.meet_s(a, b, s, n)) if s else (lambda a, b: bb.meet(a, b, n))
        for a, b, c in triples:
            checked += 1
            if join(a, b) != join(b, a) or meet(a, b) != meet(b, a):
                failures.append(f"commutativity fails at {a},{b}")
            if join(join(a, b), c) != join(a, join(b, c)):
                failures.append(f"join associativity fails at {a},{b},{c}")
            if meet(meet(a, b), c) != meet(a, meet(b, c)):
                failures.append(f"meet associativity fails at {a},{b},{c}")
            if join(a, meet(a, b)) != a or meet(a, join(a, b)) != a:
                failures.append(f"absorption fails at {a},{b}")
    return _report("lattice", failures, checked)


def suite_covers(kind: str, n: int, s=()) -> dict:
    """Bracket-order Hasse edges equal diagonal-flip edges (quotient: subposet Hasse)."""
    s = _parse_s(s)
    failures: list[str] = []
    checked = 0
    if kind == "a":
        vecs = ta.enumerate_a(n)
        tris = {v: ta.decode_a(v, n) for v in vecs}
        for a in vecs:
            for b in vecs:
                checked += 1
                if ta.covers_a(a, b, n) != ta.covers_by_flip_a(tris[a], tris[b]):
                    failures.append(f"type-A cover mismatch at {a} -> {b}")
    elif not s:
        vecs = bb.enumerate_vectors(n)
        tris = {v: bb.decode(v, n) for v in vecs}
        for a in vecs:
            for b in vecs:
                checked += 1
                if bb.covers(a, b, n) != tri_b.covers_by_flip(tris[a], tris[b]):
                    failures.append(f"cover mismatch at {a} -> {b}")
    else:
        elems = list(sh.lattice_elements(n, s))
        for a in elems:
            for b in elems:
                if a == b or not bb.leq(a, b):
                    continue
                checked += 1
                hasse = not any(
                    c != a and c != b and bb.leq(a, c) and bb.leq(c, b) for c in elems
                )
                if q.covers_s(a, b, s, n) != hasse:
                    failures.append(f"quotient cover mismatch at {a} -> {b}")
    return _report("covers", failures, checked)


def suite_bijection(kind: str, n: int, s=()) -> dict:
    """psi is injective with image exactly NC^B_n; inverses compose to id."""
    failures: list[str] = []
    checked = 0
    if kind == "a":
        vecs = ta.enumerate_a(n)
        seen = set()
        for v in vecs:
            p = ta.psi_a(ta.decode_a(v, n))
            checked += 1
            if p in seen:
                failures.append(f"psi_a not injective at {v}")
            seen.add(p)
        if len(seen) != ta.catalan(n + 1):
            failures.append(f"|image| = {len(seen)} != catalan({n + 1})")
    else:
        vecs = bb.enumerate_vectors(n)
        images = {}
        for v in vecs:
            p = nc.psi(bb.decode(v, n))
            checked += 1
            if not nc.is_noncrossing_b(p):
                failures.append(f"psi({v}) not symmetric noncrossing")
            if p.blocks in images:
                failures.append(f"psi not injective at {v} / {images[p.blocks]}")
            images[p.blocks] = v
        ncb = nc.enumerate_ncb(n)
        if {p.blocks for p in ncb} != set(images):
            failures.append("image of psi differs from enumerated NC^B")
        for p in ncb:
            checked += 1
            if bb.encode(nc.psi_inverse(p)) != images.get(p.blocks):
                failures.append(f"psi_inverse round trip fails at {p.sorted_blocks()}")
    return _report("bijection", failures, checked)


def suite_leftmod(n: int, s=()) -> dict:
    """Chain elements are left modular and the chain is unrefinable."""
    s = _parse_s(s)
    failures: list[str] = []
    checked = 0
    chain = sh.left_modular_chain(n, s)
    for a, b in zip(chain, chain[1:]):
        checked += 1
        if not q.covers_s(a, b, s, n):
            failures.append(f"chain step {a} -> {b} is not a cover")
    for x in chain:
        checked += 1
        if not sh.is_left_modular(x, n, s):
            failures.append(f"{x} is not left modular")
    return _report("leftmod", failures, checked)


def suite_el(n: int, s=()) -> dict:
    """EL property, decreasing-chain uniqueness and Mobius vs oracle."""
    s = _parse_s(s)
    rep = sh.verify_el(n, s)
    failures = [str(v) for v in rep["violations"]]
    checked = rep["intervals_checked"]
    elems = list(sh.lattice_elements(n, s))
    po = FinitePoset.build(elems, bb.leq)
    for y in elems:
        for z in elems:
            if not bb.leq(y, z):
                continue
            checked += 1
            found = sh.decreasing_chains(y, z, n, s)
            built = sh.decreasing_chain_build(y, z, n, s)
            if built is None and found:
                failures.append(f"builder missed the decreasing chain in [{y},{z}]")
            if built is not None and [built] != found:
                failures.append(f"builder chain differs from search in [{y},{z}]")
            mu = sh.mobius(y, z, n, s)
            if mu not in (-1, 0, 1) or mu != po.mobius(y, z):
                failures.append(f"mobius mismatch at [{y},{z}]: {mu} vs {po.mobius(y, z)}")
    return _report("el", failures, checked)


def suite_congruence(n: int, s=()) -> dict:
    """Congruence both ways, plus quotient order = subposet order.

    The meet half of the congruence is known to fail (see the erratum in
    the README); it is checked faithfully regardless.
    """
    s = _parse_s(s)
    failures: list[str] = []
    checked = 0
    vecs = bb.enumerate_vectors(n)
    elems = list(sh.lattice_elements(n, s))
    pairs = [(v, q.project(v, s, n)) for v in vecs if q.project(v, s, n) != v]
    for v, w in pairs:
        for z in vecs:
            checked += 1
            if not q.equivalent(bb.join(v, z, n), bb.join(w, z, n), s, n):
                failures.append(f"join congruence fails: v={v} w={w} z={z}")
            if not q.equivalent(bb.meet(v, z, n), bb.meet(w, z, n), s, n):
                failures.append(f"meet congruence fails: v={v} w={w} z={z}")
    po = FinitePoset.build(elems, bb.leq)
    meets = po.all_meets()
    for a in elems:
        for b in elems:
            checked += 1
            if q.meet_s(a, b, s, n) != meets[(a, b)]:
                failures.append(f"inherited meet wrong at {a},{b}")
    witness = next(
        (
            (a, b)
            for a in elems
            for b in elems
            if not q.vector_in_tns(bb.join(a, b, n), n, s)
        ),
        None,
    )
    out = _report("congruence", failures, checked)
    out["non_sublattice_witness"] = witness
    return out


SUITES = ("lattice", "covers", "bijection", "leftmod", "el", "congruence")


def run_suite(name: str, kind: str, n: int, s=()) -> dict:
    if name == "lattice":
        out = suite_lattice(kind, n, s)
    elif name == "covers":
        out = suite_covers(kind, n, s)
    elif name == "bijection":
        out = suite_bijection(kind, n, s)
    elif name == "leftmod":
        out = suite_leftmod(n, s)
    elif name == "el":
        out = suite_el(n, s)
    elif name == "congruence":
        out = suite_congruence(n, s)
    else:
        raise ValueError(f"unknown suite {name!r}; choose from {SUITES}")
    out.update({"type": kind, "n": n, "s": sorted(_parse_s(s))})
    return out


def count_elements(kind: str, n: int, s=()) -> int:
    if kind == "a":
        return len(ta.enumerate_a(n))
    if kind == "b":
        return len(bb.enumerate_vectors(n))
    return len(sh.lattice_elements(n, _parse_s(s)))


def triple_count_check(n: int) -> dict:
    """Acceptance-style cardinality cross-check for |T_n^B|."""
    by_vectors = len(bb.enumerate_vectors(n))
    by_flips = len(tri_b.enumerate_triangulations(n))
    by_partitions = len(nc.enumerate_ncb(n))
    expected = math.comb(2 * n, n)
    return {
        "n": n,
        "vectors": by_vectors,
        "flip_graph": by_flips,
        "noncrossing": by_partitions,
        "binomial": expected,
        "passed": by_vectors == by_flips == by_partitions == expected,
    }
