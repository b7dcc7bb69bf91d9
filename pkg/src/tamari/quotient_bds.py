"""The congruence ~_S and the Tamari lattice of pseudo-type BD_n^S.

T_n^S consists of the triangulations with r_i != n-1 for every i in S;
equivalently those avoiding both triangles i, i+1, (i+1)bar and
ibar, i+1, (i+1)bar for i in S.  Two distinct vectors are equivalent when
they agree except at one k in S where one has n-1 and the other inf.
Classes have size at most two and their top elements are the T_n^S
representatives, so the quotient is never materialized: `project` maps a
vector to its class top.
"""

from __future__ import annotations

from math import inf as INF

from . import bracket_b as bb
from .polygon import chord, n_vertices
from .tri_b import TriangulationB


def has_collapsing_triangles(t: TriangulationB, i: int) -> bool:
    """Both triangles i, i+1, (i+1)bar and ibar, i+1, (i+1)bar present."""
    n = t.n
    m = n_vertices(n)
    edges = t.edges()

    def triangle(a: int, b: int, c: int) -> bool:
        return chord(a, b) in edges and chord(b, c) in edges and chord(a, c) in edges

    vi, vi1, vbar_i1 = i - 1, i % m, (n + 1 + i) % m
    vbar_i = (n + i) % m
    return triangle(vi, vi1, vbar_i1) and triangle(vbar_i, vi1, vbar_i1)


def in_tns(t: TriangulationB, s) -> bool:
    """Membership in T_n^S; triangle and bracket tests must agree."""
    by_triangle = not any(has_collapsing_triangles(t, i) for i in s)
    v = bb.encode(t)
    by_bracket = vector_in_tns(v, t.n, s)
    assert by_triangle == by_bracket, (v, sorted(s))
    return by_bracket


def vector_in_tns(v, n: int, s) -> bool:
    return all(v[i - 1] != n - 1 for i in s)


def project(v, s, n: int):
    """Top of the ~_S class: each n-1 entry at a coordinate in s becomes inf."""
    out = list(v)
    for k in s:
        if out[k - 1] == n - 1:
            out[k - 1] = INF
    result = tuple(out)
    if not bb.is_valid(result, n):
        raise AssertionError(f"projection of {v} left the lattice: {result}")
    return result


def class_of(v, s, n: int) -> frozenset:
    """The ~_S equivalence class of v (size 1 or 2)."""
    top = project(v, s, n)
    members = {top}
    for k in s:
        if top[k - 1] == INF:
            w = top[: k - 1] + (n - 1,) + top[k:]
            if bb.is_valid(w, n):
                members.add(w)
    return frozenset(m for m in members if m == v or project(m, s, n) == top)


def equivalent(v, w, s, n: int) -> bool:
    return project(v, s, n) == project(w, s, n)


def elements_tns(n: int, s) -> list:
    return [v for v in bb.enumerate_vectors(n) if vector_in_tns(v, n, s)]


def meet_s(a, b, s, n: int):
    """Meet in T_n^S: inherited from T_n^B, which T_n^S is closed under."""
    _check_member(a, s, n)
    _check_member(b, s, n)
    result = bb.meet(a, b, n)
    assert vector_in_tns(result, n, s)
    return result


def join_s(a, b, s, n: int):
    """Join in T_n^S: the projection of the type-B join."""
    _check_member(a, s, n)
    _check_member(b, s, n)
    return project(bb.join(a, b, n), s, n)


def _check_member(v, s, n: int) -> None:
    if not bb.is_valid(v, n) or not vector_in_tns(v, n, s):
        raise ValueError(f"{v} is not in T_n^S for s={sorted(s)}")


def covers_s(a, b, s, n: int) -> bool:
    """Cover in (T_n^S, <=): one changed coordinate, no T_n^S element between."""
    _check_member(a, s, n)
    _check_member(b, s, n)
    diffs = [k for k in range(n) if a[k] != b[k]]
    if len(diffs) != 1 or not a[diffs[0]] < b[diffs[0]]:
        return False
    k = diffs[0]
    for x in range(int(a[k]) + 1, n):
        if x >= b[k]:
            break
        w = a[:k] + (x,) + a[k + 1 :]
        if bb.is_valid(w, n) and vector_in_tns(w, n, s):
            return False
    return True


def upper_covers_s(v, s, n: int) -> list:
    """Upward covers in T_n^S: project the type-B cover at each coordinate."""
    _check_member(v, s, n)
    out = []
    for w in bb.upper_covers(v, n):
        out.append(project(w, s, n))
    return sorted(set(out))
