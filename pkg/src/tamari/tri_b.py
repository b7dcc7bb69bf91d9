"""Centrally symmetric triangulations of the (2n+2)-gon.

A type-B triangulation is a maximal noncrossing chord set (2n-1 internal
chords) fixed under the half-turn.  Chords are coloured red or green from
the quadrilateral rule; the red chords are exactly the scan chords C_i and
their symmetric partners, and they determine the triangulation (the regions
they cut out have a unique all-green completion).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .polygon import (
    Chord,
    boundary_edges,
    chord,
    chord_from_labels,
    chord_kind,
    chord_partner,
    chord_to_labels,
    crosses,
    is_barred,
    is_polygon_edge,
    label_value,
    n_vertices,
)

RED = "red"
GREEN = "green"


@dataclass(frozen=True)
class TriangulationB:
    n: int
    chords: frozenset[Chord]

    def __post_init__(self):
        m = n_vertices(self.n)
        if len(self.chords) != 2 * self.n - 1:
            raise ValueError(f"expected {2 * self.n - 1} chords, got {len(self.chords)}")
        for c in self.chords:
            a, b = c
            if not (0 <= a < b < m):
                raise ValueError(f"chord {c} out of range")
            if is_polygon_edge(c, self.n):
                raise ValueError(f"{c} is a polygon edge, not a chord")
            if chord_partner(c, self.n) not in self.chords:
                raise ValueError(f"chord set not symmetric at {c}")
        for c1, c2 in itertools.combinations(self.chords, 2):
            if crosses(c1, c2):
                raise ValueError(f"chords {c1} and {c2} cross")

    @classmethod
    def from_chords(cls, n: int, chords) -> "TriangulationB":
        return cls(n, frozenset(chord(a, b) for a, b in chords))

    def sorted_chords(self) -> list[Chord]:
        return sorted(self.chords)

    def edges(self) -> frozenset[Chord]:
        return self.chords | boundary_edges(self.n)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "chords": [chord_to_labels(c, self.n) for c in self.sorted_chords()],
        }

    @classmethod
    def from_json(cls, data: dict) -> "TriangulationB":
        n = int(data["n"])
        return cls.from_chords(n, [chord_from_labels(p, n) for p in data["chords"]])


def _neighbour_map(t: TriangulationB) -> dict[int, set[int]]:
    nbrs: dict[int, set[int]] = {v: set() for v in range(n_vertices(t.n))}
    for a, b in t.edges():
        nbrs[a].add(b)
        nbrs[b].add(a)
    return nbrs


def _apexes(t: TriangulationB, c: Chord) -> tuple[int, int]:
    """The two triangle apexes flanking an internal chord."""
    if c not in t.chords:
        raise ValueError(f"{c} is not a chord of the triangulation")
    a, b = c
    edges = t.edges()
    common = [
        x
        for x in range(n_vertices(t.n))
        if x not in c and chord(a, x) in edges and chord(b, x) in edges
    ]
    if len(common) != 2:
        raise ValueError(f"chord {c} does not bound two triangles: {common}")
    return common[0], common[1]


def quad_of(t: TriangulationB, c: Chord) -> tuple[int, ...]:
    """The quadrilateral Q(C): the four vertices of the two triangles on C."""
    if is_polygon_edge(c, t.n):
        raise ValueError("polygon edges bound a single triangle, no quadrilateral")
    x, y = _apexes(t, c)
    return tuple(sorted({c[0], c[1], x, y}))


def color(t: TriangulationB, c: Chord) -> str:
    """Colour of a chord: red when its quadrilateral has a dominating vertex.

    Pure chord: red iff Q(C) holds another vertex of the same type with a
    higher label.  Mixed chord {i, jbar}: red iff Q(C) holds an unbarred
    vertex labelled above i or a barred vertex labelled above j.
    """
    n = t.n
    others = [v for v in quad_of(t, c) if v not in c]
    kind = chord_kind(c, n)
    if kind == "mixed":
        unb = next(v for v in c if not is_barred(v, n))
        bar = next(v for v in c if is_barred(v, n))
        for v in others:
            if is_barred(v, n):
                if label_value(v, n) > label_value(bar, n):
                    return RED
            elif label_value(v, n) > label_value(unb, n):
                return RED
        return GREEN
    barred = kind == "pure-barred"
    top = max(label_value(v, n) for v in c)
    for v in others:
        if is_barred(v, n) == barred and label_value(v, n) > top:
            return RED
    return GREEN


def c_i(t: TriangulationB, i: int) -> Chord | None:
    """The scan chord C_i: first chord at vertex i found clockwise from 1bar.

    Returns None when C_i is the edge segment to the counter-clockwise
    neighbour of i.
    """
    if not 1 <= i <= t.n:
        raise ValueError(f"i must be in [1, {t.n}]")
    m = n_vertices(t.n)
    vi = i - 1
    stop = (vi - 1) % m
    k = t.n + 1
    while k % m != stop:
        c = chord(vi, k % m)
        if c in t.chords:
            return c
        k += 1
    return None


def red_set(t: TriangulationB) -> frozenset[Chord]:
    """The chord-valued C_i together with their symmetric partners."""
    reds: set[Chord] = set()
    for i in range(1, t.n + 1):
        c = c_i(t, i)
        if c is not None:
            reds.add(c)
            reds.add(chord_partner(c, t.n))
    return frozenset(reds)


def green_complete(n: int, region) -> set[Chord]:
    """The unique all-green triangulation of a region of the (2n+2)-gon.

    Connect every unbarred vertex to the largest unbarred one, every barred
    vertex to the largest barred one, and join the two maxima when both
    types are present.  Connections between region-adjacent vertices are
    already boundary sides and contribute no chord.
    """
    verts = sorted(region)
    if len(verts) < 3:
        return set()
    pos = {v: k for k, v in enumerate(verts)}

    def adjacent_in_region(a: int, b: int) -> bool:
        return abs(pos[a] - pos[b]) in (1, len(verts) - 1)

    unb = [v for v in verts if not is_barred(v, n)]
    bar = [v for v in verts if is_barred(v, n)]
    out: set[Chord] = set()

    def connect(vs: list[int]) -> None:
        if not vs:
            return
        hub = max(vs, key=lambda v: label_value(v, n))
        for v in vs:
            if v != hub and not adjacent_in_region(v, hub):
                out.add(chord(v, hub))

    connect(unb)
    connect(bar)
    if unb and bar:
        hu = max(unb, key=lambda v: label_value(v, n))
        hb = max(bar, key=lambda v: label_value(v, n))
        if not adjacent_in_region(hu, hb):
            out.add(chord(hu, hb))
    return out


def split_regions(m: int, chords) -> list[tuple[int, ...]]:
    """Cyclic regions an m-gon is cut into by a noncrossing chord family."""

    def rec(verts: tuple[int, ...], cs: list[Chord]) -> list[tuple[int, ...]]:
        if not cs:
            return [verts]
        a, b = cs[0]
        ia, ib = verts.index(a), verts.index(b)
        if ia > ib:
            ia, ib = ib, ia
        left = verts[ia : ib + 1]
        right = verts[ib:] + verts[: ia + 1]
        lset, rset = set(left), set(right)
        lcs, rcs = [], []
        for c in cs[1:]:
            if c[0] in lset and c[1] in lset and not (c[0] in {a, b} and c[1] in {a, b}):
                lcs.append(c)
            else:
                rcs.append(c)
        return rec(left, lcs) + rec(right, rcs)

    return rec(tuple(range(m)), sorted(set(chords)))


def from_red_set(n: int, reds) -> TriangulationB:
    """Rebuild the unique triangulation whose red chords are exactly `reds`."""
    reds = frozenset(chord(a, b) for a, b in reds)
    for c in reds:
        if chord_partner(c, n) not in reds:
            raise ValueError(f"red set not symmetric at {c}")
    for c1, c2 in itertools.combinations(reds, 2):
        if crosses(c1, c2):
            raise ValueError(f"red chords {c1} and {c2} cross")
    chords = set(reds)
    for region in split_regions(n_vertices(n), reds):
        chords |= green_complete(n, region)
    t = TriangulationB(n, frozenset(chords))
    if red_set(t) != reds:
        raise ValueError("chord set is not realizable as a red set")
    return t


def flip(t: TriangulationB, c: Chord) -> TriangulationB:
    """Replace the symmetric pair {C, Cbar} by the other diagonals.

    A diameter is its own partner and is replaced once.
    """
    if c not in t.chords:
        raise ValueError(f"{c} is not a chord of the triangulation")
    x, y = _apexes(t, c)
    new_c = chord(x, y)
    d = chord_partner(c, t.n)
    new_d = chord_partner(new_c, t.n)
    chords = set(t.chords)
    chords.discard(c)
    chords.discard(d)
    chords.add(new_c)
    chords.add(new_d)
    return TriangulationB(t.n, frozenset(chords))


def covers_by_flip(s: TriangulationB, t: TriangulationB) -> bool:
    """True iff t is obtained from s by flipping a green chord pair."""
    if s.n != t.n or s == t:
        return False
    return any(
        color(s, c) == GREEN and flip(s, c) == t for c in s.chords
    )


def bottom(n: int) -> TriangulationB:
    return from_red_set(n, frozenset())


def enumerate_triangulations(n: int) -> list[TriangulationB]:
    """All type-B triangulations, by flip-graph search from the bottom."""
    start = bottom(n)
    seen = {start}
    queue = [start]
    while queue:
        t = queue.pop()
        for c in t.chords:
            u = flip(t, c)
            if u not in seen:
                seen.add(u)
                queue.append(u)
    return sorted(seen, key=lambda t: t.sorted_chords())
