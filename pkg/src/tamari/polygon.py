"""Vertex and chord model for the labelled polygons.

Type B lives on a (2n+2)-gon whose vertices are numbered clockwise 1..n+1
and then 1bar..(n+1)bar.  Internally a vertex is just its circular index
0..2n+1 (clockwise); the barred/unbarred labels are a presentation layer.
Index k < n+1 is the unbarred vertex k+1, index k >= n+1 is the barred
vertex k-n.  Labels serialize as strings: "3" unbarred, "-3" barred.

Everything here is pure integer arithmetic on cyclic orders; there is no
floating-point geometry.
"""

from __future__ import annotations

Chord = tuple[int, int]


def n_vertices(n: int) -> int:
    return 2 * n + 2


def is_barred(idx: int, n: int) -> bool:
    return idx >= n + 1


def label_value(idx: int, n: int) -> int:
    """The numeric part of the label at a circular index."""
    return idx + 1 if idx < n + 1 else idx - n


def label_of(idx: int, n: int) -> str:
    v = label_value(idx, n)
    return str(-v) if is_barred(idx, n) else str(v)


def idx_of(label: str | int, n: int) -> int:
    """Parse a label ("3", "-3", or the signed integer) to a circular index."""
    v = int(label)
    if v == 0 or abs(v) > n + 1:
        raise ValueError(f"label {label!r} out of range for n={n}")
    return v - 1 if v > 0 else n - v


def partner_idx(idx: int, n: int) -> int:
    """Image of a vertex under the half-turn rotation."""
    return (idx + n + 1) % (2 * n + 2)


def chord(a: int, b: int) -> Chord:
    if a == b:
        raise ValueError("chord endpoints must be distinct")
    return (a, b) if a < b else (b, a)


def chord_partner(c: Chord, n: int) -> Chord:
    a, b = c
    return chord(partner_idx(a, n), partner_idx(b, n))


def is_polygon_edge(c: Chord, n: int) -> bool:
    a, b = c
    return (b - a) % (2 * n + 2) in (1, 2 * n + 1)


def is_diameter(c: Chord, n: int) -> bool:
    a, b = c
    return b - a == n + 1


def chord_kind(c: Chord, n: int) -> str:
    """One of "pure-unbarred", "pure-barred", "mixed"."""
    a, b = c
    ab, bb = is_barred(a, n), is_barred(b, n)
    if ab and bb:
        return "pure-barred"
    if not ab and not bb:
        return "pure-unbarred"
    return "mixed"


def crosses(c1: Chord, c2: Chord) -> bool:
    """True iff the open segments cross.

    With endpoints sorted, two chords of a convex polygon cross exactly when
    their endpoints interleave; chords sharing an endpoint never cross.
    """
    a, b = c1
    c, d = c2
    if len({a, b, c, d}) < 4:
        return False
    return (a < c < b < d) or (c < a < d < b)


def ccw_distance(frm: int, to: int, n: int) -> int:
    """Counter-clockwise steps (decreasing index, mod 2n+2) from frm to to."""
    return (frm - to) % (2 * n + 2)


def boundary_edges(n: int) -> frozenset[Chord]:
    m = 2 * n + 2
    return frozenset(chord(k, (k + 1) % m) for k in range(m))


def chord_to_labels(c: Chord, n: int) -> list[str]:
    return [label_of(c[0], n), label_of(c[1], n)]


def chord_from_labels(pair, n: int) -> Chord:
    if len(pair) != 2:
        raise ValueError(f"chord must have two endpoints, got {pair!r}")
    return chord(idx_of(pair[0], n), idx_of(pair[1], n))
