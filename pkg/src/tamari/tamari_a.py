"""The classical type-A Tamari lattice on triangulations of an (n+3)-gon.

Vertices are numbered 0..n+2 clockwise with the long top edge 0--(n+2).
The bracket vector records r_i = i-1 - v_i for i = 1..n+1, where v_i is the
least vertex attached to i.  Kept separate from the type-B machinery: it is
the cross-validation target and the source of the classical noncrossing
partition bijection.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .polygon import chord, crosses

Chord = tuple[int, int]
Vector = tuple


@dataclass(frozen=True)
class TriangulationA:
    n: int
    chords: frozenset[Chord]

    def __post_init__(self):
        m = self.n + 3
        if len(self.chords) != self.n:
            raise ValueError(f"expected {self.n} chords, got {len(self.chords)}")
        for c in self.chords:
            a, b = c
            if not (0 <= a < b < m) or (b - a) % m in (1, m - 1):
                raise ValueError(f"bad chord {c}")
        for c1, c2 in itertools.combinations(self.chords, 2):
            if crosses(c1, c2):
                raise ValueError(f"chords {c1} and {c2} cross")

    @classmethod
    def from_chords(cls, n: int, chords) -> "TriangulationA":
        return cls(n, frozenset(chord(a, b) for a, b in chords))

    def sorted_chords(self) -> list[Chord]:
        return sorted(self.chords)

    def edges(self) -> set[Chord]:
        m = self.n + 3
        return set(self.chords) | {chord(k, (k + 1) % m) for k in range(m)}

    def to_json(self) -> dict:
        return {"n": self.n, "chords": [list(c) for c in self.sorted_chords()]}

    @classmethod
    def from_json(cls, data: dict) -> "TriangulationA":
        return cls.from_chords(int(data["n"]), [tuple(c) for c in data["chords"]])


def catalan(k: int) -> int:
    """Independent Catalan oracle, straight from the binomial formula."""
    return math.comb(2 * k, k) // (k + 1)


def quad_of_a(t: TriangulationA, c: Chord) -> tuple[int, ...]:
    m = t.n + 3
    a, b = c
    if (b - a) % m in (1, m - 1):
        raise ValueError("polygon edges have no quadrilateral")
    if c not in t.chords:
        raise ValueError(f"{c} is not a chord of the triangulation")
    edges = t.edges()
    apexes = [
        x for x in range(m) if x not in c and chord(a, x) in edges and chord(b, x) in edges
    ]
    if len(apexes) != 2:
        raise ValueError(f"chord {c} does not bound two triangles")
    return tuple(sorted({a, b, *apexes}))


def color_a(t: TriangulationA, c: Chord) -> str:
    """Green iff the chord touches the largest-labelled vertex of Q(C)."""
    q = quad_of_a(t, c)
    return "green" if max(q) in c else "red"


def validate_a(v: Vector, n: int):
    """Validity check; returns the violated condition or None."""
    if len(v) != n + 1 or not all(isinstance(x, int) for x in v):
        raise ValueError(f"need an (n+1)-tuple of integers, got {v}")
    for i in range(n + 1):
        if not 0 <= v[i] <= i:
            return ("ii", i + 1)
    for i, j in itertools.combinations(range(n + 1), 2):
        bound = v[j] - (j - i)
        if bound >= 0 and v[i] > bound:
            return ("i", (i + 1, j + 1))
    return None


def is_valid_a(v: Vector, n: int) -> bool:
    return validate_a(v, n) is None


def enumerate_a(n: int) -> list[Vector]:
    out = []
    for v in itertools.product(*(range(i + 1) for i in range(n + 1))):
        if is_valid_a(v, n):
            out.append(v)
    return out


def encode_a(t: TriangulationA) -> Vector:
    edges = t.edges()
    out = []
    for i in range(1, t.n + 2):
        least = min(x for x in range(i) if chord(x, i) in edges)
        out.append(i - 1 - least)
    return tuple(out)


def _fan_complete(region) -> set[Chord]:
    """Unique all-green triangulation of a region: fan from its largest vertex."""
    verts = sorted(region)
    if len(verts) < 3:
        return set()
    pos = {v: k for k, v in enumerate(verts)}
    hub = verts[-1]
    out = set()
    for v in verts:
        if v != hub and abs(pos[v] - pos[hub]) not in (1, len(verts) - 1):
            out.add(chord(v, hub))
    return out


def decode_a(v: Vector, n: int) -> TriangulationA:
    err = validate_a(v, n)
    if err is not None:
        raise ValueError(f"invalid type-A bracket vector {v}: condition {err[0]} at {err[1]}")
    from .tri_b import split_regions

    reds = {chord(i, i - 1 - v[i - 1]) for i in range(1, n + 2) if v[i - 1] > 0}
    chords = set(reds)
    for region in split_regions(n + 3, reds):
        chords |= _fan_complete(region)
    t = TriangulationA(n, frozenset(chords))
    assert encode_a(t) == v
    return t


def red_set_a(t: TriangulationA) -> frozenset[Chord]:
    v = encode_a(t)
    return frozenset(chord(i, i - 1 - v[i - 1]) for i in range(1, t.n + 2) if v[i - 1] > 0)


def flip_a(t: TriangulationA, c: Chord) -> TriangulationA:
    q = quad_of_a(t, c)
    x, y = (v for v in q if v not in c)
    chords = set(t.chords)
    chords.discard(c)
    chords.add(chord(x, y))
    return TriangulationA(t.n, frozenset(chords))


def covers_by_flip_a(s: TriangulationA, t: TriangulationA) -> bool:
    if s.n != t.n or s == t:
        return False
    return any(color_a(s, c) == "green" and flip_a(s, c) == t for c in s.chords)


def leq_a(a: Vector, b: Vector) -> bool:
    return all(x <= y for x, y in zip(a, b, strict=True))


def covers_a(a: Vector, b: Vector, n: int) -> bool:
    diffs = [k for k in range(n + 1) if a[k] != b[k]]
    if len(diffs) != 1:
        return False
    k = diffs[0]
    if not a[k] < b[k]:
        return False
    return not any(
        is_valid_a(a[:k] + (x,) + a[k + 1 :], n) for x in range(a[k] + 1, b[k])
    )


def up_a(x: Vector, n: int) -> Vector:
    """Minimal valid vector above a tuple with 0 <= x_i <= i-1."""
    if len(x) != n + 1 or not all(0 <= x[i] <= i for i in range(n + 1)):
        raise ValueError(f"up_a needs entries with 0 <= x_i <= i-1: {x}")
    g: list[int] = []
    for i in range(n + 1):
        best = x[i]
        for j in range(1, min(x[i], i) + 1):
            best = max(best, g[i - j] + j)
        g.append(best)
    result = tuple(g)
    assert is_valid_a(result, n)
    return result


def meet_a(a: Vector, b: Vector, n: int) -> Vector:
    result = tuple(min(x, y) for x, y in zip(a, b, strict=True))
    assert is_valid_a(result, n), "componentwise min of valid A-vectors must be valid"
    return result


def join_a(a: Vector, b: Vector, n: int) -> Vector:
    return up_a(tuple(max(x, y) for x, y in zip(a, b, strict=True)), n)


def psi_a(t: TriangulationA) -> frozenset[frozenset[int]]:
    """Noncrossing partition of [n+1] cut out by the perturbed red chords.

    A red chord {i, j} separates the open range (i, j); vertices 0 and n+2
    are erased; blocks are the classes left unseparated.
    """
    cuts = [(a, b) for a, b in red_set_a(t)]
    verts = range(1, t.n + 2)

    def key(v: int) -> tuple:
        return tuple(a < v < b for a, b in cuts)

    blocks: dict[tuple, set[int]] = {}
    for v in verts:
        blocks.setdefault(key(v), set()).add(v)
    return frozenset(frozenset(b) for b in blocks.values())


def partition_a_to_json(p) -> list[list[int]]:
    return sorted([sorted(b) for b in p], key=lambda b: b[0])
