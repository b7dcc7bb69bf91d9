"""Bracket-vector coordinates for the type-B Tamari lattice.

A bracket vector is an n-tuple over [0, n-1] + {inf} satisfying

  (i)  for 1 <= i < j <= n:  r_i <= r_j - (j-i) whenever r_j - (j-i) >= 0,
  (ii) if inf > r_i >= i then r_{n+i-r_i} = inf.

Entry r_i records the counter-clockwise reach of the scan chord C_i, with
inf marking chords that cross to the barred side.  The componentwise order
on valid vectors is the Tamari order; meet and join are computed through
the kernel/closure maps `down` and `up`.
"""

from __future__ import annotations

import itertools
from math import inf as INF

from .polygon import ccw_distance, chord, chord_partner, n_vertices
from .tri_b import TriangulationB, c_i, from_red_set

Vector = tuple


def entry_to_json(x):
    return "inf" if x == INF else int(x)


def entry_from_json(x):
    if x == "inf":
        return INF
    if isinstance(x, bool) or not isinstance(x, int):
        raise ValueError(f"bracket entry must be an integer or \"inf\", got {x!r}")
    return x


def vector_to_json(v: Vector) -> list:
    return [entry_to_json(x) for x in v]


def vector_from_json(data) -> Vector:
    return tuple(entry_from_json(x) for x in data)


def entries_in_range(v: Vector, n: int) -> bool:
    if len(v) != n:
        return False
    return all(x == INF or (isinstance(x, int) and 0 <= x <= n - 1) for x in v)


def violation(v: Vector, n: int):
    """First violated validity condition, or None.

    Returns ("i", (i, j)) for a condition (i) witness pair or ("ii", i) for
    a condition (ii) witness index, with 1-based positions.
    """
    if not entries_in_range(v, n):
        raise ValueError(f"entries out of range for n={n}: {v}")
    for i, j in itertools.combinations(range(n), 2):
        bound = v[j] - (j - i)
        if bound >= 0 and v[i] > bound:
            return ("i", (i + 1, j + 1))
    for i in range(n):
        if v[i] != INF and v[i] >= i + 1:
            if v[n + i - v[i]] != INF:
                return ("ii", i + 1)
    return None


def is_valid(v: Vector, n: int) -> bool:
    return violation(v, n) is None


def in_m1(v: Vector, n: int) -> bool:
    """Condition (i) alone."""
    w = violation(v, n)
    return w is None or w[0] != "i"


def in_m2(v: Vector, n: int) -> bool:
    """Condition (ii) alone."""
    if not entries_in_range(v, n):
        raise ValueError(f"entries out of range for n={n}: {v}")
    for i in range(n):
        if v[i] != INF and v[i] >= i + 1 and v[n + i - v[i]] != INF:
            return False
    return True


def _check_valid(v: Vector, n: int) -> None:
    w = violation(v, n)
    if w is not None:
        raise ValueError(f"invalid bracket vector {v}: condition {w[0]} at {w[1]}")


def enumerate_vectors(n: int) -> list[Vector]:
    """All valid bracket vectors, lexicographically (inf sorts last)."""
    values = list(range(n)) + [INF]
    out: list[Vector] = []

    def ok_prefix(prefix: list) -> bool:
        j = len(prefix) - 1
        for i in range(j):
            bound = prefix[j] - (j - i)
            if bound >= 0 and prefix[i] > bound:
                return False
        # (ii) checks whose referenced index is already set
        for i in range(j + 1):
            x = prefix[i]
            if x != INF and x >= i + 1 and n + i - x <= j and prefix[n + i - x] != INF:
                return False
        return True

    def rec(prefix: list) -> None:
        if len(prefix) == n:
            if is_valid(tuple(prefix), n):
                out.append(tuple(prefix))
            return
        for x in values:
            prefix.append(x)
            if ok_prefix(prefix):
                rec(prefix)
            prefix.pop()

    rec([])
    return out


def encode(t: TriangulationB) -> Vector:
    """Bracket vector of a triangulation (inf when the reach exceeds n-1)."""
    n = t.n
    out = []
    for i in range(1, n + 1):
        c = c_i(t, i)
        if c is None:
            out.append(0)
            continue
        far = c[1] if c[0] == i - 1 else c[0]
        d = ccw_distance((i - 2) % n_vertices(n), far, n)
        out.append(d if d <= n - 1 else INF)
    return tuple(out)


def scan_chords(v: Vector, n: int) -> list:
    """The chords C_i determined by a valid vector (None for edge segments)."""
    _check_valid(v, n)
    m = n_vertices(n)
    out = []
    for i in range(1, n + 1):
        r = v[i - 1]
        if r == 0:
            out.append(None)
        elif r != INF:
            out.append(chord(i - 1, (i - 1 - (r + 1)) % m))
        else:
            j = next(j for j in range(1, n + 1) if v[j - 1] - j >= n - i)
            out.append(chord(i - 1, n + j))
    return out


def decode(v: Vector, n: int) -> TriangulationB:
    """Triangulation with bracket vector v: rebuild C_i, then green-complete."""
    reds: set = set()
    for c in scan_chords(v, n):
        if c is not None:
            reds.add(c)
            reds.add(chord_partner(c, n))
    t = from_red_set(n, reds)
    assert encode(t) == v, f"decode/encode mismatch at {v}"
    return t


def leq(a: Vector, b: Vector) -> bool:
    return all(x <= y for x, y in zip(a, b, strict=True))


def _next_value_at(v: Vector, n: int, k: int):
    """Smallest legal strictly larger value at coordinate k, or None."""
    if v[k] == INF:
        return None
    for x in list(range(int(v[k]) + 1, n)) + [INF]:
        if is_valid(v[:k] + (x,) + v[k + 1 :], n):
            return x
    return None


def upper_covers(v: Vector, n: int) -> list[Vector]:
    """Covers differ in one coordinate, raised to the next legal value."""
    _check_valid(v, n)
    out = []
    for k in range(n):
        if v[k] == INF:
            continue
        x = _next_value_at(v, n, k)
        if x is not None:
            out.append(v[:k] + (x,) + v[k + 1 :])
    return out


def covers(a: Vector, b: Vector, n: int) -> bool:
    """True iff b covers a: one coordinate differs with no legal value between."""
    _check_valid(a, n)
    _check_valid(b, n)
    diffs = [k for k in range(n) if a[k] != b[k]]
    if len(diffs) != 1:
        return False
    k = diffs[0]
    if not a[k] < b[k]:
        return False
    between = [x for x in range(int(a[k]) + 1, n) if x < b[k]]
    return not any(is_valid(a[:k] + (x,) + a[k + 1 :], n) for x in between)


def up(f: Vector, n: int) -> Vector:
    """Closure: the minimum valid vector componentwise above f in M^(ii).

    Inductive reading of the raise recurrence: g_i is the max of f_i and
    g_{i-j} + j over 1 <= j <= min(f_i, i-1), with finite values at or
    above n clamped to inf.
    """
    if not in_m2(f, n):
        raise ValueError(f"up is only defined on vectors satisfying (ii): {f}")
    g: list = []
    for i in range(n):
        best = f[i]
        if best != INF:
            jmax = min(int(f[i]), i)
            for j in range(1, jmax + 1):
                best = max(best, g[i - j] + j)
            if best >= n:
                best = INF
        g.append(best)
    result = tuple(g)
    _check_valid(result, n)
    return result


def down(f: Vector, n: int) -> Vector:
    """Kernel: the maximum valid vector componentwise below f in M^(i).

    g_i = f_i unless f_i is finite, f_i >= i, and f_{n+i-f_i} != inf; then
    g_i drops to the largest value x < f_i with f_{n+i-x} = inf or x < i.
    """
    if not in_m1(f, n):
        raise ValueError(f"down is only defined on vectors satisfying (i): {f}")
    g = []
    for i in range(n):
        x = f[i]
        if x != INF and x >= i + 1 and f[n + i - x] != INF:
            x = int(x) - 1
            while x >= i + 1 and f[n + i - x] != INF:
                x -= 1
        g.append(x)
    result = tuple(g)
    _check_valid(result, n)
    return result


def meet(a: Vector, b: Vector, n: int) -> Vector:
    return down(tuple(min(x, y) for x, y in zip(a, b, strict=True)), n)


def join(a: Vector, b: Vector, n: int) -> Vector:
    return up(tuple(max(x, y) for x, y in zip(a, b, strict=True)), n)


def bottom_vector(n: int) -> Vector:
    return (0,) * n


def top_vector(n: int) -> Vector:
    return (INF,) * n
