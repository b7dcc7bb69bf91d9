"""Type-B noncrossing partitions and the bijection psi.

Elements of a partition are signed integers: +j for the unbarred vertex j,
-j for the barred vertex jbar, j = 1..n.  On the 2n-point circle the
cyclic order is 1, .., n, -1, .., -n.

psi erases the green chords, perturbs the red ones and reads off the cells:
a mixed red chord has both endpoints nudged counter-clockwise, so it
separates the half-open index range [unbarred end, barred end); a pure red
chord has its endpoints nudged together, separating the open range between
them.  The vertices n+1 and (n+1)bar are erased afterwards.  Which side of
a cut a surviving vertex lands on never depends on the nudge sizes, so the
cells are computed with exact integer interval tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import inf as INF

from . import bracket_b as bb
from .polygon import chord_kind, is_barred, label_value, n_vertices
from .tri_b import TriangulationB, red_set


@dataclass(frozen=True)
class NoncrossingPartitionB:
    n: int
    blocks: frozenset[frozenset[int]]

    def __post_init__(self):
        seen: set[int] = set()
        for b in self.blocks:
            for x in b:
                if x == 0 or abs(x) > self.n:
                    raise ValueError(f"element {x} out of range for n={self.n}")
                if x in seen:
                    raise ValueError(f"element {x} appears in two blocks")
                seen.add(x)
        if len(seen) != 2 * self.n:
            raise ValueError("blocks must partition {1..n, -1..-n}")

    def block_of(self, x: int) -> frozenset[int]:
        for b in self.blocks:
            if x in b:
                return b
        raise KeyError(x)

    def sorted_blocks(self) -> list[list[int]]:
        def elem_key(x: int) -> tuple[int, int]:
            return (0, x) if x > 0 else (1, -x)

        out = [sorted(b, key=elem_key) for b in self.blocks]
        out.sort(key=lambda b: elem_key(b[0]))
        return out

    def to_json(self) -> dict:
        return {"n": self.n, "blocks": [[str(x) for x in b] for b in self.sorted_blocks()]}

    @classmethod
    def from_json(cls, data: dict) -> "NoncrossingPartitionB":
        n = int(data["n"])
        blocks = frozenset(frozenset(int(x) for x in b) for b in data["blocks"])
        return cls(n, blocks)


def circle_pos(x: int, n: int) -> int:
    """Position on the 2n-point circle, 0-based: 1..n then -1..-n."""
    return x - 1 if x > 0 else n - x - 1


def bar_element(x: int) -> int:
    return -x


def bar_blocks(blocks) -> frozenset[frozenset[int]]:
    return frozenset(frozenset(-x for x in b) for b in blocks)


def is_symmetric(p: NoncrossingPartitionB) -> bool:
    return bar_blocks(p.blocks) == p.blocks


def _blocks_cross(b1, b2, n: int) -> bool:
    pos1 = sorted(circle_pos(x, n) for x in b1)
    pos2 = [circle_pos(x, n) for x in b2]
    if len(pos1) < 2:
        return False
    # b2 must sit inside a single gap of b1 (cyclically)
    import bisect

    gaps = set()
    for q in pos2:
        k = bisect.bisect_left(pos1, q)
        gaps.add(k % len(pos1))
    return len(gaps) > 1


def is_noncrossing_b(p: NoncrossingPartitionB) -> bool:
    """Symmetric and the blocks' convex hulls are pairwise disjoint."""
    if not is_symmetric(p):
        return False
    blocks = list(p.blocks)
    for i in range(len(blocks)):
        for j in range(i + 1, len(blocks)):
            if _blocks_cross(blocks[i], blocks[j], p.n):
                return False
    return True


def _cuts(t: TriangulationB) -> list[tuple[int, int]]:
    """Perturbed red chords as half-open index intervals [lo, hi)."""
    n = t.n
    out = []
    for a, b in red_set(t):
        if chord_kind((a, b), n) == "mixed":
            out.append((a, b))  # a unbarred, b barred: [a, b)
        else:
            out.append((a + 1, b))  # endpoints move together: (a, b)
    return sorted(out)


def psi(t: TriangulationB) -> NoncrossingPartitionB:
    """The type-B noncrossing partition induced by the red chords."""
    n = t.n
    cuts = _cuts(t)
    erased = {n, 2 * n + 1}

    def key(idx: int) -> tuple:
        return tuple(lo <= idx < hi for lo, hi in cuts)

    cells: dict[tuple, set[int]] = {}
    for idx in range(n_vertices(n)):
        if idx in erased:
            continue
        x = label_value(idx, n) * (-1 if is_barred(idx, n) else 1)
        cells.setdefault(key(idx), set()).add(x)
    return NoncrossingPartitionB(n, frozenset(frozenset(b) for b in cells.values()))


def enumerate_ncb(n: int) -> list[NoncrossingPartitionB]:
    """All symmetric noncrossing partitions, enumerated directly.

    Circle points 0..2n-1 are assigned to blocks in order.  Choices are free
    for the first half; the bar symmetry forces the block of every point
    p >= n, so the search only branches on noncrossing partial partitions
    of n points.
    """
    results: list[NoncrossingPartitionB] = []
    blocks: list[list[int]] = []

    def crossing_if_added(q: int, target: list[int]) -> bool:
        for other in blocks:
            if other is target:
                continue
            # pattern b1 < a < b2 < q with b1, b2 in other, a in target
            for a in target:
                if any(b1 < a for b1 in other) and any(a < b2 < q for b2 in other):
                    return True
        return False

    def point_label(p: int) -> int:
        return p + 1 if p < n else n - p - 1

    def finish() -> None:
        part = frozenset(frozenset(point_label(p) for p in b) for b in blocks)
        p = NoncrossingPartitionB(n, part)
        if is_symmetric(p):
            results.append(p)

    def rec(q: int) -> None:
        if q == 2 * n:
            finish()
            return
        if q < n:
            for b in blocks:
                if not crossing_if_added(q, b):
                    b.append(q)
                    rec(q + 1)
                    b.pop()
            blocks.append([q])
            rec(q + 1)
            blocks.pop()
            return
        # Second half: the block of q must end up as the bar image of the
        # block of p = q - n.  Members of that image already placed pin the
        # target; otherwise q starts fresh or joins a block still confined
        # to [p, n) (one whose bar image is not yet committed).
        p = q - n
        pblock = next(b for b in blocks if p in b)
        known = {(x + n) % (2 * n) for x in pblock if x < p or n <= x < q}
        if known:
            target = next(b for b in blocks if next(iter(known)) in b)
            if known <= set(target) and not crossing_if_added(q, target):
                target.append(q)
                rec(q + 1)
                target.pop()
            return
        blocks.append([q])
        rec(q + 1)
        blocks.pop()
        for b in list(blocks):
            if all(p <= x < n for x in b) and not crossing_if_added(q, b):
                b.append(q)
                rec(q + 1)
                b.pop()

    rec(0)
    results.sort(key=lambda p: p.sorted_blocks())
    return results


def in_bds(p: NoncrossingPartitionB, s) -> bool:
    """No block is exactly {i, -i} for i in s."""
    forbidden = {frozenset({i, -i}) for i in s}
    return not any(b in forbidden for b in p.blocks)


def _walk_ccw(i: int, n: int):
    """Vertices counter-clockwise from the ccw neighbour of i, as labels.

    Yields signed labels, skipping the erased vertices n+1 and (n+1)bar,
    ending with i itself after a full wrap.
    """
    m = n_vertices(n)
    start = (i - 2) % m
    for step in range(m - 1):
        idx = (start - step) % m
        if idx in (n, 2 * n + 1):
            continue
        yield label_value(idx, n) * (-1 if is_barred(idx, n) else 1)
    yield i


def psi_inverse(p: NoncrossingPartitionB) -> TriangulationB:
    """Reconstruct the triangulation with psi(t) = p.

    Per-coordinate case analysis on the first vertex v sharing a block
    with i, searching counter-clockwise from i's neighbour:

      block(i-1) holds some unbarred w > i -> r_i = 0
          (a pure red chord {i-1, w} sits there; nothing can attach to i
          on the scan side without crossing it)
      v = i-1                   -> r_i = 0
      v unbarred, v < i-1       -> pure chord {i, v}, r_i = i-1-v
      v = -j                    -> chord {i, (j+1)bar}, r_i = n+i-j-1 (inf if j < i)
      v = n, i < n              -> chord {i, 1bar}, r_i = inf

    A first match at an unbarred v >= i (or no match at all, block(i) =
    {i}) leaves C_i underdetermined: any nonzero r_i is possible (r_i = 0
    is ruled out for i >= 2, since an edge segment needs i-1 in the block
    or the pure-chord witness above).  Those coordinates are fixed by a
    validity-pruned completion search checked against psi itself;
    bijectivity guarantees a unique completion.
    """
    if not is_noncrossing_b(p):
        raise ValueError("input is not a symmetric noncrossing partition")
    n = p.n
    forced: dict[int, object] = {}
    free: list[int] = []
    for i in range(1, n + 1):
        block = p.block_of(i)
        v = next(x for x in _walk_ccw(i, n) if x in block)
        if i >= 2 and any(i < w <= n for w in p.block_of(i - 1)):
            forced[i] = 0
        elif i >= 2 and v == i - 1:
            forced[i] = 0
        elif 0 < v < i - 1:
            forced[i] = i - 1 - v
        elif v < 0:
            j = -v
            forced[i] = n + i - j - 1 if j >= i else INF
        elif v == n and i < n:
            forced[i] = INF
        else:
            free.append(i)

    if not free:
        vec = tuple(forced[i] for i in range(1, n + 1))
        if not bb.is_valid(vec, n):
            raise ValueError("partition is not in the image of psi")
        t = bb.decode(vec, n)
        if psi(t) != p:
            raise ValueError("partition is not in the image of psi")
        return t

    candidates = {
        i: (list(range(1, n)) + [INF]) if i >= 2 else [0] + list(range(1, n)) + [INF]
        for i in free
    }
    solution: list[TriangulationB] = []

    def ok_partial(vals: dict[int, object]) -> bool:
        v = [vals.get(k) for k in range(1, n + 1)]
        for j in range(n):
            if v[j] is None:
                continue
            for i in range(j):
                if v[i] is None:
                    continue
                bound = v[j] - (j - i)
                if bound >= 0 and v[i] > bound:
                    return False
        for i in range(n):
            x = v[i]
            if x is not None and x != INF and x >= i + 1:
                ref = v[n + i - x]
                if ref is not None and ref != INF:
                    return False
        return True

    def rec(k: int, vals: dict[int, object]) -> None:
        if solution:
            return
        if k == len(free):
            vec = tuple(vals[i] for i in range(1, n + 1))
            if bb.is_valid(vec, n):
                t = bb.decode(vec, n)
                if psi(t) == p:
                    solution.append(t)
            return
        i = free[k]
        for x in candidates[i]:
            vals[i] = x
            if ok_partial(vals):
                rec(k + 1, vals)
            del vals[i]

    rec(0, dict(forced))
    if not solution:
        raise ValueError("partition is not in the image of psi")
    return solution[0]
