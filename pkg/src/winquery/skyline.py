"""Windowed skyline (maxima-set) queries.

Event k is *dominated* by event j (j != k) when every coordinate of j is
>= the matching coordinate of k. Two distinct events with identical
coordinate vectors dominate each other, so neither is maximal while both
are in the window; an event never dominates itself.

For each event k the horizons give the extreme window bounds within which
k stays maximal: k is maximal in [i, j] exactly when
earliest_start[k] <= i <= k <= j <= latest_end[k]. That reduces windowed
maxima reporting to stabbing the rectangles
[earliest_start[k], k] x [k, latest_end[k]] with the point (i, j), which
the index answers with a segment structure over the start axis whose
nodes hold (k, latest_end) pairs in a priority-search arrangement.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass

import numpy as np

from .errors import MissingColorError
from .events import EventSequence, Window
from .timetree import TimeDecomposition


@dataclass(frozen=True)
class Horizons:
    """Per-event maximality bounds: earliest valid start, latest valid end."""

    earliest_start: list[int]
    latest_end: list[int]

    def __len__(self) -> int:
        return len(self.earliest_start)


@dataclass(frozen=True)
class StabRect:
    """Rectangle [start_lo, key] x [key, end_hi] owned by event `key`."""

    key: int
    start_lo: int
    end_hi: int
    color: int | None = None


def coord_dominates(a, b) -> bool:
    """True when b is componentwise >= a (caller excludes the self pair)."""
    for am, bm in zip(a, b):
        if bm < am:
            return False
    return True


class _MinSweep:
    """Segment tree over x-ranks holding active y values with subtree minima.

    Supports activate(rank) and delete-all-active with rank < prefix and
    y <= bound, amortized O(log n) per activation/deletion.
    """

    INF = float("inf")

    def __init__(self, ys: list[float]):
        m = len(ys)
        size = 1
        while size < m:
            size <<= 1
        self.size = size
        self.ys = ys
        self.tree = [self.INF] * (2 * size)

    def activate(self, rank: int):
        pos = rank + self.size
        self.tree[pos] = self.ys[rank]
        pos >>= 1
        while pos:
            self.tree[pos] = min(self.tree[2 * pos], self.tree[2 * pos + 1])
            pos >>= 1

    def pop_dominated(self, prefix: int, bound: float) -> list[int]:
        """Delete and return ranks < prefix whose y <= bound."""
        out: list[int] = []
        if prefix <= 0:
            return out
        stack = [(1, 0, self.size)]
        while stack:
            node, lo, hi = stack.pop()
            if lo >= prefix or self.tree[node] > bound:
                continue
            if hi - lo == 1:
                out.append(lo)
                self.tree[node] = self.INF
                p = node >> 1
                while p:
                    self.tree[p] = min(self.tree[2 * p], self.tree[2 * p + 1])
                    p >>= 1
                continue
            mid = (lo + hi) // 2
            stack.append((2 * node + 1, mid, hi))
            stack.append((2 * node, lo, mid))
        return out


def _horizons_2d(seq: EventSequence) -> Horizons:
    n = seq.n
    xs, ys = seq.xs, seq.ys

    def one_direction(order: range, boundary: int, step: int) -> list[int]:
        # Rank events by (x, index) so "x <= X" is a rank prefix.
        by_x = sorted(range(n), key=lambda k: (xs[k], k))
        rank_of = [0] * n
        for r, k in enumerate(by_x):
            rank_of[k] = r
        xs_sorted = [xs[k] for k in by_x]
        sweep = _MinSweep([ys[k] for k in by_x])
        out = [boundary] * n
        for k in order:
            prefix = bisect.bisect_right(xs_sorted, xs[k])
            for r in sweep.pop_dominated(prefix, ys[k]):
                out[by_x[r]] = k - step
            sweep.activate(rank_of[k])
        return out

    latest = one_direction(range(n), n - 1, 1)
    earliest = one_direction(range(n - 1, -1, -1), 0, -1)
    return Horizons(earliest, latest)


def _horizons_scan(seq: EventSequence) -> Horizons:
    coords = seq.coords_array
    n = seq.n
    latest = [n - 1] * n
    earliest = [0] * n
    for k in range(n):
        if k + 1 < n:
            mask = (coords[k + 1 :] >= coords[k]).all(axis=1)
            hits = np.nonzero(mask)[0]
            if hits.size:
                latest[k] = k + int(hits[0])  # first dominator minus one
        if k > 0:
            mask = (coords[:k] >= coords[k]).all(axis=1)
            hits = np.nonzero(mask)[0]
            if hits.size:
                earliest[k] = int(hits[-1]) + 1  # last earlier dominator plus one
    return Horizons(earliest, latest)


def _horizons_custom(seq: EventSequence, dominated_by) -> Horizons:
    n = seq.n
    pts = [p.coords for p in seq.points]
    latest = [n - 1] * n
    earliest = [0] * n
    for k in range(n):
        for j in range(k + 1, n):
            if dominated_by(pts[k], pts[j]):
                latest[k] = j - 1
                break
        for i in range(k - 1, -1, -1):
            if dominated_by(pts[k], pts[i]):
                earliest[k] = i + 1
                break
    return Horizons(earliest, latest)


def compute_horizons(seq: EventSequence, dominated_by=None) -> Horizons:
    """Horizon table for a sequence under dominance (or a custom preorder).

    `dominated_by(a, b)` must implement an irreflexive preorder on distinct
    events given their coordinate vectors; passing one selects a quadratic
    generic path. Default dominance uses an O(n log n) sweep for d = 2 and
    a vectorized pairwise scan for d >= 3.
    """
    if dominated_by is not None:
        return _horizons_custom(seq, dominated_by)
    if seq.dimension == 2:
        return _horizons_2d(seq)
    return _horizons_scan(seq)


class _PrioritySearch:
    """Static priority search tree over (k, end) pairs sorted by k.

    Reports all pairs with k <= j and end >= j in O(log m + matches).
    """

    __slots__ = ("ks", "ends", "item", "split", "left", "right", "root")

    def __init__(self, ks: list[int], ends: list[int]):
        self.ks = ks
        self.ends = ends
        self.item: list[int] = []
        self.split: list[int] = []
        self.left: list[int] = []
        self.right: list[int] = []
        self.root = self._build(list(range(len(ks))))

    def _build(self, poslist: list[int]) -> int:
        if not poslist:
            return -1
        best = 0
        ends = self.ends
        for t in range(1, len(poslist)):
            if ends[poslist[t]] > ends[poslist[best]]:
                best = t
        item = poslist.pop(best)
        mid = len(poslist) // 2
        left = poslist[:mid]
        right = poslist[mid:]
        nid = len(self.item)
        self.item.append(item)
        self.split.append(self.ks[right[0]] if right else 0)
        self.left.append(-1)
        self.right.append(-1)
        self.left[nid] = self._build(left)
        self.right[nid] = self._build(right) if right else -1
        return nid

    def report(self, j: int, out: list[int]):
        if self.root < 0:
            return
        ks, ends = self.ks, self.ends
        item, split, left, right = self.item, self.split, self.left, self.right
        stack = [self.root]
        while stack:
            nid = stack.pop()
            it = item[nid]
            if ends[it] < j:
                continue
            if ks[it] <= j:
                out.append(ks[it])
            lid = left[nid]
            if lid >= 0:
                stack.append(lid)
            rid = right[nid]
            if rid >= 0 and split[nid] <= j:
                stack.append(rid)


class SkylineIndex:
    """Stabbing structure answering windowed maxima queries.

    O(n log n) space; reporting in O(log^2 n + matches), counting in
    O(log^2 n) without materializing matches.
    """

    def __init__(self, horizons: Horizons, colors=None):
        self.horizons = horizons
        self.n = len(horizons)
        self.colors = list(colors) if colors is not None else None
        self.tree = TimeDecomposition(self.n)
        buckets: dict[tuple[int, int], list[int]] = {}
        starts = horizons.earliest_start
        ends = horizons.latest_end
        for k in range(self.n):
            for node in self.tree.cover(Window(starts[k], k)):
                buckets.setdefault(node, []).append(k)
        self._nodes: dict[tuple[int, int], tuple[list[int], list[int], _PrioritySearch]] = {}
        for node, ks in buckets.items():
            ks.sort()
            node_ends = [ends[k] for k in ks]
            ends_sorted = sorted(node_ends)
            self._nodes[node] = (ks, ends_sorted, _PrioritySearch(ks, node_ends))

    def rectangles(self) -> list[StabRect]:
        h = self.horizons
        return [
            StabRect(
                key=k,
                start_lo=h.earliest_start[k],
                end_hi=h.latest_end[k],
                color=self.colors[k] if self.colors is not None else None,
            )
            for k in range(self.n)
        ]

    def _path_nodes(self, i: int):
        for level in range(self.tree.num_levels):
            node = self._nodes.get((level, i >> level))
            if node is not None:
                yield node

    def report(self, win: Window) -> set[int]:
        out: list[int] = []
        for _, _, pst in self._path_nodes(win.i):
            pst.report(win.j, out)
        return set(out)

    def count(self, win: Window) -> int:
        total = 0
        j = win.j
        for ks, ends_sorted, _ in self._path_nodes(win.i):
            # pairs with k <= j and end >= j; end < j forces k <= end < j,
            # so the two prefix counts subtract cleanly.
            total += bisect.bisect_right(ks, j) - bisect.bisect_left(ends_sorted, j)
        return total


def build_skyline_index(horizons: Horizons, colors=None) -> SkylineIndex:
    return SkylineIndex(horizons, colors)


def query_skyline(index: SkylineIndex, win: Window) -> set[int]:
    """Indices of the maximal events of the window."""
    return index.report(win)


def query_skyline_colors(index: SkylineIndex, win: Window) -> set[int]:
    """Distinct colors on the window's skyline."""
    if index.colors is None or any(c is None for c in index.colors):
        raise MissingColorError("sequence has uncolored points")
    return {index.colors[k] for k in index.report(win)}


def query_skyline_count(index: SkylineIndex, win: Window) -> int:
    """Size of the window's skyline, computed without reporting."""
    return index.count(win)
