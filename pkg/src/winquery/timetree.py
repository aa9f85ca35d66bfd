"""Balanced binary decomposition over time indices.

Nodes live in a complete binary tree over the index range padded to the
next power of two; virtual leaves beyond n-1 stay empty. A node is named
(level, pos): level 0 holds single indices, and node (level, pos) covers
indices [pos * 2^level, (pos+1) * 2^level) intersected with [0, n).
Level links and the leaf array are implicit in this layout: the neighbor
of (level, pos) is (level, pos +- 1) and the leaf of index k is (0, k).
"""

from __future__ import annotations

from .events import Window


class TimeDecomposition:
    def __init__(self, n: int):
        if n < 1:
            raise ValueError("decomposition needs n >= 1")
        self.n = n
        self.height = (n - 1).bit_length() if n > 1 else 0
        self.size = 1 << self.height  # padded leaf count

    @property
    def num_levels(self) -> int:
        return self.height + 1

    def level_count(self, level: int) -> int:
        """Number of nonempty nodes at a level."""
        return -(-self.n // (1 << level))

    def node_count(self) -> int:
        return sum(self.level_count(level) for level in range(self.num_levels))

    def node_range(self, level: int, pos: int) -> tuple[int, int]:
        """Inclusive index range covered by a node (clipped to n)."""
        lo = pos << level
        hi = min(lo + (1 << level), self.n) - 1
        return lo, hi

    def _heap_to_node(self, h: int) -> tuple[int, int]:
        depth = h.bit_length() - 1
        return self.height - depth, h - (1 << depth)

    def cover(self, win: Window) -> list[tuple[int, int]]:
        """Canonical cover: O(log w) disjoint nodes whose ranges partition [i, j].

        Nodes are returned in increasing index order; none is empty.
        """
        l = win.i + self.size
        r = win.j + 1 + self.size
        left_side: list[int] = []
        right_side: list[int] = []
        while l < r:
            if l & 1:
                left_side.append(l)
                l += 1
            if r & 1:
                r -= 1
                right_side.append(r)
            l >>= 1
            r >>= 1
        right_side.reverse()
        return [self._heap_to_node(h) for h in left_side + right_side]

    def cover_two(self, win: Window) -> tuple[tuple[int, int], tuple[int, int] | None]:
        """Two same-level nodes jointly covering the window, each of width < 2w.

        The first is the widest node of width < 2w containing index i; the
        second is its right level-link neighbor, absent past the sequence
        end. Found by index arithmetic in O(1), standing in for the
        parent-pointer/level-link walk.
        """
        w = win.width
        level = min((w - 1).bit_length(), self.height)
        pos1 = win.i >> level
        first = (level, pos1)
        second = None
        if (pos1 + 1) << level < self.n:
            second = (level, pos1 + 1)
        return first, second
