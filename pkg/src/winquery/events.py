"""Event sequence types: points, sequences, and window resolution."""

from __future__ import annotations

import bisect
from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatchError, EmptyInputError, InvalidIntervalError


@dataclass(frozen=True)
class TemporalPoint:
    """One event: rank in time order, timestamp, coordinates, optional color."""

    index: int
    timestamp: int
    coords: tuple[float, ...]
    color: int | None = None


@dataclass(frozen=True)
class Window:
    """Inclusive index range [i, j] into an event sequence."""

    i: int
    j: int

    def __post_init__(self):
        if not (0 <= self.i <= self.j):
            raise InvalidIntervalError(f"invalid window [{self.i}, {self.j}]")

    @property
    def width(self) -> int:
        return self.j - self.i + 1


class EventSequence:
    """Immutable time-ordered point sequence all indices are built over.

    Timestamps are non-decreasing and indices are contiguous 0..n-1. Ties in
    timestamps keep insertion order (stable sort), so window semantics stay
    deterministic on real data.
    """

    def __init__(self, points: list[TemporalPoint], dimension: int):
        self.points = points
        self.dimension = dimension
        self.n = len(points)
        self.timestamps = [p.timestamp for p in points]
        # Hot query loops index these directly.
        if dimension >= 2:
            self.xs = [p.coords[0] for p in points]
            self.ys = [p.coords[1] for p in points]
        else:
            self.xs = [p.coords[0] for p in points]
            self.ys = [0.0] * self.n
        self._coords_array = None

    @property
    def coords_array(self) -> np.ndarray:
        """(n, d) float64 view of all coordinates; built on first use."""
        if self._coords_array is None:
            self._coords_array = np.array([p.coords for p in self.points], dtype=np.float64)
        return self._coords_array

    def point(self, k: int) -> TemporalPoint:
        return self.points[k]

    def xy(self, k: int) -> tuple[float, float]:
        return (self.xs[k], self.ys[k])

    def colors(self) -> list[int | None]:
        return [p.color for p in self.points]

    def __len__(self) -> int:
        return self.n


def make_sequence(raw_events) -> EventSequence:
    """Build an EventSequence from (timestamp, coords[, color]) tuples.

    Events are stably sorted by timestamp and assigned indices 0..n-1.
    Raises EmptyInputError on no events and DimensionMismatchError when
    coordinate lengths disagree or d < 1.
    """
    raw = list(raw_events)
    if not raw:
        raise EmptyInputError("event sequence needs at least one event")
    first = raw[0]
    d = len(first[1])
    if d < 1:
        raise DimensionMismatchError("coordinate dimension must be >= 1")
    normalized = []
    for ev in raw:
        t = int(ev[0])
        coords = tuple(float(c) for c in ev[1])
        color = ev[2] if len(ev) > 2 else None
        if len(coords) != d:
            raise DimensionMismatchError(
                f"event has {len(coords)} coordinates, expected {d}"
            )
        if color is not None:
            color = int(color)
            if not (0 <= color < 2**32):
                raise DimensionMismatchError("color must fit in 32 unsigned bits")
        normalized.append((t, coords, color))
    normalized.sort(key=lambda ev: ev[0])  # stable: ties keep insertion order
    points = [
        TemporalPoint(index=k, timestamp=t, coords=coords, color=color)
        for k, (t, coords, color) in enumerate(normalized)
    ]
    return EventSequence(points, d)


def resolve_window(seq: EventSequence, t1: int, t2: int) -> Window | None:
    """Maximal index range whose timestamps lie in [t1, t2], or None.

    Binary search over the sorted timestamp array; inclusive on both ends.
    Raises InvalidIntervalError when t1 > t2.
    """
    if t1 > t2:
        raise InvalidIntervalError(f"invalid interval [{t1}, {t2}]")
    lo = bisect.bisect_left(seq.timestamps, t1)
    hi = bisect.bisect_right(seq.timestamps, t2) - 1
    if lo > hi:
        return None
    return Window(lo, hi)
