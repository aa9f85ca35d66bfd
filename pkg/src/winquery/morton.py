"""Morton (Z-order) codes over quantized coordinates.

Coordinates are quantized by an affine map of the sequence bounding box
onto a 2^u grid (u = 31 per coordinate by default, so unshifted 2-d codes
fit in 62 bits). A code interleaves the bits of the shifted quantized
coordinates; the last (highest-index) coordinate contributes the most
significant bit of each interleaved group. Shift j adds
j * ceil(2^u / (d+1)) to every coordinate before interleaving, with one
extra code bit per coordinate absorbing the overflow.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatchError, OutOfBoundsError

DEFAULT_BITS = 31


@dataclass(frozen=True, order=False)
class MortonKey:
    """Interleaved code plus the shift id it was encoded under."""

    code: int
    shift: int

    def _check(self, other: "MortonKey"):
        if self.shift != other.shift:
            raise ValueError("cannot compare Morton keys with different shift ids")

    def __lt__(self, other):
        self._check(other)
        return self.code < other.code

    def __le__(self, other):
        self._check(other)
        return self.code <= other.code

    def __gt__(self, other):
        self._check(other)
        return self.code > other.code

    def __ge__(self, other):
        self._check(other)
        return self.code >= other.code


class Quantizer:
    """Affine map of a bounding box onto the [0, 2^u)^d integer grid."""

    def __init__(self, lows, highs, bits: int = DEFAULT_BITS):
        if bits < 1 or bits > 31:
            raise ValueError("bits must be in 1..31")
        self.lows = tuple(float(v) for v in lows)
        self.highs = tuple(float(v) for v in highs)
        if len(self.lows) != len(self.highs):
            raise DimensionMismatchError("lows/highs length mismatch")
        self.dimension = len(self.lows)
        self.bits = bits
        self.grid = 1 << bits
        # factor maps the extent onto [0, 2^u - 1]; zero extent collapses to cell 0.
        self.factors = tuple(
            (self.grid - 1) / (hi - lo) if hi > lo else 0.0
            for lo, hi in zip(self.lows, self.highs)
        )

    @classmethod
    def from_points(cls, coords_iter, bits: int = DEFAULT_BITS) -> "Quantizer":
        pts = list(coords_iter)
        d = len(pts[0])
        lows = [min(p[m] for p in pts) for m in range(d)]
        highs = [max(p[m] for p in pts) for m in range(d)]
        return cls(lows, highs, bits)

    def quantize(self, coords) -> tuple[int, ...]:
        """Grid cell of a point; raises OutOfBoundsError outside the box."""
        out = []
        for m, x in enumerate(coords):
            if not (self.lows[m] <= x <= self.highs[m]):
                raise OutOfBoundsError(
                    f"coordinate {x!r} outside quantizer domain "
                    f"[{self.lows[m]}, {self.highs[m]}] in dimension {m}"
                )
            q = int((x - self.lows[m]) * self.factors[m])
            if q >= self.grid:
                q = self.grid - 1
            out.append(q)
        return tuple(out)

    def quantize_clamped(self, coords) -> tuple[int, ...]:
        """Grid cell of a point clamped into the box (for query points)."""
        out = []
        for m, x in enumerate(coords):
            x = min(max(x, self.lows[m]), self.highs[m])
            q = int((x - self.lows[m]) * self.factors[m])
            if q >= self.grid:
                q = self.grid - 1
            out.append(q)
        return tuple(out)

    def cell_interval(self, dim: int, g_lo: int, g_hi: int) -> tuple[float, float]:
        """Closed real interval covering grid cells [g_lo, g_hi] in one dimension."""
        f = self.factors[dim]
        lo = self.lows[dim]
        if f == 0.0:
            return (lo, self.highs[dim])
        return (lo + g_lo / f, lo + (g_hi + 1) / f)

    def cell_size(self, dim: int) -> float:
        """Real extent of one grid cell (0 extent maps to 0)."""
        f = self.factors[dim]
        return 1.0 / f if f > 0.0 else 0.0


def shift_offset(bits: int, dimension: int, shift_id: int) -> int:
    """Per-coordinate offset for shifted copy j: j * ceil(2^u / (d+1))."""
    return shift_id * (((1 << bits) + dimension) // (dimension + 1))


def _spread2(v: int) -> int:
    """Spread the low 32 bits of v so bit k lands at position 2k."""
    v &= 0xFFFFFFFF
    v = (v | (v << 16)) & 0x0000FFFF0000FFFF
    v = (v | (v << 8)) & 0x00FF00FF00FF00FF
    v = (v | (v << 4)) & 0x0F0F0F0F0F0F0F0F
    v = (v | (v << 2)) & 0x3333333333333333
    v = (v | (v << 1)) & 0x5555555555555555
    return v


def interleave(qs, bits_per_coord: int) -> int:
    """Bit-interleave quantized coordinates; last coordinate most significant."""
    d = len(qs)
    if d == 2 and bits_per_coord <= 32:
        return _spread2(qs[0]) | (_spread2(qs[1]) << 1)
    code = 0
    for bit in range(bits_per_coord):
        for m in range(d):
            code |= ((qs[m] >> bit) & 1) << (bit * d + m)
    return code


def morton_encode(coords, shift_id: int, quantizer: Quantizer, clamp: bool = False) -> MortonKey:
    """Encode a point under shift j into a MortonKey.

    With clamp=True the point is clamped into the quantizer box first
    (used for query points); otherwise coordinates outside the box raise
    OutOfBoundsError.
    """
    d = quantizer.dimension
    if len(coords) != d:
        raise DimensionMismatchError(f"point has {len(coords)} coords, quantizer has {d}")
    if not (0 <= shift_id <= d):
        raise ValueError(f"shift id {shift_id} not in 0..{d}")
    qs = quantizer.quantize_clamped(coords) if clamp else quantizer.quantize(coords)
    off = shift_offset(quantizer.bits, d, shift_id)
    shifted = [q + off for q in qs]
    return MortonKey(code=interleave(shifted, quantizer.bits + 1), shift=shift_id)


def encode_array(coords: np.ndarray, quantizer: Quantizer, shift_id: int) -> np.ndarray:
    """Vectorized 2-d encoding of an (n, 2) coordinate array to uint64 codes."""
    if quantizer.dimension != 2 or coords.shape[1] != 2:
        raise DimensionMismatchError("encode_array handles d = 2 only")
    off = shift_offset(quantizer.bits, 2, shift_id)
    cols = []
    for m in range(2):
        f = quantizer.factors[m]
        gf = (coords[:, m].astype(np.float64) - quantizer.lows[m]) * f
        np.clip(gf, 0.0, float(quantizer.grid - 1), out=gf)
        cols.append(gf.astype(np.uint64) + np.uint64(off))
    return _spread2_np(cols[0]) | (_spread2_np(cols[1]) << np.uint64(1))


def _spread2_np(v: np.ndarray) -> np.ndarray:
    v = v.astype(np.uint64)
    v = (v | (v << np.uint64(16))) & np.uint64(0x0000FFFF0000FFFF)
    v = (v | (v << np.uint64(8))) & np.uint64(0x00FF00FF00FF00FF)
    v = (v | (v << np.uint64(4))) & np.uint64(0x0F0F0F0F0F0F0F0F)
    v = (v | (v << np.uint64(2))) & np.uint64(0x3333333333333333)
    v = (v | (v << np.uint64(1))) & np.uint64(0x5555555555555555)
    return v
