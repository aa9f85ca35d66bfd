"""Exact-sign geometric predicates shared by index structures and oracles.

Every orientation / comparison decision in the package routes through the
sign functions in this module. Each predicate first evaluates in double
precision with a conservative error bound and falls back to exact rational
arithmetic (fractions.Fraction on the raw doubles) only when the float
result is too small to trust. The result is adaptively exact: fast in the
common case, never wrong on degenerate input.

Tie-break conventions fixed here and used identically by the indexed paths
and the brute-force oracles:

- orientation sign: +1 counterclockwise, -1 clockwise, 0 collinear.
- extremal queries: larger dot product wins; exact dot ties go to the
  lexicographically larger point.
- directed line stabbing: among edges whose intersection with the line is
  furthest in the line direction, prefer the edge whose interior lies on
  the left of the directed line, then a collinear edge, then the right
  side; remaining ties go to the lexicographically smaller index pair.
"""

from __future__ import annotations

from fractions import Fraction

CCW = 1
COLLINEAR = 0
CW = -1

_EPS = 2.0 ** -53
# Shewchuk's ccwerrboundA for the orientation filter.
_ORIENT_BOUND = (3.0 + 16.0 * _EPS) * _EPS
# Cruder filter constant for generic difference-of-products expressions.
_GEN_BOUND = 16.0 * _EPS


def _sign(x) -> int:
    if x > 0:
        return 1
    if x < 0:
        return -1
    return 0


def orientation(a, b, c) -> int:
    """Sign of the cross product (b - a) x (c - a).

    +1 when a,b,c turn counterclockwise, -1 clockwise, 0 collinear.
    """
    detleft = (a[0] - c[0]) * (b[1] - c[1])
    detright = (a[1] - c[1]) * (b[0] - c[0])
    det = detleft - detright
    if detleft > 0.0:
        if detright <= 0.0:
            return _sign(det)
        detsum = detleft + detright
    elif detleft < 0.0:
        if detright >= 0.0:
            return _sign(det)
        detsum = -detleft - detright
    else:
        return _sign(det)
    errbound = _ORIENT_BOUND * detsum
    if det > errbound or -det > errbound:
        return _sign(det)
    return _orientation_exact(a, b, c)


def _orientation_exact(a, b, c) -> int:
    ax, ay = Fraction(a[0]), Fraction(a[1])
    bx, by = Fraction(b[0]), Fraction(b[1])
    cx, cy = Fraction(c[0]), Fraction(c[1])
    det = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax)
    return _sign(det)


def _filtered_sign(t1: float, t2: float, exact) -> int:
    """Sign of t1 - t2 with a magnitude filter; `exact` recomputes exactly."""
    det = t1 - t2
    bound = _GEN_BOUND * (abs(t1) + abs(t2))
    if det > bound or -det > bound:
        return _sign(det)
    if t1 == 0.0 and t2 == 0.0:
        return 0
    return exact()


def cross_diff_sign(a, b, c, d) -> int:
    """Sign of (b - a) x (d - c)."""

    def exact():
        det = (Fraction(b[0]) - Fraction(a[0])) * (Fraction(d[1]) - Fraction(c[1])) - (
            Fraction(b[1]) - Fraction(a[1])
        ) * (Fraction(d[0]) - Fraction(c[0]))
        return _sign(det)

    return _filtered_sign((b[0] - a[0]) * (d[1] - c[1]), (b[1] - a[1]) * (d[0] - c[0]), exact)


def dot_diff_sign(a, b, c, d) -> int:
    """Sign of (b - a) . (d - c)."""

    def exact():
        val = (Fraction(b[0]) - Fraction(a[0])) * (Fraction(d[0]) - Fraction(c[0])) + (
            Fraction(b[1]) - Fraction(a[1])
        ) * (Fraction(d[1]) - Fraction(c[1]))
        return _sign(val)

    return _filtered_sign(
        (b[0] - a[0]) * (d[0] - c[0]), -(b[1] - a[1]) * (d[1] - c[1]), exact
    )


def cross_vec_sign(u, v) -> int:
    """Sign of u x v for plain float vectors."""

    def exact():
        return _sign(Fraction(u[0]) * Fraction(v[1]) - Fraction(u[1]) * Fraction(v[0]))

    return _filtered_sign(u[0] * v[1], u[1] * v[0], exact)


def dot_vec_sign(u, v) -> int:
    """Sign of u . v for plain float vectors."""

    def exact():
        return _sign(Fraction(u[0]) * Fraction(v[0]) + Fraction(u[1]) * Fraction(v[1]))

    return _filtered_sign(u[0] * v[0], -u[1] * v[1], exact)


def dot_vec_diff_sign(u, a, b) -> int:
    """Sign of u . (b - a)."""

    def exact():
        val = Fraction(u[0]) * (Fraction(b[0]) - Fraction(a[0])) + Fraction(u[1]) * (
            Fraction(b[1]) - Fraction(a[1])
        )
        return _sign(val)

    return _filtered_sign(u[0] * (b[0] - a[0]), -u[1] * (b[1] - a[1]), exact)


def cross_vec_diff_sign(u, a, b) -> int:
    """Sign of u x (b - a)."""

    def exact():
        val = Fraction(u[0]) * (Fraction(b[1]) - Fraction(a[1])) - Fraction(u[1]) * (
            Fraction(b[0]) - Fraction(a[0])
        )
        return _sign(val)

    return _filtered_sign(u[0] * (b[1] - a[1]), u[1] * (b[0] - a[0]), exact)


def side_of_line(p0, direction, q) -> int:
    """Side of point q relative to the line through p0 with the given direction.

    +1 left of the directed line, -1 right, 0 on the line.
    """
    return cross_vec_diff_sign(direction, p0, q)


def compare_dot(p, q, direction) -> int:
    """Sign of (p - q) . direction, exactly."""
    return dot_vec_diff_sign(direction, q, p)


def compare_extremal(p, q, direction) -> int:
    """Order two points for an extremal query in `direction`.

    +1 if p wins, -1 if q wins, 0 only for coordinate-identical points.
    Exact dot ties break toward the lexicographically larger point.
    """
    s = compare_dot(p, q, direction)
    if s != 0:
        return s
    if p[0] != q[0]:
        return 1 if p[0] > q[0] else -1
    if p[1] != q[1]:
        return 1 if p[1] > q[1] else -1
    return 0


def compare_dist2(center, p, q) -> int:
    """Sign of |p - center|^2 - |q - center|^2, exactly."""
    dpx = p[0] - center[0]
    dpy = p[1] - center[1]
    dqx = q[0] - center[0]
    dqy = q[1] - center[1]
    t1 = dpx * dpx + dpy * dpy
    t2 = dqx * dqx + dqy * dqy

    def exact():
        cx, cy = Fraction(center[0]), Fraction(center[1])
        a = (Fraction(p[0]) - cx) ** 2 + (Fraction(p[1]) - cy) ** 2
        b = (Fraction(q[0]) - cx) ** 2 + (Fraction(q[1]) - cy) ** 2
        return _sign(a - b)

    return _filtered_sign(t1, t2, exact)


def dist2(p, q) -> float:
    """Plain double-precision squared Euclidean distance."""
    dx = p[0] - q[0]
    dy = p[1] - q[1]
    return dx * dx + dy * dy


def point_on_segment(a, b, q) -> bool:
    """True when q lies on the closed segment ab (exact)."""
    if orientation(a, b, q) != COLLINEAR:
        return False
    return (
        min(a[0], b[0]) <= q[0] <= max(a[0], b[0])
        and min(a[1], b[1]) <= q[1] <= max(a[1], b[1])
    )


# --- direction algebra ------------------------------------------------------
#
# Directions appear in two exactly-representable forms:
#   ("v", x, y)              a plain vector, e.g. a query direction or its
#                            exact 90-degree rotation,
#   ("n", ax, ay, bx, by)    the outward normal of hull edge a->b, i.e.
#                            ccw90(b - a), kept symbolic so comparisons stay
#                            exact without materializing the rotation.
#
# Rotating both arguments by 90 degrees preserves cross and dot, so normal
# comparisons reduce to difference predicates on the stored endpoints.


def dir_vec(x, y):
    return ("v", x, y)


def dir_normal(a, b):
    """Outward normal of the clockwise-hull edge a -> b."""
    return ("n", a[0], a[1], b[0], b[1])


def dir_neg(d):
    if d[0] == "v":
        return ("v", -d[1], -d[2])
    return ("n", d[3], d[4], d[1], d[2])


def dir_ccw90(vec):
    """Exact counterclockwise quarter turn of a plain vector."""
    return ("v", -vec[1], vec[0])


def dir_cw90(vec):
    """Exact clockwise quarter turn of a plain vector."""
    return ("v", vec[1], -vec[0])


def dir_cross_sign(d1, d2) -> int:
    """Sign of d1 x d2 for symbolic directions."""
    if d1[0] == "v":
        if d2[0] == "v":
            return cross_vec_sign((d1[1], d1[2]), (d2[1], d2[2]))
        # v x ccw90(z) = v . z
        return dot_vec_diff_sign((d1[1], d1[2]), (d2[1], d2[2]), (d2[3], d2[4]))
    if d2[0] == "v":
        # ccw90(z) x v = -(z . v)
        return -dot_vec_diff_sign((d2[1], d2[2]), (d1[1], d1[2]), (d1[3], d1[4]))
    # ccw90(z1) x ccw90(z2) = z1 x z2
    return cross_diff_sign((d1[1], d1[2]), (d1[3], d1[4]), (d2[1], d2[2]), (d2[3], d2[4]))


def dir_dot_sign(d1, d2) -> int:
    """Sign of d1 . d2 for symbolic directions."""
    if d1[0] == "v":
        if d2[0] == "v":
            return dot_vec_sign((d1[1], d1[2]), (d2[1], d2[2]))
        # v . ccw90(z) = z x v
        return cross_vec_diff_sign((d1[1], d1[2]), (d2[1], d2[2]), (d2[3], d2[4]))
    if d2[0] == "v":
        # ccw90(z) . v = z x v
        return cross_vec_diff_sign((d2[1], d2[2]), (d1[1], d1[2]), (d1[3], d1[4]))
    # ccw90(z1) . ccw90(z2) = z1 . z2
    return dot_diff_sign((d1[1], d1[2]), (d1[3], d1[4]), (d2[1], d2[2]), (d2[3], d2[4]))


def cw_rank_less(anchor, d1, d2) -> bool:
    """True when d1 comes strictly before d2 sweeping clockwise from anchor.

    Directions parallel to the anchor rank first; the rank of a direction
    grows with the clockwise angle from the anchor, so this induces a strict
    total order on directions of distinct angle.
    """
    k1 = _cw_class(anchor, d1)
    k2 = _cw_class(anchor, d2)
    if k1 != k2:
        return k1 < k2
    if k1 == 1 or k1 == 3:
        return dir_cross_sign(d1, d2) < 0
    return False


def _cw_class(anchor, d) -> int:
    c = dir_cross_sign(anchor, d)
    if c < 0:
        return 1
    if c > 0:
        return 3
    return 0 if dir_dot_sign(anchor, d) > 0 else 2
