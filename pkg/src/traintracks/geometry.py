"""Small planar-geometry helpers shared by layout validators."""

from __future__ import annotations

import math


def orientation(p, q, r):
    """Sign of the cross product (q-p) x (r-p): +1 left turn, -1 right, 0 collinear."""
    cross = (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])
    if cross > 0:
        return 1
    if cross < 0:
        return -1
    return 0


def _on_segment(p, q, r):
    """Assuming collinearity, is r within the bounding box of segment pq?"""
    return (
        min(p[0], q[0]) <= r[0] <= max(p[0], q[0])
        and min(p[1], q[1]) <= r[1] <= max(p[1], q[1])
    )


def segments_intersect(a1, a2, b1, b2):
    """True if closed segments a1a2 and b1b2 share at least one point."""
    o1 = orientation(a1, a2, b1)
    o2 = orientation(a1, a2, b2)
    o3 = orientation(b1, b2, a1)
    o4 = orientation(b1, b2, a2)
    if o1 != o2 and o3 != o4:
        return True
    if o1 == 0 and _on_segment(a1, a2, b1):
        return True
    if o2 == 0 and _on_segment(a1, a2, b2):
        return True
    if o3 == 0 and _on_segment(b1, b2, a1):
        return True
    if o4 == 0 and _on_segment(b1, b2, a2):
        return True
    return False


def segments_cross(a1, a2, b1, b2, eps=1e-9):
    """True if the segments intersect anywhere except at a shared endpoint.

    Intended for float coordinates; endpoints closer than eps count as shared.
    """

    def same(p, q):
        return abs(p[0] - q[0]) <= eps and abs(p[1] - q[1]) <= eps

    shared = [
        (p, q)
        for p in (a1, a2)
        for q in (b1, b2)
        if same(p, q)
    ]
    if len(shared) >= 2:
        return True  # identical or overlapping at both ends
    if not segments_intersect(a1, a2, b1, b2):
        return False
    if not shared:
        return True
    # One shared endpoint: a genuine crossing also touches elsewhere, which
    # for straight segments means the far endpoint of one lies on the other.
    p, q = shared[0]
    a_far = a2 if same(p, a1) else a1
    b_far = b2 if same(q, b1) else b1
    if _point_on_segment(b1, b2, a_far, eps) or _point_on_segment(a1, a2, b_far, eps):
        return True
    return False


def _point_on_segment(p, q, r, eps=1e-9):
    """Is r on segment pq, excluding the endpoints themselves?"""
    if (abs(r[0] - p[0]) <= eps and abs(r[1] - p[1]) <= eps) or (
        abs(r[0] - q[0]) <= eps and abs(r[1] - q[1]) <= eps
    ):
        return False
    dx, dy = q[0] - p[0], q[1] - p[1]
    length = math.hypot(dx, dy)
    if length <= eps:
        return False
    cross = dx * (r[1] - p[1]) - dy * (r[0] - p[0])
    if abs(cross) > eps * length:
        return False
    dot = dx * (r[0] - p[0]) + dy * (r[1] - p[1])
    return -eps < dot < dx * dx + dy * dy + eps


def turn_angle(d1, d2):
    """Angle in degrees between two direction vectors (0 = straight ahead)."""
    a1 = math.atan2(d1[1], d1[0])
    a2 = math.atan2(d2[1], d2[0])
    diff = abs(a2 - a1) % (2 * math.pi)
    if diff > math.pi:
        diff = 2 * math.pi - diff
    return math.degrees(diff)
