"""Floating-point plane geometry used for placement and validation.

Every predicate here takes an explicit tolerance; exact combinatorics
lives in ``tritile.exact``.
"""
from __future__ import annotations

import math

import numpy as np

from .errors import SnapAmbiguity
from .exact import AngleClass, canonical_class


def signed_area(points):
    if len(points) > 64:
        pts = np.asarray(points, dtype=float)
        x, y = pts[:, 0], pts[:, 1]
        return 0.5 * float(np.dot(x, np.roll(y, -1)) - np.dot(np.roll(x, -1), y))
    total = 0.0
    n = len(points)
    for i in range(n):
        x0, y0 = points[i]
        x1, y1 = points[(i + 1) % n]
        total += x0 * y1 - x1 * y0
    return 0.5 * total


def cross(o, p, q):
    return (p[0] - o[0]) * (q[1] - o[1]) - (p[1] - o[1]) * (q[0] - o[0])


def dist(p, q):
    return math.hypot(p[0] - q[0], p[1] - q[1])


def point_segment_param(p, s0, s1):
    """(t, distance) of ``p`` projected on the segment s0->s1, t in units of length."""
    dx, dy = s1[0] - s0[0], s1[1] - s0[1]
    length = math.hypot(dx, dy)
    if length == 0:
        return 0.0, dist(p, s0)
    ux, uy = dx / length, dy / length
    rx, ry = p[0] - s0[0], p[1] - s0[1]
    t = rx * ux + ry * uy
    d = abs(rx * uy - ry * ux)
    return t, d


def on_segment_interior(p, s0, s1, eps):
    t, d = point_segment_param(p, s0, s1)
    return d <= eps and eps < t < dist(s0, s1) - eps


def point_in_polygon(p, poly, eps):
    """Return 'inside', 'boundary' or 'outside' for a simple polygon."""
    n = len(poly)
    for i in range(n):
        s0, s1 = poly[i], poly[(i + 1) % n]
        t, d = point_segment_param(p, s0, s1)
        if d <= eps and -eps <= t <= dist(s0, s1) + eps:
            return "boundary"
    inside = False
    x, y = p
    for i in range(n):
        x0, y0 = poly[i]
        x1, y1 = poly[(i + 1) % n]
        if (y0 > y) != (y1 > y):
            xc = x0 + (y - y0) * (x1 - x0) / (y1 - y0)
            if xc > x:
                inside = not inside
    return "inside" if inside else "outside"


def segments_cross(p1, p2, q1, q2, eps):
    """True when the open segments cross at a single interior point."""
    d1 = cross(q1, q2, p1)
    d2 = cross(q1, q2, p2)
    d3 = cross(p1, p2, q1)
    d4 = cross(p1, p2, q2)
    lp = dist(p1, p2)
    lq = dist(q1, q2)
    tol_p = eps * max(lq, 1.0)
    tol_q = eps * max(lp, 1.0)
    return ((d1 > tol_p and d2 < -tol_p) or (d1 < -tol_p and d2 > tol_p)) and \
           ((d3 > tol_q and d4 < -tol_q) or (d3 < -tol_q and d4 > tol_q))


def convex_overlap(poly1, poly2, eps):
    """Whether two convex polygons have interiors overlapping by more than eps.

    Separating-axis test on the edge normals of both polygons.
    """
    for poly in (poly1, poly2):
        n = len(poly)
        for i in range(n):
            x0, y0 = poly[i]
            x1, y1 = poly[(i + 1) % n]
            nx, ny = y1 - y0, x0 - x1
            norm = math.hypot(nx, ny)
            if norm == 0:
                continue
            nx, ny = nx / norm, ny / norm
            a = [px * nx + py * ny for px, py in poly1]
            b = [px * nx + py * ny for px, py in poly2]
            if min(a) >= max(b) - eps or min(b) >= max(a) - eps:
                return False
    return True


def bbox(points):
    xs = [p[0] for p in points]
    ys = [p[1] for p in points]
    return (min(xs), min(ys), max(xs), max(ys))


def bbox_disjoint(b1, b2, eps):
    return b1[2] < b2[0] - eps or b2[2] < b1[0] - eps or \
        b1[3] < b2[1] - eps or b2[3] < b1[1] - eps


def classify_direction(vec, alpha, frame=0.0, kmax=24, tol=1e-7):
    """Identify the AngleClass of a direction vector numerically.

    Searches |k| <= kmax for the class closest to the vector's angle and
    returns None when nothing lies within ``tol`` radians.
    """
    theta = math.atan2(vec[1], vec[0]) - frame
    best = None
    for k in sorted(range(-kmax, kmax + 1), key=abs):
        rest = (theta - k * alpha) / (math.pi / 3)
        j = round(rest)
        err = abs(rest - j) * math.pi / 3
        if best is None or err < best[0] - 1e-15:
            best = (err, AngleClass(j, k))
        if err <= tol:
            return canonical_class(AngleClass(j, k), alpha)
    return None


def rotate_point(p, angle, center=(0.0, 0.0)):
    c, s = math.cos(angle), math.sin(angle)
    x, y = p[0] - center[0], p[1] - center[1]
    return (center[0] + c * x - s * y, center[1] + s * x + c * y)


class VertexSnapper:
    """Merge coordinates closer than ``eps`` into shared vertex ids.

    Points between eps and 10*eps of an existing vertex raise
    SnapAmbiguity instead of being merged silently.
    """

    def __init__(self, eps):
        self.eps = eps
        self.cell = 10 * eps
        self.points = []
        self._grid = {}

    def _key(self, p):
        return (math.floor(p[0] / self.cell), math.floor(p[1] / self.cell))

    def find(self, p):
        kx, ky = self._key(p)
        best = None
        for dx in (-1, 0, 1):
            for dy in (-1, 0, 1):
                for vid in self._grid.get((kx + dx, ky + dy), ()):
                    d = dist(p, self.points[vid])
                    if best is None or d < best[0]:
                        best = (d, vid)
        return best

    def add(self, p):
        p = (float(p[0]), float(p[1]))
        hit = self.find(p)
        if hit is not None:
            d, vid = hit
            if d <= self.eps:
                return vid
            if d <= self.cell:
                raise SnapAmbiguity(
                    f"points {p} and {self.points[vid]} are {d:.3g} apart: "
                    f"neither equal (eps={self.eps:g}) nor clearly distinct")
        vid = len(self.points)
        self.points.append(p)
        self._grid.setdefault(self._key(p), []).append(vid)
        return vid
