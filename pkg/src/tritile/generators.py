"""Constructors for the standard building blocks and fixtures."""
from __future__ import annotations

from dataclasses import dataclass

from .exact import AngleClass, SymLen, TileSpec
from .model import build_tiling, place_corner, place_tile


def _vec_add(p, q):
    return (p[0] + q[0], p[1] + q[1])


def _as_class(frame):
    if frame is None:
        return AngleClass(0, 0)
    return frame if isinstance(frame, AngleClass) else AngleClass(*frame)


def gen_quadratic(n, spec, frame=None, origin=(0.0, 0.0)):
    """The n*n tiling of the tile scaled by n, cut by lines parallel to its sides.

    Upright tiles are translates of the base tile and the inverted ones are
    its rotation by pi, so every copy is direct.
    """
    if n < 1:
        raise ValueError("n must be a positive integer")
    d = _as_class(frame)
    base = place_tile(spec, origin, d, "ABC")
    A, B, C = base.points
    u = (B[0] - A[0], B[1] - A[1])
    v = (C[0] - A[0], C[1] - A[1])
    tiles = []
    for i in range(n):
        for j in range(n - i):
            p = (origin[0] + i * u[0] + j * v[0], origin[1] + i * u[1] + j * v[1])
            tiles.append(place_tile(spec, p, d, "ABC", len(tiles)))
            if i + j <= n - 2:
                q = _vec_add(p, _vec_add(u, v))
                tiles.append(place_tile(spec, q, d.opposite(), "ABC", len(tiles)))
    region = [origin,
              (origin[0] + n * u[0], origin[1] + n * u[1]),
              (origin[0] + n * v[0], origin[1] + n * v[1])]
    return build_tiling(spec, tiles, region)


def gen_kite(spec, frame=None, origin=(0.0, 0.0)):
    """Two mirror-image tiles sharing their c-edge; the alpha corners meet."""
    d = _as_class(frame)
    t1 = place_tile(spec, origin, d, "ABC", 0)
    t2 = place_tile(spec, origin, d + AngleClass(0, -1), "ACB", 1)
    A, B, C = t1.points
    Cm = t2.points[1]
    return build_tiling(spec, [t1, t2], [A, Cm, B, C])


def gen_parallelogram(spec, frame=None, shared_side="c", origin=(0.0, 0.0)):
    """Two direct tiles related by a half turn about the midpoint of a shared side."""
    if shared_side not in ("a", "b", "c"):
        raise ValueError("shared_side must be one of a, b, c")
    d = _as_class(frame)
    t1 = place_tile(spec, origin, d, "ABC", 0)
    e = t1.edge(shared_side)
    s = _vec_add(e.start, e.end)
    anchor = (s[0] - t1.anchor[0], s[1] - t1.anchor[1])
    t2 = place_tile(spec, anchor, d.opposite(), "ABC", 1)
    i = e.index
    free = (s[0] - t1.points[(i + 2) % 3][0], s[1] - t1.points[(i + 2) % 3][1])
    pts = list(t1.points)
    region = pts[:i + 1] + [free] + pts[i + 1:]
    return build_tiling(spec, [t1, t2], region)


def gen_equilateral_centers(spec, X, origin=(0.0, 0.0)):
    """Equilateral triangle of side X*c cut into X*X unit triangles, each split
    into three tiles meeting at its centre.

    Only the symmetric tile (a == b, so alpha = pi/6) fits; every boundary
    edge is a c-edge, which makes this the basic input for sawtooth tests.
    """
    if abs(spec.length("a") - spec.length("b")) > 1e-12 * spec.length("c"):
        raise ValueError("three tiles meet at a centre only when a == b")
    if X < 1:
        raise ValueError("X must be a positive integer")
    c = spec.length("c")
    u = AngleClass(0, 0).unit(spec.alpha)
    v = AngleClass(1, 0).unit(spec.alpha)
    tiles = []
    for i in range(X):
        for j in range(X - i):
            p = (origin[0] + c * (i * u[0] + j * v[0]), origin[1] + c * (i * u[1] + j * v[1]))
            pu = (p[0] + c * u[0], p[1] + c * u[1])
            pv = (p[0] + c * v[0], p[1] + c * v[1])
            for anchor, d in ((p, 0), (pu, 2), (pv, 4)):
                tiles.append(place_tile(spec, anchor, AngleClass(d, 0), "ABC", len(tiles)))
            if i + j <= X - 2:
                puv = (pu[0] + c * v[0], pu[1] + c * v[1])
                for anchor, d in ((pu, 1), (puv, 3), (pv, 5)):
                    tiles.append(place_tile(spec, anchor, AngleClass(d, 0), "ABC", len(tiles)))
    L = X * c
    region = [origin, (origin[0] + L * u[0], origin[1] + L * u[1]),
              (origin[0] + L * v[0], origin[1] + L * v[1])]
    return build_tiling(spec, tiles, region)


# direction offset of each labelled edge from the first edge of a direct tile
_EDGE_OFFSET = {"c": AngleClass(0, 0), "a": AngleClass(2, 1), "b": AngleClass(3, 1)}


def _strip(spec, label, count, above, start_id):
    """``count`` c-sharing parallelograms along the x-axis from the origin,
    each putting one ``label`` edge on the axis (above or below it)."""
    target = AngleClass(0, 0) if above else AngleClass(3, 0)
    d = target - _EDGE_OFFSET[label]
    ln = spec.length(label)
    probe = place_tile(spec, (0.0, 0.0), d, "ABC")
    e = probe.edge(label)
    # put the edge on the axis with its left end at x = 0
    x0 = e.start[0] if above else e.end[0]
    shift = (-x0, -e.start[1])
    tiles = []
    for i in range(count):
        anchor = (probe.anchor[0] + shift[0] + i * ln, probe.anchor[1] + shift[1])
        t1 = place_tile(spec, anchor, d, "ABC", start_id + len(tiles))
        ce = t1.edge("c")
        s = _vec_add(ce.start, ce.end)
        t2 = place_tile(spec, (s[0] - anchor[0], s[1] - anchor[1]), d.opposite(), "ABC",
                        start_id + len(tiles) + 1)
        tiles.extend([t1, t2])
    return tiles


def _hull(points):
    pts = sorted(set((round(x, 12), round(y, 12)) for x, y in points))

    def half(seq):
        out = []
        for p in seq:
            while len(out) >= 2 and ((out[-1][0] - out[-2][0]) * (p[1] - out[-2][1])
                                     - (out[-1][1] - out[-2][1]) * (p[0] - out[-2][0])) <= 1e-12:
                out.pop()
            out.append(p)
        return out
    lower, upper = half(pts), half(pts[::-1])
    return lower[:-1] + upper[:-1]


def gen_two_strips(spec, n_below, label_below, n_above, label_above):
    """Two strips of parallelograms meeting along the x-axis.

    The strip below puts ``n_below`` edges labelled ``label_below`` on the
    axis and the strip above ``n_above`` edges labelled ``label_above``; the
    two totals must have equal length, so the shared line carries a relation
    between the sides.
    """
    lb, la = spec.length(label_below), spec.length(label_above)
    if abs(n_below * lb - n_above * la) > 1e-9 * max(1.0, n_below * lb):
        raise ValueError("the two strips have different lengths")
    below = _strip(spec, label_below, n_below, False, 0)
    above = _strip(spec, label_above, n_above, True, len(below))
    hb = _hull([p for t in below for p in t.points])
    ha = _hull([p for t in above for p in t.points])
    region = _stitch(hb, ha, n_below * lb)
    return build_tiling(spec, below + above, region)


def _stitch(hb, ha, length):
    """Counterclockwise outline of two convex pieces glued along [0, length] on the axis."""
    def on_axis(p, x):
        return abs(p[1]) <= 1e-9 and abs(p[0] - x) <= 1e-9

    def path(poly, start_x, end_x):
        n = len(poly)
        i = next(k for k in range(n) if on_axis(poly[k], start_x))
        out = [poly[i]]
        while not on_axis(poly[i], end_x) or len(out) == 1:
            i = (i + 1) % n
            out.append(poly[i])
        return out
    # the lower piece goes counterclockwise from (0,0) round to (length,0)
    low = path(hb, 0.0, length)
    up = path(ha, length, 0.0)
    return low[:-1] + up[:-1]


def appendix_tiles(spec):
    """Placements of the six-tiles-at-X patch (plus the tile below X).

    Around X the corners are, counterclockwise from the supporting line:
    alpha, alpha, beta, beta, alpha, beta.  The two middle beta tiles share
    a ray with both a-edges on it, the last beta tile puts its a-edge on the
    supporting line ending at X, and the tile below has X inside its c-edge.
    """
    a = spec.length("a")
    c = spec.length("c")
    P = (0.0, 0.0)
    X = (a, 0.0)
    plan = [("A", "direct"), ("A", "direct"), ("B", "mirrored"),
            ("B", "direct"), ("A", "direct"), ("B", "mirrored")]
    ray = AngleClass(0, 0)
    tiles = []
    for corner, chir in plan:
        t = place_corner(spec, X, corner, ray, chir, len(tiles))
        tiles.append(t)
        ray = t.edges[2].direction.opposite()
    below = place_tile(spec, (P[0] + c, P[1]), AngleClass(3, 0), "ABC", len(tiles))
    tiles.append(below)
    return tiles, X, P


def gen_appendix_fixture(spec):
    """Open patch around a star vertex X with in-degree 1, out-degree 0 in the a-graph.

    Returns ``(tiling, x_vertex_id)``.
    """
    tiles, X, _ = appendix_tiles(spec)
    t = build_tiling(spec, tiles, None, fragment=True)
    vid = min(range(len(t.points)),
              key=lambda i: (t.points[i][0] - X[0]) ** 2 + (t.points[i][1] - X[1]) ** 2)
    return t, vid


@dataclass
class WorkedExampleReport:
    L: int
    N: int
    area_lhs: int
    area_rhs: int
    zh_boundary_big: int
    zh_trapezoid: int
    zh_trapezoid_total: int
    side_symbolic: SymLen


HERDT_TILE = (3, 5, 7)
HERDT_N = 1215
HERDT_SIDE = SymLen(27, 1, 7)
TRAPEZOID_SIDES = ((49, AngleClass(0)), (15, AngleClass(2)), (34, AngleClass(3)), (15, AngleClass(4)))


def worked_example_arithmetic():
    """Integer identities for the 1215-tile tiling of an equilateral triangle by (3, 5, 7)."""
    from .invariant import zh_edge

    spec = TileSpec.from_sides(*HERDT_TILE)
    side = HERDT_SIDE
    L = side.evaluate_exact(spec)
    if L.denominator != 1:
        raise ArithmeticError("side length is not an integer")
    L = int(L)
    a, b = HERDT_TILE[0], HERDT_TILE[1]
    area_lhs = HERDT_N * a * b
    area_rhs = L * L
    big = sum(zh_edge(AngleClass(j), L) for j in (0, 2, 4))
    trap = sum(zh_edge(d, n) for n, d in TRAPEZOID_SIDES)
    return WorkedExampleReport(
        L=L, N=HERDT_N, area_lhs=area_lhs, area_rhs=area_rhs,
        zh_boundary_big=big, zh_trapezoid=trap,
        zh_trapezoid_total=9 * trap, side_symbolic=side)
