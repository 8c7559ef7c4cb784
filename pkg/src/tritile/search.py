"""Backtracking enumeration of small tilings of a polygon by one tile.

The search always extends at the lowest, then leftmost, point of the
uncovered area.  That point is a convex corner of the uncovered area, so
the tile covering the wedge next to its first bounding ray must have a
corner there with an edge along the ray: at most six candidates per node.
Angle bookkeeping is exact; overlap and containment are decided with the
floating tolerance.

Result sets are reported up to the symmetries of the region.  This is
engineering around the structural results, not part of them.
"""
from __future__ import annotations

import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import geometry as geo
from .errors import InvalidSpec, ResourceLimit
from .exact import (CORNER_ANGLE, PI, AngleClass, AngleMeasure, AngleMode,
                    get_eps, measure_between)
from .generators import gen_parallelogram, gen_quadratic
from .model import build_tiling, place_corner, place_tile

PRUNE_RULES = ("angle-census", "segment-relation", "zh-feasibility")
DEFAULT_PRUNING = frozenset({"angle-census", "segment-relation"})
QUANT = 1e6


@dataclass(frozen=True)
class SearchConfig:
    spec: object
    region: tuple
    max_tiles: int
    allow_mirrored: bool = True
    pruning: frozenset = DEFAULT_PRUNING
    workers: int = 1
    node_limit: int = 2_000_000
    eps: float | None = None

    def __post_init__(self):
        object.__setattr__(self, "region", _ccw(self.region))
        object.__setattr__(self, "pruning", frozenset(self.pruning))
        unknown = self.pruning - set(PRUNE_RULES)
        if unknown:
            raise InvalidSpec(f"unknown pruning rules: {sorted(unknown)}")
        if self.max_tiles < 0 or self.workers < 1:
            raise InvalidSpec("max_tiles must be >= 0 and workers >= 1")


@dataclass
class SearchResult:
    tilings: list
    keys: list
    nodes: int
    prunes: dict
    wall_time: float
    target: int | None
    exhaustive: bool = True
    notes: list = field(default_factory=list)

    @property
    def count(self):
        return len(self.tilings)

    def as_dict(self):
        return {"count": self.count, "target_tiles": self.target, "nodes": self.nodes,
                "prunes": dict(self.prunes), "wall_time": round(self.wall_time, 3),
                "exhaustive": self.exhaustive, "notes": list(self.notes)}


def _ccw(region):
    pts = tuple((float(x), float(y)) for x, y in region)
    if len(pts) < 3:
        raise InvalidSpec("a region needs at least three corners")
    return pts if geo.signed_area(pts) > 0 else pts[::-1]


# ---------------------------------------------------------------------------
# builtin regions


def builtin_region(name, spec):
    """Named target polygons: parallelogram, quadratic2, equilateral-c."""
    if name == "parallelogram":
        return gen_parallelogram(spec, shared_side="c").region
    if name == "quadratic2":
        return gen_quadratic(2, spec).region
    if name == "equilateral-c":
        c = spec.length("c")
        return ((0.0, 0.0), (c, 0.0), (c / 2, c * math.sqrt(3) / 2))
    raise InvalidSpec(f"unknown builtin region {name!r} "
                      "(choose parallelogram, quadratic2 or equilateral-c)")


BUILTIN_REGIONS = ("parallelogram", "quadratic2", "equilateral-c")


# ---------------------------------------------------------------------------
# search state


class SearchState:
    """Placed tiles inside a region, with the geometry queries the search needs."""

    def __init__(self, spec, region, tiles=(), allow_mirrored=True, eps=None):
        self.spec = spec
        self.region = _ccw(region)
        self.tiles = list(tiles)
        self.allow_mirrored = allow_mirrored
        self.eps = get_eps() if eps is None else eps
        self.sides = []
        n = len(self.region)
        for i in range(n):
            p0, p1 = self.region[i], self.region[(i + 1) % n]
            d = geo.classify_direction((p1[0] - p0[0], p1[1] - p0[1]), spec.alpha)
            if d is None:
                raise InvalidSpec(f"region side {p0}->{p1} is not along a tile direction")
            self.sides.append((p0, p1, d))

    def child(self, tile):
        s = SearchState.__new__(SearchState)
        s.__dict__.update(self.__dict__)
        s.tiles = self.tiles + [tile]
        return s

    # -- covered wedges at a point -------------------------------------------

    def covered_wedges(self, p):
        """Covered directions at ``p`` as (start class, exact measure) pairs."""
        eps = self.eps
        out = []
        for t in self.tiles:
            hit = False
            for i, q in enumerate(t.points):
                if geo.dist(p, q) <= eps:
                    out.append((t.edges[i].direction, CORNER_ANGLE[t.order[i]]))
                    hit = True
                    break
            if hit:
                continue
            for e in t.edges:
                if geo.on_segment_interior(p, e.start, e.end, eps):
                    out.append((e.direction, PI))
                    break
        for i, (p0, p1, d) in enumerate(self.sides):
            if geo.dist(p, p0) <= eps:
                d_in = self.sides[i - 1][2]
                start = d_in.opposite()
                inner = measure_between(d, start, self.spec.alpha)
                out.append((start, AngleMeasure(6, 0) - inner))
            elif geo.on_segment_interior(p, p0, p1, eps):
                out.append((d.opposite(), PI))
        return out

    def gaps(self, p):
        """Uncovered wedges at ``p`` as (start class, exact measure), by start angle."""
        alpha = self.spec.alpha
        cov = self.covered_wedges(p)
        if not cov:
            return [(AngleClass(0, 0), AngleMeasure(6, 0))]
        cov.sort(key=lambda w: w[0].radians(alpha))
        out = []
        for i, (d, m) in enumerate(cov):
            end = d + m
            nd, _ = cov[(i + 1) % len(cov)]
            gap = measure_between(end, nd, alpha, allow_zero=True)
            if len(cov) == 1 and gap.p == 0 and gap.q == 0:
                gap = AngleMeasure(6, 0) - m
            if gap.value(alpha) > 1e-9:
                out.append((end, gap))
        out.sort(key=lambda g: g[0].radians(alpha))
        return out

    def points(self):
        seen, pts = [], []
        for p in list(self.region) + [q for t in self.tiles for q in t.points]:
            if all(geo.dist(p, q) > self.eps for q in seen):
                seen.append(p)
                pts.append(p)
        return pts

    def frontier(self):
        """(point, first gap start, gap measure) at the lowest-leftmost uncovered point."""
        pts = sorted(self.points(), key=lambda p: (round(p[1], 7), round(p[0], 7)))
        for p in pts:
            g = self.gaps(p)
            if g:
                return p, g[0][0], g[0][1]
        return None

    # -- placement tests ------------------------------------------------------

    def fits(self, tile):
        eps = self.eps
        region = self.region
        for p in tile.points:
            if geo.point_in_polygon(p, region, eps) == "outside":
                return False
        cx = sum(p[0] for p in tile.points) / 3
        cy = sum(p[1] for p in tile.points) / 3
        if geo.point_in_polygon((cx, cy), region, eps) != "inside":
            return False
        n = len(region)
        for e in tile.edges:
            for k in range(n):
                if geo.segments_cross(e.start, e.end, region[k], region[(k + 1) % n], eps):
                    return False
        box = geo.bbox(tile.points)
        for other in self.tiles:
            if geo.bbox_disjoint(box, geo.bbox(other.points), eps):
                continue
            if geo.convex_overlap(tile.points, other.points, eps):
                return False
        return True


def frontier_placements(state):
    """Tile placements at the frontier whose corner fits the frontier wedge.

    The tile has a corner at the frontier point with its counterclockwise
    edge along the wedge's first ray; the corner angle must not exceed the
    wedge (exact equality or a strictly smaller value).
    """
    fr = state.frontier()
    if fr is None:
        return []
    p, ray, gap = fr
    alpha = state.spec.alpha
    chiralities = ("direct", "mirrored") if state.allow_mirrored else ("direct",)
    out = []
    for corner in "ABC":
        m = CORNER_ANGLE[corner]
        rest = gap - m
        if not (rest == AngleMeasure(0, 0) or rest.value(alpha) > 1e-9):
            continue
        for chir in chiralities:
            out.append(place_corner(state.spec, p, corner, ray, chir, len(state.tiles)))
    return out


# ---------------------------------------------------------------------------
# pruning


def _fillable(measure, spec):
    """Can tile corners (plus at most one straight edge) fill this wedge exactly?"""
    if spec.angle_mode is AngleMode.INCOMMENSURABLE:
        if measure.fillable():
            return True
        rest = measure - PI
        return rest.value(spec.alpha) >= -1e-9 and rest.fillable()
    target = measure.value(spec.alpha)
    for straight in (0, 1):
        t = target - straight * math.pi
        if t < -1e-9:
            continue
        if _numeric_combo(t, (spec.alpha, spec.beta, spec.gamma)):
            return True
    return False


def _numeric_combo(target, parts, tol=1e-7):
    if abs(target) <= tol:
        return True
    if target < 0:
        return False
    a, b, c = parts
    for i in range(int(target / a + 1e-9) + 1):
        r1 = target - i * a
        for j in range(int(r1 / b + 1e-9) + 1):
            r2 = r1 - j * b
            k = round(r2 / c)
            if k >= 0 and abs(r2 - k * c) <= tol:
                return True
    return False


def _angle_census_ok(state, tile):
    for p in tile.points:
        for _, gap in state.gaps(p):
            if not _fillable(gap, state.spec):
                return False
    return True


def _segment_relation_ok(state):
    """Every uncovered stretch of a region side must be a sum of tile sides."""
    spec, eps = state.spec, state.eps
    lengths = (spec.length("a"), spec.length("b"), spec.length("c"))
    for p0, p1, _d in state.sides:
        total = geo.dist(p0, p1)
        cov = []
        for t in state.tiles:
            for e in t.edges:
                ts, ds = geo.point_segment_param(e.start, p0, p1)
                te, de = geo.point_segment_param(e.end, p0, p1)
                if ds <= eps * 10 and de <= eps * 10:
                    cov.append((min(ts, te), max(ts, te)))
        cov.sort()
        cur = 0.0
        pieces = []
        for s, e in cov:
            if s > cur + eps:
                pieces.append(s - cur)
            cur = max(cur, e)
        if cur < total - eps:
            pieces.append(total - cur)
        for piece in pieces:
            if not _numeric_combo(piece, lengths, tol=1e-7 * max(1.0, total)):
                return False
    return True


def _zh_numeric(edges_with_len):
    return sum(d.sign * ln for d, ln in edges_with_len)


def _zh_feasible(state, target):
    spec = state.spec
    unit = spec.length("a") - spec.length("b") + spec.length("c")
    boundary = _zh_numeric((d, geo.dist(p0, p1)) for p0, p1, d in state.sides)
    placed = sum(_zh_numeric((e.direction, spec.length(e.label)) for e in t.edges)
                 for t in state.tiles)
    rest = target - len(state.tiles)
    m = (boundary - placed) / unit
    k = round(m)
    if abs(m - k) > 1e-6 * max(1.0, abs(m)):
        return False
    return abs(k) <= rest and (rest - k) % 2 == 0


# ---------------------------------------------------------------------------
# symmetry and canonical forms


def region_symmetries(region, allow_reflections=True, tol=1e-7):
    """Isometries (2x2 matrix, shift) mapping the polygon onto itself."""
    pts = list(region)
    n = len(pts)
    out = []

    def ang(v):
        return math.atan2(v[1], v[0])

    def check(mat, shift, target):
        for i, p in enumerate(pts):
            q = (mat[0][0] * p[0] + mat[0][1] * p[1] + shift[0],
                 mat[1][0] * p[0] + mat[1][1] * p[1] + shift[1])
            if geo.dist(q, target(i)) > tol * max(1.0, geo.dist(pts[0], pts[1])):
                return False
        return True

    src = (pts[1][0] - pts[0][0], pts[1][1] - pts[0][1])
    for s in range(n):
        dst = (pts[(s + 1) % n][0] - pts[s][0], pts[(s + 1) % n][1] - pts[s][1])
        if abs(math.hypot(*src) - math.hypot(*dst)) <= tol * max(1.0, math.hypot(*src)):
            th = ang(dst) - ang(src)
            c, si = math.cos(th), math.sin(th)
            mat = ((c, -si), (si, c))
            shift = (pts[s][0] - (c * pts[0][0] - si * pts[0][1]),
                     pts[s][1] - (si * pts[0][0] + c * pts[0][1]))
            if check(mat, shift, lambda i, s=s: pts[(s + i) % n]):
                out.append((mat, shift, False))
        if not allow_reflections:
            continue
        dst = (pts[(s - 1) % n][0] - pts[s][0], pts[(s - 1) % n][1] - pts[s][1])
        if abs(math.hypot(*src) - math.hypot(*dst)) <= tol * max(1.0, math.hypot(*src)):
            two = ang(dst) + ang(src)
            c, si = math.cos(two), math.sin(two)
            mat = ((c, si), (si, -c))
            shift = (pts[s][0] - (c * pts[0][0] + si * pts[0][1]),
                     pts[s][1] - (si * pts[0][0] - c * pts[0][1]))
            if check(mat, shift, lambda i, s=s: pts[(s - i) % n]):
                out.append((mat, shift, True))
    return out


def _tile_key(tile, mat=((1.0, 0.0), (0.0, 1.0)), shift=(0.0, 0.0)):
    """Quantized corner positions in A, B, C order after the given motion.

    When a == b the A and B corners are interchangeable, so they are sorted
    and a tile and its relabelled mirror image get the same key.
    """
    pos = dict(zip(tile.order, tile.points))
    corners = []
    for lab in "ABC":
        x, y = pos[lab]
        corners.append((round((mat[0][0] * x + mat[0][1] * y + shift[0]) * QUANT),
                        round((mat[1][0] * x + mat[1][1] * y + shift[1]) * QUANT)))
    la, lb = geo.dist(pos["B"], pos["C"]), geo.dist(pos["A"], pos["C"])
    if abs(la - lb) <= 1e-9 * max(la, lb):
        corners[:2] = sorted(corners[:2])
    return tuple(v for c in corners for v in c)


def tiling_key(tiles, mat=((1.0, 0.0), (0.0, 1.0)), shift=(0.0, 0.0)):
    return tuple(sorted(_tile_key(t, mat, shift) for t in tiles))


def canonical_key(tiles, symmetries):
    return min(tiling_key(tiles, m, s) for m, s, _ in symmetries)


# ---------------------------------------------------------------------------
# enumeration


def target_tile_count(spec, region, tol=1e-7):
    """Number of tiles an exact cover needs, or None if the areas do not divide."""
    ratio = abs(geo.signed_area(region)) / spec.area
    n = round(ratio)
    if n < 1 or abs(ratio - n) > tol * max(1.0, ratio):
        return None
    return n


def _placement(t):
    return (t.anchor, t.first_dir.j, t.first_dir.k, t.order)


def _dfs(cfg, state, target, found, counter):
    counter["nodes"] += 1
    if counter["nodes"] > cfg.node_limit:
        raise ResourceLimit(f"node budget of {cfg.node_limit} exhausted", counter["nodes"])
    if len(state.tiles) == target:
        found.append([_placement(t) for t in state.tiles])
        return
    for cand in frontier_placements(state):
        if not state.fits(cand):
            counter["rejected"] += 1
            continue
        child = state.child(cand)
        if "angle-census" in cfg.pruning and not _angle_census_ok(child, cand):
            counter["angle-census"] += 1
            continue
        if "segment-relation" in cfg.pruning and not _segment_relation_ok(child):
            counter["segment-relation"] += 1
            continue
        if "zh-feasibility" in cfg.pruning and not _zh_feasible(child, target):
            counter["zh-feasibility"] += 1
            continue
        _dfs(cfg, child, target, found, counter)


def _new_counter():
    return {"nodes": 0, "rejected": 0, **{r: 0 for r in PRUNE_RULES}}


def _run_branch(cfg, target, index):
    """Explore the subtree under the ``index``-th root candidate."""
    root = SearchState(cfg.spec, cfg.region, (), cfg.allow_mirrored, cfg.eps)
    cand = frontier_placements(root)[index]
    found, counter = [], _new_counter()
    if not root.fits(cand):
        counter["rejected"] += 1
        return found, counter
    child = root.child(cand)
    if "angle-census" in cfg.pruning and not _angle_census_ok(child, cand):
        counter["angle-census"] += 1
        return found, counter
    if "segment-relation" in cfg.pruning and not _segment_relation_ok(child):
        counter["segment-relation"] += 1
        return found, counter
    if "zh-feasibility" in cfg.pruning and not _zh_feasible(child, target):
        counter["zh-feasibility"] += 1
        return found, counter
    _dfs(cfg, child, target, found, counter)
    return found, counter


def _collect(cfg, raw, target, nodes, prunes, started, notes):
    spec = cfg.spec
    syms = region_symmetries(cfg.region, allow_reflections=cfg.allow_mirrored)
    best = {}
    for placements in raw:
        tiles = [place_tile(spec, anc, AngleClass(j, k), order, i)
                 for i, (anc, j, k, order) in enumerate(placements)]
        ckey = canonical_key(tiles, syms)
        own = tiling_key(tiles)
        if ckey not in best or own < best[ckey][0]:
            best[ckey] = (own, tiles)
    keys = sorted(best)
    tilings = []
    for k in keys:
        tiles = sorted(best[k][1], key=_tile_key)
        tiles = [place_tile(spec, t.anchor, t.first_dir, t.order, i) for i, t in enumerate(tiles)]
        tilings.append(build_tiling(spec, tiles, cfg.region, eps=cfg.eps))
    return SearchResult(tilings, keys, nodes, prunes, time.perf_counter() - started,
                        target, True, notes)


def enumerate_tilings(cfg):
    """All tilings of ``cfg.region`` with at most ``cfg.max_tiles`` tiles, up to symmetry.

    Raises ResourceLimit when the node budget runs out; a returned result is
    always exhaustive.  Output order does not depend on ``cfg.workers``.
    """
    started = time.perf_counter()
    spec = cfg.spec
    target = target_tile_count(spec, cfg.region)
    prunes = {r: 0 for r in PRUNE_RULES}
    if target is None:
        return SearchResult([], [], 0, prunes, time.perf_counter() - started, None, True,
                            ["region area is not a whole number of tiles"])
    if target > cfg.max_tiles:
        return SearchResult([], [], 0, prunes, time.perf_counter() - started, target, True,
                            [f"region needs {target} tiles, more than max_tiles"])
    root = SearchState(spec, cfg.region, (), cfg.allow_mirrored, cfg.eps)
    n_root = len(frontier_placements(root))
    if cfg.workers > 1 and n_root > 1:
        with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
            parts = list(pool.map(_run_branch, [cfg] * n_root, [target] * n_root,
                                  range(n_root)))
    else:
        parts = [_run_branch(cfg, target, i) for i in range(n_root)]
    raw, total = [], _new_counter()
    total["nodes"] = 1
    for found, counter in parts:
        raw.extend(found)
        for k, v in counter.items():
            total[k] += v
    if total["nodes"] > cfg.node_limit:
        raise ResourceLimit(f"node budget of {cfg.node_limit} exhausted", total["nodes"])
    prunes = {r: total[r] for r in PRUNE_RULES}
    prunes["rejected"] = total["rejected"]
    return _collect(cfg, raw, target, total["nodes"], prunes, started, [])


# ---------------------------------------------------------------------------
# naive reference enumerator


def placement_pool(spec, region, rounds, allow_mirrored=True, eps=None, limit=20000):
    """Every tile position reachable from the region corners in ``rounds`` steps.

    A step places a tile with some corner at a known point and an edge
    along a known direction (or its reverse); new vertices and directions
    feed the next step.  Only positions inside the region are kept.
    """
    state = SearchState(spec, region, (), allow_mirrored, eps)
    points = list(state.region)
    dirs = set()
    for _, _, d in state.sides:
        dirs.add(d)
        dirs.add(d.opposite())
    pool, keys = [], set()
    chiralities = ("direct", "mirrored") if allow_mirrored else ("direct",)
    frontier_pts = list(points)
    for _ in range(rounds):
        new_pts = []
        cur_dirs = sorted(dirs)
        for p in frontier_pts:
            for d in cur_dirs:
                for corner in "ABC":
                    for chir in chiralities:
                        t = place_corner(spec, p, corner, d, chir, len(pool))
                        k = _tile_key(t)
                        if k in keys or not state.fits(t):
                            continue
                        keys.add(k)
                        pool.append(t)
                        if len(pool) > limit:
                            raise ResourceLimit("placement pool too large", len(pool))
                        for e in t.edges:
                            dirs.add(e.direction)
                            dirs.add(e.direction.opposite())
                        new_pts.extend(t.points)
        known = points
        fresh = []
        for p in new_pts:
            if all(geo.dist(p, q) > state.eps for q in known + fresh):
                fresh.append(p)
        points = points + fresh
        # directions may have grown, so revisit every point next round
        frontier_pts = points
    return pool


def naive_enumerate(spec, region, max_tiles, allow_mirrored=True, eps=None):
    """Reference enumerator without pruning: choose non-overlapping sets from the pool."""
    started = time.perf_counter()
    region = _ccw(region)
    eps = get_eps() if eps is None else eps
    target = target_tile_count(spec, region)
    cfg = SearchConfig(spec, region, max_tiles, allow_mirrored, frozenset(), 1, eps=eps)
    prunes = {r: 0 for r in PRUNE_RULES}
    if target is None or target > max_tiles:
        return SearchResult([], [], 0, prunes, time.perf_counter() - started, target)
    pool = placement_pool(spec, region, target, allow_mirrored, eps)
    n = len(pool)
    boxes = [geo.bbox(t.points) for t in pool]
    compat = [set() for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if geo.bbox_disjoint(boxes[i], boxes[j], eps) or \
                    not geo.convex_overlap(pool[i].points, pool[j].points, eps):
                compat[i].add(j)
                compat[j].add(i)
    raw = []
    nodes = 0

    def grow(chosen, cands):
        nonlocal nodes
        nodes += 1
        if len(chosen) == target:
            raw.append([_placement(pool[i]) for i in chosen])
            return
        for i in sorted(cands):
            if i <= (chosen[-1] if chosen else -1):
                continue
            grow(chosen + [i], cands & compat[i])

    grow([], set(range(n)))
    return _collect(cfg, raw, target, nodes, prunes, started, [f"pool of {n} placements"])


__all__ = [
    "SearchConfig", "SearchResult", "SearchState", "enumerate_tilings",
    "frontier_placements", "naive_enumerate", "placement_pool", "builtin_region",
    "BUILTIN_REGIONS", "region_symmetries", "canonical_key", "tiling_key",
    "target_tile_count", "PRUNE_RULES", "DEFAULT_PRUNING",
]
