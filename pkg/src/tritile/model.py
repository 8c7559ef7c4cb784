"""Placed tiles and the planar structure derived from them.

A tile is placed by an anchor point, the AngleClass of its first edge and
the counterclockwise order of its corners (``"ABC"`` and its rotations are
direct copies, ``"ACB"`` and its rotations are mirror images).  Corner A
carries alpha, B beta and C the 2pi/3 angle; the side opposite a corner
carries the lower-case label.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import geometry as geo
from .errors import (CoverageError, DanglingEdgeError, InvalidSpec,
                     NonSimpleBoundary, OrientationError, OverlapError,
                     TilingError)
from .exact import (ALPHA, BETA, CORNER_ANGLE, FULL, GAMMA, OPPOSITE, PI,
                    AngleClass, AngleMeasure, AngleMode, SymLen, TileSpec,
                    canonical_class, check_tile_spec, get_eps, measure_between,
                    sum_symlen)

DIRECT_ORDERS = ("ABC", "BCA", "CAB")
MIRRORED_ORDERS = ("ACB", "CBA", "BAC")
# exterior turn when walking counterclockwise through a corner
TURN = {"A": PI - ALPHA, "B": PI - BETA, "C": PI - GAMMA}


@dataclass(frozen=True)
class TileEdge:
    tile: int
    index: int
    label: str
    direction: AngleClass
    start: tuple
    end: tuple

    @property
    def length_sym(self):
        return SymLen.of(self.label)


@dataclass(frozen=True)
class PlacedTile:
    id: int
    anchor: tuple
    first_dir: AngleClass
    order: str
    points: tuple
    edges: tuple

    @property
    def chirality(self):
        return "direct" if self.order in DIRECT_ORDERS else "mirrored"

    def corner_index(self, corner):
        return self.order.index(corner)

    def edge(self, label):
        for e in self.edges:
            if e.label == label:
                return e
        raise KeyError(label)

    def area(self):
        return geo.signed_area(self.points)


def chirality_order(chirality, start="A"):
    base = "ABC" if chirality == "direct" else "ACB"
    if chirality not in ("direct", "mirrored"):
        raise ValueError(f"chirality must be 'direct' or 'mirrored', not {chirality!r}")
    i = base.index(start)
    return base[i:] + base[:i]


def place_tile(spec, anchor, first_dir, order="ABC", id=0, frame=0.0):
    """Place a tile: ``anchor`` is the corner ``order[0]``, ``first_dir`` the
    direction of the edge leaving it counterclockwise."""
    if order not in DIRECT_ORDERS + MIRRORED_ORDERS:
        raise ValueError(f"bad corner order {order!r}")
    if not isinstance(first_dir, AngleClass):
        first_dir = AngleClass(*first_dir)
    first_dir = canonical_class(first_dir, spec.alpha)
    pts = [(float(anchor[0]), float(anchor[1]))]
    dirs = [first_dir]
    for i in range(1, 3):
        dirs.append(canonical_class(dirs[-1] + TURN[order[i]], spec.alpha))
    edges = []
    for i in range(3):
        label = OPPOSITE[order[(i + 2) % 3]]
        ux, uy = dirs[i].unit(spec.alpha, frame)
        ln = spec.length(label)
        p0 = pts[i]
        p1 = (p0[0] + ln * ux, p0[1] + ln * uy) if i < 2 else pts[0]
        if i < 2:
            pts.append(p1)
        edges.append(TileEdge(id, i, label, dirs[i], p0, p1))
    return PlacedTile(id, pts[0], first_dir, order, tuple(pts), tuple(edges))


def place_corner(spec, point, corner, out_dir, chirality, id=0, frame=0.0):
    """Place a tile with ``corner`` at ``point`` and its counterclockwise
    outgoing edge from that corner along ``out_dir``."""
    return place_tile(spec, point, out_dir, chirality_order(chirality, corner), id, frame)


def retag(tile, new_id, spec, frame=0.0):
    return place_tile(spec, tile.anchor, tile.first_dir, tile.order, new_id, frame)


# ---------------------------------------------------------------------------
# derived structure


@dataclass
class Fragment:
    """One directed tile edge, as it sits on a maximal segment."""

    index: int
    tile: int
    edge: int
    label: str
    direction: AngleClass
    v0: int
    v1: int
    t0: float = 0.0
    t1: float = 0.0
    side: str = ""
    segment: int = -1

    @property
    def length_sym(self):
        return SymLen.of(self.label)

    @property
    def lo(self):
        return min(self.t0, self.t1)

    @property
    def hi(self):
        return max(self.t0, self.t1)


@dataclass
class MaximalSegment:
    id: int
    direction: AngleClass
    start: tuple
    end: tuple
    t0: float
    t1: float
    offset: float
    left: list
    right: list
    vertices: list
    is_boundary: bool
    internal: bool

    @property
    def left_sum(self):
        return sum_symlen(f.length_sym for f in self.left)

    @property
    def right_sum(self):
        return sum_symlen(f.length_sym for f in self.right)

    @property
    def length(self):
        return self.t1 - self.t0

    def side(self, name):
        return self.left if name == "left" else self.right


@dataclass
class VertexRecord:
    id: int
    point: tuple
    wedges: list = field(default_factory=list)      # (tile id, corner label)
    straight: list = field(default_factory=list)    # fragment indices through the vertex
    location: str = "internal-2pi"
    angle_sum: AngleMeasure = AngleMeasure(0, 0)

    def counts(self):
        n = {"A": 0, "B": 0, "C": 0}
        for _, corner in self.wedges:
            n[corner] += 1
        return n["A"], n["B"], n["C"]

    @property
    def is_pi_vertex(self):
        return self.location in ("internal-pi", "boundary")


@dataclass
class BoundarySegment:
    start: tuple
    end: tuple
    direction: AngleClass
    length: float
    symlen: SymLen | None
    fragments: list


class Tiling:
    """Placed tiles over a region plus their derived planar structure.

    Construct through ``build_tiling``, which also validates.  With
    ``fragment=True`` the tiles form an open patch: coverage is not checked
    and ``region`` may be None.
    """

    def __init__(self, spec, tiles, region=None, *, frame=0.0, fragment=False,
                 eps=None):
        self.spec = spec
        self.tiles = tuple(tiles)
        self.frame = float(frame)
        self.fragment = bool(fragment)
        self.eps = get_eps() if eps is None else eps
        if region is not None:
            region = [(float(x), float(y)) for x, y in region]
            if geo.signed_area(region) < 0:
                region = region[::-1]
            region = tuple(region)
        self.region = region
        self._derive()

    # -- derivation -------------------------------------------------------

    def _derive(self):
        eps = self.eps
        snap = geo.VertexSnapper(eps)
        self.region_vids = [snap.add(p) for p in self.region] if self.region else []
        self.tile_vids = {}
        for t in self.tiles:
            self.tile_vids[t.id] = tuple(snap.add(p) for p in t.points)
        self.points = snap.points
        self.tile_by_id = {t.id: t for t in self.tiles}
        if len(self.tile_by_id) != len(self.tiles):
            raise TilingError("duplicate tile ids")
        frags = []
        for t in self.tiles:
            vids = self.tile_vids[t.id]
            for e in t.edges:
                frags.append(Fragment(len(frags), t.id, e.index, e.label, e.direction,
                                      vids[e.index], vids[(e.index + 1) % 3]))
        self.fragments = frags
        self._build_segments()
        self._build_vertices()

    def _build_segments(self):
        eps = self.eps
        alpha, frame = self.spec.alpha, self.frame
        pts = np.array(self.points, dtype=float) if self.points else np.zeros((0, 2))
        by_dir = {}
        for f in self.fragments:
            by_dir.setdefault(f.direction.line_key(), []).append(f)
        segments = []
        for key in sorted(by_dir):
            canon = AngleClass(*key)
            ux, uy = canon.unit(alpha, frame)
            group = []
            for f in by_dir[key]:
                p0, p1 = self.points[f.v0], self.points[f.v1]
                off = ux * p0[1] - uy * p0[0]
                f.t0 = ux * p0[0] + uy * p0[1]
                f.t1 = ux * p1[0] + uy * p1[1]
                f.side = "left" if f.direction == canon else "right"
                group.append((off, f))
            group.sort(key=lambda x: (x[0], x[1].lo))
            lines, cur = [], []
            for off, f in group:
                if cur and off - cur[-1][0] > eps:
                    lines.append(cur)
                    cur = []
                cur.append((off, f))
            if cur:
                lines.append(cur)
            for line in lines:
                off = sum(o for o, _ in line) / len(line)
                fr = sorted((f for _, f in line), key=lambda f: (f.lo, f.hi))
                comps, cur, hi = [], [], None
                for f in fr:
                    if cur and f.lo > hi + eps:
                        comps.append(cur)
                        cur, hi = [], None
                    cur.append(f)
                    hi = f.hi if hi is None else max(hi, f.hi)
                if cur:
                    comps.append(cur)
                for comp in comps:
                    t0 = min(f.lo for f in comp)
                    t1 = max(f.hi for f in comp)
                    seg = self._make_segment(len(segments), canon, (ux, uy), off, t0, t1,
                                             comp, pts)
                    segments.append(seg)
        self.segments = segments

    def _make_segment(self, sid, canon, u, off, t0, t1, comp, pts):
        eps = self.eps
        ux, uy = u
        left = sorted((f for f in comp if f.side == "left"), key=lambda f: f.lo)
        right = sorted((f for f in comp if f.side == "right"), key=lambda f: f.lo)
        for f in comp:
            f.segment = sid
        start = (t0 * ux - off * uy, t0 * uy + off * ux)
        end = (t1 * ux - off * uy, t1 * uy + off * ux)
        verts = []
        if len(pts):
            offs = ux * pts[:, 1] - uy * pts[:, 0]
            ts = ux * pts[:, 0] + uy * pts[:, 1]
            mask = (np.abs(offs - off) <= eps * 10) & (ts >= t0 - eps) & (ts <= t1 + eps)
            verts = sorted((float(ts[i]), int(i)) for i in np.nonzero(mask)[0])
        cov_l = _union(left, eps)
        cov_r = _union(right, eps)
        full = [(t0, t1)]
        internal = _same_cover(cov_l, full, eps) and _same_cover(cov_r, full, eps)
        is_boundary = not left or not right
        return MaximalSegment(sid, canon, start, end, t0, t1, off, left, right,
                              [v for _, v in verts], is_boundary, internal)

    def _build_vertices(self):
        eps = self.eps
        recs = [VertexRecord(i, p) for i, p in enumerate(self.points)]
        for t in self.tiles:
            for i, vid in enumerate(self.tile_vids[t.id]):
                recs[vid].wedges.append((t.id, t.order[i]))
        for seg in self.segments:
            for vid in seg.vertices:
                tv = _param(self.points[vid], seg.direction, self.spec.alpha, self.frame)
                for f in seg.left + seg.right:
                    if f.lo + eps < tv < f.hi - eps:
                        recs[vid].straight.append(f.index)
        region = self.region
        corner_ids = set(self.region_vids)
        for r in recs:
            total = AngleMeasure(0, 0)
            for _, corner in r.wedges:
                total = total + CORNER_ANGLE[corner]
            r.angle_sum = total
            if region is not None:
                if r.id in corner_ids:
                    r.location = "corner"
                elif geo.point_in_polygon(r.point, region, eps) == "boundary":
                    r.location = "boundary"
                elif r.straight:
                    r.location = "internal-pi"
                else:
                    r.location = "internal-2pi"
                if self.fragment and r.location.startswith("internal"):
                    covered = total.value(self.spec.alpha) + math.pi * len(r.straight)
                    if abs(covered - 2 * math.pi) > 1e-7:
                        r.location = "open"
            else:
                covered = total.value(self.spec.alpha) + math.pi * len(r.straight)
                if abs(covered - 2 * math.pi) > 1e-7:
                    r.location = "open"
                elif r.straight:
                    r.location = "internal-pi"
                else:
                    r.location = "internal-2pi"
        self.vertices = recs

    # -- convenience --------------------------------------------------------

    @property
    def n(self):
        return len(self.tiles)

    def fragment_segment(self, frag_index):
        return self.segments[self.fragments[frag_index].segment]

    def corner_angle(self, vid):
        """Exact corner angle at a region corner (sum of the tile wedges)."""
        return self.vertices[vid].angle_sum

    def region_corner_ids(self):
        return list(self.region_vids)

    def boundary_fragments(self):
        """Fragments lying on the boundary of the tiled area."""
        out = []
        for seg in self.segments:
            if seg.internal:
                continue
            for side, other in (("left", seg.right), ("right", seg.left)):
                cov = _union(other, self.eps)
                for f in seg.side(side):
                    if not _covers(cov, f.lo, f.hi, self.eps):
                        out.append(f)
        return sorted(out, key=lambda f: f.index)

    def supported_by_boundary(self):
        return sorted({f.tile for f in self.boundary_fragments()})

    def with_tiles(self, tiles, region=None, fragment=None):
        return build_tiling(self.spec, tiles, self.region if region is None else region,
                            frame=self.frame,
                            fragment=self.fragment if fragment is None else fragment,
                            eps=self.eps)


def _param(p, direction, alpha, frame):
    ux, uy = direction.unit(alpha, frame)
    return ux * p[0] + uy * p[1]


def _union(frags, eps):
    out = []
    for f in sorted(frags, key=lambda f: f.lo):
        if out and f.lo <= out[-1][1] + eps:
            out[-1] = (out[-1][0], max(out[-1][1], f.hi))
        else:
            out.append((f.lo, f.hi))
    return out


def _same_cover(c1, c2, eps):
    return len(c1) == len(c2) and all(
        abs(a[0] - b[0]) <= eps and abs(a[1] - b[1]) <= eps for a, b in zip(c1, c2))


def _covers(cov, lo, hi, eps):
    return any(s - eps <= lo and hi <= e + eps for s, e in cov)


def _uncovered(cov, lo, hi, eps):
    """Sub-intervals of [lo, hi] not covered by ``cov``."""
    gaps, cur = [], lo
    for s, e in cov:
        if e <= cur + eps:
            continue
        if s > hi - eps:
            break
        if s > cur + eps:
            gaps.append((cur, s))
        cur = max(cur, e)
    if cur < hi - eps:
        gaps.append((cur, hi))
    return gaps


# ---------------------------------------------------------------------------
# construction and validation


_CHECKED_SPECS = set()


def build_tiling(spec, tiles, region=None, *, frame=0.0, fragment=False,
                 allow_mirrored=True, eps=None):
    """Derive and validate the planar structure of a tile list.

    ``tiles`` may be PlacedTile objects or placement dicts with keys
    ``anchor``, ``dir`` (AngleClass or (j, k)), ``order`` and optional ``id``.
    """
    if not isinstance(spec, TileSpec):
        raise InvalidSpec("spec must be a TileSpec")
    eps = get_eps() if eps is None else eps
    if (spec, eps) not in _CHECKED_SPECS:
        check_tile_spec(spec, eps=eps)
        if len(_CHECKED_SPECS) < 4096:
            _CHECKED_SPECS.add((spec, eps))
    placed = []
    for i, t in enumerate(tiles):
        if isinstance(t, PlacedTile):
            placed.append(t)
        else:
            d = t.get("dir", AngleClass(0, 0))
            if not isinstance(d, AngleClass):
                d = AngleClass(*d)
            placed.append(place_tile(spec, t["anchor"], d, t.get("order", "ABC"),
                                     t.get("id", i), frame))
    for t in placed:
        if geo.signed_area(t.points) <= 0:
            raise OrientationError(f"tile {t.id} is not counterclockwise")
        if not allow_mirrored and t.chirality == "mirrored":
            raise TilingError(f"tile {t.id} is mirrored but mirrored copies are disallowed")
    if region is None and not fragment:
        raise CoverageError("a region is required unless fragment=True")
    _check_overlaps(placed, eps)
    tiling = Tiling(spec, placed, region, frame=frame, fragment=fragment, eps=eps)
    if tiling.region is not None:
        _check_containment(tiling)
    if not fragment:
        _check_coverage(tiling)
        _check_dangling(tiling)
    return tiling


def _check_overlaps(tiles, eps):
    boxes = [geo.bbox(t.points) for t in tiles]
    order = sorted(range(len(tiles)), key=lambda i: boxes[i][0])
    for ii, i in enumerate(order):
        for j in order[ii + 1:]:
            if boxes[j][0] > boxes[i][2] - eps:
                break
            if geo.bbox_disjoint(boxes[i], boxes[j], eps):
                continue
            if geo.convex_overlap(tiles[i].points, tiles[j].points, eps):
                raise OverlapError(f"tiles {tiles[i].id} and {tiles[j].id} overlap")


def _check_containment(t):
    eps = t.eps
    region = t.region
    n = len(region)
    for tile in t.tiles:
        for p in tile.points:
            if geo.point_in_polygon(p, region, eps) == "outside":
                raise CoverageError(f"tile {tile.id} sticks out of the region at {p}")
        cx = sum(p[0] for p in tile.points) / 3
        cy = sum(p[1] for p in tile.points) / 3
        if geo.point_in_polygon((cx, cy), region, eps) != "inside":
            raise CoverageError(f"tile {tile.id} lies outside the region")
        for i in range(3):
            p0, p1 = tile.points[i], tile.points[(i + 1) % 3]
            for k in range(n):
                if geo.segments_cross(p0, p1, region[k], region[(k + 1) % n], eps):
                    raise CoverageError(f"tile {tile.id} crosses the region boundary")


def _check_coverage(t):
    area = abs(geo.signed_area(t.region))
    tiles_area = t.n * t.spec.area
    tol = max(t.eps, 1e-9) * max(1.0, area) * 10
    if abs(area - tiles_area) > tol:
        raise CoverageError(
            f"{t.n} tiles cover area {tiles_area:.12g} but the region has area {area:.12g}")


def _check_dangling(t):
    eps = t.eps
    for seg in t.segments:
        cov_l, cov_r = _union(seg.left, eps), _union(seg.right, eps)
        ux, uy = seg.direction.unit(t.spec.alpha, t.frame)
        for mine, other in ((seg.left, cov_r), (seg.right, cov_l)):
            for f in mine:
                for lo, hi in _uncovered(other, f.lo, f.hi, eps):
                    tm = (lo + hi) / 2
                    p = (tm * ux - seg.offset * uy, tm * uy + seg.offset * ux)
                    if geo.point_in_polygon(p, t.region, eps) != "boundary":
                        raise DanglingEdgeError(
                            f"edge {f.label} of tile {f.tile} is unmatched near {p}")


# ---------------------------------------------------------------------------
# boundary


def boundary_walk(t):
    """Directed boundary segments of the tiled area in counterclockwise order.

    With a region each maximal straight side of the region is one segment;
    open patches are walked along their one-sided fragment pieces.
    """
    if t.region is not None:
        walk = _region_walk(t)
    else:
        walk = _patch_walk(t)
    _check_turning(walk, t.spec.alpha)
    return walk


def _region_walk(t):
    eps = t.eps
    region = t.region
    n = len(region)
    raw = []
    for i in range(n):
        p0, p1 = region[i], region[(i + 1) % n]
        frs = _fragments_along(t, p0, p1)
        if frs:
            d = frs[0].direction
        else:
            d = geo.classify_direction((p1[0] - p0[0], p1[1] - p0[1]), t.spec.alpha, t.frame)
            if d is None:
                raise NonSimpleBoundary(f"region side {p0}->{p1} is not a tiling direction")
        raw.append([p0, p1, d, frs])
    merged = []
    for p0, p1, d, frs in raw:
        if merged and merged[-1][2] == d:
            merged[-1][1] = p1
            merged[-1][3] = merged[-1][3] + frs
        else:
            merged.append([p0, p1, d, list(frs)])
    if len(merged) > 1 and merged[0][2] == merged[-1][2]:
        last = merged.pop()
        merged[0] = [last[0], merged[0][1], last[2], last[3] + merged[0][3]]
    out = []
    for p0, p1, d, frs in merged:
        length = geo.dist(p0, p1)
        covered = sum(t.spec.length(f.label) for f in frs)
        sym = sum_symlen(f.length_sym for f in frs) \
            if abs(covered - length) <= eps * max(1.0, length) * 10 else None
        out.append(BoundarySegment(p0, p1, d, length, sym, frs))
    return out


def _fragments_along(t, p0, p1):
    eps = t.eps
    out = []
    length = geo.dist(p0, p1)
    for f in t.fragments:
        a, b = t.points[f.v0], t.points[f.v1]
        ta, da = geo.point_segment_param(a, p0, p1)
        tb, db = geo.point_segment_param(b, p0, p1)
        if da <= eps * 10 and db <= eps * 10 and -eps <= ta <= length + eps \
                and -eps <= tb <= length + eps and tb > ta:
            out.append((ta, f))
    return [f for _, f in sorted(out, key=lambda x: x[0])]


def _patch_walk(t):
    eps = t.eps
    pieces = []
    for seg in t.segments:
        ux, uy = seg.direction.unit(t.spec.alpha, t.frame)
        cov_l, cov_r = _union(seg.left, eps), _union(seg.right, eps)
        for side, mine, other_cov in (("left", cov_l, cov_r), ("right", cov_r, cov_l)):
            frs = seg.side(side)
            for lo, hi in mine:
                for g0, g1 in _uncovered(other_cov, lo, hi, eps):
                    p = (g0 * ux - seg.offset * uy, g0 * uy + seg.offset * ux)
                    q = (g1 * ux - seg.offset * uy, g1 * uy + seg.offset * ux)
                    inside = [f for f in frs if f.lo >= g0 - eps and f.hi <= g1 + eps]
                    exact = abs(sum(f.hi - f.lo for f in inside) - (g1 - g0)) <= eps * 10
                    if side == "left":
                        pieces.append((p, q, seg.direction, inside, exact))
                    else:
                        pieces.append((q, p, seg.direction.opposite(), inside[::-1], exact))
    if not pieces:
        return []
    snap = geo.VertexSnapper(t.eps)
    starts = {}
    for idx, (p, q, *_rest) in enumerate(pieces):
        sp = snap.add(p)
        snap.add(q)
        if sp in starts:
            raise NonSimpleBoundary("boundary touches itself")
        starts[sp] = idx
    order, seen = [], set()
    cur = min(range(len(pieces)), key=lambda i: (pieces[i][0][1], pieces[i][0][0]))
    while cur not in seen:
        seen.add(cur)
        order.append(cur)
        nxt = snap.add(pieces[cur][1])
        if nxt not in starts:
            raise NonSimpleBoundary("boundary walk does not close")
        cur = starts[nxt]
    if len(seen) != len(pieces):
        raise NonSimpleBoundary("boundary has more than one component")
    walk = []
    for idx in order:
        p, q, d, frs, exact = pieces[idx]
        if walk and walk[-1][2] == d:
            walk[-1][1] = q
            walk[-1][3] = walk[-1][3] + frs
            walk[-1][4] = walk[-1][4] and exact
        else:
            walk.append([p, q, d, list(frs), exact])
    if len(walk) > 1 and walk[0][2] == walk[-1][2]:
        last = walk.pop()
        walk[0] = [last[0], walk[0][1], last[2], last[3] + walk[0][3], last[4] and walk[0][4]]
    out = []
    for p, q, d, frs, exact in walk:
        sym = sum_symlen(f.length_sym for f in frs) if exact else None
        out.append(BoundarySegment(p, q, d, geo.dist(p, q), sym, frs))
    return out


def _check_turning(walk, alpha):
    if not walk:
        return
    total = 0.0
    for i, seg in enumerate(walk):
        nxt = walk[(i + 1) % len(walk)]
        turn = measure_between(seg.direction, nxt.direction, alpha, allow_zero=True).value(alpha)
        if turn > math.pi:
            turn -= 2 * math.pi
        total += turn
    if abs(total - 2 * math.pi) > 1e-6:
        raise NonSimpleBoundary(f"boundary turns by {total:.6g}, not 2pi")


# ---------------------------------------------------------------------------
# rigid motions


def transform_tiling(t, rotation=AngleClass(0, 0), shift=(0.0, 0.0), reflect=False):
    """Apply a rigid motion: optional reflection in the frame axis through the
    origin, then rotation by an AngleClass about the origin, then a shift."""
    spec, frame = t.spec, t.frame
    rot = rotation if isinstance(rotation, AngleClass) else AngleClass(*rotation)
    theta = rot.j * math.pi / 3 + rot.k * spec.alpha

    def move(p):
        x, y = p
        if reflect:
            # reflect across the line through the origin at angle ``frame``
            c, s = math.cos(2 * frame), math.sin(2 * frame)
            x, y = c * x + s * y, s * x - c * y
        x, y = geo.rotate_point((x, y), theta)
        return (x + shift[0], y + shift[1])

    new_tiles = []
    for tile in t.tiles:
        if reflect:
            order = tile.order[0] + tile.order[2] + tile.order[1]
            d = tile.edges[2].direction.opposite().inverse()
        else:
            order = tile.order
            d = tile.first_dir
        new_tiles.append(place_tile(spec, move(tile.anchor), d + rot, order, tile.id, frame))
    region = [move(p) for p in t.region] if t.region is not None else None
    return build_tiling(spec, new_tiles, region, frame=frame, fragment=t.fragment, eps=t.eps)


def tile_area_identity(t):
    """(N * tile area, region area) for the area conservation check."""
    return t.n * t.spec.area, abs(geo.signed_area(t.region)) if t.region else None


def ensure_incommensurable(spec):
    return spec.angle_mode is AngleMode.INCOMMENSURABLE


__all__ = [
    "TileEdge", "PlacedTile", "Fragment", "MaximalSegment", "VertexRecord",
    "BoundarySegment", "Tiling", "place_tile", "place_corner", "chirality_order",
    "build_tiling", "boundary_walk", "transform_tiling", "DIRECT_ORDERS",
    "MIRRORED_ORDERS", "TURN", "FULL",
]
