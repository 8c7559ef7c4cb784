"""The signed-length invariant zeta and the constructions built on it.

zeta of a directed edge with direction class (j, k) and length L is
``(-1)**j * L``; it is summed over tile edges or over the boundary walk.
Values are kept as SymLen so cancellations are exact.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from . import geometry as geo
from .errors import BoundaryNotAllC, FrameError, NotAKiteOrParallelogram
from .exact import AngleClass, SymLen, sum_symlen
from .model import (BoundarySegment, PlacedTile, _union, boundary_walk,
                    build_tiling, place_tile)

ZhValue = SymLen


def zh_edge(e, length=None):
    """zeta of a directed edge.

    ``e`` is anything with ``direction`` and ``length_sym``/``symlen``
    attributes, or an AngleClass together with an explicit length (a SymLen
    or a plain number).
    """
    if isinstance(e, AngleClass):
        direction = e
    else:
        direction = e.direction
        if length is None:
            length = getattr(e, "length_sym", None)
            if length is None:
                length = e.symlen
    if length is None:
        raise ValueError("edge has no symbolic length")
    return length * direction.sign if isinstance(length, SymLen) else direction.sign * length


def zh_tile(t, frame=AngleClass(0, 0)):
    """zeta(PQR) = zeta(PQ) + zeta(QR) + zeta(RP) for a counterclockwise tile."""
    total = sum_symlen(zh_edge(e) for e in t.edges)
    return total * frame.sign


@dataclass
class ZhReport:
    zh_tiling: SymLen
    zh_boundary: SymLen | None
    per_tile: list
    frame: AngleClass
    residual: SymLen | None = None
    numeric_tiling: float = 0.0
    numeric_boundary: float = 0.0
    boundary: list = field(default_factory=list)

    @property
    def exact_match(self):
        return self.zh_boundary is not None and self.zh_tiling == self.zh_boundary

    @property
    def numeric_match(self):
        scale = max(1.0, abs(self.numeric_tiling))
        return abs(self.numeric_tiling - self.numeric_boundary) <= 1e-7 * scale

    def as_dict(self):
        return {
            "frame": self.frame.as_dict(),
            "zh_tiling": self.zh_tiling.as_dict(),
            "zh_tiling_text": str(self.zh_tiling),
            "zh_boundary": None if self.zh_boundary is None else self.zh_boundary.as_dict(),
            "zh_boundary_text": None if self.zh_boundary is None else str(self.zh_boundary),
            "residual": None if self.residual is None else self.residual.as_dict(),
            "exact_match": self.exact_match,
            "numeric_tiling": self.numeric_tiling,
            "numeric_boundary": self.numeric_boundary,
            "numeric_match": self.numeric_match,
            "per_tile": [{"tile": tid, "zh": str(v)} for tid, v in self.per_tile],
        }


def default_frame(walk):
    """Direction of the boundary segment leaving the lowest, then leftmost, point."""
    if not walk:
        raise FrameError("no boundary segment to anchor the frame")
    seg = min(walk, key=lambda s: (round(s.start[1], 9), s.start[0]))
    return seg.direction


def zh_tiling(t, frame=None):
    """zeta summed over tiles and over the boundary walk.

    Values are reported relative to ``frame`` (default: the lowest-leftmost
    boundary direction), which only flips the overall sign.  ``residual`` is
    the exact difference; it vanishes unless some internal segment carries
    different symbolic sums on its two sides.
    """
    if not t.tiles:
        raise FrameError("empty tiling has no reference direction")
    walk = boundary_walk(t)
    if frame is None:
        frame = default_frame(walk) if walk else t.tiles[0].first_dir
    elif not isinstance(frame, AngleClass):
        frame = AngleClass(*frame)
    per = [(tile.id, zh_tile(tile, frame)) for tile in t.tiles]
    z_t = sum_symlen(v for _, v in per)
    if all(s.symlen is not None for s in walk):
        z_b = sum_symlen(zh_edge(s) for s in walk) * frame.sign
        resid = z_t - z_b
        num_b = z_b.evaluate(t.spec)
    else:
        z_b = None
        resid = None
        num_b = frame.sign * sum(s.direction.sign * s.length for s in walk)
    return ZhReport(z_t, z_b, per, frame, resid, z_t.evaluate(t.spec), num_b, walk)


# ---------------------------------------------------------------------------
# kites and parallelograms


def zh_kite_parallelogram_check(t1, t2, spec=None, eps=1e-9):
    """zeta of a two-tile kite or parallelogram (possibly a translated, virtual one).

    The c-edges must point in opposite directions and either lie on one
    line or the tiles must share a full edge.
    """
    c1, c2 = t1.edge("c"), t2.edge("c")
    if c1.direction != c2.direction.opposite():
        raise NotAKiteOrParallelogram(
            f"c-edges of tiles {t1.id} and {t2.id} are not antiparallel")
    collinear = abs(geo.cross(c1.start, c1.end, c2.start)) <= eps * max(1.0, geo.dist(c1.start, c1.end)) \
        and abs(geo.cross(c1.start, c1.end, c2.end)) <= eps * max(1.0, geo.dist(c1.start, c1.end))
    shared = any(
        geo.dist(e1.start, e2.end) <= eps * 10 and geo.dist(e1.end, e2.start) <= eps * 10
        for e1 in t1.edges for e2 in t2.edges)
    if not (collinear or shared):
        raise NotAKiteOrParallelogram(
            f"tiles {t1.id} and {t2.id} neither have collinear c-edges nor share an edge")
    return zh_tile(t1) + zh_tile(t2)


# ---------------------------------------------------------------------------
# c-internal matching


@dataclass
class Matching:
    pairs: list
    unmatched: list
    per_segment: list

    @property
    def perfect(self):
        return not self.unmatched

    def as_dict(self):
        return {"pairs": [list(p) for p in self.pairs], "unmatched": list(self.unmatched),
                "per_segment": self.per_segment, "perfect": self.perfect}


def c_internal_tiles(t):
    """Tiles whose c-edge is covered on its other side by tiles."""
    out = []
    for f in t.fragments:
        if f.label != "c":
            continue
        seg = t.segments[f.segment]
        other = seg.right if f.side == "left" else seg.left
        cov = _union(other, t.eps)
        if any(s - t.eps <= f.lo and f.hi <= e + t.eps for s, e in cov):
            out.append(f.tile)
    return sorted(out)


def match_c_internal(t):
    """Pair c-internal tiles along each line, c-edges on opposite sides in order."""
    internal = set(c_internal_tiles(t))
    pairs, unmatched, per_seg = [], [], []
    for seg in t.segments:
        left = [f for f in seg.left if f.label == "c" and f.tile in internal]
        right = [f for f in seg.right if f.label == "c" and f.tile in internal]
        if not left and not right:
            continue
        per_seg.append({"segment": seg.id, "left_c": len(left), "right_c": len(right)})
        for fl, fr in zip(left, right):
            pairs.append((fl.tile, fr.tile))
        longer = left if len(left) > len(right) else right
        unmatched.extend(f.tile for f in longer[min(len(left), len(right)):])
    return Matching(pairs, sorted(unmatched), per_seg)


# ---------------------------------------------------------------------------
# sawtooth augmentation


def sawtooth_tile(spec, fragment_start, fragment_end, direction, id=0, frame=0.0):
    """The direct tile glued outside a boundary c-edge running start->end.

    Its own c-edge runs end->start; going counterclockwise around the
    augmented region its free edges are the a-edge then the b-edge.
    """
    return place_tile(spec, fragment_end, direction.opposite(), "ABC", id, frame)


def sawtooth_augment(t):
    """Add one sawtooth tile outside every boundary c-edge.

    Requires every boundary fragment to be a c-edge.  Returns the augmented
    tiling, whose region is the zig-zag outline.
    """
    if t.region is None:
        raise BoundaryNotAllC("sawtooth augmentation needs a region")
    walk = boundary_walk(t)
    bad = [f for s in walk for f in s.fragments if f.label != "c"]
    if bad:
        raise BoundaryNotAllC(
            f"boundary carries non-c edges (tile {bad[0].tile}, edge {bad[0].label})")
    if not walk:
        return t
    next_id = max((tile.id for tile in t.tiles), default=-1) + 1
    teeth, outline = [], []
    for seg in walk:
        for f in seg.fragments:
            p0, p1 = t.points[f.v0], t.points[f.v1]
            tooth = sawtooth_tile(t.spec, p0, p1, f.direction, next_id, t.frame)
            next_id += 1
            teeth.append(tooth)
            # counterclockwise along the new outline: p0 -> apex -> p1
            outline.extend([p0, tooth.points[2]])
    return build_tiling(t.spec, list(t.tiles) + teeth, outline, frame=t.frame,
                        fragment=t.fragment, eps=t.eps)


def sawtooth_boundary_zh(sides, spec):
    """zeta of the outline after adding sawtooth tiles to an all-c boundary.

    ``sides`` lists ``(direction, count)`` for each side of the boundary,
    counting the c-edges on it.  The teeth are actually placed and their
    two free edges summed, so closure of the polygon is not needed.
    """
    total = SymLen()
    cur = (0.0, 0.0)
    tid = 0
    for direction, count in sides:
        d = direction if isinstance(direction, AngleClass) else AngleClass(*direction)
        ux, uy = d.unit(spec.alpha)
        c = spec.length("c")
        for _ in range(count):
            nxt = (cur[0] + c * ux, cur[1] + c * uy)
            tooth = sawtooth_tile(spec, cur, nxt, d, tid)
            tid += 1
            for e in tooth.edges:
                if e.label != "c":
                    total = total + zh_edge(e)
            cur = nxt
    return total


def boundary_zh(walk, frame=AngleClass(0, 0)):
    return sum_symlen(zh_edge(s) for s in walk) * frame.sign


__all__ = [
    "ZhValue", "ZhReport", "Matching", "zh_edge", "zh_tile", "zh_tiling",
    "zh_kite_parallelogram_check", "match_c_internal", "c_internal_tiles",
    "sawtooth_augment", "sawtooth_tile", "sawtooth_boundary_zh", "boundary_zh",
    "default_frame", "BoundarySegment", "PlacedTile",
]
