import math

import pytest

from tritile.errors import CoverageError, OverlapError, TilingError
from tritile.exact import AngleClass, SymLen
from tritile.generators import gen_kite, gen_parallelogram, gen_quadratic
from tritile.model import boundary_walk, build_tiling, place_corner, place_tile

import oracles
from corpus import SPEC_12, SPEC_357, full_corpus, random_motion

SPEC = SPEC_357


def test_place_tile_geometry():
    t = place_tile(SPEC, (0, 0), AngleClass(0), "ABC")
    A, B, C = t.points
    assert math.isclose(math.dist(A, B), 7) and math.isclose(math.dist(B, C), 3)
    assert math.isclose(math.dist(C, A), 5)
    angs = oracles.interior_angles(t.points)
    assert math.isclose(angs[0], SPEC.alpha) and math.isclose(angs[2], 2 * math.pi / 3)
    assert [e.label for e in t.edges] == ["c", "a", "b"]
    assert t.edges[1].direction == AngleClass(2, 1)
    assert t.edges[2].direction == AngleClass(3, 1)
    assert t.area() > 0 and math.isclose(t.area(), SPEC.area)


def test_mirrored_tile_is_counterclockwise():
    t = place_tile(SPEC, (1, 2), AngleClass(1, -2), "ACB")
    assert t.chirality == "mirrored"
    assert t.area() > 0
    assert sorted(round(x, 9) for x in oracles.interior_angles(t.points)) == \
        sorted(round(x, 9) for x in (SPEC.alpha, SPEC.beta, SPEC.gamma))


def test_place_corner():
    t = place_corner(SPEC, (0, 0), "B", AngleClass(1), "direct")
    assert t.order == "BCA" and t.points[0] == (0.0, 0.0)
    assert t.edges[0].direction == AngleClass(1)
    with pytest.raises(ValueError):
        place_tile(SPEC, (0, 0), AngleClass(0), "ABD")


def test_quadratic_structure():
    for n in range(1, 6):
        t = gen_quadratic(n, SPEC)
        assert t.n == n * n
        assert oracles.covers_exactly(t.tiles, t.region)
        assert all(tile.chirality == "direct" for tile in t.tiles)
        walk = boundary_walk(t)
        assert len(walk) == 3
        assert sorted(str(s.symlen) for s in walk) == sorted(
            str(SymLen.of(x, n)) for x in "abc")


def test_corpus_covers_regions():
    for name, t in full_corpus():
        assert oracles.covers_exactly(t.tiles, t.region), name
        assert math.isclose(abs(oracles.polygon_area(t.region)), t.n * t.spec.area,
                            rel_tol=1e-9), name


def test_segments_partition_fragments():
    t = gen_quadratic(3, SPEC)
    seen = sorted(f.index for s in t.segments for f in s.left + s.right)
    assert seen == list(range(3 * t.n))
    for seg in t.segments:
        if seg.internal:
            assert seg.left and seg.right
            assert seg.left_sum == seg.right_sum


def test_vertex_locations():
    t = gen_quadratic(3, SPEC)
    locs = [v.location for v in t.vertices]
    assert locs.count("corner") == 3
    assert "internal-2pi" in locs
    for v in t.vertices:
        if v.location == "internal-2pi":
            assert v.angle_sum.value(SPEC.alpha) == pytest.approx(2 * math.pi)


def test_overlap_detected():
    t = place_tile(SPEC, (0, 0), AngleClass(0), "ABC", 0)
    u = place_tile(SPEC, (0.5, 0.1), AngleClass(0), "ABC", 1)
    with pytest.raises(OverlapError):
        build_tiling(SPEC, [t, u], None, fragment=True)


def test_touching_tiles_do_not_overlap():
    t = gen_parallelogram(SPEC)
    assert t.n == 2


def test_coverage_and_containment():
    k = gen_kite(SPEC)
    with pytest.raises(CoverageError):
        build_tiling(SPEC, k.tiles[:1], k.region)
    with pytest.raises(CoverageError):
        build_tiling(SPEC, k.tiles, None)
    big = gen_quadratic(2, SPEC)
    with pytest.raises(CoverageError):
        build_tiling(SPEC, big.tiles, k.region)


def test_dangling_edge():
    # two tiles meeting along a partial edge inside a region of the right area
    q = gen_quadratic(2, SPEC)
    tiles = list(q.tiles)
    moved = place_tile(SPEC, (tiles[0].anchor[0] + 1e-3, tiles[0].anchor[1]),
                       tiles[0].first_dir, "ABC", tiles[0].id)
    with pytest.raises(TilingError):
        build_tiling(SPEC, [moved] + tiles[1:], q.region)


def test_duplicate_ids_rejected():
    t = place_tile(SPEC, (0, 0), AngleClass(0), "ABC", 0)
    u = place_tile(SPEC, (20, 0), AngleClass(0), "ABC", 0)
    with pytest.raises(TilingError):
        build_tiling(SPEC, [t, u], None, fragment=True)


def test_mirrored_disallowed():
    k = gen_kite(SPEC)
    with pytest.raises(TilingError):
        build_tiling(SPEC, k.tiles, k.region, allow_mirrored=False)


def test_placement_dicts():
    t = build_tiling(SPEC, [{"anchor": (0, 0), "dir": (0, 0)}], None, fragment=True)
    assert t.n == 1 and t.tiles[0].order == "ABC"


@pytest.mark.parametrize("name", ["quadratic3", "kite", "parallelogram-b"])
def test_rigid_motion_preserves_structure(name, rng):
    src = dict(full_corpus())[f"357/{name}"]
    for _ in range(5):
        t = random_motion(src, rng)
        assert t.n == src.n
        assert len(t.segments) == len(src.segments)
        assert sorted(v.location for v in t.vertices) == sorted(v.location for v in src.vertices)
        assert oracles.covers_exactly(t.tiles, t.region)


def test_boundary_walk_is_closed_and_ccw():
    for _, t in full_corpus():
        walk = boundary_walk(t)
        for s, nxt in zip(walk, walk[1:] + walk[:1]):
            assert math.dist(s.end, nxt.start) < 1e-7
        pts = [s.start for s in walk]
        assert oracles.polygon_area(pts) > 0


def test_ab_rational_spec_builds():
    t = gen_quadratic(3, SPEC_12)
    assert t.n == 9 and oracles.covers_exactly(t.tiles, t.region)
