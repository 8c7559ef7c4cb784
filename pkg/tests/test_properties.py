"""Property-based checks over random tiles, frames and rigid motions."""
import random
from fractions import Fraction

from hypothesis import given, settings, strategies as st

from tritile.analysis import census_identity_check, classify_vertices, extract_relations
from tritile.exact import AngleClass, SymLen, TileSpec
from tritile.generators import gen_kite, gen_parallelogram, gen_quadratic, gen_two_strips
from tritile.invariant import match_c_internal, zh_tiling
from tritile.io import dumps, loads

import oracles
from corpus import random_motion

rationals = st.builds(Fraction, st.integers(1, 30), st.integers(1, 30))
frames = st.builds(AngleClass, st.integers(0, 5), st.integers(-4, 4))


def _spec(a, b):
    if a == b:
        b = b + 1
    return TileSpec.from_sides(a, b)


@settings(max_examples=40)
@given(rationals, rationals, st.integers(1, 5), frames)
def test_quadratic_boundary_identity(a, b, n, frame):
    t = gen_quadratic(n, _spec(a, b), frame)
    rep = zh_tiling(t)
    assert rep.zh_tiling == rep.zh_boundary
    assert rep.numeric_match


@given(rationals, rationals, frames, st.sampled_from("abc"))
def test_two_tile_blocks_are_null(a, b, frame, side):
    spec = _spec(a, b)
    for t in (gen_kite(spec, frame), gen_parallelogram(spec, frame, side)):
        assert zh_tiling(t).zh_tiling == SymLen()


@settings(max_examples=30)
@given(rationals, rationals, st.integers(1, 4), st.integers(0, 2**32 - 1))
def test_motion_invariants(a, b, n, seed):
    rng = random.Random(seed)
    spec = _spec(a, b)
    t = random_motion(gen_quadratic(n, spec), rng)
    cen = classify_vertices(t)
    assert census_identity_check(cen) == 0 and cen.totals_consistent
    assert match_c_internal(t).perfect
    assert oracles.covers_exactly(t.tiles, t.region)
    rep = zh_tiling(t)
    assert rep.exact_match
    z = oracles.zeta_polygon(t.region, spec.alpha)
    assert abs(abs(rep.numeric_boundary) - abs(z)) < 1e-6 * max(1.0, abs(z))


@settings(max_examples=20)
@given(st.integers(1, 6), st.integers(1, 6), st.integers(0, 2**32 - 1))
def test_strip_relations(p, q, seed):
    # p copies of a against q copies of b: the tile with a/b = q/p
    spec = TileSpec.from_sides(q, p) if p != q else TileSpec.from_sides(q, p + q)
    na, nb = (p, q) if p != q else (p + q, q)
    t = gen_two_strips(spec, na, "a", nb, "b")
    rels = extract_relations(random_motion(t, random.Random(seed)))
    assert len(rels) == 1
    vec = rels[0].vector()
    assert vec[2] == 0 and vec[0] * spec.a + vec[1] * spec.b == 0


@settings(max_examples=20)
@given(rationals, rationals, st.integers(1, 3), st.integers(0, 2**32 - 1))
def test_io_round_trip(a, b, n, seed):
    t = random_motion(gen_quadratic(n, _spec(a, b)), random.Random(seed))
    u = loads(dumps(t))
    assert all(abs(p[0] - q[0]) < 1e-9 and abs(p[1] - q[1]) < 1e-9
               for x, y in zip(t.tiles, u.tiles) for p, q in zip(x.points, y.points))
    assert zh_tiling(u).zh_tiling == zh_tiling(t).zh_tiling
