import pytest

from tritile.errors import BoundaryNotAllC, FrameError, NotAKiteOrParallelogram
from tritile.exact import AngleClass, SymLen, TileSpec
from tritile.generators import gen_equilateral_centers, gen_kite, gen_quadratic
from tritile.invariant import (c_internal_tiles, match_c_internal, sawtooth_augment,
                               sawtooth_boundary_zh, zh_edge, zh_kite_parallelogram_check,
                               zh_tile, zh_tiling)
from tritile.model import boundary_walk, build_tiling, place_tile

import oracles
from corpus import SPEC_12, SPEC_357, SPEC_SYM, full_corpus

SPEC = SPEC_357


def test_zh_edge_sign():
    assert zh_edge(AngleClass(0), 5) == 5
    assert zh_edge(AngleClass(3, 2), 5) == -5
    assert zh_edge(AngleClass(1), SymLen.of("a")) == SymLen(-1, 0, 0)
    t = place_tile(SPEC, (0, 0), AngleClass(0), "ABC")
    assert zh_edge(t.edges[1]) == SymLen(1, 0, 0)       # a-edge at (2, 1)
    assert zh_edge(t.edges[2]) == SymLen(0, -1, 0)      # b-edge at (3, 1)


@pytest.mark.parametrize("order", ["ABC", "BCA", "CAB", "ACB", "CBA", "BAC"])
def test_zh_tile_is_plus_minus_a_minus_b_plus_c(order):
    for j in range(6):
        for k in (-2, 0, 3):
            t = place_tile(SPEC, (1.5, -2), AngleClass(j, k), order)
            z = zh_tile(t)
            assert z in (SymLen(1, -1, 1), SymLen(-1, 1, -1))
            assert z.evaluate(SPEC) == pytest.approx(oracles.zeta_numeric([t], SPEC.alpha))


def test_frame_flips_sign_only():
    t = gen_quadratic(3, SPEC)
    r0 = zh_tiling(t, AngleClass(0))
    r1 = zh_tiling(t, AngleClass(1, 4))
    assert r1.zh_tiling == -r0.zh_tiling and r1.zh_boundary == -r0.zh_boundary
    assert r0.exact_match and r1.exact_match


def test_residual_from_relations():
    # an internal segment with 5a on one side and 3b on the other
    t = dict(full_corpus())["357/two-strips"]
    rep = zh_tiling(t)
    assert rep.numeric_match
    assert not rep.exact_match
    assert rep.residual is not None and rep.residual.pc == 0
    r = rep.residual.coeffs()
    assert r[0] * 3 + r[1] * 5 == 0    # a multiple of 5a - 3b


def test_numeric_identity_on_corpus():
    for name, t in full_corpus():
        rep = zh_tiling(t)
        assert rep.numeric_match, name
        ref = oracles.zeta_polygon(t.region, t.spec.alpha)
        assert abs(rep.numeric_boundary) == pytest.approx(abs(ref), abs=1e-7), name


def test_kite_check():
    k = gen_kite(SPEC)
    assert zh_kite_parallelogram_check(*k.tiles).is_zero()
    # a virtual parallelogram: translate the partner along the c-line
    t1 = place_tile(SPEC, (0, 0), AngleClass(0), "ABC", 0)
    t2 = place_tile(SPEC, (30, 0), AngleClass(3), "ABC", 1)
    assert zh_kite_parallelogram_check(t1, t2).is_zero()
    t3 = place_tile(SPEC, (30, 0), AngleClass(0), "ABC", 1)
    with pytest.raises(NotAKiteOrParallelogram):
        zh_kite_parallelogram_check(t1, t3)
    t4 = place_tile(SPEC, (30, 5), AngleClass(3), "ABC", 1)
    with pytest.raises(NotAKiteOrParallelogram):
        zh_kite_parallelogram_check(t1, t4)


def test_empty_tiling_has_no_frame():
    with pytest.raises(FrameError):
        zh_tiling(build_tiling(SPEC, [], None, fragment=True))


def test_c_internal_and_matching():
    q = gen_quadratic(3, SPEC)
    # the bottom row of c-edges lies on the boundary
    assert len(c_internal_tiles(q)) == q.n - 3
    m = match_c_internal(q)
    assert m.perfect and len(m.pairs) * 2 == q.n - 3


@pytest.mark.parametrize("X", [1, 2, 3])
def test_sawtooth_augment_matches_formula(X):
    t = gen_equilateral_centers(SPEC_SYM, X)
    aug = sawtooth_augment(t)
    assert aug.n == t.n + 3 * X
    assert oracles.covers_exactly(aug.tiles, aug.region)
    walk = boundary_walk(aug)
    z = sum((zh_edge(s) for s in walk), SymLen())
    expect = sawtooth_boundary_zh([((0, 0), X), ((2, 0), X), ((4, 0), X)], SPEC_SYM)
    assert z == expect == SymLen(-3 * X, 3 * X, 0)


def test_sawtooth_formula_independent_of_tile():
    for spec in (SPEC_357, SPEC_12, TileSpec.from_sides(2, 9)):
        z = sawtooth_boundary_zh([((0, 0), 4), ((2, 0), 3), ((3, 2), 5)], spec)
        assert z == SymLen(-2, 2, 0)


def test_sawtooth_needs_all_c_boundary():
    with pytest.raises(BoundaryNotAllC):
        sawtooth_augment(gen_quadratic(2, SPEC))
