import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from tritile.errors import InvalidSpec
from tritile.exact import (ALPHA, BETA, FULL, GAMMA, PI, AngleClass, AngleMeasure,
                           AngleMode, SideMode, SymLen, TileSpec, as_rational,
                           canonical_class, check_tile_spec, get_eps, measure_between,
                           zh_sign)

import oracles

ints = st.integers(-200, 200)


def test_angle_class_reduces_j():
    assert AngleClass(7, 2) == AngleClass(1, 2)
    assert AngleClass(-1) == AngleClass(5)
    assert AngleClass(2, 1).opposite() == AngleClass(5, 1)
    assert AngleClass(2, 1).inverse() == AngleClass(4, -1)
    assert AngleClass(1, 3).line_key() == AngleClass(4, 3).line_key()


@given(ints, ints, ints, ints)
def test_angle_group_laws(j1, k1, j2, k2):
    x, y = AngleClass(j1, k1), AngleClass(j2, k2)
    assert x + y == y + x
    assert x + x.inverse() == AngleClass(0, 0)
    assert (x + y) - y == x
    assert zh_sign(x + y) == zh_sign(x) * zh_sign(y)
    assert zh_sign(x.opposite()) == -zh_sign(x)


def test_zh_sign_matches_brute_force():
    spec = TileSpec.from_sides(3, 5)
    for j in range(6):
        for k in range(-6, 7):
            d = AngleClass(j, k)
            assert zh_sign(d) == oracles.direction_sign(d.unit(spec.alpha), spec.alpha)


def test_angle_measure_decompose():
    # the wedge multisets that close a straight angle and a full turn
    assert set(PI.decompose()) == {(1, 1, 1), (3, 3, 0)}
    assert set(FULL.decompose()) == {(0, 0, 3), (2, 2, 2), (4, 4, 1), (6, 6, 0)}
    assert ALPHA.decompose() == [(1, 0, 0)]
    assert BETA.decompose() == [(0, 1, 0)]
    assert set(GAMMA.decompose()) == {(0, 0, 1), (2, 2, 0)}
    assert not AngleMeasure(0, -1).fillable()
    assert not (PI - GAMMA - ALPHA - ALPHA).fillable()


def test_pi_over_three_is_alpha_plus_beta():
    assert ALPHA + BETA == AngleMeasure(1, 0)
    assert AngleMeasure(1, 0).decompose() == [(1, 1, 0)]


@given(st.integers(0, 4), st.integers(0, 4), st.integers(0, 3))
def test_decompose_inverts_sums(na, nb, ng):
    m = ALPHA * na + BETA * nb + GAMMA * ng
    assert (na, nb, ng) in m.decompose()
    alpha = 0.4
    for d in m.decompose():
        assert math.isclose(d[0] * alpha + d[1] * (math.pi / 3 - alpha) + d[2] * 2 * math.pi / 3,
                            m.value(alpha), abs_tol=1e-12)


def test_measure_between():
    alpha = TileSpec.from_sides(3, 5).alpha
    assert measure_between(AngleClass(0), AngleClass(3), alpha) == PI
    assert measure_between(AngleClass(0), AngleClass(0), alpha) == FULL
    assert measure_between(AngleClass(0), AngleClass(0), alpha, allow_zero=True) == AngleMeasure(0)
    m = measure_between(AngleClass(0, 1), AngleClass(0, 0), alpha)
    assert math.isclose(m.value(alpha), 2 * math.pi - alpha)


def test_symlen_arithmetic():
    x = SymLen(1, 2, 0)
    assert x + SymLen.of("c", 3) == SymLen(1, 2, 3)
    assert 2 * x == SymLen(2, 4, 0)
    assert -x - x == SymLen(-2, -4, 0)
    assert not SymLen.zero()
    assert str(SymLen(Fraction(1, 2), -1, 3)) == "1/2a - b + 3c"
    assert str(SymLen()) == "0"
    with pytest.raises(ValueError):
        SymLen.of("d")


def test_symlen_evaluate():
    spec = TileSpec.from_sides(3, 5)
    assert SymLen(27, 1, 7).evaluate_exact(spec) == 135
    assert SymLen(1, 1, 1).evaluate(spec) == 15.0
    with pytest.raises(ValueError):
        SymLen(1).evaluate_exact(TileSpec.from_sides(1, 2))


def test_as_rational():
    assert as_rational("3/2") == Fraction(3, 2)
    assert as_rational(4.0) == Fraction(4)
    assert as_rational("sqrt(49)") == 7
    assert math.isclose(as_rational("sqrt(7)"), math.sqrt(7))
    with pytest.raises(TypeError):
        as_rational(True)


def test_tile_spec_modes():
    s = TileSpec.from_sides(3, 5)
    assert s.c == 7 and s.side_mode is SideMode.COMMENSURABLE
    assert s.angle_mode is AngleMode.INCOMMENSURABLE
    s = TileSpec.from_sides(1, 2)
    assert s.side_mode is SideMode.AB_RATIONAL
    assert math.isclose(s.c, math.sqrt(7))
    # a = b gives alpha = pi/6
    s = TileSpec.from_sides(1, 1)
    assert s.angle_mode is AngleMode.COMMENSURABLE
    assert math.isclose(s.alpha, math.pi / 6)


def test_tile_spec_angles_match_coordinates():
    s = TileSpec.from_sides(3, 5)
    # law of cosines, recomputed independently
    cos_alpha = (5 ** 2 + 7 ** 2 - 3 ** 2) / (2 * 5 * 7)
    assert math.isclose(s.alpha, math.acos(cos_alpha))
    assert math.isclose(s.alpha + s.beta + s.gamma, math.pi)


def test_invalid_specs():
    with pytest.raises(InvalidSpec):
        TileSpec.from_sides(3, 5, 8)
    with pytest.raises(InvalidSpec):
        TileSpec.from_sides(-1, 5)
    with pytest.raises(InvalidSpec):
        TileSpec.from_sides(3, 5, alpha=1.0)
    rep = check_tile_spec(TileSpec.from_sides(3, 5, 8, check=False), raise_on_error=False)
    assert not rep.ok and rep.messages


def test_eps_env(monkeypatch):
    monkeypatch.setenv("TRITILE_EPS", "1e-6")
    assert get_eps() == 1e-6
    monkeypatch.setenv("TRITILE_EPS", "-1")
    with pytest.raises(InvalidSpec):
        get_eps()
    monkeypatch.setenv("TRITILE_EPS", "x")
    with pytest.raises(InvalidSpec):
        get_eps()


def test_canonical_class_for_symmetric_tile():
    alpha = math.pi / 6
    assert canonical_class(AngleClass(0, 2), alpha) == AngleClass(1, 0)
    assert canonical_class(AngleClass(3, -1), alpha) == AngleClass(2, 1)
    assert canonical_class(AngleClass(5, 7), alpha) == AngleClass(8, 1)
    for j in range(6):
        for k in range(-5, 6):
            d = AngleClass(j, k)
            e = canonical_class(d, alpha)
            assert e.k in (0, 1)
            assert d.unit(alpha) == pytest.approx(e.unit(alpha), abs=1e-12)
    # nothing changes for other tiles
    spec = TileSpec.from_sides(3, 5)
    assert canonical_class(AngleClass(0, 2), spec.alpha) == AngleClass(0, 2)
