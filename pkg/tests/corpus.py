"""Shared tiling corpora for the tests."""
from tritile.exact import AngleClass, TileSpec
from tritile.generators import (gen_equilateral_centers, gen_kite, gen_parallelogram,
                                gen_quadratic, gen_two_strips)
from tritile.model import transform_tiling

SPEC_357 = TileSpec.from_sides(3, 5)          # c = 7, all sides rational
SPEC_12 = TileSpec.from_sides(1, 2)           # c = sqrt(7): a, b rational, c irrational
SPEC_SYM = TileSpec.from_sides(1, 1)          # alpha = beta = pi/6


def generated(spec, max_n=10):
    out = [(f"quadratic{n}", gen_quadratic(n, spec)) for n in range(1, max_n + 1)]
    out.append(("kite", gen_kite(spec)))
    for side in "abc":
        out.append((f"parallelogram-{side}", gen_parallelogram(spec, shared_side=side)))
    return out


def full_corpus():
    """Named tilings covering every generator (no open fragments)."""
    out = [(f"357/{name}", t) for name, t in generated(SPEC_357, 6)]
    out += [(f"12/{name}", t) for name, t in generated(SPEC_12, 5)]
    out.append(("357/two-strips", gen_two_strips(SPEC_357, 5, "a", 3, "b")))
    out.append(("12/two-strips", gen_two_strips(SPEC_12, 2, "a", 1, "b")))
    out += [(f"sym/equilateral{x}", gen_equilateral_centers(SPEC_SYM, x)) for x in (1, 2, 3)]
    return out


def random_motion(t, rng):
    rot = AngleClass(rng.randrange(6), rng.randint(-4, 4))
    shift = (rng.uniform(-50, 50), rng.uniform(-50, 50))
    return transform_tiling(t, rot, shift, reflect=rng.random() < 0.5)
