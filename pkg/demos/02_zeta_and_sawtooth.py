#!/usr/bin/env python3
"""zeta on small tilings: the boundary identity, null two-tile blocks, and
what the sawtooth teeth add to an all-c boundary."""
from tritile import (AngleClass, SymLen, TileSpec, gen_kite, gen_parallelogram,
                     gen_quadratic, zh_tiling)
from tritile.generators import gen_equilateral_centers, gen_two_strips
from tritile.invariant import sawtooth_augment, sawtooth_boundary_zh, zh_edge
from tritile.model import boundary_walk


def main():
    spec = TileSpec.from_sides(3, 5)

    print("quadratic tilings, tiles vs boundary:")
    for n in (1, 2, 5):
        rep = zh_tiling(gen_quadratic(n, spec, AngleClass(1, 2)))
        print(f"  n={n}: {rep.zh_tiling}  |  {rep.zh_boundary}")

    print("two-tile blocks:")
    for name, t in [("kite", gen_kite(spec)),
                    *[(f"parallelogram/{s}", gen_parallelogram(spec, shared_side=s)) for s in "abc"]]:
        print(f"  {name:16s} zeta = {zh_tiling(t).zh_tiling}")

    # when an internal line carries 5a on one side and 3b on the other the
    # symbolic values differ by a multiple of that relation, numerically not at all
    rep = zh_tiling(gen_two_strips(spec, 5, "a", 3, "b"))
    print(f"two strips: tiles {rep.zh_tiling}, boundary {rep.zh_boundary}, "
          f"residual {rep.residual}, numeric match {rep.numeric_match}")

    sym = TileSpec.from_sides(1, 1)
    print("sawtooth teeth outside an equilateral all-c boundary (a == b tile):")
    for X in (1, 2, 3):
        aug = sawtooth_augment(gen_equilateral_centers(sym, X))
        z = sum((zh_edge(s) for s in boundary_walk(aug)), SymLen())
        print(f"  X={X}: {aug.n} tiles, outline zeta {z}")
    print("corner pattern (2alpha, pi/3, 2beta), sides k=4, l=3, m=5:",
          sawtooth_boundary_zh([((0, 0), 4), ((2, 0), 3), ((3, 2), 5)], spec))


if __name__ == "__main__":
    main()
