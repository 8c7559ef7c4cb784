#!/usr/bin/env python3
"""Integer bookkeeping for the 1215-tile tiling of an equilateral triangle.

The tile is (3, 5, 7).  An equilateral side of 27a + b + 7c = 135 holds
1215 copies (area check), and zeta of its boundary is 3 * 135.  One
trapezoid piece of the construction has sides 49, 15, 34, 15 and zeta 45;
nine of them account for the whole boundary value.
"""
from tritile import TileSpec, worked_example_arithmetic


def main():
    spec = TileSpec.from_sides(3, 5)
    print(f"tile: a={spec.a} b={spec.b} c={spec.c}, angle mode {spec.angle_mode.value}")
    r = worked_example_arithmetic()
    print(f"side  {r.side_symbolic} = {r.L}")
    print(f"area  {r.N} * 3 * 5 = {r.area_lhs}  vs  {r.L}^2 = {r.area_rhs}")
    print(f"zeta of the big boundary: 3 * {r.L} = {r.zh_boundary_big}")
    print(f"zeta of one trapezoid: 49 + 15 - 34 + 15 = {r.zh_trapezoid}")
    print(f"nine trapezoids: {r.zh_trapezoid_total}")
    assert r.area_lhs == r.area_rhs and r.zh_trapezoid_total == r.zh_boundary_big
    print("all identities hold")


if __name__ == "__main__":
    main()
