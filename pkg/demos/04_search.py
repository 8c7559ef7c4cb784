#!/usr/bin/env python3
"""Small exhaustive searches.

The parallelogram and the doubled tile have the expected tilings, the
search agrees with the brute-force enumerator, and an equilateral
triangle of side c has no tiling with at most six incommensurable tiles.
That last run is evidence for the small cases only, not a proof.
"""
from tritile import SearchConfig, TileSpec, enumerate_tilings, naive_enumerate
from tritile.search import builtin_region


def main():
    spec = TileSpec.from_sides(3, 5)
    for name in ("parallelogram", "quadratic2"):
        region = builtin_region(name, spec)
        res = enumerate_tilings(SearchConfig(spec, region, 4))
        ref = naive_enumerate(spec, region, 4)
        print(f"{name}: {res.count} tiling(s), {res.nodes} nodes, prunes {res.prunes}; "
              f"brute force {ref.count}, same set: {sorted(res.keys) == sorted(ref.keys)}")

    # N = t + 1/t + 1 tiles for an equilateral region of side c when a/b = t
    for label, t in [("N=4", (3 + 5 ** 0.5) / 2), ("N=5", 2 + 3 ** 0.5),
                     ("N=6", (5 + 21 ** 0.5) / 2)]:
        spec = TileSpec.from_sides(t, 1, angle_mode="incommensurable",
                                   side_mode="incommensurable")
        res = enumerate_tilings(SearchConfig(spec, builtin_region("equilateral-c", spec), 6))
        print(f"equilateral-c, a/b={t:.4f} ({label}): {res.count} tilings, "
              f"{res.nodes} nodes, {res.wall_time:.3f} s")

    sym = TileSpec.from_sides(1, 1)
    res = enumerate_tilings(SearchConfig(sym, builtin_region("equilateral-c", sym), 6))
    print(f"control, a == b: {res.count} tiling(s) of the same region")


if __name__ == "__main__":
    main()
