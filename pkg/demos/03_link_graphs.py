#!/usr/bin/env python3
"""The star vertex of the appendix patch, seen through the a-link graph,
then the verdict pipeline on a couple of generated tilings."""
import argparse
import pathlib

from tritile import TileSpec, build_gamma_graph, classify_vertices, commensurability_verdict
from tritile.analysis import deduce_ratios, extract_relations
from tritile.generators import gen_appendix_fixture, gen_quadratic, gen_two_strips
from tritile.render import render


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", type=pathlib.Path, help="directory for SVG pictures")
    args = ap.parse_args()

    for a, b in [(3, 2), (8, 7), (8, 1)]:
        spec = TileSpec.from_sides(a, b)
        t, x = gen_appendix_fixture(spec)
        g = build_gamma_graph(t, "a")
        kind = classify_vertices(t).types[x]
        print(f"tile ({a}, {b}): X is a {kind}, in-degree {g.in_degree.get(x, 0)}, "
              f"out-degree {g.out_degree.get(x, 0)}; links {[(lk.tail, lk.head) for lk in g.links]}")
        if args.out:
            args.out.mkdir(parents=True, exist_ok=True)
            (args.out / f"appendix_{a}_{b}.svg").write_bytes(
                render(t, links=("a",), vertex_types=True))

    spec = TileSpec.from_sides(3, 5)
    strips = gen_two_strips(spec, 5, "a", 3, "b")
    rels = extract_relations(strips)
    print("two strips:", ", ".join(map(str, rels)), "->", deduce_ratios(rels).as_dict())
    for name, t in [("quadratic 3", gen_quadratic(3, spec)), ("two strips", strips)]:
        v = commensurability_verdict(t)
        print(f"{name}: {v.conclusion} ({'; '.join(v.notes)})")


if __name__ == "__main__":
    main()
