"""Compiled vs pure-Python kernel timings.

    python3 benchmarks/bench_kernels.py [--repeat 3] [--quick]

Prints one row per kernel and input: best wall time of each backend and the ratio.
"""

import argparse
import random
import timeit

from plane_reconfig import kernels
from plane_reconfig.geometry import convex_point_set, random_point_set
from plane_reconfig.structures import Family, tables


def best(fn, repeat):
    return min(timeit.repeat(fn, number=1, repeat=repeat))


def cases(quick):
    rng = random.Random(7)
    out = [("convex 6", convex_point_set(6)), ("random 6", random_point_set(6, rng))]
    if not quick:
        out += [("convex 7", convex_point_set(7)), ("random 7", random_point_set(7, rng))]
    return out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--quick", action="store_true", help="small inputs only")
    args = ap.parse_args()
    if kernels.BACKEND != "compiled":
        raise SystemExit("compiled extension not built; run `pip install -e . --no-build-isolation` first")
    c, p = kernels.impl, kernels.pure
    rows = []
    for name, ps in cases(args.quick):
        sa, sb, cross = tables(ps)
        et = ps.empty_triangles
        fam = Family.CATERPILLARS.value
        keys = c.enumerate_trees(ps.n, sa, sb, cross, fam)
        rows.append((f"enumerate_trees {name}",
                     best(lambda: c.enumerate_trees(ps.n, sa, sb, cross, fam), args.repeat),
                     best(lambda: p.enumerate_trees(ps.n, sa, sb, cross, fam), args.repeat)))
        op = kernels.OP_SLIDE
        rows.append((f"graph_edges slide {name} ({len(keys)} trees)",
                     best(lambda: c.graph_edges(ps.n, keys, sa, sb, cross, et, op, fam), args.repeat),
                     best(lambda: p.graph_edges(ps.n, keys, sa, sb, cross, et, op, fam), args.repeat)))

    rng = random.Random(11)
    batch = []
    for _ in range(2000):
        n = rng.randrange(8, 11)
        xs = [rng.randrange(1000) for _ in range(n)]
        ys = [rng.randrange(1000) for _ in range(n)]
        batch.append((xs, ys, list(range(n - 1)), list(range(1, n))))
    rows.append(("raw_slide_count x2000 (n=8..10 paths)",
                 best(lambda: [c.raw_slide_count(*b) for b in batch], args.repeat),
                 best(lambda: [p.raw_slide_count(*b) for b in batch], args.repeat)))

    width = max(len(r[0]) for r in rows)
    print(f"{'kernel':<{width}}  {'compiled':>10}  {'python':>10}  {'speedup':>8}")
    for name, tc, tp in rows:
        print(f"{name:<{width}}  {tc * 1e3:>8.2f}ms  {tp * 1e3:>8.2f}ms  {tp / tc:>7.1f}x")


if __name__ == "__main__":
    main()
