"""Command-line entry point: validate, graph, sequence, verify, search-isolated."""

from __future__ import annotations

import argparse
import sys
import time
import warnings
from pathlib import Path

from . import analysis, verify
from .constructive import (ConstructionError, convex_cat_to_star, convex_path_to_path, double_star_to_star,
                           peeling_connect, rotation_to_star, star_to_star_general, triple_star_to_star,
                           well_separated_to_star)
from .formats import (ParseError, export_dot, export_edge_list, parse_order, read_points, serialize_points,
                      serialize_sequence, structure_from_args, write_svg_frames)
from .geometry import GeometryError
from .reconfig import (DEFAULT_MAX_VERTICES, GraphTooLarge, OpKind, build_graph, components, diameter)
from .structures import DEFAULT_CAP_N, CapExceeded, Family, StructureError, cap_n

SEQUENCE_KINDS = ("cat-to-star", "path-to-path", "double-star", "well-separated", "triple-star",
                  "rotation-star", "peeling-connect", "star-to-star")

SVG_HELP = ("SVG frames: step_0000.svg is the start structure; frame k marks the edge removed by "
            "step k+1 with a dashed stroke and the edge it adds with a dotted stroke. The viewport "
            "fits the point bounding box with a 10%% margin.")


def _n_range(text: str) -> list[int]:
    lo, sep, hi = text.partition("..")
    try:
        return list(range(int(lo), int(hi) + 1)) if sep else [int(lo)]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or LO..HI, got {text!r}") from None


def _seed(text: str) -> int:
    v = int(text)
    if not 0 <= v < 2 ** 64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return v


def _cap(args) -> int:
    cap = args.cap if args.cap is not None else cap_n()
    if cap > DEFAULT_CAP_N:
        print(f"warning: enumeration cap {cap} is above the default {DEFAULT_CAP_N}", file=sys.stderr)
    return cap


# -- subcommands ---------------------------------------------------------------------------------

def cmd_validate(args) -> int:
    ps = read_points(args.file)
    print(f"n={ps.n} hull={len(ps.hull)} general-position=ok")
    return 0


def cmd_graph(args) -> int:
    ps = read_points(args.file)
    cap = _cap(args)
    g = build_graph(ps, Family.parse(args.family), OpKind.parse(args.op), cap, args.max_vertices)
    parts = [f"vertices={len(g)}", f"edges={g.edge_count}"]
    if args.components:
        parts.append(f"components={len(components(g))}")
    if args.diameter:
        parts.append(f"diameter={diameter(g, args.max_vertices)}")
    print(" ".join(parts))
    if args.export:
        text = export_dot(g) if args.export == "dot" else export_edge_list(g)
        if args.out:
            Path(args.out).write_text(text)
        else:
            sys.stdout.write(text)
    return 0


def _build_sequence(args, ps):
    kind = args.kind
    if kind == "star-to-star":
        return star_to_star_general(ps, args.u, args.v)
    if kind == "peeling-connect":
        p = parse_order(args.path)
        q = parse_order(args.target_path)
        return peeling_connect(p, q, p[0], ps)
    t = structure_from_args(ps, args.tree, args.path)
    if kind == "cat-to-star":
        return convex_cat_to_star(t, args.s)
    if kind == "path-to-path":
        return convex_path_to_path(t, structure_from_args(ps, args.target_tree, args.target_path))
    if kind == "double-star":
        return double_star_to_star(t, args.u, args.v, args.center)
    if kind == "well-separated":
        return well_separated_to_star(t, parse_order(args.spine))
    if kind == "triple-star":
        return triple_star_to_star(t)
    return rotation_to_star(t)


def cmd_sequence(args) -> int:
    ps = read_points(args.file)
    seq = _build_sequence(args, ps)
    seq.validate()
    text = serialize_sequence(seq)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    if args.svg:
        frames = write_svg_frames(seq, args.svg)
        print(f"wrote {len(frames)} frames to {args.svg}", file=sys.stderr)
    print(f"steps={len(seq)} op={seq.required_kind.label} family={seq.family.name.lower()}", file=sys.stderr)
    return 0


def cmd_verify(args) -> int:
    report = verify.verify(args.theorem, args.n_range, args.samples, args.seed, args.budget,
                           on_result=lambda r: print(r.line(args.theorem.upper()), flush=True))
    print(report.summary())
    return 0 if report.passed else 1


def cmd_search(args) -> int:
    t0 = time.perf_counter()
    rep = analysis.search_isolated_caterpillar(args.n, args.strategy, args.budget, args.seed)
    if rep is None:
        print(f"none found n={args.n} budget={args.budget} seed={args.seed} "
              f"elapsed={time.perf_counter() - t0:.1f}s")
        return 0
    ok = rep.revalidate()
    edges = " ".join(f"{a}-{b}" for a, b in rep.witness.edges)
    print(f"found n={args.n} seed={rep.seed} evaluations={rep.iterations} elapsed={rep.elapsed:.1f}s "
          f"revalidated={'yes' if ok else 'no'}")
    print(f"edges {edges}")
    if args.out:
        out = Path(args.out)
        out.write_text(serialize_points(rep.point_set, [f"isolated caterpillar, n={args.n}, seed={rep.seed}",
                                                        f"edges {edges}"]))
        Path(str(out) + ".edges").write_text("".join(f"{a} {b}\n" for a, b in rep.witness.edges))
    return 0 if ok else 1


# -- parser ------------------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="plane-reconfig",
                                 description="Reconfiguration of plane spanning trees, caterpillars and paths.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a point file")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("graph", help="build a reconfiguration graph")
    p.add_argument("file")
    p.add_argument("--family", default="all", choices=["all", "caterpillars", "paths"])
    p.add_argument("--op", default="flip",
                   help="flip, compatible-flip, rotation, empty-triangle-rotation or slide")
    p.add_argument("--export", choices=["dot", "edges"])
    p.add_argument("--out", help="export destination (default stdout)")
    p.add_argument("--components", action="store_true")
    p.add_argument("--diameter", action="store_true")
    p.add_argument("--cap", type=int, help=f"enumeration cap on n (default {DEFAULT_CAP_N} "
                                           "or PLANE_RECONFIG_CAP_N)")
    p.add_argument("--max-vertices", type=int, default=DEFAULT_MAX_VERTICES)
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("sequence", help="run a constructive generator", epilog=SVG_HELP)
    p.add_argument("file")
    p.add_argument("--kind", required=True, choices=SEQUENCE_KINDS)
    p.add_argument("--tree", help="start structure as edges, e.g. '0-1 1-2 2-3'")
    p.add_argument("--path", help="start path as a vertex order, e.g. 0,1,2,3")
    p.add_argument("--target-tree")
    p.add_argument("--target-path")
    p.add_argument("--s", type=int, default=0, help="star centre for cat-to-star")
    p.add_argument("--u", type=int)
    p.add_argument("--v", type=int)
    p.add_argument("--center", type=int, help="target centre for double-star (default v)")
    p.add_argument("--spine", help="spine orientation for well-separated, e.g. 2,0,3")
    p.add_argument("--out", help="write the record here (default stdout)")
    p.add_argument("--svg", help="directory for SVG frames")
    p.set_defaults(func=cmd_sequence)

    p = sub.add_parser("verify", help="check a theorem on convex and seeded random sets")
    p.add_argument("--theorem", required=True, type=str.upper, choices=verify.THEOREMS)
    p.add_argument("--n-range", type=_n_range, default=[5, 6])
    p.add_argument("--samples", type=int, default=20, help="random sets per n")
    p.add_argument("--seed", type=_seed, default=0)
    p.add_argument("--budget", type=int, default=20_000_000, help="search budget for T5 with n >= 8")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search-isolated", help="search for a caterpillar with no slide")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--budget", type=int, default=20_000_000, help="candidate point sets to evaluate")
    p.add_argument("--seed", type=_seed, default=0)
    p.add_argument("--strategy", choices=["random", "exhaustive"], default="random")
    p.add_argument("--out", help="witness point file; edges go to <out>.edges")
    p.set_defaults(func=cmd_search)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        try:
            return args.func(args)
        except (ParseError, GeometryError, StructureError, CapExceeded, GraphTooLarge,
                ConstructionError, ValueError, FileNotFoundError) as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 1


if __name__ == "__main__":
    sys.exit(main())
