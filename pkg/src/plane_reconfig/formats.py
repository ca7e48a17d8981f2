"""Plain-text point files, sequence records, graph exports and SVG frames."""

from __future__ import annotations

import hashlib
from pathlib import Path
from typing import Iterable

from .constructive import MoveSequence
from .geometry import PointSet, Segment, seg
from .reconfig import MoveStep, OpKind, ReconfigGraph, classify_move
from .structures import Family, SpanningStructure, edges_of


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


# -- point files -------------------------------------------------------------------------

def parse_points(text: str) -> PointSet:
    """One `x y` pair of decimal integers per line; `#` comments and blank lines skipped."""
    pts = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"expected two integers, got {line!r}", lineno)
        try:
            pts.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise ParseError(f"not an integer pair: {line!r}", lineno) from None
    if not pts:
        raise ParseError("no points in file")
    return PointSet(pts)


def serialize_points(ps: PointSet, comments: Iterable[str] = ()) -> str:
    head = "".join(f"# {c}\n" for c in comments)
    return head + "".join(f"{p.x} {p.y}\n" for p in ps)


def read_points(path: str | Path) -> PointSet:
    return parse_points(Path(path).read_text())


def point_set_hash(ps: PointSet) -> str:
    return hashlib.sha256(serialize_points(ps).encode()).hexdigest()[:16]


# -- edge lists ----------------------------------------------------------------------------

def parse_edges(text: str) -> list[Segment]:
    """Edges written `a-b` or `a,b`, separated by spaces or newlines."""
    out = []
    for tok in text.replace("\n", " ").split():
        a, sep, b = tok.replace(",", "-").partition("-")
        if not sep:
            raise ParseError(f"bad edge {tok!r}")
        try:
            out.append(seg(int(a), int(b)))
        except ValueError:
            raise ParseError(f"bad edge {tok!r}") from None
    return out


def parse_order(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(",", " ").split()]
    except ValueError:
        raise ParseError(f"bad vertex order {text!r}") from None


def _edge_text(edges: Iterable[Segment], sep: str = "-") -> str:
    return " ".join(f"{a}{sep}{b}" for a, b in edges)


# -- sequence records ------------------------------------------------------------------

_HEADER = "# plane-reconfig sequence"


def _kinds_text(kinds) -> str:
    return ",".join(k.label for k in sorted(kinds))


def serialize_sequence(seq: MoveSequence) -> str:
    lines = [_HEADER,
             f"op {seq.required_kind.label}",
             f"family {seq.family.name.lower()}",
             f"points {point_set_hash(seq.start.point_set)}",
             f"start {_edge_text(seq.start.edges, ',')}"]
    for st in seq.steps:
        a, b = st.removed
        c, d = st.added
        lines.append(f"- {a},{b} + {c},{d} kinds={_kinds_text(st.kinds)}")
    return "\n".join(lines) + "\n"


def parse_sequence(text: str, ps: PointSet, validate: bool = True) -> MoveSequence:
    """Inverse of `serialize_sequence`; checks the point-set hash and re-validates every step."""
    header: dict[str, str] = {}
    steps: list[MoveStep] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("- "):
            try:
                rem, rest = line[2:].split(" + ")
                add, kinds = rest.split(" kinds=")
                (e,) = parse_edges(rem)
                (f,) = parse_edges(add)
                ks = frozenset(OpKind.parse(k) for k in kinds.split(","))
            except ValueError as exc:
                raise ParseError(f"bad step line: {exc}", lineno) from None
            steps.append(MoveStep(e, f, ks))
            continue
        key, _, value = line.partition(" ")
        if key not in ("op", "family", "points", "start"):
            raise ParseError(f"unknown header field {key!r}", lineno)
        header[key] = value
    missing = {"op", "family", "points", "start"} - header.keys()
    if missing:
        raise ParseError(f"missing header fields: {', '.join(sorted(missing))}")
    if header["points"] != point_set_hash(ps):
        raise ParseError("record was written for a different point set")
    start = SpanningStructure(ps, parse_edges(header["start"]))
    seq = MoveSequence(start, steps, OpKind.parse(header["op"]), Family.parse(header["family"]))
    if validate:
        seq.validate()
        for i, (st, mv) in enumerate(zip(steps, _recomputed_kinds(seq))):
            if st.kinds != mv:
                raise ParseError(f"step {i} lists kinds {_kinds_text(st.kinds)}, recomputed {_kinds_text(mv)}")
    return seq


def _recomputed_kinds(seq: MoveSequence):
    structs = seq.structures()
    for a, b in zip(structs, structs[1:]):
        yield classify_move(a, b).kinds


# -- graph exports -------------------------------------------------------------------------

def vertex_label(ps: PointSet, key: int) -> str:
    if ps.n <= 6:
        return _edge_text(edges_of(ps, key))
    return format(key, "x")


def export_dot(g: ReconfigGraph) -> str:
    ps = g.point_set
    name = f"{g.family.name.lower()}_{g.op.label}".replace("-", "_") if g.family else "reconfig"
    lines = [f"graph {name} {{"]
    for i, k in enumerate(g.vertices):
        lines.append(f'  v{i} [label="{vertex_label(ps, k)}"];')
    for i, j in g.edges():
        lines.append(f"  v{i} -- v{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_edge_list(g: ReconfigGraph) -> str:
    """One `key1 key2` pair per line, keys in lowercase hex."""
    return "".join(f"{g.vertices[i]:x} {g.vertices[j]:x}\n" for i, j in g.edges())


# -- SVG frames ---------------------------------------------------------------------------------

SVG_SIZE = 400


def _viewport(ps: PointSet):
    xs = [p.x for p in ps]
    ys = [p.y for p in ps]
    w = max(max(xs) - min(xs), 1)
    h = max(max(ys) - min(ys), 1)
    span = max(w, h)
    margin = 0.1 * span
    scale = SVG_SIZE / (span + 2 * margin)

    def tr(p):
        # SVG y grows downwards
        return ((p.x - min(xs) + margin) * scale, (max(ys) - p.y + margin) * scale)

    return tr, (w + 2 * margin) * scale, (h + 2 * margin) * scale


def svg_frame(t: SpanningStructure, removed: Segment | None = None, added: Segment | None = None) -> str:
    """Edges as solid lines; the edge about to leave dashed, the edge about to enter dotted."""
    ps = t.point_set
    tr, width, height = _viewport(ps)
    out = ['<?xml version="1.0" encoding="UTF-8"?>',
           f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width:.2f}" height="{height:.2f}" '
           f'viewBox="0 0 {width:.2f} {height:.2f}">']

    def line(s: Segment, style: str) -> str:
        (x1, y1), (x2, y2) = tr(ps[s[0]]), tr(ps[s[1]])
        return f'<line x1="{x1:.2f}" y1="{y1:.2f}" x2="{x2:.2f}" y2="{y2:.2f}" {style}/>'

    rem = seg(*removed) if removed else None
    for e in t.edges:
        if e == rem:
            out.append(line(e, 'stroke="black" stroke-width="2" stroke-dasharray="8,5"'))
        else:
            out.append(line(e, 'stroke="black" stroke-width="2"'))
    if added:
        out.append(line(seg(*added), 'stroke="black" stroke-width="2" stroke-dasharray="2,4"'))
    for i, p in enumerate(ps):
        x, y = tr(p)
        out.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="5" fill="white" stroke="black" stroke-width="1.5"/>')
        out.append(f'<text x="{x + 7:.2f}" y="{y - 7:.2f}" font-family="sans-serif" font-size="12">{i}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def write_svg_frames(seq: MoveSequence, directory: str | Path) -> list[Path]:
    """Frame k shows structure k, marking the exchange that leads to structure k+1."""
    d = Path(directory)
    d.mkdir(parents=True, exist_ok=True)
    structs = seq.structures()
    paths = []
    for k, t in enumerate(structs):
        st = seq.steps[k] if k < len(seq.steps) else None
        p = d / f"step_{k:04d}.svg"
        p.write_text(svg_frame(t, st.removed if st else None, st.added if st else None))
        paths.append(p)
    return paths


def structure_from_args(ps: PointSet, edges: str | None, path: str | None) -> SpanningStructure:
    if edges:
        return SpanningStructure(ps, parse_edges(edges))
    if path:
        return SpanningStructure.from_path(ps, parse_order(path))
    raise ParseError("give the structure with --tree or --path")

