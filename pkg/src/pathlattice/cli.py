"""Command-line front end.

Exit status is 0 on success, 1 when a domain error is raised and 2 on usage
or parse errors.  ``--json`` prints one JSON object with ``"schema": 1``.
Paths are passed as single arguments, e.g. ``"+1 -4 +2"``; put ``--`` before
a path that starts with ``-``.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path as FsPath
from typing import Any, Callable, Sequence

from .circulation import face_potential, path_vector, sub
from .embed import dart_token, dual, format_path, parse_path
from .errors import GraphFormatError, PathLatticeError
from .flow import (
    CapacityMap,
    maxflow_dual_sp,
    maxflow_generic,
    maxflow_uppermost,
    mincut_extract,
    weighted_packing,
)
from .formats import load_graph, parse_family_text, parse_weights_text
from .lattice import (
    Comparison,
    compare,
    join,
    join_st_planar,
    lowermost_path,
    meet,
    meet_st_planar,
    uppermost_path,
)
from .verify import PathFamily, check_axioms, enumerate_simple_paths, is_st_plane_embedding, order_existence

SCHEMA = 1

_COMPARISON_WORD = {
    Comparison.LEFT_OF: "left-of",
    Comparison.RIGHT_OF: "right-of",
    Comparison.EQUAL: "equal",
    Comparison.INCOMPARABLE: "incomparable",
}


class Output:
    """Collects text lines and the JSON payload side by side."""

    def __init__(self, verb: str):
        self.lines: list[str] = []
        self.data: dict[str, Any] = {"schema": SCHEMA, "command": verb}

    def line(self, text: str) -> None:
        self.lines.append(text)


def _caps(spec) -> CapacityMap:
    return CapacityMap.from_edges(spec.caps, spec.undirected)


# -- verbs --------------------------------------------------------------------


def cmd_faces(g, spec, args, out: Output) -> None:
    faces = []
    for f in g.faces:
        label = " (infinite)" if f.id == g.outer_face else ""
        out.line(f"face {f.id}{label}: {format_path(f.boundary)}")
        faces.append({"id": f.id, "infinite": f.id == g.outer_face, "boundary": format_path(f.boundary)})
    out.data["faces"] = faces


def cmd_dual(g, spec, args, out: Output) -> None:
    d = dual(g)
    out.line(f"faces {d.vertex_count}")
    edges = []
    for e, (a, b) in enumerate(d.edges):
        out.line(f"edge {e}: {a} -> {b}")
        edges.append({"edge": e, "from": a, "to": b})
    out.data.update(face_count=d.vertex_count, edges=edges)


def cmd_paths(g, spec, args, out: Output) -> None:
    fam = enumerate_simple_paths(g, limit=args.limit)
    for p in fam.paths:
        out.line(format_path(p))
    out.data["paths"] = [format_path(p) for p in fam.paths]


def cmd_compare(g, spec, args, out: Output) -> None:
    p, q = parse_path(args.P), parse_path(args.Q)
    res = compare(g, p, q)
    out.line(_COMPARISON_WORD[res])
    out.data["result"] = _COMPARISON_WORD[res]
    out.data["potential"] = list(face_potential(g, sub(path_vector(g, p), path_vector(g, q))))


def _meet_or_join(kind: str) -> Callable:
    def run(g, spec, args, out: Output) -> None:
        p, q = parse_path(args.P), parse_path(args.Q)
        if args.st_planar:
            fn = meet_st_planar if kind == "meet" else join_st_planar
            path = fn(g, p, q)
            out.line(f"path {format_path(path)}")
            out.data.update(path=format_path(path), cycles=[])
            return
        res = (meet if kind == "meet" else join)(g, p, q)
        out.line(f"path {format_path(res.path)}")
        cycles = []
        for c, o in zip(res.cycles, res.orientations):
            out.line(f"cycle {format_path(c)} {o}")
            cycles.append({"darts": format_path(c), "orientation": o})
        out.data.update(path=format_path(res.path), cycles=cycles, potential=list(res.potential))

    return run


def _extreme(kind: str) -> Callable:
    def run(g, spec, args, out: Output) -> None:
        path = uppermost_path(g) if kind == "uppermost" else lowermost_path(g)
        out.line(format_path(path))
        out.data["path"] = format_path(path)

    return run


def cmd_maxflow(g, spec, args, out: Output) -> None:
    cap = _caps(spec)
    packing = None
    if args.algo == "uppermost":
        flow, packing, cut = maxflow_uppermost(g, cap)
    else:
        flow = maxflow_dual_sp(g, cap) if args.algo == "dual-sp" else maxflow_generic(g, cap)
        cut = mincut_extract(g, cap, flow)
    out.line(f"value {flow.value}")
    flows = {dart_token(d): x for d, x in enumerate(flow.flow) if x}
    for tok, x in flows.items():
        out.line(f"flow {tok} {x}")
    side = sorted(cut.side)
    cut_darts = sorted(cut.darts)
    out.line(f"cut {' '.join(map(str, side))} | {format_path(cut_darts)}")
    out.data.update(
        algo=args.algo,
        value=flow.value,
        flow=flows,
        cut={"side": side, "darts": format_path(cut_darts), "capacity": cut.capacity(cap.cap)},
    )
    if packing is not None:
        for p, y in packing.entries:
            out.line(f"augment {format_path(p)} by {y}")
        out.data["augmentations"] = [{"path": format_path(p), "amount": y} for p, y in packing.entries]


def cmd_packing(g, spec, args, out: Output) -> None:
    cap = _caps(spec)
    weights = {}
    if args.weights:
        weights = parse_weights_text(FsPath(args.weights).read_text(encoding="utf-8"))
    pk = weighted_packing(g, cap, weights)
    obj = pk.objective(weights)
    out.line(f"objective {obj}")
    for p, y in pk.entries:
        out.line(f"path {format_path(p)} y {y} weight {weights.get(p, 1)}")
    out.data.update(
        objective=obj,
        entries=[{"path": format_path(p), "y": y, "weight": weights.get(p, 1)} for p, y in pk.entries],
    )


def _yes(b: bool) -> str:
    return "yes" if b else "no"


def cmd_verify(g, spec, args, out: Output) -> None:
    fam = enumerate_simple_paths(g, limit=args.limit)
    rep = check_axioms(g, fam, ground=args.ground)
    out.line(f"paths {rep.path_count}")
    for key in ("partial_order", "lattice", "submodular", "consecutive"):
        out.line(f"{key.replace('_', '-')}: {_yes(getattr(rep, key))}")
    for v in rep.violations:
        names = " ".join(f"P{i + 1}" for i in v.paths)
        out.line(f"violation {v.kind} {names}: {v.detail}")
    out.data.update(
        paths=rep.path_count,
        ground=rep.ground,
        partial_order=rep.partial_order,
        lattice=rep.lattice,
        submodular=rep.submodular,
        consecutive=rep.consecutive,
        violations=[
            {"kind": v.kind, "paths": [format_path(fam.paths[i]) for i in v.paths], "detail": v.detail}
            for v in rep.violations
        ],
    )


def cmd_order_exists(g, spec, args, out: Output) -> None:
    names, paths = parse_family_text(FsPath(args.paths).read_text(encoding="utf-8"))
    fam = PathFamily(g, tuple(paths), tuple(names))
    verdict = order_existence(fam, ground=args.ground)
    for text in verdict.lines():
        out.line(text)
    out.data.update(
        outcome=verdict.outcome,
        ground=verdict.ground,
        forced=[[names[a], names[b]] for a, b in verdict.forced],
        steps=[
            {"kind": s.kind, "pair": [names[s.pair[0]], names[s.pair[1]]], "reason": s.reason, "depth": s.depth}
            for s in verdict.steps
        ],
        witness=sorted([names[a], names[b]] for a, b in verdict.witness),
        note=verdict.note,
    )


def cmd_check_st_plane(g, spec, args, out: Output) -> None:
    ok = is_st_plane_embedding(g)
    out.line(_yes(ok))
    out.data["st_plane"] = ok


# -- driver ---------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pathlattice", description="Path lattices of plane graphs.")
    sub_ = parser.add_subparsers(dest="verb", required=True)

    def verb(name: str, fn: Callable, help_: str) -> argparse.ArgumentParser:
        p = sub_.add_parser(name, help=help_)
        p.add_argument("graph", help="graph file")
        p.add_argument("--json", action="store_true", help="print a JSON object instead of text")
        p.set_defaults(run=fn)
        return p

    verb("faces", cmd_faces, "list face boundaries")
    verb("dual", cmd_dual, "list dual edges")
    verb("paths", cmd_paths, "enumerate simple s-t paths").add_argument("--limit", type=int, default=10_000)
    p = verb("compare", cmd_compare, "left/right relation of two paths")
    p.add_argument("P")
    p.add_argument("Q")
    for kind in ("meet", "join"):
        p = verb(kind, _meet_or_join(kind), f"{kind} of two paths")
        p.add_argument("P")
        p.add_argument("Q")
        p.add_argument("--st-planar", action="store_true", help="use the lowermost/uppermost construction")
    verb("uppermost", _extreme("uppermost"), "uppermost s-t path")
    verb("lowermost", _extreme("lowermost"), "lowermost s-t path")
    p = verb("maxflow", cmd_maxflow, "maximum flow")
    p.add_argument("--algo", choices=("uppermost", "dual-sp", "generic"), default="uppermost")
    verb("packing", cmd_packing, "greedy weighted path packing").add_argument("--weights", help="weights file")
    p = verb("verify", cmd_verify, "check lattice axioms on all paths")
    p.add_argument("--limit", type=int, default=10_000)
    p.add_argument("--ground", choices=("darts", "edges"), default="darts")
    p = verb("order-exists", cmd_order_exists, "search for a consecutive submodular order on a family")
    p.add_argument("--paths", required=True, help="family file")
    p.add_argument("--ground", choices=("edges", "darts"), default="edges")
    verb("check-st-plane", cmd_check_st_plane, "are source and sink on the infinite face")
    return parser


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    out = Output(args.verb)
    try:
        g, spec = load_graph(args.graph)
        args.run(g, spec, args, out)
    except (GraphFormatError, OSError) as exc:
        print(f"error: {exc}", file=stderr)
        return 2
    except PathLatticeError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=stderr)
        return 1
    if args.json:
        print(json.dumps(out.data, indent=2, sort_keys=True, ensure_ascii=False), file=stdout)
    else:
        for text in out.lines:
            print(text, file=stdout)
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
