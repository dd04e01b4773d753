"""Line-based text formats.

Graph files::

    # comment
    vertices 4
    edge 0 0 1 cap 3
    rot 0 +0 +1
    source 0
    sink 3
    outer +0
    undirected          # optional: backward darts get the edge capacity too

Path families hold one path per line, optionally named (``P1: +1 +5 +6``).
Weights files map paths to integers (``+0 +2 = 5``).
"""

from __future__ import annotations

from pathlib import Path as FsPath

from .embed import GraphSpec, Path, PlaneGraph, build_graph, dart_token, format_path, parse_dart, parse_path
from .errors import GraphFormatError


def _int(tok: str, what: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise GraphFormatError(f"line {lineno}: {what} must be an integer, got {tok!r}") from None


def parse_graph_text(text: str) -> GraphSpec:
    n = None
    edges: dict[int, tuple[int, int]] = {}
    caps: dict[int, int] = {}
    rotation: dict[int, tuple[int, ...]] = {}
    source = sink = outer = None
    undirected = False

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, *args = line.split()
        if key == "vertices":
            if len(args) != 1:
                raise GraphFormatError(f"line {lineno}: usage 'vertices <n>'")
            n = _int(args[0], "vertex count", lineno)
        elif key == "edge":
            if len(args) not in (3, 5) or (len(args) == 5 and args[3] != "cap"):
                raise GraphFormatError(f"line {lineno}: usage 'edge <id> <tail> <head> [cap <c>]'")
            eid = _int(args[0], "edge id", lineno)
            if eid in edges:
                raise GraphFormatError(f"line {lineno}: edge {eid} defined twice")
            edges[eid] = (_int(args[1], "tail", lineno), _int(args[2], "head", lineno))
            if len(args) == 5:
                c = _int(args[4], "capacity", lineno)
                if c < 0:
                    raise GraphFormatError(f"line {lineno}: capacity must be nonnegative")
                caps[eid] = c
        elif key == "rot":
            if not args:
                raise GraphFormatError(f"line {lineno}: usage 'rot <vertex> <dart>...'")
            v = _int(args[0], "vertex", lineno)
            if v in rotation:
                raise GraphFormatError(f"line {lineno}: rotation of {v} given twice")
            rotation[v] = tuple(parse_dart(t) for t in args[1:])
        elif key in ("source", "sink"):
            if len(args) != 1:
                raise GraphFormatError(f"line {lineno}: usage '{key} <vertex>'")
            if key == "source":
                source = _int(args[0], key, lineno)
            else:
                sink = _int(args[0], key, lineno)
        elif key == "outer":
            if len(args) != 1:
                raise GraphFormatError(f"line {lineno}: usage 'outer <dart>'")
            outer = parse_dart(args[0])
        elif key == "undirected":
            undirected = True
        else:
            raise GraphFormatError(f"line {lineno}: unknown directive {key!r}")

    for what, val in (("vertices", n), ("source", source), ("sink", sink), ("outer", outer)):
        if val is None:
            raise GraphFormatError(f"missing '{what}' directive")
    if sorted(edges) != list(range(len(edges))):
        raise GraphFormatError("edge ids must be dense 0..m-1")
    m = len(edges)
    return GraphSpec(
        vertex_count=n,
        edges=tuple(edges[e] for e in range(m)),
        rotation=rotation,
        source=source,
        sink=sink,
        outer=outer,
        caps=tuple(caps.get(e, 1) for e in range(m)),
        undirected=undirected,
    )


def format_graph(g: PlaneGraph, caps: tuple[int, ...] | None = None, undirected: bool = False) -> str:
    lines = [f"vertices {g.vertex_count}"]
    for e, (a, b) in enumerate(g.edges):
        suffix = f" cap {caps[e]}" if caps is not None else ""
        lines.append(f"edge {e} {a} {b}{suffix}")
    for v, darts in enumerate(g.rotation):
        lines.append(" ".join([f"rot {v}", *(dart_token(d) for d in darts)]))
    lines += [f"source {g.source}", f"sink {g.sink}", f"outer {dart_token(g.outer)}"]
    if undirected:
        lines.append("undirected")
    return "\n".join(lines) + "\n"


def load_graph(path: str | FsPath) -> tuple[PlaneGraph, GraphSpec]:
    spec = parse_graph_text(FsPath(path).read_text(encoding="utf-8"))
    return build_graph(spec), spec


def parse_family_text(text: str) -> tuple[list[str], list[Path]]:
    """Named paths; unnamed lines are called ``P1``, ``P2``, ... by position."""
    names, paths = [], []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ":" in line:
            name, body = line.split(":", 1)
            name = name.strip()
        else:
            name, body = f"P{len(paths) + 1}", line
        names.append(name)
        paths.append(parse_path(body))
    if len(set(names)) != len(names):
        raise GraphFormatError("duplicate path names in family")
    return names, paths


def format_family(names: list[str], paths: list[Path]) -> str:
    return "".join(f"{n}: {format_path(p)}\n" for n, p in zip(names, paths))


def parse_weights_text(text: str) -> dict[Path, int]:
    weights: dict[Path, int] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise GraphFormatError(f"line {lineno}: usage '<darts> = <weight>'")
        body, w = line.rsplit("=", 1)
        weights[parse_path(body)] = _int(w.strip(), "weight", lineno)
    return weights
