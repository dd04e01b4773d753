"""Fixture graphs: the drawn examples shipped as data files plus generators.

Generated graphs come from straight-line drawings, so the rotation at a vertex
is the counterclockwise order of its neighbours by angle and the infinite face
is the one seen from the leftmost vertex.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from importlib import resources
from typing import Sequence

from .embed import Path, PlaneGraph, build_graph
from .errors import DisconnectedGraph, InvalidEmbedding
from .formats import parse_family_text, parse_graph_text

Point = tuple[float, float]


@dataclass(frozen=True)
class Fixture:
    name: str
    graph: PlaneGraph
    edge_caps: tuple[int, ...]
    undirected: bool = False
    family_names: tuple[str, ...] = ()
    family: tuple[Path, ...] = ()
    tags: frozenset[str] = field(default_factory=frozenset)

    def path(self, name: str) -> Path:
        return self.family[self.family_names.index(name)]


def from_drawing(
    points: Sequence[Point],
    edges: Sequence[tuple[int, int]],
    source: int,
    sink: int,
) -> PlaneGraph:
    """Embedded graph of a straight-line drawing.

    Vertices without edges are dropped (ids are compacted, order kept).
    """
    used = sorted({v for e in edges for v in e} | {source, sink})
    loc = {v: i for i, v in enumerate(used)}
    pts = [points[v] for v in used]
    edges = [(loc[a], loc[b]) for a, b in edges]
    around: list[list[tuple[float, int]]] = [[] for _ in pts]
    for e, (a, b) in enumerate(edges):
        (xa, ya), (xb, yb) = pts[a], pts[b]
        around[a].append((math.atan2(yb - ya, xb - xa), 2 * e))
        around[b].append((math.atan2(ya - yb, xa - xb), 2 * e + 1))
    rotation = tuple(tuple(d for _, d in sorted(r)) for r in around)
    leftmost = min(range(len(pts)), key=lambda v: (pts[v][0], pts[v][1]))
    if not rotation[leftmost]:
        raise DisconnectedGraph("leftmost vertex has no edges")
    # the infinite face lies counterclockwise after the steepest dart
    outer = max(around[leftmost])[1]
    return PlaneGraph(len(pts), tuple(edges), rotation, loc[source], loc[sink], outer)


def _grid_points(rows: int, cols: int) -> list[Point]:
    return [(float(c), float(r)) for r in range(rows) for c in range(cols)]


def grid_edges(rows: int, cols: int, diagonals: Sequence[tuple[int, int]] = ()) -> list[tuple[int, int]]:
    """Right and up edges of a ``rows x cols`` grid, plus chosen cell diagonals.

    Vertex ``(r, c)`` has id ``r * cols + c``; diagonal ``(r, c)`` joins
    ``(r, c)`` and ``(r + 1, c + 1)``.
    """
    out = []
    for r in range(rows):
        for c in range(cols):
            v = r * cols + c
            if c + 1 < cols:
                out.append((v, v + 1))
            if r + 1 < rows:
                out.append((v, v + cols))
    for r, c in diagonals:
        out.append((r * cols + c, (r + 1) * cols + c + 1))
    return out


def grid(
    rows: int,
    cols: int,
    diagonals: Sequence[tuple[int, int]] = (),
    source: int | None = None,
    sink: int | None = None,
) -> PlaneGraph:
    """Grid with s/t at opposite corners unless given."""
    s = 0 if source is None else source
    t = rows * cols - 1 if sink is None else sink
    return from_drawing(_grid_points(rows, cols), grid_edges(rows, cols, diagonals), s, t)


def fan(k: int) -> PlaneGraph:
    """A path ``v0..v{k-1}`` on the x-axis plus an apex above joined to all of it."""
    pts = [(float(i), 0.0) for i in range(k)] + [((k - 1) / 2, 1.0 + k / 4)]
    apex = k
    edges = [(i, i + 1) for i in range(k - 1)] + [(i, apex) for i in range(k)]
    return from_drawing(pts, edges, 0, k - 1)


def ladder(k: int, rungs: Sequence[int] | None = None) -> PlaneGraph:
    """Two rails of ``k`` vertices joined by rungs; s bottom-left, t top-right."""
    pts = [(float(i), 0.0) for i in range(k)] + [(float(i), 1.0) for i in range(k)]
    edges = [(i, i + 1) for i in range(k - 1)] + [(k + i, k + i + 1) for i in range(k - 1)]
    edges += [(i, k + i) for i in (range(k) if rungs is None else rungs)]
    return from_drawing(pts, edges, 0, 2 * k - 1)


def wheel(k: int) -> PlaneGraph:
    """Hub joined to a ``k``-cycle; s on the rim, t the opposite rim vertex.

    The hub is interior, so the embedding is still s-t-plane.
    """
    pts = [(math.cos(2 * math.pi * i / k), math.sin(2 * math.pi * i / k)) for i in range(k)]
    pts.append((0.0, 0.0))
    edges = [(i, (i + 1) % k) for i in range(k)] + [(i, k) for i in range(k)]
    return from_drawing(pts, edges, k // 2, 0)


def random_plane(
    rng: random.Random,
    rows: int,
    cols: int,
    *,
    diag_prob: float = 0.3,
    delete_prob: float = 0.2,
    interior_source: bool = False,
    max_edges: int | None = None,
) -> PlaneGraph:
    """Grid with random diagonals and deletions, connected, s-t-plane unless asked."""
    diagonals = [(r, c) for r in range(rows - 1) for c in range(cols - 1) if rng.random() < diag_prob]
    base = grid_edges(rows, cols, diagonals)
    boundary = [v for v in range(rows * cols) if v // cols in (0, rows - 1) or v % cols in (0, cols - 1)]
    interior = [v for v in range(rows * cols) if v not in boundary]
    for _ in range(200):
        edges = [e for e in base if rng.random() >= delete_prob]
        if max_edges is not None and len(edges) > max_edges:
            edges = rng.sample(edges, max_edges)
            edges.sort(key=base.index)
        if interior_source and interior:
            s = rng.choice(interior)
        else:
            s = rng.choice(boundary)
        t = rng.choice([v for v in boundary if v != s])
        try:
            return from_drawing(_grid_points(rows, cols), edges, s, t)
        except InvalidEmbedding:
            continue
    raise RuntimeError("could not draw a connected random graph")


def random_instance(
    rng: random.Random,
    *,
    max_edges: int = 30,
    max_cap: int = 9,
    undirected: bool | None = None,
) -> tuple[PlaneGraph, tuple[int, ...], bool]:
    """Random s-t-plane graph with integer edge capacities in ``1..max_cap``."""
    # a spanning tree of the grid must fit in max_edges
    shapes = [(r, c) for r in (2, 3, 4) for c in (3, 4, 5) if r * c - 1 <= max_edges]
    if not shapes:
        raise ValueError(f"max_edges={max_edges} is too small for a 2x3 grid")
    rows, cols = rng.choice(shapes)
    g = random_plane(rng, rows, cols, delete_prob=0.2, max_edges=max_edges)
    if undirected is None:
        undirected = rng.random() < 0.4
    return g, tuple(rng.randint(1, max_cap) for _ in range(g.edge_count)), undirected


# -- catalog ------------------------------------------------------------------


def _load(name: str, tags: set[str]) -> Fixture:
    data = resources.files("pathlattice.data")
    spec = parse_graph_text((data / f"{name}.graph").read_text(encoding="utf-8"))
    names, paths = parse_family_text((data / f"{name}.paths").read_text(encoding="utf-8"))
    return Fixture(
        name,
        build_graph(spec),
        spec.caps,
        spec.undirected,
        tuple(names),
        tuple(paths),
        frozenset(tags),
    )


def drawn_fixtures() -> dict[str, Fixture]:
    return {
        "fig1": _load("fig1", {"st-plane", "drawn"}),
        "fig2": _load("fig2", {"drawn"}),
        "k33st": _load("k33st", {"drawn", "kuratowski"}),
        "k5st": _load("k5st", {"drawn", "kuratowski"}),
    }


def _wrap(name: str, g: PlaneGraph, tags: set[str]) -> Fixture:
    return Fixture(name, g, (1,) * g.edge_count, False, tags=frozenset(tags))


def generated_st_plane() -> dict[str, Fixture]:
    """At least thirty s-t-plane graphs, each with at most 200 simple s-t paths."""
    out: dict[str, PlaneGraph] = {}
    out["single_edge"] = from_drawing([(0, 0), (1, 0)], [(0, 1)], 0, 1)
    out["two_parallel_paths"] = from_drawing([(0, 0), (1, 1), (1, -1), (2, 0)], [(0, 1), (0, 2), (1, 3), (2, 3)], 0, 3)
    for r, c in [(2, 2), (2, 3), (2, 4), (2, 5), (3, 3), (3, 4), (4, 4)]:
        out[f"grid{r}x{c}"] = grid(r, c)
    out["grid3x3_mid"] = grid(3, 3, source=3, sink=5)
    out["grid3x4_side"] = grid(3, 4, source=4, sink=3)
    out["grid3x3_diag"] = grid(3, 3, [(0, 0), (1, 1)])
    out["grid3x3_alldiag"] = grid(3, 3, [(0, 0), (0, 1), (1, 0), (1, 1)])
    out["grid2x4_diag"] = grid(2, 4, [(0, 0), (0, 2)])
    for k in range(3, 7):
        out[f"fan{k}"] = fan(k)
    for k in range(2, 7):
        out[f"ladder{k}"] = ladder(k)
    out["ladder5_sparse"] = ladder(5, [0, 2, 4])
    for k in (3, 4, 5, 6):
        out[f"wheel{k}"] = wheel(k)
    from .verify import count_simple_paths

    rng = random.Random(20240611)
    i = 0
    while i < 10:
        g = random_plane(rng, rng.choice([3, 4]), rng.choice([3, 4]), delete_prob=0.25)
        if count_simple_paths(g, limit=201) <= 200:
            out[f"random{i}"] = g
            i += 1
    return {name: _wrap(name, g, {"st-plane", "generated"}) for name, g in out.items()}


def generated_general() -> dict[str, Fixture]:
    """Plane graphs whose source sits inside, so the embedding is not s-t-plane."""
    out = {
        "grid3x3_center": grid(3, 3, source=4, sink=8),
        "grid3x4_inner": grid(3, 4, source=5, sink=11),
        "grid3x3_center_diag": grid(3, 3, [(0, 0), (1, 1)], source=4, sink=0),
        "wheel5_hub": _hub_source_wheel(5),
        "wheel6_hub": _hub_source_wheel(6),
    }
    from .lattice import is_st_plane

    rng = random.Random(77)
    i = 0
    while i < 6:
        g = random_plane(rng, 4, 4, delete_prob=0.3, interior_source=True)
        if not is_st_plane(g):
            out[f"random_inner{i}"] = g
            i += 1
    return {name: _wrap(name, g, {"general", "generated"}) for name, g in out.items()}


def _hub_source_wheel(k: int) -> PlaneGraph:
    pts = [(math.cos(2 * math.pi * i / k), math.sin(2 * math.pi * i / k)) for i in range(k)]
    pts.append((0.0, 0.0))
    edges = [(i, (i + 1) % k) for i in range(k)] + [(k, i) for i in range(k)]
    return from_drawing(pts, edges, k, 0)


def fixtures() -> dict[str, Fixture]:
    """Every named fixture: drawn examples, s-t-plane and general generated graphs."""
    out = drawn_fixtures()
    out.update(generated_st_plane())
    out.update(generated_general())
    return out


__all__ = [
    "Fixture",
    "fan",
    "fixtures",
    "from_drawing",
    "generated_general",
    "generated_st_plane",
    "grid",
    "grid_edges",
    "ladder",
    "drawn_fixtures",
    "random_instance",
    "random_plane",
    "wheel",
]
