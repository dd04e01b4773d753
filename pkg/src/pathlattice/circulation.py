"""Edge vectors, circulations and face potentials.

An edge vector is a tuple of integers indexed by edge; its value on a dart is
``v[e]`` for the forward and ``-v[e]`` for the backward dart of ``e``.  The
face potential ``φ`` of a circulation ``c`` is the unique integer vector on
faces with ``φ(f∞) = 0`` and ``c(d) = φ(right(d)) - φ(left(d))``; positive
potential means the circulation winds clockwise around that face.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Sequence

from .embed import Dart, Face, PlaneGraph
from .errors import (
    DisconnectedGraph,
    DisconnectedSubgraph,
    InfiniteFaceBoundaryRequested,
    NotACirculation,
    RepeatedEdge,
)

EdgeVector = tuple[int, ...]
FacePotential = tuple[int, ...]


def value(v: Sequence[int], d: Dart) -> int:
    return -v[d >> 1] if d & 1 else v[d >> 1]


def path_vector(g: PlaneGraph, darts: Iterable[Dart]) -> EdgeVector:
    out = [0] * g.edge_count
    for d in darts:
        e = d >> 1
        if out[e]:
            raise RepeatedEdge(f"edge {e} used twice")
        out[e] = -1 if d & 1 else 1
    return tuple(out)


def add(*vectors: Sequence[int]) -> EdgeVector:
    return tuple(map(sum, zip(*vectors)))


def sub(a: Sequence[int], b: Sequence[int]) -> EdgeVector:
    return tuple(x - y for x, y in zip(a, b))


def scale(k: int, v: Sequence[int]) -> EdgeVector:
    return tuple(k * x for x in v)


def face_boundary_vector(g: PlaneGraph, f: Face | int) -> EdgeVector:
    """δ of the clockwise boundary of a bounded face.

    Face orbits run with the face on their left, i.e. counterclockwise around
    a bounded face, so the clockwise boundary is the negated orbit.
    """
    fid = f.id if isinstance(f, Face) else f
    if fid == g.outer_face:
        raise InfiniteFaceBoundaryRequested("the infinite face has no basis vector")
    out = [0] * g.edge_count
    for d in g.faces[fid].boundary:
        out[d >> 1] += 1 if d & 1 else -1
    return tuple(out)


def is_circulation(g: PlaneGraph, v: Sequence[int]) -> bool:
    net = [0] * g.vertex_count
    for e, (a, b) in enumerate(g.edges):
        net[a] -= v[e]
        net[b] += v[e]
    return not any(net)


def _spanning_order(g: PlaneGraph, search: str) -> list[tuple[int, int, int, int]]:
    """``(face, parent, edge, sign)`` steps of a dual spanning tree from f∞.

    ``face`` is reached from ``parent`` across ``edge``; the potential grows by
    ``sign * c[edge]`` on the way.
    """
    key = ("tree", search)
    cached = g._cache.get(key)
    if cached is not None:
        return cached
    seen = [False] * g.face_count
    seen[g.outer_face] = True
    order = []
    frontier = deque([g.outer_face])
    while frontier:
        f = frontier.popleft() if search == "bfs" else frontier.pop()
        for d in g.faces[f].boundary:
            r = g.right(d)
            if not seen[r]:
                seen[r] = True
                order.append((r, f, d >> 1, -1 if d & 1 else 1))
                frontier.append(r)
    g._cache[key] = order
    return order


def _sides(g: PlaneGraph) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Right and left face of every forward dart."""
    cached = g._cache.get("sides")
    if cached is None:
        cached = (
            tuple(g.right(2 * e) for e in range(g.edge_count)),
            tuple(g.left(2 * e) for e in range(g.edge_count)),
        )
        g._cache["sides"] = cached
    return cached


def face_potential(g: PlaneGraph, c: Sequence[int], *, search: str = "bfs") -> FacePotential:
    """Φ(c), grown along a dual spanning tree rooted at the infinite face.

    Every non-tree dual edge is checked afterwards; a mismatch means ``c`` is
    not a circulation.
    """
    if search not in ("bfs", "dfs"):
        raise ValueError("search must be 'bfs' or 'dfs'")
    phi = [0] * g.face_count
    for r, f, e, sign in _spanning_order(g, search):
        phi[r] = phi[f] + sign * c[e]
    rights, lefts = _sides(g)
    for e, (x, a, b) in enumerate(zip(c, rights, lefts)):
        if x != phi[a] - phi[b]:
            raise NotACirculation(f"potential is inconsistent across edge {e}")
    return tuple(phi)


def expand(g: PlaneGraph, phi: Sequence[int]) -> EdgeVector:
    """Σ_f φ(f)·δ_f, evaluated edge by edge."""
    rights, lefts = _sides(g)
    return tuple(phi[a] - phi[b] for a, b in zip(rights, lefts))


def induced_darts(c: Sequence[int]) -> frozenset[Dart]:
    return frozenset(2 * e + (0 if x > 0 else 1) for e, x in enumerate(c) if x)


def restrict_to_subgraph(g: PlaneGraph, keep: Iterable[int]) -> PlaneGraph:
    """Embedded subgraph on the edge set ``keep``.

    Vertices without kept edges are dropped and ids renumbered densely in
    original order; ``edge_origin``/``vertex_origin`` map back to ids of
    ``g``.  The new infinite face is the face that swallows the old one.
    """
    keep = sorted(set(keep))
    kept = set(keep)
    verts = sorted({v for e in keep for v in g.edges[e]})
    if g.source not in verts or g.sink not in verts:
        raise DisconnectedSubgraph("kept edges miss the source or the sink")
    vloc = {v: i for i, v in enumerate(verts)}
    eloc = {e: i for i, e in enumerate(keep)}

    def local(d: Dart) -> Dart:
        return 2 * eloc[d >> 1] + (d & 1)

    rotation = tuple(
        tuple(local(d) for d in g.out_darts(v) if (d >> 1) in kept) for v in verts
    )
    edges = tuple((vloc[g.edges[e][0]], vloc[g.edges[e][1]]) for e in keep)

    # faces of g merged into the new infinite face: reachable from f∞ by
    # crossing deleted edges only
    merged = {g.outer_face}
    stack = [g.outer_face]
    while stack:
        f = stack.pop()
        for d in g.faces[f].boundary:
            if (d >> 1) not in kept and g.right(d) not in merged:
                merged.add(g.right(d))
                stack.append(g.right(d))
    candidates = [d for e in keep for d in (2 * e, 2 * e + 1) if g.left(d) in merged]
    if not candidates:
        raise DisconnectedSubgraph("no kept edge borders the infinite face")
    outer = local(g.outer) if (g.outer >> 1) in kept else local(min(candidates))

    try:
        return PlaneGraph(
            len(verts),
            edges,
            rotation,
            vloc[g.source],
            vloc[g.sink],
            outer,
            edge_origin=tuple(keep),
            vertex_origin=tuple(verts),
        )
    except DisconnectedGraph as exc:
        raise DisconnectedSubgraph(str(exc)) from None
