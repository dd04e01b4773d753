"""Dart-based embedded planar graphs.

Darts are plain integers: edge ``e`` owns the forward dart ``2*e`` and the
backward dart ``2*e + 1``, so ``rev(d) == d ^ 1``.  A :class:`PlaneGraph` is
given by a rotation system listing, for every vertex, the darts leaving it in
counterclockwise order.  Faces are the orbits of the successor map

    succ(d) = cw(rev(d))

(the next dart clockwise from ``rev(d)`` around ``head(d)``), and every orbit is
the *left* face of the darts it contains.  Face 0 is always the infinite face,
the left face of the designated outer dart.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .errors import (
    DisconnectedGraph,
    EulerViolation,
    GraphFormatError,
    MissingRotationEntry,
    NotASimpleCycle,
    OuterFaceNotIncidentToSink,
)

Dart = int
Path = tuple[int, ...]


def rev(d: Dart) -> Dart:
    return d ^ 1


def edge_of(d: Dart) -> int:
    return d >> 1


def is_forward(d: Dart) -> bool:
    return not d & 1


def dart(edge: int, forward: bool = True) -> Dart:
    return 2 * edge + (0 if forward else 1)


def dart_token(d: Dart) -> str:
    return ("+" if is_forward(d) else "-") + str(edge_of(d))


def parse_dart(token: str) -> Dart:
    token = token.strip()
    if len(token) < 2 or token[0] not in "+-" or not token[1:].isdigit():
        raise GraphFormatError(f"bad dart token {token!r}")
    return dart(int(token[1:]), token[0] == "+")


def format_path(darts: Iterable[Dart]) -> str:
    return " ".join(dart_token(d) for d in darts)


def parse_path(text: str) -> Path:
    return tuple(parse_dart(tok) for tok in text.split())


@dataclass(frozen=True)
class Face:
    id: int
    boundary: tuple[Dart, ...]

    def __len__(self) -> int:
        return len(self.boundary)


@dataclass(frozen=True)
class CutCertificate:
    """``darts`` is exactly the set of darts leaving ``side``."""

    side: frozenset[int]
    darts: frozenset[Dart]
    simple: bool

    def capacity(self, cap: Sequence[int]) -> int:
        return sum(cap[d] for d in self.darts)


@dataclass(frozen=True)
class GraphSpec:
    """A parsed but not yet validated graph description."""

    vertex_count: int
    edges: tuple[tuple[int, int], ...]
    rotation: Mapping[int, Sequence[Dart]]
    source: int
    sink: int
    outer: Dart
    caps: tuple[int, ...] | None = None
    undirected: bool = False


@dataclass(frozen=True, eq=False)
class PlaneGraph:
    """Connected graph with a combinatorial planar embedding.

    ``edge_origin``/``vertex_origin`` are set on subgraphs and map local ids
    back to the ids of the graph they were cut from (one level up).
    """

    vertex_count: int
    edges: tuple[tuple[int, int], ...]
    rotation: tuple[tuple[Dart, ...], ...]
    source: int
    sink: int
    outer: Dart
    edge_origin: tuple[int, ...] | None = None
    vertex_origin: tuple[int, ...] | None = None

    _ccw: tuple[Dart, ...] = field(init=False, repr=False)
    _cw: tuple[Dart, ...] = field(init=False, repr=False)
    _left: tuple[int, ...] = field(init=False, repr=False)
    _faces: tuple[Face, ...] = field(init=False, repr=False)
    _out: tuple[tuple[Dart, ...], ...] = field(init=False, repr=False)
    _ends: tuple[int, ...] = field(init=False, repr=False)
    _cache: dict = field(init=False, repr=False)

    def __post_init__(self) -> None:
        n, m = self.vertex_count, len(self.edges)
        if n < 1:
            raise GraphFormatError("graph needs at least one vertex")
        for e, (a, b) in enumerate(self.edges):
            if not (0 <= a < n and 0 <= b < n):
                raise GraphFormatError(f"edge {e} has an endpoint outside 0..{n - 1}")
        for name, v in (("source", self.source), ("sink", self.sink)):
            if not 0 <= v < n:
                raise GraphFormatError(f"{name} {v} is not a vertex")
        if self.source == self.sink:
            raise GraphFormatError("source and sink must differ")
        if not 0 <= self.outer < 2 * m:
            raise GraphFormatError(f"outer dart {self.outer} does not exist")
        if len(self.rotation) != n:
            raise MissingRotationEntry(f"rotation lists {len(self.rotation)} vertices, expected {n}")

        ends = [v for a, b in self.edges for v in (a, b)]
        object.__setattr__(self, "_ends", tuple(ends))  # tail(d) = ends[d], head(d) = ends[d ^ 1]
        ccw = [-1] * (2 * m)
        cw = [-1] * (2 * m)
        seen = [False] * (2 * m)
        for v, darts in enumerate(self.rotation):
            for d in darts:
                if not 0 <= d < 2 * m:
                    raise MissingRotationEntry(f"rotation of {v} names unknown dart {d}")
                if seen[d]:
                    raise MissingRotationEntry(f"dart {dart_token(d)} listed twice")
                if self._tail(d) != v:
                    raise MissingRotationEntry(
                        f"dart {dart_token(d)} does not leave vertex {v}"
                    )
                seen[d] = True
            k = len(darts)
            for i, d in enumerate(darts):
                ccw[d] = darts[(i + 1) % k]
                cw[d] = darts[(i - 1) % k]
        missing = [dart_token(d) for d in range(2 * m) if not seen[d]]
        if missing:
            raise MissingRotationEntry(f"darts missing from the rotation: {' '.join(missing)}")

        set_ = object.__setattr__
        set_(self, "_ccw", tuple(ccw))
        set_(self, "_cw", tuple(cw))
        set_(self, "_out", tuple(tuple(r) for r in self.rotation))
        set_(self, "_cache", {})

        if not _connected(n, self.edges):
            raise DisconnectedGraph("graph is not connected")

        left = [-1] * (2 * m)
        faces: list[Face] = []
        order = [self.outer] + [d for d in range(2 * m) if d != self.outer]
        for start in order:
            if left[start] != -1:
                continue
            fid = len(faces)
            orbit = []
            d = start
            while left[d] == -1:
                left[d] = fid
                orbit.append(d)
                d = cw[d ^ 1]
            if fid:
                i = orbit.index(min(orbit))
                orbit = orbit[i:] + orbit[:i]
            faces.append(Face(fid, tuple(orbit)))
        if m == 0:
            faces.append(Face(0, ()))
        set_(self, "_left", tuple(left))
        set_(self, "_faces", tuple(faces))

        if n - m + len(faces) != 2:
            raise EulerViolation(
                f"|V|-|E|+|F| = {n}-{m}+{len(faces)} != 2; rotation system is not planar"
            )
        if not any(self._head(d) == self.sink for d in faces[0].boundary):
            raise OuterFaceNotIncidentToSink(
                f"sink {self.sink} is not on the face left of {dart_token(self.outer)}"
            )

    def _tail(self, d: Dart) -> int:
        return self._ends[d]

    def _head(self, d: Dart) -> int:
        return self._ends[d ^ 1]

    # -- basic queries ---------------------------------------------------

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def dart_count(self) -> int:
        return 2 * len(self.edges)

    def tail(self, d: Dart) -> int:
        return self._ends[d]

    def head(self, d: Dart) -> int:
        return self._ends[d ^ 1]

    def ccw(self, d: Dart) -> Dart:
        """Next dart counterclockwise around ``tail(d)``."""
        return self._ccw[d]

    def cw(self, d: Dart) -> Dart:
        return self._cw[d]

    def succ(self, d: Dart) -> Dart:
        """Next dart on the boundary of ``left(d)``."""
        return self._cw[d ^ 1]

    def out_darts(self, v: int) -> tuple[Dart, ...]:
        return self._out[v]

    def left(self, d: Dart) -> int:
        return self._left[d]

    def right(self, d: Dart) -> int:
        return self._left[d ^ 1]

    @property
    def faces(self) -> tuple[Face, ...]:
        return self._faces

    @property
    def face_count(self) -> int:
        return len(self._faces)

    @property
    def outer_face(self) -> int:
        return 0

    def mirrored(self) -> PlaneGraph:
        """Reflection of the embedding; swaps left and right of every dart."""
        return PlaneGraph(
            self.vertex_count,
            self.edges,
            tuple(tuple(reversed(r)) for r in self.rotation),
            self.source,
            self.sink,
            self.outer ^ 1,
            self.edge_origin,
            self.vertex_origin,
        )

    def to_spec(self, caps: Sequence[int] | None = None, undirected: bool = False) -> GraphSpec:
        return GraphSpec(
            self.vertex_count,
            self.edges,
            {v: r for v, r in enumerate(self.rotation)},
            self.source,
            self.sink,
            self.outer,
            tuple(caps) if caps is not None else None,
            undirected,
        )

    # -- id mapping for subgraphs ----------------------------------------

    def lift(self, darts: Iterable[Dart]) -> Path:
        """Map darts of this subgraph to darts of its parent graph."""
        if self.edge_origin is None:
            return tuple(darts)
        return tuple(2 * self.edge_origin[d >> 1] + (d & 1) for d in darts)

    def project(self, darts: Iterable[Dart]) -> Path:
        """Map parent darts into this subgraph (all must be kept edges)."""
        if self.edge_origin is None:
            return tuple(darts)
        local = self._cache.get("edge_local")
        if local is None:
            local = {e: i for i, e in enumerate(self.edge_origin)}
            self._cache["edge_local"] = local
        return tuple(2 * local[d >> 1] + (d & 1) for d in darts)


def _connected(n: int, edges: Sequence[tuple[int, int]]) -> bool:
    adj: list[list[int]] = [[] for _ in range(n)]
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    seen = {0}
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == n


def build_graph(spec: GraphSpec) -> PlaneGraph:
    """Validate a parsed description and return the embedded graph."""
    n = spec.vertex_count
    rotation = []
    for v in range(n):
        if v not in spec.rotation:
            raise MissingRotationEntry(f"no rotation given for vertex {v}")
        rotation.append(tuple(spec.rotation[v]))
    extra = set(spec.rotation) - set(range(n))
    if extra:
        raise MissingRotationEntry(f"rotation given for unknown vertices {sorted(extra)}")
    return PlaneGraph(n, tuple(spec.edges), tuple(rotation), spec.source, spec.sink, spec.outer)


def faces(g: PlaneGraph) -> list[Face]:
    return list(g.faces)


@dataclass(frozen=True)
class DualGraph:
    """One vertex per face; dual edge ``e`` runs from right(+e) to left(+e).

    Dual dart ``d`` is the dual of primal dart ``d``, so it goes from
    ``right(d)`` to ``left(d)``.
    """

    vertex_count: int
    edges: tuple[tuple[int, int], ...]

    def degree(self, f: int) -> int:
        return sum((a == f) + (b == f) for a, b in self.edges)


def dual(g: PlaneGraph) -> DualGraph:
    return DualGraph(
        g.face_count,
        tuple((g.right(2 * e), g.left(2 * e)) for e in range(g.edge_count)),
    )


def _ends(edges: Sequence[tuple[int, int]], d: Dart) -> tuple[int, int]:
    a, b = edges[d >> 1]
    return (b, a) if d & 1 else (a, b)


def is_simple_cut(g: PlaneGraph | DualGraph, darts: Iterable[Dart]) -> CutCertificate | None:
    """Certificate ``(S, Γ⁺(S))`` if ``darts`` is a cut of ``g``, else ``None``.

    Works on primal and dual graphs alike (only ``vertex_count`` and ``edges``
    are consulted).
    """
    darts = frozenset(darts)
    if not darts:
        return None
    n, edges = g.vertex_count, g.edges
    cut_edges = {d >> 1 for d in darts}

    comp = _components(n, [ed for e, ed in enumerate(edges) if e not in cut_edges])
    inside: dict[int, bool] = {}
    for d in darts:
        a, b = _ends(edges, d)
        for c, want in ((comp[a], True), (comp[b], False)):
            if inside.setdefault(c, want) != want:
                return None
    side = frozenset(v for v in range(n) if inside.get(comp[v], False))
    if not side or len(side) == n:
        return None
    leaving = frozenset(
        d for d in range(2 * len(edges)) if _ends(edges, d)[0] in side and _ends(edges, d)[1] not in side
    )
    if leaving != darts:
        return None
    ncomp = len(set(comp))
    return CutCertificate(side, darts, ncomp == 2)


def _components(n: int, edges: Iterable[tuple[int, int]]) -> list[int]:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in edges:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    return [find(v) for v in range(n)]


def simple_cycle_order(g: PlaneGraph, darts: Iterable[Dart]) -> Path:
    """Arrange ``darts`` as a simple cycle or raise :class:`NotASimpleCycle`."""
    darts = list(darts)
    if not darts:
        raise NotASimpleCycle("empty dart set")
    if len({d >> 1 for d in darts}) != len(darts):
        raise NotASimpleCycle("darts share an edge")
    by_tail: dict[int, Dart] = {}
    for d in darts:
        if g.tail(d) in by_tail:
            raise NotASimpleCycle(f"vertex {g.tail(d)} is left twice")
        by_tail[g.tail(d)] = d
    start = min(darts)
    seq = [start]
    v = g.head(start)
    while v != g.tail(start):
        if v not in by_tail:
            raise NotASimpleCycle("darts do not close up")
        seq.append(by_tail[v])
        v = g.head(by_tail[v])
    if len(seq) != len(darts):
        raise NotASimpleCycle("darts form more than one cycle")
    return tuple(seq)


def cycle_cut_duality_check(g: PlaneGraph, darts: Iterable[Dart]) -> bool:
    """True iff the duals of a simple cycle's darts form a simple dual cut."""
    cycle = simple_cycle_order(g, darts)
    cert = is_simple_cut(dual(g), cycle)
    return cert is not None and cert.simple


def cut_of(g: PlaneGraph | DualGraph, side: Iterable[int]) -> CutCertificate | None:
    """``Γ⁺(side)`` with its simplicity flag; ``None`` when empty."""
    side = frozenset(side)
    edges = g.edges
    darts = frozenset(
        d for d in range(2 * len(edges)) if _ends(edges, d)[0] in side and _ends(edges, d)[1] not in side
    )
    if not darts:
        return None
    return is_simple_cut(g, darts)
