"""Maximum flow and weighted path packing on s-t-plane graphs.

Capacities live on darts.  Directed instances give backward darts capacity 0;
undirected ones give both darts the edge capacity.  Residual capacity is
``cap(d) - flow(d) + flow(rev d)``.
"""

from __future__ import annotations

import heapq
import warnings
from itertools import combinations, islice
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable, Mapping, NamedTuple, Sequence, Union

from .embed import CutCertificate, Dart, Path, PlaneGraph, cut_of
from .errors import (
    InstanceTooLarge,
    LatticeInvariantError,
    NegativeCapacity,
    NegativeWeight,
    NotStPlanarEmbedding,
    ResidualPathExists,
)
from .lattice import is_st_plane, join, leq, meet

Weights = Union[Callable[[Path], int], Mapping[Path, int]]


@dataclass(frozen=True)
class CapacityMap:
    cap: tuple[int, ...]

    def __post_init__(self) -> None:
        bad = [d for d, c in enumerate(self.cap) if c < 0]
        if bad:
            raise NegativeCapacity(f"dart {bad[0]} has capacity {self.cap[bad[0]]}")

    @classmethod
    def from_edges(cls, edge_caps: Sequence[int], undirected: bool = False) -> CapacityMap:
        out = []
        for c in edge_caps:
            out += [c, c if undirected else 0]
        return cls(tuple(out))

    @classmethod
    def uniform(cls, g: PlaneGraph, c: int = 1, undirected: bool = False) -> CapacityMap:
        return cls.from_edges([c] * g.edge_count, undirected)

    def __getitem__(self, d: Dart) -> int:
        return self.cap[d]

    def __len__(self) -> int:
        return len(self.cap)

    @property
    def total(self) -> int:
        return sum(self.cap)


@dataclass(frozen=True)
class FlowState:
    flow: tuple[int, ...]
    value: int

    def residual(self, cap: CapacityMap, d: Dart) -> int:
        return cap[d] - self.flow[d] + self.flow[d ^ 1]

    def violations(self, g: PlaneGraph, cap: CapacityMap) -> list[str]:
        """Everything wrong with this flow; empty when feasible and consistent."""
        out = []
        for d, x in enumerate(self.flow):
            if not 0 <= x <= cap[d]:
                out.append(f"dart {d}: flow {x} outside [0, {cap[d]}]")
            if x and self.flow[d ^ 1]:
                out.append(f"edge {d >> 1}: flow on both darts")
        net = [0] * g.vertex_count
        for d, x in enumerate(self.flow):
            net[g.tail(d)] += x
            net[g.head(d)] -= x
        for v, x in enumerate(net):
            want = self.value if v == g.source else -self.value if v == g.sink else 0
            if x != want:
                out.append(f"vertex {v}: net outflow {x}, expected {want}")
        return out


@dataclass(frozen=True)
class PathPacking:
    entries: tuple[tuple[Path, int], ...]

    @property
    def value(self) -> int:
        return sum(y for _, y in self.entries)

    def objective(self, r: Weights) -> int:
        w = weight_function(r)
        return sum(w(p) * y for p, y in self.entries)

    def load(self, dart_count: int) -> list[int]:
        used = [0] * dart_count
        for p, y in self.entries:
            for d in p:
                used[d] += y
        return used

    def is_feasible(self, cap: CapacityMap) -> bool:
        return all(y >= 0 for _, y in self.entries) and all(
            u <= c for u, c in zip(self.load(len(cap)), cap.cap)
        )


class UppermostRun(NamedTuple):
    flow: FlowState
    packing: PathPacking
    cut: CutCertificate

    @property
    def iterations(self) -> int:
        return len(self.packing.entries)


def weight_function(r: Weights) -> Callable[[Path], int]:
    """Callables pass through; mappings default to weight 1."""
    if callable(r):
        return r
    return lambda p: r.get(tuple(p), 1)


def _check_caps(g: PlaneGraph, cap: CapacityMap) -> None:
    if len(cap) != g.dart_count:
        raise ValueError(f"capacity map has {len(cap)} darts, graph has {g.dart_count}")


def _require_st_plane(g: PlaneGraph) -> None:
    if not is_st_plane(g):
        raise NotStPlanarEmbedding("source and sink are not both on the infinite face")


# -- uppermost path algorithm -------------------------------------------------


def _source_corner(g: PlaneGraph) -> Dart:
    """First dart leaving the source with the infinite face on its left."""
    for d in g.faces[g.outer_face].boundary:
        if g.tail(d) == g.source:
            return d
    raise NotStPlanarEmbedding(f"source {g.source} is not on the infinite face")


def uppermost_residual_path(g: PlaneGraph, usable: Callable[[Dart], bool]) -> Path | None:
    """Uppermost simple s-t path using only darts with ``usable(d)``.

    Depth-first search that always tries the leftmost turn first: from
    ``d_in`` the candidates at ``head(d_in)`` are ``cw(rev d_in)``,
    ``cw(cw(rev d_in))``, ... .  Vertices are never revisited, so a vertex that
    fails once stays dead.
    """
    _require_st_plane(g)
    first = _source_corner(g)
    visited = {g.source}
    path: list[Dart] = []

    def candidates(start: Dart, stop: Dart | None):
        d = start
        while True:
            if d != stop:
                yield d
            d = g.cw(d)
            if d == start:
                return

    stack = [candidates(first, None)]
    while stack:
        for d in stack[-1]:
            if not usable(d) or g.head(d) in visited:
                continue
            path.append(d)
            h = g.head(d)
            if h == g.sink:
                return tuple(path)
            visited.add(h)
            stack.append(candidates(g.cw(d ^ 1), d ^ 1))
            break
        else:
            stack.pop()
            if path:
                path.pop()
    return None


def _augment(flow: list[int], path: Path, amount: int) -> None:
    for d in path:
        back = min(amount, flow[d ^ 1])
        flow[d ^ 1] -= back
        flow[d] += amount - back


def maxflow_uppermost(g: PlaneGraph, cap: CapacityMap) -> UppermostRun:
    """Augment along the uppermost residual path until none is left."""
    _require_st_plane(g)
    _check_caps(g, cap)
    flow = [0] * g.dart_count

    def residual(d: Dart) -> int:
        return cap[d] - flow[d] + flow[d ^ 1]

    entries: list[tuple[Path, int]] = []
    while True:
        path = uppermost_residual_path(g, lambda d: residual(d) > 0)
        if path is None:
            break
        y = min(residual(d) for d in path)
        _augment(flow, path, y)
        entries.append((path, y))
        if len(entries) > g.edge_count:
            raise LatticeInvariantError("uppermost path algorithm exceeded |E| augmentations")
    state = FlowState(tuple(flow), sum(y for _, y in entries))
    return UppermostRun(state, PathPacking(tuple(entries)), mincut_extract(g, cap, state))


# -- dual shortest path -------------------------------------------------------


def _seam(g: PlaneGraph) -> set[Dart]:
    """Infinite-face darts from the source corner up to the first arrival at the sink."""
    boundary = g.faces[g.outer_face].boundary
    i = boundary.index(_source_corner(g))
    upper = set()
    for k in range(len(boundary)):
        d = boundary[(i + k) % len(boundary)]
        upper.add(d)
        if g.head(d) == g.sink:
            return upper
    raise NotStPlanarEmbedding(f"sink {g.sink} is not on the infinite face")


def maxflow_dual_sp(g: PlaneGraph, cap: CapacityMap) -> FlowState:
    """Max flow from shortest distances in the dual.

    The infinite face is cut in two along an imaginary s-t edge: darts on the
    upper boundary arc keep face 0, the others border a new face ``F``.  Dual
    arc ``left(d) -> right(d)`` has length ``cap(d)``; with ``dist`` measured
    from face 0, ``flow(d) = max(0, dist(right d) - dist(left d))`` and the
    value is ``dist(F)``.
    """
    _require_st_plane(g)
    _check_caps(g, cap)
    upper = _seam(g)
    low = g.face_count

    def left(d: Dart) -> int:
        f = g.left(d)
        return low if f == g.outer_face and d not in upper else f

    adj: list[list[tuple[int, int]]] = [[] for _ in range(low + 1)]
    for d in range(g.dart_count):
        adj[left(d)].append((left(d ^ 1), cap[d]))

    dist = [None] * (low + 1)
    heap = [(0, g.outer_face)]
    while heap:
        k, f = heapq.heappop(heap)
        if dist[f] is not None:
            continue
        dist[f] = k
        for h, w in adj[f]:
            if dist[h] is None:
                heapq.heappush(heap, (k + w, h))

    flow = tuple(max(0, dist[left(d ^ 1)] - dist[left(d)]) for d in range(g.dart_count))
    return FlowState(flow, dist[low])


# -- generic oracle -----------------------------------------------------------


def maxflow_generic(g: PlaneGraph, cap: CapacityMap) -> FlowState:
    """Shortest augmenting paths (breadth-first, ties by dart id)."""
    _check_caps(g, cap)
    flow = [0] * g.dart_count
    out = [sorted(g.out_darts(v)) for v in range(g.vertex_count)]
    value = 0
    while True:
        parent: dict[int, Dart | None] = {g.source: None}
        queue = deque([g.source])
        while queue and g.sink not in parent:
            v = queue.popleft()
            for d in out[v]:
                h = g.head(d)
                if h not in parent and cap[d] - flow[d] + flow[d ^ 1] > 0:
                    parent[h] = d
                    queue.append(h)
        if g.sink not in parent:
            return FlowState(tuple(flow), value)
        path = []
        v = g.sink
        while parent[v] is not None:
            path.append(parent[v])
            v = g.tail(parent[v])
        path.reverse()
        y = min(cap[d] - flow[d] + flow[d ^ 1] for d in path)
        _augment(flow, tuple(path), y)
        value += y


def mincut_extract(g: PlaneGraph, cap: CapacityMap, f: FlowState) -> CutCertificate:
    """Residual-reachable side of a maximum flow, as a cut certificate."""
    seen = {g.source}
    queue = deque([g.source])
    while queue:
        v = queue.popleft()
        for d in g.out_darts(v):
            h = g.head(d)
            if h not in seen and f.residual(cap, d) > 0:
                seen.add(h)
                queue.append(h)
    if g.sink in seen:
        raise ResidualPathExists("the flow still has an augmenting path")
    cert = cut_of(g, seen)
    if cert is None or cert.capacity(cap.cap) != f.value:
        raise LatticeInvariantError("cut capacity differs from the flow value")
    return cert


# -- weighted packing ---------------------------------------------------------


def _checked_weights(r: Weights) -> Callable[[Path], int]:
    w = weight_function(r)
    if not callable(r):
        bad = [p for p, x in r.items() if x < 0]
        if bad:
            raise NegativeWeight(f"negative weight {r[bad[0]]}")

    def checked(p: Path) -> int:
        x = w(p)
        if x < 0:
            raise NegativeWeight(f"negative weight {x}")
        return x

    return checked


def weighted_packing(g: PlaneGraph, cap: CapacityMap, r: Weights) -> PathPacking:
    """Greedy packing: saturate the ⪯-maximum path of the remaining capacities.

    Remaining capacity is ``cap(d)`` minus what earlier paths use; nothing is
    ever canceled.  Optimal for weights that are supermodular and monotone
    nondecreasing along the order; the caller vouches for that and
    :func:`weights_spot_check` only samples it, warning on a failure.
    """
    _require_st_plane(g)
    _check_caps(g, cap)
    w = _checked_weights(r)
    left = list(cap.cap)
    entries: list[tuple[Path, int]] = []
    while True:
        path = uppermost_residual_path(g, lambda d: left[d] > 0)
        if path is None:
            packing = PathPacking(tuple(entries))
            problem = weights_spot_check(g, [p for p, _ in entries], w)
            if problem:
                msg = f"weights fail a supermodularity spot check ({problem}); the greedy may not be optimal"
                warnings.warn(msg, RuntimeWarning, stacklevel=2)
            return packing
        w(path)
        y = min(left[d] for d in path)
        for d in path:
            left[d] -= y
        entries.append((path, y))


def weights_spot_check(g: PlaneGraph, paths: Sequence[Path], r: Weights, max_pairs: int = 30) -> str | None:
    """Sample supermodularity and monotonicity of ``r`` on a few path pairs.

    Meets and joins of the sampled pairs stay inside their union, so only
    paths that ``r`` is asked about are evaluated.  Returns a description of
    the first failure, or ``None``.
    """
    w = weight_function(r)
    pool = list(dict.fromkeys(paths))
    for p, q in islice(combinations(pool, 2), max_pairs):
        lo, hi = meet(g, p, q).path, join(g, p, q).path
        if w(lo) + w(hi) < w(p) + w(q):
            return f"r(meet) + r(join) = {w(lo) + w(hi)} < {w(p) + w(q)}"
        if leq(g, p, q) and w(p) > w(q):
            return f"r decreases along the order: {w(p)} > {w(q)}"
        if leq(g, q, p) and w(q) > w(p):
            return f"r decreases along the order: {w(q)} > {w(p)}"
    return None


def packing_oracle(
    g: PlaneGraph,
    cap: CapacityMap,
    r: Weights,
    *,
    max_total_cap: int = 24,
    max_paths: int = 40,
    paths: Iterable[Path] | None = None,
) -> int:
    """Exact optimum of the packing problem by exhaustive integral search."""
    from .verify import enumerate_simple_paths

    _check_caps(g, cap)
    if cap.total > max_total_cap:
        raise InstanceTooLarge(f"total capacity {cap.total} exceeds {max_total_cap}")
    w = _checked_weights(r)
    if paths is None:
        paths = enumerate_simple_paths(g, limit=max(max_paths, 1) * 50).paths
    cands = [tuple(p) for p in paths if all(cap[d] > 0 for d in p)]
    if len(cands) > max_paths:
        raise InstanceTooLarge(f"{len(cands)} usable paths exceed {max_paths}")
    weights = [w(p) for p in cands]
    cands = [p for p, x in zip(cands, weights) if x > 0]
    weights = [x for x in weights if x > 0]
    # darts still needed by paths i.. (so memo keys stay small)
    needed = [sorted({d for p in cands[i:] for d in p}) for i in range(len(cands) + 1)]

    @lru_cache(maxsize=None)
    def best(i: int, key: tuple[int, ...]) -> int:
        if i == len(cands):
            return 0
        left = dict(zip(needed[i], key))
        p = cands[i]
        top = min(left[d] for d in p)
        result = 0
        for y in range(top + 1):
            after = dict(left)
            for d in p:
                after[d] -= y
            rest = best(i + 1, tuple(after[d] for d in needed[i + 1]))
            result = max(result, weights[i] * y + rest)
        return result

    return best(0, tuple(cap[d] for d in needed[0]))


__all__ = [
    "CapacityMap",
    "FlowState",
    "PathPacking",
    "UppermostRun",
    "maxflow_dual_sp",
    "maxflow_generic",
    "maxflow_uppermost",
    "mincut_extract",
    "packing_oracle",
    "uppermost_residual_path",
    "weight_function",
    "weighted_packing",
    "weights_spot_check",
]
