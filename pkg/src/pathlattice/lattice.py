"""The left/right order on simple s-t paths and its meet and join.

``P`` is *left of* ``Q`` (``P ⪰ Q``) when ``Φ(δ_P - δ_Q) ≥ 0`` and *right of*
``Q`` (``P ⪯ Q``) when it is ``≤ 0``.  Uppermost means ⪯-maximal, lowermost
⪯-minimal.  Paths are tuples of darts; see :mod:`pathlattice.embed`.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

from .circulation import (
    EdgeVector,
    FacePotential,
    add,
    expand,
    face_potential,
    induced_darts,
    path_vector,
    restrict_to_subgraph,
    sub,
)
from .embed import Dart, Path, PlaneGraph, dart_token, format_path
from .errors import LatticeInvariantError, NotAPath, NotAUnitFlow, NotStPlanarEmbedding


class Comparison(str, enum.Enum):
    LEFT_OF = "LeftOf"
    RIGHT_OF = "RightOf"
    EQUAL = "Equal"
    INCOMPARABLE = "Incomparable"

    def flipped(self) -> Comparison:
        if self is Comparison.LEFT_OF:
            return Comparison.RIGHT_OF
        if self is Comparison.RIGHT_OF:
            return Comparison.LEFT_OF
        return self


CLOCKWISE = "clockwise"
COUNTERCLOCKWISE = "counterclockwise"


@dataclass(frozen=True)
class MeetJoinResult:
    """A unit flow split into one s-t path and edge-disjoint simple cycles.

    ``potential`` is the face potential the vector was built from (for
    :func:`decompose` on its own it is ``Φ(vector - δ_path)``, the cycles'
    potential).
    """

    path: Path
    cycles: tuple[Path, ...]
    vector: EdgeVector
    potential: FacePotential
    orientations: tuple[str, ...]

    def __str__(self) -> str:
        return format_path(self.path)


# -- paths -------------------------------------------------------------------


def check_path(g: PlaneGraph, darts: Sequence[Dart]) -> Path:
    """Return ``darts`` as a tuple or raise :class:`NotAPath`.

    A path runs from the source to the sink and visits no vertex twice.
    """
    path = tuple(darts)
    if not path:
        raise NotAPath("empty dart sequence")
    ends = g._ends
    if any(not 0 <= d < len(ends) for d in path):
        raise NotAPath("unknown dart")
    if ends[path[0]] != g.source:
        raise NotAPath(f"path starts at {ends[path[0]]}, not at the source {g.source}")
    heads = [ends[d ^ 1] for d in path]
    if heads[-1] != g.sink:
        raise NotAPath(f"path ends at {heads[-1]}, not at the sink {g.sink}")
    for h, d in zip(heads, path[1:]):
        if h != ends[d]:
            raise NotAPath(f"{dart_token(d)} does not start where the previous dart ends")
    if len(set(heads)) != len(heads) or g.source in heads:
        raise NotAPath("path visits a vertex twice")
    return path


def potential_difference(g: PlaneGraph, p: Sequence[Dart], q: Sequence[Dart]) -> FacePotential:
    """``Φ(δ_P - δ_Q)``."""
    return face_potential(g, sub(path_vector(g, p), path_vector(g, q)))


def compare(g: PlaneGraph, p: Sequence[Dart], q: Sequence[Dart]) -> Comparison:
    return _compare(g, check_path(g, p), check_path(g, q))


def _compare(g: PlaneGraph, p: Path, q: Path) -> Comparison:
    if p == q:
        return Comparison.EQUAL
    phi = potential_difference(g, p, q)
    if min(phi) >= 0:
        return Comparison.LEFT_OF
    if max(phi) <= 0:
        return Comparison.RIGHT_OF
    return Comparison.INCOMPARABLE


def leq(g: PlaneGraph, p: Sequence[Dart], q: Sequence[Dart]) -> bool:
    """``P ⪯ Q``: P is right of (below) or equal to Q."""
    return compare(g, p, q) in (Comparison.RIGHT_OF, Comparison.EQUAL)


# -- uppermost / lowermost ----------------------------------------------------


def is_st_plane(g: PlaneGraph) -> bool:
    """True iff source and sink both lie on the infinite face."""
    boundary = g.faces[g.outer_face].boundary
    tails = {g.tail(d) for d in boundary}
    return g.source in tails and g.sink in tails


def _smooth_walk(g: PlaneGraph, start: Dart) -> Path:
    """Follow the left-face orbit from ``start`` to the sink, excising loops."""
    path: list[Dart] = []
    pos = {g.source: 0}
    d = start
    while True:
        h = g.head(d)
        if h in pos:
            # loop back to an earlier vertex: the first occurrence wins
            del path[pos[h]:]
            for v in [v for v, i in pos.items() if i > pos[h]]:
                del pos[v]
        else:
            path.append(d)
            pos[h] = len(path)
        if h == g.sink:
            return tuple(path)
        d = g.succ(d)


def uppermost_path(g: PlaneGraph) -> Path:
    """The simple s-t path with the infinite face on the left of every dart."""
    cached = g._cache.get("uppermost")
    if cached is not None:
        return cached
    boundary = g.faces[g.outer_face].boundary
    starts = [d for d in boundary if g.tail(d) == g.source]
    if not starts:
        raise NotStPlanarEmbedding(f"source {g.source} is not on the infinite face")
    path = _smooth_walk(g, starts[0])
    if any(g.left(d) != g.outer_face for d in path):
        raise LatticeInvariantError("uppermost walk left the infinite face")
    g._cache["uppermost"] = path
    return path


def _mirror(g: PlaneGraph) -> PlaneGraph:
    m = g._cache.get("mirror")
    if m is None:
        m = g.mirrored()
        g._cache["mirror"] = m
    return m


def lowermost_path(g: PlaneGraph) -> Path:
    """The simple s-t path with the infinite face on the right of every dart.

    Reflecting the embedding swaps left and right, so this is the uppermost
    path of the mirror image.
    """
    return uppermost_path(_mirror(g))


def union_subgraph(g: PlaneGraph, *paths: Sequence[Dart]) -> PlaneGraph:
    """``G[E(P ∪ Q ∪ ...)]``; its ``edge_origin`` maps back to ``g``."""
    return restrict_to_subgraph(g, {d >> 1 for p in paths for d in p})


def _require_st_plane(g: PlaneGraph) -> None:
    if not is_st_plane(g):
        raise NotStPlanarEmbedding("source and sink are not both on the infinite face")


def meet_st_planar(g: PlaneGraph, p: Sequence[Dart], q: Sequence[Dart]) -> Path:
    """Meet as the lowermost path of ``G[E(P ∪ Q)]``."""
    _require_st_plane(g)
    h = union_subgraph(g, check_path(g, p), check_path(g, q))
    return h.lift(lowermost_path(h))


def join_st_planar(g: PlaneGraph, p: Sequence[Dart], q: Sequence[Dart]) -> Path:
    """Join as the uppermost path of ``G[E(P ∪ Q)]``."""
    _require_st_plane(g)
    h = union_subgraph(g, check_path(g, p), check_path(g, q))
    return h.lift(uppermost_path(h))


def equivalence_check(g: PlaneGraph, p: Sequence[Dart], q: Sequence[Dart]) -> bool:
    """True iff "P uppermost in G[E(P∪Q)]", "Q lowermost there" and "P left of Q" agree."""
    p, q = check_path(g, p), check_path(g, q)
    h = union_subgraph(g, p, q)
    upper = h.lift(uppermost_path(h)) == p
    lower = h.lift(lowermost_path(h)) == q
    left = compare(g, p, q) in (Comparison.LEFT_OF, Comparison.EQUAL)
    return upper == lower == left


# -- decomposition ------------------------------------------------------------


def cycle_orientation(g: PlaneGraph, cycle: Sequence[Dart]) -> str:
    phi = face_potential(g, path_vector(g, cycle))
    if min(phi) >= 0 and max(phi) > 0:
        return CLOCKWISE
    if max(phi) <= 0 and min(phi) < 0:
        return COUNTERCLOCKWISE
    raise LatticeInvariantError("cycle potential has mixed signs; cycle is not simple")


def _check_unit_flow(g: PlaneGraph, v: Sequence[int]) -> None:
    if len(v) != g.edge_count:
        raise NotAUnitFlow(f"vector has {len(v)} entries, graph has {g.edge_count} edges")
    if any(x not in (-1, 0, 1) for x in v):
        raise NotAUnitFlow("entries must lie in {-1, 0, 1}")
    net = [0] * g.vertex_count
    for e, (a, b) in enumerate(g.edges):
        net[a] += v[e]
        net[b] -= v[e]
    for x in range(g.vertex_count):
        want = 1 if x == g.source else -1 if x == g.sink else 0
        if net[x] != want:
            raise NotAUnitFlow(f"net outflow {net[x]} at vertex {x}, expected {want}")


def _trace(
    g: PlaneGraph, out: dict[int, list[Dart]], start: Dart, stop: int, cycles: list[Path]
) -> Path:
    """Walk from ``start`` by lowest unused darts until vertex ``stop``.

    Whenever the walk returns to a vertex it already visited, the closed loop
    is cut out and stored in ``cycles``.
    """
    walk: list[Dart] = []
    pos = {g.tail(start): 0}
    d = start
    while True:
        out[g.tail(d)].remove(d)
        h = g.head(d)
        if h in pos:
            i = pos[h]
            cycles.append(tuple(walk[i:]) + (d,))
            for dd in walk[i:]:
                del pos[g.head(dd)]
            del walk[i:]
            pos[h] = i
        else:
            walk.append(d)
            pos[h] = len(walk)
        if h == stop:
            return tuple(walk)
        d = out[h][0]


def _canonical_cycle(cycle: Path) -> Path:
    i = cycle.index(min(cycle))
    return cycle[i:] + cycle[:i]


def decompose(g: PlaneGraph, v: Sequence[int]) -> MeetJoinResult:
    """Split a unit s-t flow in {-1,0,1}^E into a simple path and simple cycles."""
    _check_unit_flow(g, v)
    darts = sorted(induced_darts(v))
    out: dict[int, list[Dart]] = {x: [] for x in range(g.vertex_count)}
    for d in darts:
        out[g.tail(d)].append(d)
    cycles: list[Path] = []
    path = _trace(g, out, out[g.source][0], g.sink, cycles)
    while True:
        rest = [d for ds in out.values() for d in ds]
        if not rest:
            break
        first = min(rest)
        _trace(g, out, first, g.tail(first), cycles)
    cycles = sorted(_canonical_cycle(c) for c in cycles)
    total = add(path_vector(g, path), *(path_vector(g, c) for c in cycles))
    if total != tuple(v):
        raise LatticeInvariantError("decomposition does not add up to the input vector")
    potential = face_potential(g, sub(v, path_vector(g, path)))
    return MeetJoinResult(
        path=path,
        cycles=tuple(cycles),
        vector=tuple(v),
        potential=potential,
        orientations=tuple(cycle_orientation(g, c) for c in cycles),
    )


# -- meet and join ------------------------------------------------------------


def _combine(g: PlaneGraph, p: Path, q: Path, keep_positive: bool) -> MeetJoinResult:
    phi = potential_difference(g, p, q)
    part = [max(x, 0) if keep_positive else min(x, 0) for x in phi]
    vec = sub(path_vector(g, p), expand(g, part))
    if any(x not in (-1, 0, 1) for x in vec):
        raise LatticeInvariantError("combined vector leaves {-1, 0, 1}")
    if not induced_darts(vec) <= set(p) | set(q):
        raise LatticeInvariantError("combined vector uses a dart outside P ∪ Q")
    res = decompose(g, vec)
    return MeetJoinResult(res.path, res.cycles, vec, phi, res.orientations)


def meet(g: PlaneGraph, p: Sequence[Dart], q: Sequence[Dart]) -> MeetJoinResult:
    """Greatest common lower bound of ``P`` and ``Q`` (works on any embedding)."""
    p, q = check_path(g, p), check_path(g, q)
    res = _combine(g, p, q, keep_positive=True)
    below = (Comparison.RIGHT_OF, Comparison.EQUAL)
    if _compare(g, res.path, p) not in below or _compare(g, res.path, q) not in below:
        raise LatticeInvariantError("meet is not below both arguments")
    if any(o != CLOCKWISE for o in res.orientations):
        raise LatticeInvariantError("meet decomposition has a counterclockwise cycle")
    return res


def join(g: PlaneGraph, p: Sequence[Dart], q: Sequence[Dart]) -> MeetJoinResult:
    """Least common upper bound of ``P`` and ``Q`` (works on any embedding).

    The cycles split off here are counterclockwise, the mirror image of the
    meet's clockwise cycles.
    """
    p, q = check_path(g, p), check_path(g, q)
    res = _combine(g, p, q, keep_positive=False)
    above = (Comparison.LEFT_OF, Comparison.EQUAL)
    if _compare(g, res.path, p) not in above or _compare(g, res.path, q) not in above:
        raise LatticeInvariantError("join is not above both arguments")
    if any(o != COUNTERCLOCKWISE for o in res.orientations):
        raise LatticeInvariantError("join decomposition has a clockwise cycle")
    return res


__all__ = [
    "CLOCKWISE",
    "COUNTERCLOCKWISE",
    "Comparison",
    "MeetJoinResult",
    "check_path",
    "compare",
    "cycle_orientation",
    "decompose",
    "equivalence_check",
    "is_st_plane",
    "join",
    "join_st_planar",
    "leq",
    "lowermost_path",
    "meet",
    "meet_st_planar",
    "potential_difference",
    "union_subgraph",
    "uppermost_path",
]
