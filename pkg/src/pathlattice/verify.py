"""Brute-force ground truth for the path lattice.

Everything here works on explicit path lists: enumeration, the order table
with exhaustive meets and joins, the lattice axiom report, the search for a
consecutive submodular order on a small family, and checkers for the
structural facts the meet construction relies on.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterable, Mapping, Sequence

import numpy as np

from .circulation import face_potential, path_vector, restrict_to_subgraph, sub
from .embed import Dart, Path, PlaneGraph, cut_of, dart_token, format_path
from .errors import FamilyTooLarge, NoUniqueExtremum, TooManyPaths
from .fixtures import fixtures
from .lattice import (
    CLOCKWISE,
    MeetJoinResult,
    check_path,
    is_st_plane,
    lowermost_path,
    meet,
    union_subgraph,
    uppermost_path,
)


def is_st_plane_embedding(g: PlaneGraph) -> bool:
    return is_st_plane(g)


# -- enumeration --------------------------------------------------------------


@dataclass(frozen=True)
class PathFamily:
    graph: PlaneGraph
    paths: tuple[Path, ...]
    names: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        if not self.names:
            object.__setattr__(self, "names", tuple(f"P{i + 1}" for i in range(len(self.paths))))

    def __len__(self) -> int:
        return len(self.paths)

    def index(self, path: Sequence[Dart]) -> int:
        return self.paths.index(tuple(path))


def _simple_paths(g: PlaneGraph, usable: Callable[[Dart], bool] | None):
    out = [sorted(d for d in g.out_darts(v) if usable is None or usable(d)) for v in range(g.vertex_count)]
    on_path = [False] * g.vertex_count
    on_path[g.source] = True
    path: list[Dart] = []
    stack = [iter(out[g.source])]
    while stack:
        for d in stack[-1]:
            h = g.head(d)
            if on_path[h]:
                continue
            if h == g.sink:
                yield tuple(path) + (d,)
                continue
            on_path[h] = True
            path.append(d)
            stack.append(iter(out[h]))
            break
        else:
            stack.pop()
            if path:
                on_path[g.head(path.pop())] = False


def enumerate_simple_paths(
    g: PlaneGraph,
    *,
    limit: int = 10_000,
    usable: Callable[[Dart], bool] | None = None,
) -> PathFamily:
    """All simple s-t paths in lexicographic dart order.

    Both darts of every edge may be used unless ``usable`` says otherwise.
    """
    paths = []
    for p in _simple_paths(g, usable):
        paths.append(p)
        if len(paths) > limit:
            raise TooManyPaths(f"more than {limit} simple s-t paths")
    return PathFamily(g, tuple(paths))


def count_simple_paths(g: PlaneGraph, *, limit: int | None = None) -> int:
    """Number of simple s-t paths, stopping early once ``limit`` is reached."""
    n = 0
    for _ in _simple_paths(g, None):
        n += 1
        if limit is not None and n >= limit:
            break
    return n


# -- order table ----------------------------------------------------------------


class OrderTable:
    """Pairwise order, meets and joins of a complete path family.

    Potentials are stored relative to the first path, so that
    ``Φ(δ_i - δ_j) = pot[i] - pot[j]`` by linearity.
    """

    def __init__(self, family: PathFamily):
        g = family.graph
        self.family = family
        self.paths = family.paths
        self.index = {p: i for i, p in enumerate(self.paths)}
        n = len(self.paths)
        if n == 0:
            raise ValueError("family is empty")
        base = path_vector(g, self.paths[0])
        self.potential = np.array(
            [face_potential(g, sub(path_vector(g, p), base)) for p in self.paths], dtype=np.int64
        )
        diff = self.potential[:, None, :] - self.potential[None, :, :]
        # leq[i, j]: P_i ⪯ P_j, i.e. Φ(δ_i - δ_j) ≤ 0
        self.leq = np.all(diff <= 0, axis=2)
        self.darts = np.zeros((n, g.dart_count), dtype=bool)
        for i, p in enumerate(self.paths):
            self.darts[i, list(p)] = True
        self._meet: np.ndarray | None = None
        self._join: np.ndarray | None = None

    def __len__(self) -> int:
        return len(self.paths)

    def _extremum(self, below: bool) -> np.ndarray:
        """Index of the meet (join) of every pair, -1 where none is unique."""
        leq = self.leq if below else self.leq.T
        n = len(self.paths)
        size = leq.sum(axis=0)  # |{L : L ⪯ M}| for each M
        out = np.full((n, n), -1, dtype=np.int64)
        for i in range(n):
            bounds = leq[:, i][:, None] & leq  # bounds[L, j]: L ⪯ P_i and L ⪯ P_j
            score = np.where(bounds, size[:, None], -1)
            cand = score.argmax(axis=0)
            ok = bounds[cand, np.arange(n)] & np.all(~bounds | leq[:, cand], axis=0)
            out[i] = np.where(ok, cand, -1)
        return out

    @property
    def meets(self) -> np.ndarray:
        if self._meet is None:
            self._meet = self._extremum(True)
        return self._meet

    @property
    def joins(self) -> np.ndarray:
        if self._join is None:
            self._join = self._extremum(False)
        return self._join

    def compare(self, i: int, j: int) -> str:
        if i == j:
            return "Equal"
        a, b = self.leq[i, j], self.leq[j, i]
        if b:
            return "LeftOf"
        if a:
            return "RightOf"
        return "Incomparable"


def _pair_index(table: OrderTable, p: Sequence[Dart], q: Sequence[Dart]) -> tuple[int, int]:
    return table.index[tuple(p)], table.index[tuple(q)]


def brute_meet(g: PlaneGraph, family: PathFamily | OrderTable, p: Sequence[Dart], q: Sequence[Dart]) -> Path:
    """⪯-maximum of all common lower bounds, by exhaustive comparison."""
    table = family if isinstance(family, OrderTable) else OrderTable(family)
    i, j = _pair_index(table, p, q)
    m = table.meets[i, j]
    if m < 0:
        raise NoUniqueExtremum(f"{format_path(p)} and {format_path(q)} have no unique meet")
    return table.paths[m]


def brute_join(g: PlaneGraph, family: PathFamily | OrderTable, p: Sequence[Dart], q: Sequence[Dart]) -> Path:
    """⪯-minimum of all common upper bounds, by exhaustive comparison."""
    table = family if isinstance(family, OrderTable) else OrderTable(family)
    i, j = _pair_index(table, p, q)
    m = table.joins[i, j]
    if m < 0:
        raise NoUniqueExtremum(f"{format_path(p)} and {format_path(q)} have no unique join")
    return table.paths[m]


# -- axiom report -----------------------------------------------------------------


@dataclass(frozen=True)
class Violation:
    kind: str
    paths: tuple[int, ...]
    detail: str


@dataclass(frozen=True)
class AxiomReport:
    path_count: int
    partial_order: bool
    lattice: bool
    submodular: bool
    consecutive: bool
    violations: tuple[Violation, ...]
    ground: str = "darts"

    @property
    def ok(self) -> bool:
        return self.partial_order and self.lattice and self.submodular and self.consecutive

    def counts(self) -> dict[str, int]:
        out: dict[str, int] = {}
        for v in self.violations:
            out[v.kind] = out.get(v.kind, 0) + 1
        return out


def _ground_sets(table: OrderTable, ground: str) -> np.ndarray:
    if ground == "darts":
        return table.darts
    if ground == "edges":
        d = table.darts
        return d[:, 0::2] | d[:, 1::2]
    raise ValueError("ground must be 'darts' or 'edges'")


def _element_name(ground: str, k: int) -> str:
    return dart_token(k) if ground == "darts" else f"edge {k}"


def check_axioms(
    g: PlaneGraph,
    family: PathFamily | None = None,
    *,
    ground: str = "darts",
    limit: int = 10_000,
    max_witnesses: int = 10,
) -> AxiomReport:
    """Partial order, lattice, submodularity and consecutivity on all paths."""
    if family is None:
        family = enumerate_simple_paths(g, limit=limit)
    table = OrderTable(family)
    n = len(table)
    leq = table.leq
    sets = _ground_sets(table, ground)
    found: list[Violation] = []

    def record(kind: str, idx: Iterable[int], detail: str) -> None:
        if sum(v.kind == kind for v in found) < max_witnesses:
            found.append(Violation(kind, tuple(int(i) for i in idx), detail))

    partial = True
    if not leq.diagonal().all():
        partial = False
        record("reflexivity", [int(np.argmin(leq.diagonal()))], "path not related to itself")
    both = leq & leq.T & ~np.eye(n, dtype=bool)
    for i, j in zip(*np.nonzero(np.triu(both))):
        partial = False
        record("antisymmetry", (i, j), "distinct paths are each right of the other")
    two_step = (leq.astype(np.int64) @ leq.astype(np.int64)) > 0
    for i, k in zip(*np.nonzero(two_step & ~leq)):
        partial = False
        j = int(np.nonzero(leq[i] & leq[:, k])[0][0])
        record("transitivity", (i, j, k), "P_i ⪯ P_j ⪯ P_k but not P_i ⪯ P_k")

    lattice = True
    meets, joins = table.meets, table.joins
    for kind, arr in (("meet", meets), ("join", joins)):
        for i, j in zip(*np.nonzero(np.triu(arr < 0))):
            lattice = False
            record(kind, (i, j), f"no unique {kind}")

    submodular = True
    if lattice:
        for i in range(n):
            m, jn = meets[i], joins[i]
            inter_ok = np.all(~(sets[m] & sets[jn]) | (sets[i] & sets), axis=1)
            union_ok = np.all(~(sets[m] | sets[jn]) | (sets[i] | sets), axis=1)
            for j in np.nonzero(~(inter_ok & union_ok))[0]:
                submodular = False
                which = "intersection" if not inter_ok[j] else "union"
                record("submodular", (i, j, m[j], jn[j]), f"{which} inclusion fails")

    consecutive = True
    li = leq.astype(np.int64)
    for k in range(sets.shape[1]):
        has = sets[:, k]
        if has.all() or not has.any():
            continue
        ins, outs = np.nonzero(has)[0], np.nonzero(~has)[0]
        chains = li[np.ix_(ins, outs)] @ li[np.ix_(outs, ins)]
        if chains.any():
            consecutive = False
            a, c = np.argwhere(chains > 0)[0]
            s, u = ins[a], ins[c]
            t = outs[np.nonzero(leq[s, outs] & leq[outs, u])[0][0]]
            record(
                "consecutivity",
                (s, t, u),
                f"{_element_name(ground, k)} in P_{s + 1} and P_{u + 1} but not in P_{t + 1}",
            )
    return AxiomReport(n, partial, lattice, submodular, consecutive, tuple(found), ground)


def check_supermodular(family: PathFamily | OrderTable, r: Callable[[Path], int] | Mapping[Path, int]) -> bool:
    """Supermodular along meet/join and monotone along ⪯."""
    table = family if isinstance(family, OrderTable) else OrderTable(family)
    w = r if callable(r) else (lambda p: r.get(p, 1))
    vals = np.array([w(p) for p in table.paths], dtype=np.int64)
    meets, joins = table.meets, table.joins
    if (meets < 0).any() or (joins < 0).any():
        return False
    if np.any(vals[meets] + vals[joins] < vals[:, None] + vals[None, :]):
        return False
    i, j = np.nonzero(table.leq)
    return bool(np.all(vals[i] <= vals[j]))


# -- order existence ------------------------------------------------------------


def forced_pairs(family: PathFamily) -> list[tuple[int, int]]:
    """Pairs whose union subgraph holds no other simple s-t path."""
    g = family.graph
    out = []
    for i, j in combinations(range(len(family)), 2):
        h = union_subgraph(g, family.paths[i], family.paths[j])
        if count_simple_paths(h, limit=3) == 2:
            out.append((i, j))
    return out


@dataclass(frozen=True)
class Step:
    """One line of an order-existence derivation.

    ``kind`` is ``assume`` (free choice), ``case`` (branch), ``forced`` (the
    other orientation of ``pair`` is impossible) or ``contradiction`` (both
    orientations of ``pair`` are impossible).  ``pair = (a, b)`` reads
    ``P_a ≺ P_b``.
    """

    kind: str
    pair: tuple[int, int]
    reason: str
    depth: int = 0

    def describe(self, names: Sequence[str]) -> str:
        a, b = (names[x] for x in self.pair)
        pad = "  " * self.depth
        if self.kind == "contradiction":
            return f"{pad}contradiction on {{{a}, {b}}}: {self.reason}"
        return f"{pad}{self.kind} {a} < {b}: {self.reason}"


@dataclass(frozen=True)
class OrderVerdict:
    outcome: str  # "refuted" or "satisfiable"
    steps: tuple[Step, ...]
    witness: frozenset[tuple[int, int]] = frozenset()
    forced: tuple[tuple[int, int], ...] = ()
    names: tuple[str, ...] = ()
    ground: str = "edges"
    note: str = ""

    @property
    def refuted(self) -> bool:
        return self.outcome == "refuted"

    def lines(self) -> list[str]:
        out = [self.outcome]
        out += [s.describe(self.names) for s in self.steps]
        if self.note:
            out.append(self.note)
        return out


class _Search:
    def __init__(self, sets: Sequence[frozenset[int]], forced: Sequence[tuple[int, int]], names, ground):
        self.sets = sets
        self.forced = list(forced)
        self.names = names
        self.ground = ground
        self.k = len(sets)

    def closure(self, rel: Iterable[tuple[int, int]]) -> list[int]:
        reach = [0] * self.k
        for a, b in rel:
            reach[a] |= 1 << b
        for m in range(self.k):
            for a in range(self.k):
                if reach[a] >> m & 1:
                    reach[a] |= reach[m]
        return reach

    def violation(self, rel: Iterable[tuple[int, int]]) -> str | None:
        reach = self.closure(rel)
        n = self.names
        for a in range(self.k):
            if reach[a] >> a & 1:
                b = next(x for x in range(self.k) if reach[a] >> x & 1 and reach[x] >> a & 1 and x != a)
                return f"{n[a]} < {n[b]} and {n[b]} < {n[a]}"
        for s in range(self.k):
            for t in range(self.k):
                if not reach[s] >> t & 1:
                    continue
                for u in range(self.k):
                    if not reach[t] >> u & 1:
                        continue
                    missing = sorted((self.sets[s] & self.sets[u]) - self.sets[t])
                    if missing:
                        el = _element_name(self.ground, missing[0])
                        return f"chain {n[s]} < {n[t]} < {n[u]} but {el} lies in {n[s]} and {n[u]}, not in {n[t]}"
        return None

    def decided(self, reach: list[int], a: int, b: int) -> bool:
        return bool(reach[a] >> b & 1 or reach[b] >> a & 1)

    def propagate(self, rel: set, steps: list[Step], depth: int) -> bool:
        changed = True
        while changed:
            changed = False
            reach = self.closure(rel)
            for a, b in self.forced:
                if self.decided(reach, a, b):
                    continue
                va = self.violation(rel | {(a, b)})
                vb = self.violation(rel | {(b, a)})
                if va and vb:
                    n = self.names
                    steps.append(
                        Step("contradiction", (a, b), f"{n[a]} < {n[b]} gives {va}; {n[b]} < {n[a]} gives {vb}", depth)
                    )
                    return False
                if va or vb:
                    new, why = ((b, a), va) if va else ((a, b), vb)
                    n = self.names
                    steps.append(Step("forced", new, f"{n[new[1]]} < {n[new[0]]} would give {why}", depth))
                    rel.add(new)
                    changed = True
                    break
        return True

    def search(self, rel: set, steps: list[Step], depth: int) -> set | None:
        if not self.propagate(rel, steps, depth):
            return None
        reach = self.closure(rel)
        open_pairs = [(a, b) for a, b in self.forced if not self.decided(reach, a, b)]
        if not open_pairs:
            return rel
        a, b = open_pairs[0]
        if not rel:
            steps.append(Step("assume", (a, b), "free choice, reversing an order keeps it valid", depth))
            return self.search(rel | {(a, b)}, steps, depth)
        for x, y in ((a, b), (b, a)):
            steps.append(Step("case", (x, y), "branch", depth))
            found = self.search(rel | {(x, y)}, steps, depth + 1)
            if found is not None:
                return found
        return None


def order_existence(
    family: PathFamily,
    *,
    ground: str = "edges",
    max_size: int = 12,
    assume: tuple[int, int] | None = None,
) -> OrderVerdict:
    """Search for an order on ``family`` that a consecutive submodular lattice could induce.

    Pairs whose union holds only the two paths must be comparable in any such
    lattice; the search orients them, closes transitively and rejects
    orientations breaking antisymmetry or consecutivity on the family.
    ``assume = (a, b)`` fixes the free first choice ``P_a < P_b``.
    """
    k = len(family)
    if k > max_size:
        raise FamilyTooLarge(f"family has {k} paths, at most {max_size} allowed")
    for p in family.paths:
        check_path(family.graph, p)
    forced = forced_pairs(family)
    sets = []
    for p in family.paths:
        sets.append(frozenset(p) if ground == "darts" else frozenset(d >> 1 for d in p))
    search = _Search(sets, forced, family.names, ground)
    steps: list[Step] = []
    rel: set = set()
    if assume is not None:
        steps.append(Step("assume", assume, "free choice, reversing an order keeps it valid"))
        rel.add(assume)
    found = search.search(rel, steps, 0)
    if found is None:
        return OrderVerdict("refuted", tuple(steps), forced=tuple(forced), names=family.names, ground=ground)
    reach = search.closure(found)
    witness = frozenset((a, b) for a in range(k) for b in range(k) if reach[a] >> b & 1)
    return OrderVerdict(
        "satisfiable",
        tuple(steps),
        witness,
        tuple(forced),
        family.names,
        ground,
        note="only family-local conditions were checked; no order on all paths is constructed",
    )


def orientation_survives(family: PathFamily, relation: Iterable[tuple[int, int]], *, ground: str = "edges") -> str | None:
    """Violation of a given strict order on the family, or ``None``."""
    sets = [frozenset(p) if ground == "darts" else frozenset(d >> 1 for d in p) for p in family.paths]
    return _Search(sets, [], family.names, ground).violation(set(relation))


def replay_certificate(family: PathFamily, verdict: OrderVerdict) -> list[str]:
    """Recheck every step of a refutation; returns the problems found."""
    sets = [
        frozenset(p) if verdict.ground == "darts" else frozenset(d >> 1 for d in p) for p in family.paths
    ]
    search = _Search(sets, verdict.forced, family.names, verdict.ground)
    problems = []
    if set(verdict.forced) != set(forced_pairs(family)):
        problems.append("forced pairs differ")
    rel_at: dict[int, set] = {0: set()}
    for i, st in enumerate(verdict.steps):
        rel = set(rel_at[st.depth])
        a, b = st.pair
        if st.kind in ("assume", "case"):
            if st.kind == "assume" and rel:
                problems.append(f"step {i}: free choice after other decisions")
            if st.kind == "case":
                rel_at[st.depth + 1] = rel | {st.pair}
                continue
            rel.add(st.pair)
        elif st.kind == "forced":
            if tuple(sorted(st.pair)) not in set(verdict.forced):
                problems.append(f"step {i}: pair is not forced")
            if search.violation(rel | {(b, a)}) is None:
                problems.append(f"step {i}: opposite orientation is not contradictory")
            rel.add(st.pair)
        elif st.kind == "contradiction":
            if search.violation(rel | {(a, b)}) is None or search.violation(rel | {(b, a)}) is None:
                problems.append(f"step {i}: not a contradiction")
        rel_at[st.depth] = rel
    if verdict.refuted and (not verdict.steps or verdict.steps[-1].kind != "contradiction"):
        problems.append("derivation does not end in a contradiction")
    return problems


# -- invariants of the meet construction ------------------------------------------


def _phi_left(g: PlaneGraph, phi: Sequence[int], d: Dart) -> int:
    return phi[g.left(d)]


def meet_invariant_violations(g: PlaneGraph, p: Path, q: Path, res: MeetJoinResult | None = None) -> list[str]:
    """Check solid-dart signs, cycle orientation, no crossing and change of tracks.

    Joins are checked by calling this on ``g.mirrored()``, where the join is
    the meet.
    """
    if res is None:
        res = meet(g, p, q)
    out: list[str] = []
    phi = res.potential
    pset, qset = set(p), set(q)
    solid = {2 * e + (0 if x > 0 else 1) for e, x in enumerate(res.vector) if x}
    p_darts = solid - qset
    q_darts = solid - pset
    for d in sorted(p_darts):
        if _phi_left(g, phi, d) >= 0:
            out.append(f"solid P-dart {dart_token(d)} has left potential {_phi_left(g, phi, d)}")
    for d in sorted(q_darts):
        if _phi_left(g, phi, d) <= 0:
            out.append(f"solid Q-dart {dart_token(d)} has left potential {_phi_left(g, phi, d)}")
    for c, o in zip(res.cycles, res.orientations):
        if o != CLOCKWISE:
            out.append(f"cycle {format_path(c)} is {o}")
    out += _crossings(g, res)
    out += _track_changes(g, pset, qset, p_darts, q_darts, phi)
    return out


def _crossings(g: PlaneGraph, res: MeetJoinResult) -> list[str]:
    out = []
    r = res.path
    for c in res.cycles:
        inside = face_potential(g, path_vector(g, c))
        flags = {inside[g.left(d)] != 0 for d in r}
        if len(flags) > 1:
            out.append(f"path has darts inside and outside {format_path(c)}")
        r_at = _incident(g, r)
        c_at = _incident(g, c)
        for v in set(r_at) & set(c_at):
            rot = g.out_darts(v)
            a, b = (rot.index(d) for d in c_at[v])
            lo, hi = min(a, b), max(a, b)
            between = [lo < rot.index(d) < hi for d in r_at[v]]
            if len(between) == 2 and between[0] != between[1]:
                out.append(f"path crosses {format_path(c)} at vertex {v}")
    return out


def _incident(g: PlaneGraph, walk: Path) -> dict[int, list[Dart]]:
    """Per vertex, the darts of the walk leaving it and the reverses of those entering."""
    at: dict[int, list[Dart]] = {}
    for d in walk:
        at.setdefault(g.tail(d), []).append(d)
        at.setdefault(g.head(d), []).append(d ^ 1)
    return at


def _ccw_range(g: PlaneGraph, start: Dart, stop: Dart) -> list[Dart]:
    out = [start]
    d = start
    while d != stop:
        d = g.ccw(d)
        out.append(d)
        if d == start:
            break
    return out


def _track_changes(g, pset, qset, p_darts, q_darts, phi) -> list[str]:
    out = []
    p_only, q_only = pset - qset, qset - pset
    for dp in p_darts:
        for dq in q_darts:
            if g.head(dp) == g.tail(dq):
                sweep = _ccw_range(g, dq, dp ^ 1)
                if not (any(d in p_only for d in sweep) and any(d ^ 1 in q_only for d in sweep)):
                    out.append(f"no P-dart / reversed Q-dart between {dart_token(dq)} and rev {dart_token(dp)}")
            elif g.head(dq) == g.tail(dp):
                sweep = _ccw_range(g, dp, dq ^ 1)
                if not (any(d in q_only for d in sweep) and any(d ^ 1 in p_only for d in sweep)):
                    out.append(f"no Q-dart / reversed P-dart between {dart_token(dp)} and rev {dart_token(dq)}")
            else:
                continue
            if phi[g.left(dp)] != -1 or phi[g.left(dq)] != 1:
                out.append(
                    f"track change {dart_token(dp)}/{dart_token(dq)} has left potentials "
                    f"{phi[g.left(dp)]}/{phi[g.left(dq)]}"
                )
    return out


# -- structural lemmas ------------------------------------------------------------


def orientation_lemma_violations(g: PlaneGraph, family: PathFamily) -> list[str]:
    """No path uses the reverse of a dart of the uppermost path."""
    up, low = uppermost_path(g), lowermost_path(g)
    out = [f"lowermost path reverses {dart_token(d)}" for d in up if d ^ 1 in set(low)]
    rev_up = {d ^ 1 for d in up}
    for p in family.paths:
        if rev_up & set(p):
            out.append(f"{format_path(p)} reverses an uppermost dart")
    return out


def bridge_lemma_violations(g: PlaneGraph, family: PathFamily) -> list[str]:
    """Darts with the same face on both sides lie on every path or on none."""
    out = []
    for d in range(g.dart_count):
        if g.left(d) == g.right(d):
            hits = sum(d in p for p in family.paths)
            if 0 < hits < len(family):
                out.append(f"{dart_token(d)} lies on {hits} of {len(family)} paths")
    return out


def add_a_path_violations(g: PlaneGraph, family: PathFamily, table: OrderTable | None = None) -> list[str]:
    """For P left of Q and Ē = E(P ∪ X): uppermost of G[Ē ∪ E(Q)] equals that of G[Ē]."""
    table = table or OrderTable(family)
    paths = family.paths
    masks = [sum(1 << (d >> 1) for d in set(p)) for p in paths]
    cache: dict[int, Path] = {}

    def upper(mask: int) -> Path:
        # uppermost path of the subgraph on an edge set, memoized by bitmask
        if mask not in cache:
            h = restrict_to_subgraph(g, [e for e in range(g.edge_count) if mask >> e & 1])
            cache[mask] = h.lift(uppermost_path(h))
        return cache[mask]

    out = []
    for i in range(len(paths)):
        below = np.nonzero(table.leq[:, i])[0]
        for x in range(len(paths)):
            base = masks[i] | masks[x]
            up = upper(base)
            for j in below:
                if masks[j] & ~base and upper(base | masks[j]) != up:
                    out.append(f"adding {format_path(paths[j])} to {family.names[i]} and {family.names[x]} changes the uppermost path")
    return out


def cut_lemma_violations(g: PlaneGraph) -> list[str]:
    """Every simple s-t cut has exactly one dart with f∞ left and one with f∞ right."""
    others = [v for v in range(g.vertex_count) if v not in (g.source, g.sink)]
    out = []
    for mask in range(1 << len(others)):
        side = {g.source} | {v for k, v in enumerate(others) if mask >> k & 1}
        cert = cut_of(g, side)
        if cert is None or not cert.simple:
            continue
        n_left = sum(g.left(d) == g.outer_face for d in cert.darts)
        n_right = sum(g.right(d) == g.outer_face for d in cert.darts)
        if n_left != 1 or n_right != 1:
            out.append(f"cut of {sorted(side)} has {n_left} left / {n_right} right outer darts")
    return out


__all__ = [
    "AxiomReport",
    "OrderTable",
    "OrderVerdict",
    "PathFamily",
    "Step",
    "Violation",
    "add_a_path_violations",
    "bridge_lemma_violations",
    "brute_join",
    "brute_meet",
    "check_axioms",
    "check_supermodular",
    "count_simple_paths",
    "cut_lemma_violations",
    "enumerate_simple_paths",
    "fixtures",
    "forced_pairs",
    "is_st_plane_embedding",
    "meet_invariant_violations",
    "order_existence",
    "orientation_lemma_violations",
    "orientation_survives",
    "replay_certificate",
]
