from __future__ import annotations

import random

import networkx as nx
import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st
from scipy.optimize import linprog

from pathlattice.embed import parse_path
from pathlattice.errors import InstanceTooLarge, NegativeCapacity, NegativeWeight, NotStPlanarEmbedding, ResidualPathExists
from pathlattice.flow import (
    CapacityMap,
    FlowState,
    PathPacking,
    maxflow_dual_sp,
    maxflow_generic,
    maxflow_uppermost,
    mincut_extract,
    packing_oracle,
    uppermost_residual_path,
    weight_function,
    weighted_packing,
    weights_spot_check,
)
from pathlattice.fixtures import from_drawing, random_instance
from pathlattice.lattice import leq, uppermost_path
from pathlattice.verify import OrderTable, check_supermodular, enumerate_simple_paths


def nx_maxflow(g, cap: CapacityMap) -> int:
    h = nx.DiGraph()
    h.add_nodes_from(range(g.vertex_count))
    for d in range(g.dart_count):
        if cap[d]:
            a, b = g.tail(d), g.head(d)
            old = h.get_edge_data(a, b, {"capacity": 0})["capacity"]
            h.add_edge(a, b, capacity=old + cap[d])
    return nx.maximum_flow_value(h, g.source, g.sink)


def lp_packing(g, cap: CapacityMap, r) -> float:
    """Fractional optimum of the packing LP over all usable simple paths."""
    paths = enumerate_simple_paths(g, usable=lambda d: cap[d] > 0).paths
    if not paths:
        return 0.0
    w = weight_function(r)
    a = np.zeros((g.dart_count, len(paths)))
    for j, p in enumerate(paths):
        a[list(p), j] = 1
    res = linprog(-np.array([w(p) for p in paths], float), A_ub=a, b_ub=np.array(cap.cap, float), bounds=(0, None))
    assert res.status == 0
    return -res.fun


def test_capacity_map():
    cap = CapacityMap.from_edges((3, 4))
    assert cap.cap == (3, 0, 4, 0)
    assert CapacityMap.from_edges((3, 4), undirected=True).cap == (3, 3, 4, 4)
    assert cap.total == 7 and cap[2] == 4 and len(cap) == 4
    with pytest.raises(NegativeCapacity):
        CapacityMap((1, -1))


def test_fig1_maxflow(drawn):
    fx = drawn["fig1"]
    g = fx.graph
    cap = CapacityMap.from_edges(fx.edge_caps, fx.undirected)
    run = maxflow_uppermost(g, cap)
    assert run.flow.value == 2
    assert run.packing.entries[0][0] == fx.path("P1")
    assert run.cut.side == frozenset({0})
    assert run.cut.darts == frozenset(parse_path("+0 +1"))
    assert maxflow_dual_sp(g, cap).value == 2
    assert maxflow_generic(g, cap).value == 2


def test_uppermost_residual_path_matches_uppermost(st_plane_fixtures):
    for fx in st_plane_fixtures.values():
        g = fx.graph
        assert uppermost_residual_path(g, lambda d: True) == uppermost_path(g)


def test_uppermost_residual_path_none(drawn):
    g = drawn["fig1"].graph
    assert uppermost_residual_path(g, lambda d: False) is None


def test_flow_requires_st_plane(general_fixtures):
    g = general_fixtures["grid3x3_center"].graph
    cap = CapacityMap.uniform(g)
    with pytest.raises(NotStPlanarEmbedding):
        maxflow_uppermost(g, cap)
    with pytest.raises(NotStPlanarEmbedding):
        maxflow_dual_sp(g, cap)
    # the generic oracle does not care about the embedding
    assert maxflow_generic(g, cap).value == nx_maxflow(g, cap)


def test_mincut_rejects_non_maximum(drawn):
    g = drawn["fig1"].graph
    cap = CapacityMap.uniform(g)
    with pytest.raises(ResidualPathExists):
        mincut_extract(g, cap, FlowState((0,) * g.dart_count, 0))


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6))
def test_maxflow_agrees_with_networkx(seed):
    g, caps, und = random_instance(random.Random(seed))
    cap = CapacityMap.from_edges(caps, und)
    want = nx_maxflow(g, cap)
    run = maxflow_uppermost(g, cap)
    for f in (run.flow, maxflow_dual_sp(g, cap), maxflow_generic(g, cap)):
        assert f.value == want
        assert f.violations(g, cap) == []
    assert run.cut.capacity(cap.cap) == want
    assert run.iterations <= g.edge_count
    paths = [p for p, _ in run.packing.entries]
    for a, b in zip(paths, paths[1:]):
        assert leq(g, b, a)


def test_packing_r1_is_maxflow(catalog):
    for name in ("fig1", "grid3x3", "ladder4", "wheel5", "random2"):
        fx = catalog[name]
        cap = CapacityMap.from_edges(fx.edge_caps, fx.undirected)
        pk = weighted_packing(fx.graph, cap, {})
        assert pk.is_feasible(cap)
        assert pk.value == maxflow_uppermost(fx.graph, cap).flow.value


def test_packing_objective_and_load():
    pk = PathPacking(((parse_path("+0 +2"), 2), (parse_path("+1"), 1)))
    assert pk.value == 3
    assert pk.objective({parse_path("+1"): 5}) == 7
    assert pk.load(6) == [2, 0, 1, 0, 2, 0]
    assert not pk.is_feasible(CapacityMap((1,) * 6))


def test_negative_weight(drawn):
    g = drawn["fig1"].graph
    cap = CapacityMap.uniform(g)
    with pytest.raises(NegativeWeight):
        weighted_packing(g, cap, {parse_path("+0 +2"): -1})
    with pytest.raises(NegativeWeight):
        weighted_packing(g, cap, lambda p: -1)


def test_oracle_limits(catalog):
    g = catalog["grid4x4"].graph
    with pytest.raises(InstanceTooLarge):
        packing_oracle(g, CapacityMap.uniform(g, 1, undirected=True), {})
    g = catalog["grid4x4"].graph
    with pytest.raises(InstanceTooLarge):
        packing_oracle(g, CapacityMap.uniform(g, 1, undirected=True), {}, max_total_cap=100)


def test_greedy_fails_without_supermodularity(drawn):
    """The oracle is not the greedy in disguise: it wins on a bad weight function."""
    fx = drawn["fig1"]
    g = fx.graph
    cap = CapacityMap.uniform(g, 1, undirected=True)
    r = {fx.path("P2"): 10, fx.path("P3"): 10}
    fam = enumerate_simple_paths(g, usable=lambda d: cap[d] > 0)
    assert not check_supermodular(fam, r)
    assert weights_spot_check(g, fam.paths, r)
    assert weighted_packing(g, cap, r).objective(r) == 2
    assert packing_oracle(g, cap, r) == 20
    assert lp_packing(g, cap, r) == pytest.approx(20)


def count_usable(g, cap) -> int:
    return len(enumerate_simple_paths(g, usable=lambda d: cap[d] > 0))


def _height_weights(g, cap, rng):
    fam = enumerate_simple_paths(g, usable=lambda d: cap[d] > 0)
    t = OrderTable(fam)
    down = t.leq.sum(axis=0)  # number of paths below each path
    base = rng.randint(0, 3)
    marks = rng.sample(range(len(t)), min(3, len(t)))
    coef = [rng.randint(1, 4) for _ in marks]
    w = {}
    for j, p in enumerate(t.paths):
        w[p] = base + int(down[j]) + sum(c * int(t.leq[x, j]) for x, c in zip(marks, coef))
    return fam, w


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10**6))
def test_greedy_matches_oracle_and_lp(seed):
    rng = random.Random(seed)
    g, caps, und = random_instance(rng, max_edges=10, max_cap=3)
    cap = CapacityMap.from_edges(caps, und)
    assume(cap.total <= 24)
    assume(0 < count_usable(g, cap) <= 40)
    fam, w = _height_weights(g, cap, rng)
    assert check_supermodular(fam, w)
    got = weighted_packing(g, cap, w).objective(w)
    assert got == packing_oracle(g, cap, w, paths=fam.paths)
    # integral greedy optimum equals the fractional LP optimum
    assert lp_packing(g, cap, w) == pytest.approx(got)


def test_spot_check_warns(drawn):
    fx = drawn["fig1"]
    g = fx.graph
    cap = CapacityMap.uniform(g)
    # the lowermost path outweighs the uppermost one: not monotone
    with pytest.warns(RuntimeWarning, match="spot check"):
        weighted_packing(g, cap, {fx.path("P4"): 9})
    assert weights_spot_check(g, [fx.path("P4")], {}) is None


def single_edge():
    return from_drawing([(0, 0), (1, 0)], [(0, 1)], 0, 1)


def test_single_edge_flows():
    g = single_edge()
    cap = CapacityMap.from_edges((7,))
    run = maxflow_uppermost(g, cap)
    assert run.flow.value == 7 and len(run.packing.entries) == 1
    assert maxflow_dual_sp(g, cap).value == 7
    assert maxflow_generic(g, cap).value == 7
    assert run.cut.side == frozenset({g.source})


def test_single_path_packing():
    g = from_drawing([(0, 0), (1, 0), (2, 0)], [(0, 1), (1, 2)], 0, 2)
    cap = CapacityMap.from_edges((3, 3))
    p = uppermost_path(g)
    assert weighted_packing(g, cap, {p: 5}).objective({p: 5}) == 15
    assert packing_oracle(g, cap, {p: 5}) == 15
    assert packing_oracle(g, CapacityMap.from_edges((0, 0)), {}) == 0


def test_fig1_decreasing_index_weights(drawn):
    """Unit capacities with r(P_i) = 5 - i, monotone along the lattice."""
    fx = drawn["fig1"]
    g = fx.graph
    cap = CapacityMap.uniform(g, 1, undirected=True)
    r = {fx.path(f"P{i}"): 5 - i for i in range(1, 5)}
    fam = enumerate_simple_paths(g)
    assert check_supermodular(fam, r)
    got = weighted_packing(g, cap, r).objective(r)
    assert got == packing_oracle(g, cap, r) == lp_packing(g, cap, r)
