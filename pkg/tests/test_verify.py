from __future__ import annotations

import networkx as nx
import pytest

from conftest import table_for
from pathlattice.embed import parse_path
from pathlattice.errors import FamilyTooLarge, NoUniqueExtremum, TooManyPaths
from pathlattice.verify import (
    OrderTable,
    PathFamily,
    add_a_path_violations,
    bridge_lemma_violations,
    brute_meet,
    check_axioms,
    check_supermodular,
    count_simple_paths,
    cut_lemma_violations,
    enumerate_simple_paths,
    forced_pairs,
    is_st_plane_embedding,
    meet_invariant_violations,
    order_existence,
    orientation_lemma_violations,
    orientation_survives,
    replay_certificate,
)


def nx_path_count(g) -> int:
    h = nx.MultiGraph()
    h.add_nodes_from(range(g.vertex_count))
    h.add_edges_from(g.edges)
    # parallel edges give distinct dart paths; all_simple_edge_paths counts them
    return sum(1 for _ in nx.all_simple_edge_paths(h, g.source, g.sink))


@pytest.mark.parametrize("name, count", [("fig1", 4), ("fig2", 8), ("k33st", 8), ("k5st", 15), ("grid4x4", 184)])
def test_frozen_path_counts(catalog, name, count):
    assert count_simple_paths(catalog[name].graph) == count


def test_path_counts_match_networkx(catalog):
    for fx in catalog.values():
        assert count_simple_paths(fx.graph) == nx_path_count(fx.graph), fx.name


def test_enumeration_limit(catalog):
    g = catalog["grid4x4"].graph
    with pytest.raises(TooManyPaths):
        enumerate_simple_paths(g, limit=100)
    assert count_simple_paths(g, limit=10) == 10


def test_st_plane_flags(catalog):
    for fx in catalog.values():
        want = "st-plane" in fx.tags
        if fx.name in ("fig2", "k33st", "k5st"):
            want = False
        assert is_st_plane_embedding(fx.graph) == want, fx.name


def test_order_table_fig1(drawn):
    fx = drawn["fig1"]
    t = OrderTable(PathFamily(fx.graph, fx.family))
    assert t.compare(1, 2) == "Incomparable"
    assert t.compare(0, 3) == "LeftOf"
    assert t.leq[3].all() and t.leq[:, 0].all()
    assert t.meets[1, 2] == 3 and t.joins[1, 2] == 0


def test_no_unique_meet_in_partial_family(drawn):
    fx = drawn["fig1"]
    fam = PathFamily(fx.graph, (fx.path("P2"), fx.path("P3")))
    with pytest.raises(NoUniqueExtremum):
        brute_meet(fx.graph, fam, fx.path("P2"), fx.path("P3"))


def test_axioms_hold_on_st_plane(st_plane_fixtures):
    for name in ("grid3x3", "ladder3", "fan4", "wheel4", "random0", "grid3x3_mid"):
        rep = check_axioms(st_plane_fixtures[name].graph)
        assert rep.ok and rep.violations == ()
        assert check_axioms(st_plane_fixtures[name].graph, ground="edges").ok


@pytest.mark.parametrize("name", ["k33st", "k5st"])
def test_kuratowski_consecutivity_fails(drawn, name):
    rep = check_axioms(drawn[name].graph)
    assert rep.partial_order and rep.lattice and rep.submodular
    assert not rep.consecutive
    assert rep.counts()["consecutivity"] >= 1
    assert len(rep.violations[0].paths) == 3
    assert rep.violations[0].kind == "consecutivity"


def test_bad_ground(drawn):
    with pytest.raises(ValueError):
        check_axioms(drawn["fig1"].graph, ground="faces")


def test_supermodular_checks(drawn):
    fx = drawn["fig1"]
    fam = enumerate_simple_paths(fx.graph)
    t = OrderTable(fam)
    down = dict(zip(t.paths, t.leq.sum(axis=0).tolist()))
    assert check_supermodular(fam, down)
    assert check_supermodular(t, lambda p: 1)
    # decreasing along the order is supermodular but not monotone
    assert not check_supermodular(t, {p: -v for p, v in down.items()})


def test_forced_pairs_fig1(drawn):
    fx = drawn["fig1"]
    fam = PathFamily(fx.graph, fx.family, fx.family_names)
    # P2/P3 share a union holding all four paths, so they are not forced
    assert (1, 2) not in forced_pairs(fam)
    assert (0, 1) in forced_pairs(fam)


def test_order_existence_fig1_satisfiable(drawn):
    fx = drawn["fig1"]
    fam = PathFamily(fx.graph, fx.family, fx.family_names)
    verdict = order_existence(fam)
    assert not verdict.refuted
    assert orientation_survives(fam, verdict.witness) is None
    assert verdict.lines()[0] == "satisfiable"


@pytest.mark.parametrize("name", ["k33st", "k5st"])
def test_order_existence_refutes(drawn, name):
    fx = drawn[name]
    fam = PathFamily(fx.graph, fx.family, fx.family_names)
    verdict = order_existence(fam)
    assert verdict.refuted
    assert verdict.steps[0].kind == "assume"
    assert verdict.steps[-1].kind == "contradiction"
    assert replay_certificate(fam, verdict) == []
    # fixing the opposite free choice refutes just as well
    a, b = verdict.steps[0].pair
    assert order_existence(fam, assume=(b, a)).refuted


def test_k5_needs_edge_ground(drawn):
    fx = drawn["k5st"]
    fam = PathFamily(fx.graph, fx.family, fx.family_names)
    assert not order_existence(fam, ground="darts").refuted


def test_tampered_certificate_is_caught(drawn):
    fx = drawn["k33st"]
    fam = PathFamily(fx.graph, fx.family, fx.family_names)
    verdict = order_existence(fam)
    from dataclasses import replace

    assert replay_certificate(fam, replace(verdict, steps=verdict.steps[:-1]))
    assert replay_certificate(fam, replace(verdict, forced=verdict.forced[1:]))


def test_family_too_large(catalog):
    fam = enumerate_simple_paths(catalog["grid3x4"].graph)
    with pytest.raises(FamilyTooLarge):
        order_existence(fam)


def test_meet_invariants_sample(catalog):
    for name in ("grid3x4", "wheel6", "random8"):
        g = catalog[name].graph
        paths = table_for(catalog[name]).paths
        for p in paths:
            for q in paths[:8]:
                assert meet_invariant_violations(g, p, q) == []
                m = g.mirrored()
                assert meet_invariant_violations(m, p, q) == []


def test_invariant_checker_detects_tampering(drawn):
    from dataclasses import replace

    from pathlattice.lattice import join, meet

    fx = drawn["fig1"]
    g = fx.graph
    p2, p3 = fx.path("P2"), fx.path("P3")
    # handing the join to the meet checker violates the solid-dart signs
    bad = replace(meet(g, p2, p3), path=join(g, p2, p3).path, vector=join(g, p2, p3).vector)
    assert meet_invariant_violations(g, p2, p3, bad)


def test_structural_lemmas(st_plane_fixtures):
    for name in ("grid3x3", "ladder4", "wheel5", "fan4", "random1"):
        fx = st_plane_fixtures[name]
        g = fx.graph
        fam = enumerate_simple_paths(g)
        assert orientation_lemma_violations(g, fam) == []
        assert bridge_lemma_violations(g, fam) == []
        assert cut_lemma_violations(g) == []
    fx = st_plane_fixtures["grid3x3"]
    fam = enumerate_simple_paths(fx.graph)
    assert add_a_path_violations(fx.graph, fam) == []


def test_add_a_path_needs_the_order(st_plane_fixtures):
    """Adding paths from above instead of below does change the uppermost path."""
    fx = st_plane_fixtures["grid3x3"]
    fam = enumerate_simple_paths(fx.graph)
    t = OrderTable(fam)
    t.leq = t.leq.T.copy()
    assert add_a_path_violations(fx.graph, fam, t)


def test_lemma_checkers_can_fire(drawn, general_fixtures):
    """The checkers report forged families and graphs outside their hypotheses."""
    g = drawn["fig1"].graph
    forged = PathFamily(g, (parse_path("+0 +2"), parse_path("-0")))
    assert orientation_lemma_violations(g, forged)
    assert cut_lemma_violations(general_fixtures["grid3x3_center"].graph)
    from pathlattice.fixtures import from_drawing

    # edge 2 is a pendant bridge that a forged entry uses
    h = from_drawing([(0, 0), (1, 0), (2, 0), (1, 1)], [(0, 1), (1, 2), (1, 3)], 0, 2)
    assert bridge_lemma_violations(h, enumerate_simple_paths(h)) == []
    assert bridge_lemma_violations(h, PathFamily(h, (parse_path("+0 +1"), parse_path("+2"))))
