from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pathlattice.embed import (
    GraphSpec,
    PlaneGraph,
    build_graph,
    cut_of,
    cycle_cut_duality_check,
    dart,
    dart_token,
    dual,
    faces,
    is_simple_cut,
    parse_dart,
    parse_path,
    rev,
    simple_cycle_order,
)
from pathlattice.errors import (
    DisconnectedGraph,
    EulerViolation,
    GraphFormatError,
    MissingRotationEntry,
    NotASimpleCycle,
    OuterFaceNotIncidentToSink,
)
from pathlattice.fixtures import from_drawing, grid
from pathlattice.formats import format_graph, parse_graph_text


def single_edge() -> PlaneGraph:
    return PlaneGraph(2, ((0, 1),), ((0,), (1,)), 0, 1, 0)


def test_dart_encoding():
    assert dart(3) == 6 and dart(3, forward=False) == 7
    assert rev(6) == 7 and rev(7) == 6
    assert dart_token(7) == "-3"
    assert parse_dart("+3") == 6
    assert parse_path("+1 -4 +2") == (2, 9, 4)


@pytest.mark.parametrize("token", ["3", "+", "+x", "*1", ""])
def test_bad_dart_tokens(token):
    with pytest.raises(GraphFormatError):
        parse_dart(token)


def test_fig1_faces(drawn):
    g = drawn["fig1"].graph
    # |V| - |E| + |F| = 4 - 5 + 3
    assert g.face_count == 3
    assert faces(g)[0].boundary == parse_path("+0 +2 -3 -1")
    assert sorted(len(f) for f in g.faces) == [3, 3, 4]


@pytest.mark.parametrize("name, count", [("fig1", 3), ("fig2", 4), ("k33st", 4), ("k5st", 6)])
def test_paper_fixture_face_counts(drawn, name, count):
    g = drawn[name].graph
    assert g.face_count == count
    assert g.vertex_count - g.edge_count + g.face_count == 2


def test_single_edge_has_one_face():
    g = single_edge()
    assert g.face_count == 1
    assert g.faces[0].boundary == (0, 1)


def test_every_dart_in_exactly_one_face(catalog):
    for f in catalog.values():
        g = f.graph
        seen = sorted(d for face in g.faces for d in face.boundary)
        assert seen == list(range(g.dart_count))
        for face in g.faces:
            for d in face.boundary:
                assert g.left(d) == face.id
                assert g.head(d) == g.tail(g.succ(d))


def test_missing_rotation_entry():
    spec = GraphSpec(2, ((0, 1),), {0: (0,)}, 0, 1, 0)
    with pytest.raises(MissingRotationEntry):
        build_graph(spec)
    with pytest.raises(MissingRotationEntry):
        PlaneGraph(2, ((0, 1),), ((0,), ()), 0, 1, 0)
    with pytest.raises(MissingRotationEntry):
        PlaneGraph(2, ((0, 1),), ((1,), (0,)), 0, 1, 0)


def test_disconnected():
    with pytest.raises(DisconnectedGraph):
        PlaneGraph(4, ((0, 1), (2, 3)), ((0,), (1,), (2,), (3,)), 0, 1, 0)


def test_euler_violation():
    # K4 drawn with one vertex's rotation reversed is not a plane embedding
    pts = [(0, 0), (2, 0), (1, 2), (1, 0.7)]
    edges = [(0, 1), (1, 2), (2, 0), (0, 3), (1, 3), (2, 3)]
    g = from_drawing(pts, edges, 0, 2)
    assert g.face_count == 4
    rot = list(g.rotation)
    rot[3] = tuple(reversed(rot[3]))
    with pytest.raises(EulerViolation):
        PlaneGraph(4, g.edges, tuple(rot), 0, 2, g.outer)


def test_sink_must_touch_infinite_face():
    with pytest.raises(OuterFaceNotIncidentToSink):
        grid(3, 3, source=0, sink=4)


def test_dual_fig1(drawn):
    g = drawn["fig1"].graph
    d = dual(g)
    assert d.vertex_count == 3
    for e, (a, b) in enumerate(d.edges):
        assert (a, b) == (g.right(2 * e), g.left(2 * e))
    assert sum(d.degree(f) for f in range(d.vertex_count)) == 2 * g.edge_count


def test_cut_of_source(drawn):
    g = drawn["fig1"].graph
    cert = cut_of(g, {0})
    assert cert.darts == frozenset(parse_path("+0 +1"))
    assert cert.simple
    assert cert.capacity([1] * g.dart_count) == 2


def test_is_simple_cut_rejects_non_cuts(drawn):
    g = drawn["fig1"].graph
    assert is_simple_cut(g, parse_path("+0")) is None
    assert is_simple_cut(g, ()) is None
    # both darts of an edge can never leave the same side
    assert is_simple_cut(g, (0, 1)) is None


def test_non_simple_cut_flag():
    # star at vertex 1: cutting both edges leaves three components
    g = from_drawing([(0, 0), (1, 0), (2, 0)], [(0, 1), (1, 2)], 0, 2)
    cert = cut_of(g, {1})
    assert cert is not None and not cert.simple
    assert cut_of(g, {0}).simple


def test_cycle_cut_duality_on_faces(catalog):
    """Boundaries of bounded faces that are simple cycles dualize to simple cuts."""
    checked = 0
    for f in catalog.values():
        g = f.graph
        for face in g.faces[1:]:
            try:
                simple_cycle_order(g, face.boundary)
            except NotASimpleCycle:
                continue
            assert cycle_cut_duality_check(g, face.boundary)
            checked += 1
    assert checked > 100


def test_simple_cycle_order_errors(drawn):
    g = drawn["fig1"].graph
    with pytest.raises(NotASimpleCycle):
        simple_cycle_order(g, ())
    with pytest.raises(NotASimpleCycle):
        simple_cycle_order(g, parse_path("+0 +2"))
    assert sorted(simple_cycle_order(g, parse_path("+0 -1 +4"))) == sorted(parse_path("+0 -1 +4"))


def test_mirror_swaps_sides(catalog):
    for f in catalog.values():
        g = f.graph
        m = g.mirrored()
        for d in range(g.dart_count):
            assert set(g.faces[g.left(d)].boundary) == {x ^ 1 for x in m.faces[m.right(d)].boundary}


def test_format_round_trip(catalog):
    for f in catalog.values():
        text = format_graph(f.graph, f.edge_caps, f.undirected)
        g = build_graph(parse_graph_text(text))
        assert g.rotation == f.graph.rotation and g.outer == f.graph.outer
        assert format_graph(g, f.edge_caps, f.undirected) == text


@pytest.mark.parametrize(
    "text",
    [
        "vertices 2\nedge 0 0 1\nrot 0 +0\nrot 1 -0\nsource 0\nsink 1\n",  # no outer
        "vertices 2\nedge 1 0 1\nrot 0 +1\nrot 1 -1\nsource 0\nsink 1\nouter +1\n",  # ids not dense
        "vertices 2\nedge 0 0 1 cap -1\nrot 0 +0\nrot 1 -0\nsource 0\nsink 1\nouter +0\n",
        "vertices 2\nfrobnicate\n",
        "vertices x\n",
    ],
)
def test_parse_errors(text):
    with pytest.raises(GraphFormatError):
        parse_graph_text(text)


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 4), st.integers(2, 4), st.data())
def test_grid_euler_and_orbits(rows, cols, data):
    diags = data.draw(st.lists(st.tuples(st.integers(0, rows - 2), st.integers(0, cols - 2)), unique=True))
    g = grid(rows, cols, diags)
    assert g.vertex_count - g.edge_count + g.face_count == 2
    # a grid cell is a bounded face of length 4, or two triangles when split
    assert g.face_count == 1 + (rows - 1) * (cols - 1) + len(diags)


def triangle() -> PlaneGraph:
    # a = (0, 1), b = (1, 2), c = (2, 0), drawn counterclockwise
    return from_drawing([(0, 0), (1, 0), (0.5, 1)], [(0, 1), (1, 2), (2, 0)], 0, 2)


def test_triangle_orbits():
    g = triangle()
    assert g.face_count == 2
    inner = g.left(parse_dart("+0"))
    assert inner != g.outer_face
    assert set(g.faces[inner].boundary) == set(parse_path("+0 +1 +2"))
    assert g.faces[g.left(parse_dart("-0"))].boundary == parse_path("-2 -1 -0")


def test_bridge_has_one_face_on_both_sides():
    g = from_drawing([(0, 0), (1, 0), (2, 0), (1, 1)], [(0, 1), (1, 2), (1, 3)], 0, 2)
    assert g.face_count == 1
    assert all(g.left(d) == g.right(d) for d in range(g.dart_count))
