import pytest

from proofweave.errors import DuplicateId, EndpointMismatch, LoopEdge, MissingColor, NotAlternating, OccurrenceOrder, UnknownVertex
from proofweave.graph import Path, build_graph, concat_report, connected_components, edge_colored, is_connected, path_validate

from conftest import triangle


def test_fig3_shape(fig_graph):
    g = fig_graph("fig03")
    assert sorted(g.vertices) == ["u", "v", "x"]
    assert len(g.edges) == 4
    assert [e for e in g.edges if len(g.ends(e)) < 2] == ["h"]
    assert not g.is_total()
    assert g.cusp_points() == {("u", "solid")}


def test_empty_graph():
    g = build_graph([], [])
    assert not g.vertices and not g.edges
    assert connected_components(g) == []


@pytest.mark.parametrize(
    "verts,edges,err",
    [
        (["u"], [("e", [("u", "a"), ("u", "a")])], LoopEdge),
        (["u", "v"], [("e", [("u", "a"), ("v", None)])], MissingColor),
        (["u"], [("e", [("u", "a"), ("w", "a")])], UnknownVertex),
        (["u", "v"], [("e", [("u", "a")]), ("e", [("v", "a")])], DuplicateId),
    ],
)
def test_build_rejects(verts, edges, err):
    with pytest.raises(err):
        build_graph(verts, edges)


def test_open_path_with_one_cusp(fig_graph):
    g = fig_graph("fig03")
    p, flags = path_validate(g, ["v", "e", "u", "f", "x"])
    assert flags.simple and flags.open and not flags.cycle
    (c,) = p.cusps()
    assert (c.vertex, c.color) == ("u", "solid")
    assert p.reverse().cusp_count() == 1


def test_trivial_path(fig_graph):
    p, flags = path_validate(fig_graph("fig03"), ["v"])
    # source equals target, so the empty path is closed; it is never a cycle
    assert p.is_empty and flags.closed and not flags.open and flags.simple and not flags.cycle
    assert p.cusp_count() == 0


def test_repeated_edge_is_closed_not_simple(fig_graph):
    _, flags = path_validate(fig_graph("fig03"), ["v", "e", "u", "e", "v"])
    assert flags.closed and not flags.simple and not flags.cycle


def test_single_edge_has_no_cusp(fig_graph):
    p, _ = path_validate(fig_graph("fig03"), ["u", "f", "x"])
    assert p.cusp_count() == 0


def test_path_errors(fig_graph):
    g = fig_graph("fig03")
    with pytest.raises(NotAlternating):
        path_validate(g, ["v", "e"])
    with pytest.raises(EndpointMismatch):
        path_validate(g, ["v", "f", "x"])
    p, _ = path_validate(g, ["v", "e", "u", "f", "x"])
    with pytest.raises(OccurrenceOrder):
        p.subpath("x", "v")


def test_wrap_cusp_on_cycle():
    g = triangle("a", "a")
    p, flags = path_validate(g, ["p", "pq", "q", "qr", "r", "rp", "p"])
    assert flags.cycle
    assert p.cusp_count() == 3
    assert p.wrap_cusp() is not None
    q, _ = path_validate(triangle("a", "b"), ["p", "pq", "q", "qr", "r", "rp", "p"])
    assert q.is_cusp_free()


def test_concat_and_reverse(fig_graph):
    g = fig_graph("fig03")
    a = Path.from_sequence(g, ["v", "e", "u"])
    b = Path.from_sequence(g, ["u", "f", "x"])
    r = concat_report(a, b)
    assert r.path.sequence() == ["v", "e", "u", "f", "x"]
    assert r.simple and r.lemma_disjoint
    assert r.path.reverse().reverse() == r.path
    with pytest.raises(EndpointMismatch):
        b.concat(a.reverse())


def test_degenerate_subpath(fig_graph):
    p = Path.from_sequence(fig_graph("fig03"), ["v", "e", "u", "f", "x"])
    assert p.subpath("v", "v").sequence() == ["v"]
    assert p.subpath("u", "x").sequence() == ["u", "f", "x"]


def test_components(fig_graph):
    g = fig_graph("fig03")
    (c,) = connected_components(g)
    assert c.vertices == set(g.vertices) and c.edges == set(g.edges)
    lone = build_graph([], [("z", [])], ["a"])
    (c,) = connected_components(lone)
    assert c.vertices == frozenset() and c.edges == {"z"}
    two = build_graph(
        ["a", "b", "c", "d", "e", "f"],
        [(n, [(x, "k"), (y, "k")]) for n, x, y in [("1", "a", "b"), ("2", "b", "c"), ("3", "c", "a"), ("4", "d", "e"), ("5", "e", "f"), ("6", "f", "d")]],
    )
    assert len(connected_components(two)) == 2
    assert not is_connected(two)


def test_edge_coloring_lift_matches_adjacent_pairs():
    g = edge_colored(["a", "b", "c"], [("ab", "a", "b", "red"), ("bc", "b", "c", "red"), ("ca", "c", "a", "blue")])
    assert g.is_edge_coloring()
    assert g.cusp_points() == {("b", "red")}
