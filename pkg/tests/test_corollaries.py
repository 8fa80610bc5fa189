import random

import pytest

from proofweave.corollaries import (
    DirectedGraph,
    HColoring,
    encode_local_as_edge,
    grossman_haggkvist,
    h_yeo,
    is_bridge,
    kotzig,
    seymour_giles,
    shoesmith_smiley,
    yeo_classic,
)
from proofweave.errors import (
    AlternatingCycleExists,
    ConformalCycleExists,
    CycleWithoutTurningInS,
    EmptyGraph,
    HCycleExists,
    MatchingNotUnique,
    NotCompleteMultipartite,
    NotPerfectMatching,
    PartialEdge,
    SEmpty,
)
from proofweave.graph import build_graph, edge_colored, graph_from_json
from proofweave.oracle import (
    GeneratorConfig,
    brute_splitting,
    is_bridge_brute,
    perfect_matchings,
    random_matching_instance,
    valid_h_yeo_vertex,
    valid_kotzig_edge,
    valid_seymour_giles_vertex,
    valid_shoesmith_smiley_vertex,
    valid_yeo_vertex,
)

import instances as I


def path4():
    return edge_colored(["a", "b", "c", "d"], [("ab", "a", "b", "k"), ("bc", "b", "c", "k"), ("cd", "c", "d", "k")])


def square():
    return edge_colored(["a", "b", "c", "d"], [("ab", "a", "b", "k"), ("bc", "b", "c", "j"), ("cd", "c", "d", "k"), ("da", "d", "a", "j")])


# -- encoding ----------------------------------------------------------------


def test_encoding_fig6_upper(fig_graph):
    g = fig_graph("fig06_upper")
    enc = encode_local_as_edge(g)
    assert len(enc.added) == 4
    assert enc.graph.is_edge_coloring()
    split = brute_splitting(enc.graph, limit=16)
    assert split & enc.originals == brute_splitting(g)
    assert not (split & enc.added)


def test_encoding_is_not_local(fig_graph):
    up = encode_local_as_edge(fig_graph("fig06_upper"))
    low = encode_local_as_edge(fig_graph("fig06_lower"))
    assert len(low.added) == 2
    # some edge of the sub-graph is a bridge there but lies on a cycle above
    assert set(up.halves) - set(low.halves)
    assert any(e in low.graph.edges for e in set(up.halves) - set(low.halves))


def test_encoding_identity_on_edge_colorings():
    g = path4()
    enc = encode_local_as_edge(g)
    assert not enc.added and enc.graph.to_json() == g.to_json()


def test_encoding_rejects_partial(fig_graph):
    with pytest.raises(PartialEdge):
        encode_local_as_edge(fig_graph("fig03"))


# -- Yeo ------------------------------------------------------------------------


def test_yeo_fig1(fig):
    d = fig("fig01")
    g = graph_from_json(d)
    assert yeo_classic(g) == d["filled"]


def test_yeo_small_cases():
    assert yeo_classic(build_graph(["z"], [])) == "z"
    tri = edge_colored(["a", "b", "c"], [("ab", "a", "b", "k"), ("bc", "b", "c", "k"), ("ca", "c", "a", "k")])
    v = yeo_classic(tri)
    assert valid_yeo_vertex(tri, v)
    with pytest.raises(AlternatingCycleExists):
        yeo_classic(square())
    with pytest.raises(EmptyGraph):
        yeo_classic(build_graph([], []))


# -- Grossman-Haggkvist ------------------------------------------------------


def test_gh_branches(fig):
    r = grossman_haggkvist(square())
    assert r.kind == "cycle" and r.cycle.is_cusp_free()
    d = fig("fig01")
    r = grossman_haggkvist(graph_from_json(d))
    assert r.kind == "splitting" and r.vertex == d["filled"]
    one = edge_colored(["a", "b"], [("ab", "a", "b", "k")])
    assert grossman_haggkvist(one).vertex in {"a", "b"}
    with pytest.raises(EmptyGraph):
        grossman_haggkvist(build_graph([], []))


# -- Kotzig ---------------------------------------------------------------------


def test_kotzig_examples():
    assert kotzig(path4(), ["ab", "cd"]) in {"ab", "cd"}
    one = edge_colored(["u", "v"], [("uv", "u", "v", "k")])
    assert kotzig(one, ["uv"]) == "uv"
    with pytest.raises(MatchingNotUnique) as ei:
        kotzig(square(), ["ab", "cd"])
    assert ei.value.witness is not None
    with pytest.raises(NotPerfectMatching):
        kotzig(path4(), ["ab"])


def test_kotzig_uniqueness_matches_enumeration():
    for seed in range(80):
        rng = random.Random(seed)
        g = I.edge_colored_sparse(rng, 8, 3, 1)
        for m in perfect_matchings(g):
            unique = len(perfect_matchings(g)) == 1
            try:
                e = kotzig(g, m)
            except MatchingNotUnique:
                assert not unique
            else:
                assert unique and valid_kotzig_edge(g, m, e)


def test_generated_matching_instances_unique():
    for seed in range(30):
        g, m = random_matching_instance(random.Random(seed), GeneratorConfig(seed=seed, vertices=8, edges=10))
        assert perfect_matchings(g) == [m]


# -- Seymour-Giles -------------------------------------------------------------


def test_seymour_giles_fig7(fig):
    d = fig("fig07")
    g = graph_from_json(d)
    u = seymour_giles(g, d["phi"])
    assert valid_seymour_giles_vertex(g, d["phi"], u)


def test_seymour_giles_star_and_triangle():
    star = edge_colored(["c", "a", "b", "d"], [("ca", "c", "a", "k"), ("cb", "c", "b", "k"), ("cd", "c", "d", "k")])
    phi = {"c": "ca", "a": "ca", "b": "cb", "d": "cd"}
    assert seymour_giles(star, phi) in set(phi)
    tri = edge_colored(["a", "b", "c"], [("ab", "a", "b", "k"), ("bc", "b", "c", "k"), ("ca", "c", "a", "k")])
    with pytest.raises(ConformalCycleExists):
        seymour_giles(tri, {"a": "ab", "b": "bc", "c": "ca"})


# -- Shoesmith-Smiley ----------------------------------------------------------


def test_shoesmith_smiley_fig8(fig):
    d = fig("fig08")
    dg = DirectedGraph.from_json(d)
    v = shoesmith_smiley(dg, d["S"])
    assert v in {"v", "x"}
    assert valid_shoesmith_smiley_vertex(dg.vertices, dg.arcs, d["S"], v)


def test_shoesmith_smiley_edge_cases():
    dag = DirectedGraph.build(["a", "b", "c"], [("1", "a", "b"), ("2", "b", "c")])
    assert shoesmith_smiley(dag, ["b"]) == "b"
    cyc = DirectedGraph.build(list("abcd"), [("1", "a", "b"), ("2", "b", "c"), ("3", "c", "d"), ("4", "d", "a")])
    with pytest.raises(CycleWithoutTurningInS):
        shoesmith_smiley(cyc, list("abcd"))
    with pytest.raises(SEmpty):
        shoesmith_smiley(dag, [])


# -- H-Yeo ----------------------------------------------------------------------


def test_h_complete_reduces_to_yeo(fig):
    d = fig("fig01")
    g = graph_from_json(d)
    cols = sorted(g.colors)
    h = HColoring.build(cols, [(a, b) for a in cols for b in cols if a < b])
    assert h_yeo(g, h) == yeo_classic(g)


def test_h_without_edges():
    g = square()
    v = h_yeo(g, HColoring.build(["k", "j"], []))
    assert valid_h_yeo_vertex(g, [], v)


def test_h_three_edge_path_is_multipartite():
    # a path on three edge-vertices is K_{1,2}, hence complete multipartite
    g = edge_colored(["c", "x", "y", "z"], [("1", "c", "x", "p"), ("2", "c", "y", "q"), ("3", "c", "z", "r")])
    h = HColoring.build(["p", "q", "r"], [("p", "q"), ("q", "r")])
    assert valid_h_yeo_vertex(g, [("p", "q"), ("q", "r")], h_yeo(g, h))


def test_h_not_multipartite():
    # four edges at c whose colors form a path p-q-r-s in H: G_c is P4
    g = edge_colored(list("cwxyz"), [("1", "c", "w", "p"), ("2", "c", "x", "q"), ("3", "c", "y", "r"), ("4", "c", "z", "s")])
    h = HColoring.build(list("pqrs"), [("p", "q"), ("q", "r"), ("r", "s")])
    with pytest.raises(NotCompleteMultipartite) as ei:
        h_yeo(g, h)
    assert ei.value.witness[0] == "c"


def test_h_cycle_detected():
    with pytest.raises(HCycleExists):
        h_yeo(square(), HColoring.build(["k", "j"], [("k", "j")]))


# -- bridges --------------------------------------------------------------------


def test_is_bridge_agrees_with_brute():
    for seed in range(40):
        g = I.edge_colored_sparse(random.Random(seed), 7, 3, 1)
        for e in g.edges:
            assert is_bridge(g, e) == is_bridge_brute(g, e)
