import random

import pytest

from conftest import triangle
from proofweave.errors import InfeasibleBounds, TooLarge
from proofweave.graph import build_graph, graph_from_json
from proofweave.io import load_fixture
from proofweave.mll import ps_from_json
from proofweave.oracle import (
    KINDS,
    GeneratorConfig,
    brute_cuspfree_cycles,
    brute_splitting,
    brute_switchings,
    enumerate_cycles,
    exhaustive_graphs,
    generate,
    perfect_matchings,
    random_graph,
    random_matching_instance,
)


def path_graph(n):
    names = [f"p{i}" for i in range(n)]
    return build_graph(names, [(f"e{i}", [(names[i], "a"), (names[i + 1], "b")]) for i in range(n - 1)])


def test_cycle_counts():
    assert len(enumerate_cycles(triangle())) == 1
    assert len(enumerate_cycles(graph_from_json(load_fixture("fig03")))) == 1
    assert enumerate_cycles(path_graph(5)) == []


def test_parallel_edges_form_a_cycle():
    g = build_graph(["u", "v"], [("e", [("u", "a"), ("v", "a")]), ("f", [("u", "b"), ("v", "b")])])
    (c,) = enumerate_cycles(g)
    assert set(c.edges) == {"e", "f"}
    assert len(brute_cuspfree_cycles(g)) == 1
    assert brute_splitting(g) == frozenset()


def test_complete_graph_cycle_count():
    # K4 has 7 cycles: 4 triangles and 3 squares
    names = "abcd"
    edges = [(x + y, [(x, "c0"), (y, "c0")]) for i, x in enumerate(names) for y in names[i + 1:]]
    g = build_graph(list(names), edges)
    cs = enumerate_cycles(g)
    assert sorted(len(c.edges) for c in cs) == [3, 3, 3, 3, 4, 4, 4]
    # one color everywhere: every cycle has a cusp everywhere
    assert brute_splitting(g) == frozenset(names)


def test_splitting_on_cusp_free_triangle():
    assert brute_splitting(triangle("a", "b")) == frozenset()
    assert brute_splitting(triangle("a", "a")) == frozenset("pqr")


def test_fixture_splitting_sets():
    assert brute_splitting(graph_from_json(load_fixture("fig03"))) == {"u"}
    assert brute_splitting(graph_from_json(load_fixture("fig16"))) == {"p1", "p2"}


def test_switching_counts():
    r = brute_switchings(ps_from_json(load_fixture("fig05")))
    assert r.correct and r.degree == 1 and r.total == 2
    two = ps_from_json(
        {
            "vertices": [{"id": "a", "kind": "ax"}, {"id": "b", "kind": "ax"}],
            "edges": [
                {"id": "a1", "src": "a", "type": "X"},
                {"id": "a2", "src": "a", "type": "X^"},
                {"id": "b1", "src": "b", "type": "Y"},
                {"id": "b2", "src": "b", "type": "Y^"},
            ],
        }
    )
    r = brute_switchings(two)
    assert r.correct and r.degree == 2


def test_too_large():
    with pytest.raises(TooLarge):
        enumerate_cycles(path_graph(15))
    assert enumerate_cycles(path_graph(15), limit=15) == []


def test_exhaustive_graphs_respect_bounds():
    gs = list(exhaustive_graphs(3, 3, 2))
    assert gs
    for g in gs:
        assert len(g.vertices) <= 3 and len(g.edges) <= 3 and len(g.colors) <= 2


@pytest.mark.parametrize("kind", KINDS)
def test_generate_is_deterministic(kind):
    cfg = GeneratorConfig(seed=11, vertices=8, edges=10)
    a, b = generate(cfg, kind), generate(cfg, kind)
    assert a.data == b.data
    assert a.manifest == b.manifest
    assert a.manifest["seed"] == 11 and a.manifest["kind"] == kind
    assert len(a.manifest["sha256"]) == 64


def test_generate_frozen_digest():
    fx = generate(GeneratorConfig(seed=5), "graph")
    assert fx.manifest["sha256"] == "8988b4ce8c899cb83d8acef263ab80b1fad4a20d9c3795e92c461b4e660a69e9"


def test_different_seeds_differ():
    datas = {str(generate(GeneratorConfig(seed=s), "graph").data) for s in range(10)}
    assert len(datas) > 1


def test_matching_instances_are_unique():
    for seed in range(30):
        g, m = random_matching_instance(random.Random(seed), GeneratorConfig(seed=seed, vertices=8, edges=12))
        assert len(g.vertices) == 8
        assert perfect_matchings(g) == [m]


def test_infeasible_bounds():
    with pytest.raises(InfeasibleBounds):
        random_graph(random.Random(0), GeneratorConfig(vertices=0))
    with pytest.raises(InfeasibleBounds):
        random_graph(random.Random(0), GeneratorConfig(vertices=1, edges=3))
    with pytest.raises(InfeasibleBounds):
        random_matching_instance(random.Random(0), GeneratorConfig(vertices=1))
    with pytest.raises(InfeasibleBounds):
        generate(GeneratorConfig(rules=0), "mall-derivation")
