import random

import pytest

from encounternet.encounters import EdgeRecord
from encounternet.errors import DegenerateGraph, LocationMismatch
from encounternet.graph import (
    EncounterGraph,
    build_graph,
    connected_components,
    graph_density,
    induced_subgraph,
    presence_for_location,
)
from helpers import complete, graph_from_edges, path_graph
from oracles import bfs_components, random_connected_graph


def test_island_retention():
    g = build_graph(
        [EdgeRecord("A", "B", "pub", 1, 10.0)],
        {"A": 100.0, "B": 50.0, "C": 30.0},
        "pub",
    )
    assert g.num_nodes == 3
    assert g.num_edges == 1
    assert {"C"} in connected_components(g)


def test_single_node_graph():
    g = build_graph([], {"A": 5.0}, "pub")
    assert g.num_nodes == 1
    assert g.num_edges == 0


def test_edge_endpoints_always_present():
    g = build_graph([EdgeRecord("A", "B", "pub", 1, 0.0)], {}, "pub")
    assert set(g.presence) == {"A", "B"}
    assert g.presence["A"] == 0.0


def test_location_mismatch_rejected():
    with pytest.raises(LocationMismatch):
        build_graph([EdgeRecord("A", "B", "street", 1, 0.0)], {}, "pub")


def test_presence_for_location_filters():
    totals = {("A", "pub"): 10.0, ("A", "street"): 5.0, ("B", "pub"): 1.0}
    assert presence_for_location(totals, "pub") == {"A": 10.0, "B": 1.0}


def test_components_two_triangles_and_island():
    g = graph_from_edges(
        [("a", "b"), ("b", "c"), ("a", "c"), ("x", "y"), ("y", "z"), ("x", "z")],
        nodes=["q"],
    )
    assert [len(c) for c in connected_components(g)] == [3, 3, 1]


def test_components_path():
    g = path_graph(["a", "b", "c", "d", "e"])
    assert [len(c) for c in connected_components(g)] == [5]


def test_components_sizes_sum_and_disjoint():
    rng = random.Random(11)
    g = EncounterGraph(location="t")
    for i in range(200):
        g.presence[f"v{i:03d}"] = 0.0
    for _ in range(150):
        a, b = rng.sample(sorted(g.presence), 2)
        g.add_edge(a, b)
    comps = connected_components(g)
    assert sum(len(c) for c in comps) == g.num_nodes
    seen = set()
    for c in comps:
        assert not (c & seen)
        seen |= c


def test_components_match_bfs_oracle_on_1000_nodes():
    rng = random.Random(5)
    g = EncounterGraph(location="t")
    ids = [f"v{i:04d}" for i in range(1000)]
    for v in ids:
        g.presence[v] = 0.0
    for _ in range(700):
        a, b = rng.sample(ids, 2)
        g.add_edge(a, b)
    assert connected_components(g) == bfs_components(ids, g.adjacency())


def test_density_complete_graph():
    assert graph_density(complete(4)) == 1.0


def test_density_path_of_three():
    assert graph_density(path_graph(["a", "b", "c"])) == pytest.approx(2 * 2 / (3 * 2))


def test_density_edgeless():
    g = EncounterGraph(location="t", presence={f"v{i}": 0.0 for i in range(10)})
    assert graph_density(g) == 0.0


def test_density_degenerate():
    with pytest.raises(DegenerateGraph):
        graph_density(build_graph([], {"A": 0.0}, "t"))


def test_density_monotone_in_edges():
    rng = random.Random(2)
    ids, adj, edges = random_connected_graph(rng, 12, extra_edge_prob=0.1)
    g = EncounterGraph(location="t", presence={v: 0.0 for v in ids})
    last = 0.0
    for a, b in sorted(edges):
        g.add_edge(a, b)
        density = graph_density(g)
        assert density > last
        last = density


def test_parallel_edges_merge_weights():
    g = EncounterGraph(location="t")
    g.add_edge("a", "b", 2, 10.0)
    g.add_edge("b", "a", 3, 5.0)
    assert g.num_edges == 1
    assert g.edges[("a", "b")] == (5, 15.0)


def test_json_roundtrip():
    g = build_graph(
        [EdgeRecord("A", "B", "pub", 2, 30.0)], {"A": 9.0, "B": 1.0, "C": 4.0}, "pub"
    )
    again = EncounterGraph.loads(g.dumps())
    assert again.location == "pub"
    assert again.presence == g.presence
    assert again.edges == g.edges


def test_induced_subgraph():
    g = graph_from_edges([("a", "b"), ("b", "c"), ("c", "d")])
    sub = induced_subgraph(g, {"a", "b", "c"})
    assert set(sub.presence) == {"a", "b", "c"}
    assert set(sub.edges) == {("a", "b"), ("b", "c")}
