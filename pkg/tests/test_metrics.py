import random

import pytest

from encounternet.errors import DisconnectedInput, TooSmall, UnknownKind
from encounternet.graph import EncounterGraph
from encounternet.metrics import (
    betweenness_centrality,
    closeness_centrality,
    clustering_coefficient,
    degree_centrality,
    distance_distribution,
    metrics_report,
    network_centralization,
)
from helpers import complete, cycle, graph_from_edges, path_graph, star
from oracles import (
    brute_force_clustering,
    enumerate_betweenness,
    floyd_warshall,
    random_connected_graph,
)


def graph_from_adj(ids, adj):
    g = EncounterGraph(location="t", presence={v: 0.0 for v in ids})
    for v in ids:
        for w in adj[v]:
            if v < w:
                g.add_edge(v, w)
    return g


# --- degree ---

def test_degree_star():
    deg = degree_centrality(star(4))
    assert deg["c"] == 3
    assert all(deg[v] == 1 for v in deg if v != "c")


def test_degree_triangle():
    assert set(degree_centrality(complete(3)).values()) == {2}


def test_degree_handshake_sum():
    rng = random.Random(4)
    ids, adj, edges = random_connected_graph(rng, 40)
    g = graph_from_adj(ids, adj)
    assert sum(degree_centrality(g).values()) == 2 * len(g.edges)


# --- closeness ---

def test_closeness_star():
    c = closeness_centrality(star(4))
    assert c["c"] == pytest.approx(1.0)
    assert c["x0"] == pytest.approx(0.6)


def test_closeness_complete():
    assert all(v == pytest.approx(1.0) for v in closeness_centrality(complete(5)).values())


def test_closeness_rejects_disconnected():
    g = graph_from_edges([("a", "b")], nodes=["z"])
    with pytest.raises(DisconnectedInput):
        closeness_centrality(g)


def test_closeness_matches_all_pairs_oracle_exactly():
    rng = random.Random(9)
    for _ in range(5):
        ids, adj, _ = random_connected_graph(rng, 50, extra_edge_prob=0.08)
        g = graph_from_adj(ids, adj)
        dist = floyd_warshall(ids, adj)
        n = len(ids)
        expected = {
            v: (n - 1) / sum(dist[(v, w)] for w in ids if w != v) for v in ids
        }
        assert closeness_centrality(g) == expected


# --- betweenness ---

def test_betweenness_path_of_five():
    b = betweenness_centrality(path_graph(["a", "b", "c", "d", "e"]))
    assert b["c"] == pytest.approx(4 / 6)
    assert b["b"] == pytest.approx(3 / 6)
    assert b["a"] == pytest.approx(0.0)


def test_betweenness_star():
    b = betweenness_centrality(star(5))
    assert b["c"] == pytest.approx(1.0)
    assert all(b[v] == 0.0 for v in b if v != "c")


def test_betweenness_matches_enumeration_oracle():
    rng = random.Random(1)
    for _ in range(25):
        n = rng.randrange(3, 9)
        ids, adj, _ = random_connected_graph(rng, n, extra_edge_prob=0.3)
        g = graph_from_adj(ids, adj)
        expected = enumerate_betweenness(ids, adj)
        got = betweenness_centrality(g)
        for v in ids:
            assert got[v] == pytest.approx(expected[v], abs=1e-9)


# --- centralization ---

def test_centralization_star_anchors():
    g = star(4)
    n = 4
    assert network_centralization(degree_centrality(g), "degree", n) == pytest.approx(1.0)
    assert network_centralization(
        closeness_centrality(g), "closeness", n
    ) == pytest.approx(1.0)
    assert network_centralization(
        betweenness_centrality(g), "betweenness", n
    ) == pytest.approx(1.0)


def test_centralization_zero_on_cycles():
    g = cycle(7)
    for kind, values in [
        ("degree", degree_centrality(g)),
        ("closeness", closeness_centrality(g)),
        ("betweenness", betweenness_centrality(g)),
    ]:
        assert network_centralization(values, kind, 7) == pytest.approx(0.0)


def test_centralization_star_closeness_hand_value():
    # star n=4: spread 3*(1 - 3/5), maximum 3*2/5 -> exactly 1
    values = {"c": 1.0, "x0": 0.6, "x1": 0.6, "x2": 0.6}
    assert network_centralization(values, "closeness", 4) == pytest.approx(1.0)


def test_centralization_errors():
    with pytest.raises(UnknownKind):
        network_centralization({"a": 1.0}, "pagerank", 5)
    with pytest.raises(TooSmall):
        network_centralization({"a": 1.0, "b": 1.0}, "degree", 2)


# --- clustering ---

def test_clustering_triangle():
    assert clustering_coefficient(complete(3)) == pytest.approx(1.0)


def test_clustering_star():
    assert clustering_coefficient(star(6)) == 0.0


def test_clustering_matches_brute_force():
    rng = random.Random(6)
    ids, adj, _ = random_connected_graph(rng, 30, extra_edge_prob=0.2)
    g = graph_from_adj(ids, adj)
    assert clustering_coefficient(g) == pytest.approx(
        brute_force_clustering(ids, adj), abs=1e-12
    )


# --- distances ---

def test_distance_distribution_path():
    dd = distance_distribution(path_graph(["a", "b", "c"]))
    assert dd.probabilities == {1: pytest.approx(2 / 3), 2: pytest.approx(1 / 3)}
    assert dd.diameter == 2
    assert dd.average == pytest.approx(4 / 3)


def test_distance_distribution_complete():
    dd = distance_distribution(complete(5))
    assert dd.probabilities == {1: 1.0}
    assert dd.diameter == 1
    assert dd.average == 1.0


def test_distance_distribution_matches_bfs_oracle():
    rng = random.Random(13)
    ids, adj, _ = random_connected_graph(rng, 60, extra_edge_prob=0.05)
    g = graph_from_adj(ids, adj)
    dist = floyd_warshall(ids, adj)
    counts = {}
    for i, v in enumerate(ids):
        for w in ids[i + 1 :]:
            d = int(dist[(v, w)])
            counts[d] = counts.get(d, 0) + 1
    total = sum(counts.values())
    dd = distance_distribution(g)
    assert dd.probabilities == {d: c / total for d, c in counts.items()}
    assert sum(dd.probabilities.values()) == pytest.approx(1.0, abs=1e-12)
    assert dd.diameter == max(counts)


def test_distance_rejects_disconnected():
    g = graph_from_edges([("a", "b")], nodes=["z"])
    with pytest.raises(DisconnectedInput):
        distance_distribution(g)


# --- report ---

def test_report_on_triangle_plus_island():
    g = graph_from_edges([("a", "b"), ("b", "c"), ("a", "c")], nodes=["z"])
    report = metrics_report(g)
    assert report.unique_devices == 4
    assert report.largest_core_size == 3
    assert report.second_core_size == 1
    assert report.core_edges == 3
    assert report.average_degree == pytest.approx(2.0)
    assert report.average_clustering == pytest.approx(1.0)
    assert report.diameter == 1


def test_report_average_degree_identity():
    rng = random.Random(21)
    ids, adj, edges = random_connected_graph(rng, 35)
    g = graph_from_adj(ids, adj)
    report = metrics_report(g)
    assert report.average_degree == 2 * report.core_edges / report.largest_core_size


def test_report_diameter_vs_average_distance():
    rng = random.Random(22)
    ids, adj, _ = random_connected_graph(rng, 25)
    report = metrics_report(graph_from_adj(ids, adj))
    assert report.diameter >= report.average_distance >= 1


def test_report_empty_graph_is_trivial():
    report = metrics_report(EncounterGraph(location="t"))
    assert report.unique_devices == 0
    assert report.largest_core_size == 0
    assert report.density == 0.0


def test_report_json_keys_exact():
    g = complete(4)
    doc = metrics_report(g).to_json_dict()
    assert list(doc) == [
        "unique_devices",
        "largest_core",
        "second_core",
        "core_edges",
        "density",
        "degree_centralization",
        "closeness_centralization",
        "betweenness_centralization",
        "max_degree",
        "average_degree",
        "diameter",
        "average_distance",
        "average_clustering",
    ]
