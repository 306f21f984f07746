"""Centrality, centralization, clustering and distance measures.

Degree counts neighbours; closeness is (n-1) over the sum of shortest-path
distances; betweenness is the fraction of pairwise shortest paths through a
node, computed by Brandes-style dependency accumulation (one BFS per
source, never path enumeration).  Graph-level centralization follows
Freeman: 0 on a perfectly uniform network, 1 on a perfect star.

Distance-based measures require a connected node set, so reports restrict
them to the largest component; clustering counts degree-<2 nodes as 0.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass

from .errors import DisconnectedInput, TooSmall, UnknownKind
from .graph import (
    EncounterGraph,
    connected_components,
    graph_density,
    induced_subgraph,
)

CENTRALIZATION_KINDS = ("degree", "closeness", "betweenness")


@dataclass(frozen=True)
class MetricsReport:
    unique_devices: int
    largest_core_size: int
    second_core_size: int
    core_edges: int
    density: float
    degree_centralization: float
    closeness_centralization: float
    betweenness_centralization: float
    max_degree: int
    average_degree: float
    diameter: int
    average_distance: float
    average_clustering: float

    def to_json_dict(self) -> dict:
        return {
            "unique_devices": self.unique_devices,
            "largest_core": self.largest_core_size,
            "second_core": self.second_core_size,
            "core_edges": self.core_edges,
            "density": self.density,
            "degree_centralization": self.degree_centralization,
            "closeness_centralization": self.closeness_centralization,
            "betweenness_centralization": self.betweenness_centralization,
            "max_degree": self.max_degree,
            "average_degree": self.average_degree,
            "diameter": self.diameter,
            "average_distance": self.average_distance,
            "average_clustering": self.average_clustering,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2) + "\n"


@dataclass(frozen=True)
class DistanceDistribution:
    probabilities: dict[int, float]  # distance -> fraction of unordered pairs
    diameter: int
    average: float


def _restrict_adjacency(
    g: EncounterGraph, component: set[str] | None
) -> dict[str, set[str]]:
    adj = g.adjacency()
    if component is None:
        return adj
    missing = set(component) - set(adj)
    if missing:
        raise DisconnectedInput(f"nodes not in graph: {sorted(missing)[:3]}")
    return {v: adj[v] & component for v in component}


def _bfs_distances(adj: dict[str, set[str]], source: str) -> dict[str, int]:
    dist = {source: 0}
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if w not in dist:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


def _require_connected(adj: dict[str, set[str]]) -> None:
    if not adj:
        return
    source = next(iter(adj))
    if len(_bfs_distances(adj, source)) != len(adj):
        raise DisconnectedInput("node set is not a single connected component")


def degree_centrality(g: EncounterGraph) -> dict[str, int]:
    """Neighbour count per node."""
    return {v: len(neigh) for v, neigh in g.adjacency().items()}


def closeness_centrality(
    g: EncounterGraph, component: set[str] | None = None
) -> dict[str, float]:
    """C(v) = (n-1) / sum of distances from v, over a connected node set."""
    adj = _restrict_adjacency(g, component)
    _require_connected(adj)
    n = len(adj)
    if n == 1:
        return {v: 1.0 for v in adj}
    out = {}
    for v in adj:
        total = sum(_bfs_distances(adj, v).values())
        out[v] = (n - 1) / total
    return out


def betweenness_centrality(
    g: EncounterGraph, component: set[str] | None = None
) -> dict[str, float]:
    """Fraction of pairwise shortest paths through each node.

    Brandes accumulation: for each source, a BFS builds the shortest-path
    DAG (path counts sigma, predecessor lists), then dependencies are
    summed walking the DAG in reverse BFS order.  Endpoints are excluded;
    values are normalized by (n-1)(n-2)/2 into [0, 1].
    """
    adj = _restrict_adjacency(g, component)
    _require_connected(adj)
    n = len(adj)
    accum = {v: 0.0 for v in adj}
    if n < 3:
        return accum
    for source in adj:
        sigma = {v: 0 for v in adj}
        dist = {v: -1 for v in adj}
        preds: dict[str, list[str]] = {v: [] for v in adj}
        sigma[source] = 1
        dist[source] = 0
        order: list[str] = []
        queue = deque([source])
        while queue:
            v = queue.popleft()
            order.append(v)
            for w in adj[v]:
                if dist[w] < 0:
                    dist[w] = dist[v] + 1
                    queue.append(w)
                if dist[w] == dist[v] + 1:
                    sigma[w] += sigma[v]
                    preds[w].append(v)
        delta = {v: 0.0 for v in adj}
        for w in reversed(order):
            for v in preds[w]:
                delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w])
            if w != source:
                accum[w] += delta[w]
    # each unordered pair was seen from both endpoints: raw/2 / ((n-1)(n-2)/2)
    scale = 1.0 / ((n - 1) * (n - 2))
    return {v: raw * scale for v, raw in accum.items()}


def network_centralization(
    values: dict[str, float], kind: str, n: int
) -> float:
    """Freeman centralization of a node-centrality map.

    Degree expects raw neighbour counts; closeness and betweenness expect
    normalized scores.  Denominators are the star-graph maxima:
    (n-1)(n-2) for degree, (n-1)(n-2)/(2n-3) for closeness, (n-1) for
    normalized betweenness.
    """
    if kind not in CENTRALIZATION_KINDS:
        raise UnknownKind(f"unknown centralization kind {kind!r}")
    if n < 3:
        raise TooSmall(f"centralization needs n >= 3, got {n}")
    if not values:
        raise TooSmall("empty centrality map")
    c_max = max(values.values())
    spread = sum(c_max - c for c in values.values())
    if kind == "degree":
        denom = (n - 1) * (n - 2)
    elif kind == "closeness":
        denom = (n - 1) * (n - 2) / (2 * n - 3)
    else:
        denom = n - 1
    return spread / denom


def clustering_coefficient(
    g: EncounterGraph, nodes: set[str] | None = None
) -> float:
    """Average local clustering; nodes of degree < 2 contribute 0."""
    adj = g.adjacency()
    pool = nodes if nodes is not None else set(adj)
    if not pool:
        return 0.0
    total = 0.0
    for v in pool:
        neigh = adj[v] & pool if nodes is not None else adj[v]
        k = len(neigh)
        if k < 2:
            continue
        links = sum(len(adj[u] & neigh) for u in neigh) // 2
        total += links / (k * (k - 1) / 2)
    return total / len(pool)


def distance_distribution(
    g: EncounterGraph, component: set[str] | None = None
) -> DistanceDistribution:
    """Shortest-path length distribution over unordered node pairs."""
    adj = _restrict_adjacency(g, component)
    _require_connected(adj)
    n = len(adj)
    if n < 2:
        raise DisconnectedInput("distance distribution needs >= 2 nodes")
    counts: dict[int, int] = {}
    for v in adj:
        for w, d in _bfs_distances(adj, v).items():
            if w != v:
                counts[d] = counts.get(d, 0) + 1
    total_pairs = n * (n - 1) // 2
    probabilities = {d: (c // 2) / total_pairs for d, c in sorted(counts.items())}
    diameter = max(counts)
    average = sum(d * (c // 2) for d, c in counts.items()) / total_pairs
    return DistanceDistribution(probabilities, diameter, average)


def metrics_report(g: EncounterGraph) -> MetricsReport:
    """The full per-graph report: totals on the whole graph, everything
    distance- or density-based on the largest component (the "core")."""
    components = connected_components(g)
    unique_devices = g.num_nodes
    largest = components[0] if components else set()
    second = len(components[1]) if len(components) > 1 else 0
    core = induced_subgraph(g, largest)
    n_core = core.num_nodes
    core_edges = core.num_edges

    density = graph_density(core) if n_core >= 2 else 0.0
    degrees = degree_centrality(core)
    max_degree = max(degrees.values(), default=0)
    average_degree = 2.0 * core_edges / n_core if n_core else 0.0

    if n_core >= 3:
        closeness = closeness_centrality(core)
        betweenness = betweenness_centrality(core)
        dc = network_centralization(degrees, "degree", n_core)
        cc = network_centralization(closeness, "closeness", n_core)
        bc = network_centralization(betweenness, "betweenness", n_core)
    else:
        dc = cc = bc = 0.0

    if n_core >= 2:
        dd = distance_distribution(core)
        diameter, average_distance = dd.diameter, dd.average
    else:
        diameter, average_distance = 0, 0.0

    return MetricsReport(
        unique_devices=unique_devices,
        largest_core_size=n_core,
        second_core_size=second,
        core_edges=core_edges,
        density=density,
        degree_centralization=dc,
        closeness_centralization=cc,
        betweenness_centralization=bc,
        max_degree=max_degree,
        average_degree=average_degree,
        diameter=diameter,
        average_distance=average_distance,
        average_clustering=clustering_coefficient(core),
    )
