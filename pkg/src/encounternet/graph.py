"""Per-location encounter graphs: construction, components, density.

Nodes are devices (weighted by presence seconds), edges are aggregated
encounters.  The graph is simple and undirected; devices that were seen
but never co-present stay in the graph as isolated nodes ("islands").
"""

from __future__ import annotations

import json
from collections import namedtuple
from dataclasses import dataclass, field

from .encounters import EdgeRecord
from .errors import DegenerateGraph, LocationMismatch

EdgeWeight = namedtuple("EdgeWeight", ["encounter_count", "total_overlap"])


@dataclass
class EncounterGraph:
    location: str
    presence: dict[str, float] = field(default_factory=dict)  # node -> seconds
    edges: dict[tuple[str, str], EdgeWeight] = field(default_factory=dict)

    @property
    def num_nodes(self) -> int:
        return len(self.presence)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def add_node(self, node: str, presence_seconds: float = 0.0) -> None:
        self.presence[node] = self.presence.get(node, 0.0) + presence_seconds

    def add_edge(
        self, a: str, b: str, encounter_count: int = 1, total_overlap: float = 0.0
    ) -> None:
        if a == b:
            raise ValueError(f"self-loop on {a!r} rejected")
        pair = (a, b) if a < b else (b, a)
        for node in pair:
            self.presence.setdefault(node, 0.0)
        prev = self.edges.get(pair)
        if prev is None:
            self.edges[pair] = EdgeWeight(encounter_count, total_overlap)
        else:
            self.edges[pair] = EdgeWeight(
                prev.encounter_count + encounter_count,
                prev.total_overlap + total_overlap,
            )

    def adjacency(self) -> dict[str, set[str]]:
        adj: dict[str, set[str]] = {node: set() for node in self.presence}
        for a, b in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        return adj

    def to_json_dict(self) -> dict:
        return {
            "location": self.location,
            "nodes": [
                {"id": node, "presence_seconds": self.presence[node]}
                for node in sorted(self.presence)
            ],
            "edges": [
                {
                    "a": a,
                    "b": b,
                    "encounter_count": w.encounter_count,
                    "total_overlap": w.total_overlap,
                }
                for (a, b), w in sorted(self.edges.items())
            ],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2) + "\n"

    @classmethod
    def from_json_dict(cls, doc: dict) -> "EncounterGraph":
        g = cls(location=doc["location"])
        for node in doc["nodes"]:
            g.presence[node["id"]] = node["presence_seconds"]
        for edge in doc["edges"]:
            g.add_edge(
                edge["a"], edge["b"], edge["encounter_count"], edge["total_overlap"]
            )
        return g

    @classmethod
    def loads(cls, text: str) -> "EncounterGraph":
        return cls.from_json_dict(json.loads(text))


def build_graph(
    edges: list[EdgeRecord], presence: dict[str, float], location: str
) -> EncounterGraph:
    """Assemble the graph for one location from edge records and presence.

    Nodes are every device in the presence map plus every edge endpoint;
    node weight defaults to 0 for endpoints missing from the map.
    """
    g = EncounterGraph(location=location)
    for node, seconds in presence.items():
        g.presence[node] = seconds
    for record in edges:
        if record.scanner_id != location:
            raise LocationMismatch(
                f"edge record at {record.scanner_id!r} fed to graph for {location!r}"
            )
        g.add_edge(
            record.device_a,
            record.device_b,
            record.encounter_count,
            record.total_overlap,
        )
    return g


def presence_for_location(
    totals: dict[tuple[str, str], float], location: str
) -> dict[str, float]:
    """Restrict a (device, scanner) -> seconds map to one scanner."""
    return {
        device: seconds
        for (device, scanner), seconds in totals.items()
        if scanner == location
    }


def connected_components(g: EncounterGraph) -> list[set[str]]:
    """Components sorted by size descending, ties by smallest member id.

    Union-find with path compression; singleton components are islands.
    """
    parent: dict[str, str] = {node: node for node in g.presence}

    def find(x: str) -> str:
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    for a, b in g.edges:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb

    groups: dict[str, set[str]] = {}
    for node in g.presence:
        groups.setdefault(find(node), set()).add(node)
    return sorted(groups.values(), key=lambda c: (-len(c), min(c)))


def graph_density(g: EncounterGraph) -> float:
    """2E / (N(N-1)) over the graph's own node set."""
    n = g.num_nodes
    if n < 2:
        raise DegenerateGraph(f"density undefined for {n} node(s)")
    return 2.0 * g.num_edges / (n * (n - 1))


def induced_subgraph(g: EncounterGraph, nodes: set[str]) -> EncounterGraph:
    sub = EncounterGraph(location=g.location)
    for node in nodes:
        sub.presence[node] = g.presence[node]
    for (a, b), w in g.edges.items():
        if a in nodes and b in nodes:
            sub.edges[(a, b)] = w
    return sub
