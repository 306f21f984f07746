"""Analyst queries over an aggregated store of sessions and edge records.

The store is file-backed (merged per-location CSVs) and immutable once
loaded; it answers three kinds of question about devices:

- relationship_report: how often and for how long two devices were
  co-present, per location and in total;
- ego_network: the subgraph within 1 or 2 hops of a device, with edges
  merged across locations;
- likely_contacts: a device's direct neighbours ranked by cumulative
  co-presence duration (a heuristic, labeled as such in output).
"""

from __future__ import annotations

from collections import defaultdict, deque

from .encounters import EdgeRecord, parse_edges
from .errors import InvalidPair, UnknownDevice
from .graph import EncounterGraph
from .sessionizer import Session, parse_sessions

LIKELY_CONTACTS_HEURISTIC = "total co-presence seconds across locations"


class EncounterStore:
    """Union of per-location pipeline outputs, indexed for queries."""

    def __init__(self, sessions: list[Session], edges: list[EdgeRecord]):
        self.sessions = list(sessions)
        self.edges = list(edges)
        # device -> total presence seconds across locations
        self.presence: dict[str, float] = defaultdict(float)
        # canonical pair -> location -> (count, overlap)
        self.pair_index: dict[tuple[str, str], dict[str, tuple[int, float]]] = {}
        # device -> neighbours across all locations
        self.neighbours: dict[str, set[str]] = defaultdict(set)

        for s in self.sessions:
            self.presence[s.device_id] += s.duration
        for r in self.edges:
            pair = (r.device_a, r.device_b)
            per_loc = self.pair_index.setdefault(pair, {})
            count, overlap = per_loc.get(r.scanner_id, (0, 0.0))
            per_loc[r.scanner_id] = (
                count + r.encounter_count,
                overlap + r.total_overlap,
            )
            self.neighbours[r.device_a].add(r.device_b)
            self.neighbours[r.device_b].add(r.device_a)
            self.presence.setdefault(r.device_a, 0.0)
            self.presence.setdefault(r.device_b, 0.0)

    @classmethod
    def from_files(
        cls, session_texts: list[str], edge_texts: list[str]
    ) -> "EncounterStore":
        sessions: list[Session] = []
        edges: list[EdgeRecord] = []
        for text in session_texts:
            sessions.extend(parse_sessions(text))
        for text in edge_texts:
            edges.extend(parse_edges(text))
        return cls(sessions, edges)

    def known(self, device: str) -> bool:
        return device in self.presence

    def _union_weights(self, pair: tuple[str, str]) -> tuple[int, float]:
        per_loc = self.pair_index.get(pair, {})
        return (
            sum(c for c, _ in per_loc.values()),
            sum(o for _, o in per_loc.values()),
        )

    def relationship_report(self, a: str, b: str) -> dict:
        """Per-location and total co-presence of a canonical device pair.

        Unknown devices yield an all-zero report flagged as unknown, not an
        error; self-queries are rejected.
        """
        if a == b:
            raise InvalidPair(f"relationship of {a!r} with itself is undefined")
        pair = (a, b) if a < b else (b, a)
        per_loc = self.pair_index.get(pair, {})
        locations = {
            loc: {"encounter_count": count, "total_overlap": overlap}
            for loc, (count, overlap) in sorted(per_loc.items())
        }
        total_count, total_overlap = self._union_weights(pair)
        return {
            "pair": [pair[0], pair[1]],
            "unknown_devices": sorted(d for d in pair if not self.known(d)),
            "locations": locations,
            "total": {
                "encounter_count": total_count,
                "total_overlap": total_overlap,
            },
        }

    def ego_network(self, device: str, radius: int = 1) -> EncounterGraph:
        """Induced subgraph within `radius` hops of a device, over the
        union graph (edges merged across locations, weights summed)."""
        if radius not in (1, 2):
            raise InvalidPair(f"radius must be 1 or 2, got {radius}")
        if not self.known(device):
            raise UnknownDevice(f"device {device!r} not in store")
        reached = {device}
        frontier = deque([(device, 0)])
        while frontier:
            v, depth = frontier.popleft()
            if depth == radius:
                continue
            for w in self.neighbours.get(v, ()):
                if w not in reached:
                    reached.add(w)
                    frontier.append((w, depth + 1))
        g = EncounterGraph(location=f"ego:{device}")
        for node in reached:
            g.presence[node] = self.presence.get(node, 0.0)
        for pair in self.pair_index:
            if pair[0] in reached and pair[1] in reached:
                count, overlap = self._union_weights(pair)
                g.add_edge(pair[0], pair[1], count, overlap)
        return g

    def likely_contacts(self, device: str, k: int = 10) -> list[tuple[str, float]]:
        """Direct neighbours ranked by total co-presence duration.

        Ties break by encounter count, then by id; at most k results.
        """
        if k < 1:
            raise InvalidPair(f"k must be >= 1, got {k}")
        if not self.known(device):
            raise UnknownDevice(f"device {device!r} not in store")
        scored = []
        for other in self.neighbours.get(device, ()):
            pair = (device, other) if device < other else (other, device)
            count, overlap = self._union_weights(pair)
            scored.append((other, overlap, count))
        scored.sort(key=lambda item: (-item[1], -item[2], item[0]))
        return [(other, overlap) for other, overlap, _ in scored[:k]]
