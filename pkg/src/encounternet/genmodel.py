"""Reference graph generators: preferential attachment and uniform random.

The growth model starts from a clique on m+1 nodes; every later node
attaches m edges to distinct existing nodes chosen with probability
proportional to current degree ("the rich get richer").  The uniform
model draws each pair independently and serves as the null contrast.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .distributions import PowerLawFit, fit_rank_exponent, ranked_values
from .errors import InvalidSpec, TooFewPoints
from .graph import EncounterGraph, connected_components, induced_subgraph
from .metrics import degree_centrality, metrics_report

DEFAULT_SIGNATURE_R2 = 0.9


@dataclass(frozen=True)
class ModelSpec:
    kind: str  # "ba" | "er"
    n: int
    m: float  # edges per new node (ba) or edge probability (er)
    seed: int = 0

    def validate(self) -> None:
        if self.kind not in ("ba", "er"):
            raise InvalidSpec(f"unknown model kind {self.kind!r}")
        if self.n < 2:
            raise InvalidSpec(f"need n >= 2 nodes, got {self.n}")
        if self.kind == "ba":
            if self.m != int(self.m) or not 1 <= int(self.m) < self.n:
                raise InvalidSpec(f"ba needs integer 1 <= m < n, got m={self.m}")
        else:
            if not 0.0 <= self.m <= 1.0:
                raise InvalidSpec(f"er needs probability in [0,1], got {self.m}")


def _node_ids(n: int) -> list[str]:
    width = len(str(n - 1))
    return [f"n{i:0{width}d}" for i in range(n)]


def generate_ba(spec: ModelSpec) -> EncounterGraph:
    """Preferential-attachment growth; deterministic for a fixed seed.

    Total edges: m(m+1)/2 (seed clique) + (n-m-1)*m.
    """
    spec.validate()
    if spec.kind != "ba":
        raise InvalidSpec("generate_ba requires kind='ba'")
    m = int(spec.m)
    rng = random.Random(spec.seed)
    ids = _node_ids(spec.n)
    g = EncounterGraph(location="model:ba")
    for node in ids:
        g.presence[node] = 0.0

    # each edge pushes both endpoints, so uniform draws are degree-proportional
    endpoint_pool: list[int] = []
    for i in range(m + 1):
        for j in range(i + 1, m + 1):
            g.add_edge(ids[i], ids[j])
            endpoint_pool.extend((i, j))

    for new in range(m + 1, spec.n):
        targets: set[int] = set()
        while len(targets) < m:
            candidate = endpoint_pool[rng.randrange(len(endpoint_pool))]
            if candidate not in targets:
                targets.add(candidate)
        for t in sorted(targets):
            g.add_edge(ids[new], ids[t])
            endpoint_pool.extend((new, t))
    return g


def generate_er(spec: ModelSpec) -> EncounterGraph:
    """Uniform random graph: each pair is an edge with probability m."""
    spec.validate()
    if spec.kind != "er":
        raise InvalidSpec("generate_er requires kind='er'")
    rng = random.Random(spec.seed)
    ids = _node_ids(spec.n)
    g = EncounterGraph(location="model:er")
    for node in ids:
        g.presence[node] = 0.0
    for i in range(spec.n):
        for j in range(i + 1, spec.n):
            if rng.random() < spec.m:
                g.add_edge(ids[i], ids[j])
    return g


def generate(spec: ModelSpec) -> EncounterGraph:
    spec.validate()
    return generate_ba(spec) if spec.kind == "ba" else generate_er(spec)


def _core_degree_fit(g: EncounterGraph) -> PowerLawFit | None:
    components = connected_components(g)
    if not components:
        return None
    core = induced_subgraph(g, components[0])
    series = ranked_values({v: float(d) for v, d in degree_centrality(core).items()})
    try:
        return fit_rank_exponent(series)
    except TooFewPoints:
        return None


def _side(g: EncounterGraph, r2_threshold: float) -> dict:
    fit = _core_degree_fit(g)
    return {
        "location": g.location,
        "report": metrics_report(g).to_json_dict(),
        "degree_fit": fit.to_json_dict() if fit else None,
        "scale_free_signature": bool(fit and fit.r_squared >= r2_threshold),
    }


def compare_graphs(
    a: EncounterGraph, b: EncounterGraph, r2_threshold: float = DEFAULT_SIGNATURE_R2
) -> dict:
    """Side-by-side reports plus ranked-degree fits for two graphs."""
    return {
        "a": _side(a, r2_threshold),
        "b": _side(b, r2_threshold),
        "signature_r2_threshold": r2_threshold,
    }
