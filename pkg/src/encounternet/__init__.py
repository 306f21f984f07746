"""Reconstruct social-encounter networks from proximity-scanner logs.

Pipeline: discovery events -> presence sessions -> pairwise encounters ->
per-location weighted graphs -> structural metrics, ranked power-law
fits, generative-model comparisons and analyst queries.
"""

from .scanlog import DiscoveryEvent, anonymize_devices, parse_scan_log, serialize_scan_log
from .sessionizer import Session, SessionConfig, sessionize, total_presence
from .encounters import (
    EdgeRecord,
    Encounter,
    aggregate_edges,
    detect_encounters,
)
from .graph import (
    EncounterGraph,
    build_graph,
    connected_components,
    graph_density,
    induced_subgraph,
    presence_for_location,
)
from .metrics import (
    MetricsReport,
    betweenness_centrality,
    closeness_centrality,
    clustering_coefficient,
    degree_centrality,
    distance_distribution,
    metrics_report,
    network_centralization,
)
from .distributions import (
    PoissonFit,
    PowerLawFit,
    RankedSeries,
    fit_poisson,
    fit_rank_exponent,
    ranked_values,
)
from .genmodel import ModelSpec, compare_graphs, generate_ba, generate_er
from .simulator import LocationProfile, parse_profile, simulate_location
from .query import EncounterStore

__all__ = [
    "DiscoveryEvent",
    "EdgeRecord",
    "Encounter",
    "EncounterGraph",
    "EncounterStore",
    "LocationProfile",
    "MetricsReport",
    "ModelSpec",
    "PoissonFit",
    "PowerLawFit",
    "RankedSeries",
    "Session",
    "SessionConfig",
    "aggregate_edges",
    "anonymize_devices",
    "betweenness_centrality",
    "build_graph",
    "closeness_centrality",
    "clustering_coefficient",
    "compare_graphs",
    "connected_components",
    "degree_centrality",
    "detect_encounters",
    "distance_distribution",
    "fit_poisson",
    "fit_rank_exponent",
    "generate_ba",
    "generate_er",
    "graph_density",
    "induced_subgraph",
    "metrics_report",
    "network_centralization",
    "parse_profile",
    "parse_scan_log",
    "presence_for_location",
    "ranked_values",
    "serialize_scan_log",
    "sessionize",
    "simulate_location",
    "total_presence",
]

__version__ = "0.1.0"
