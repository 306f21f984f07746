"""Command-line front end: one subcommand per pipeline stage.

Stages compose through files (CSV between stages, JSON for graphs,
reports and fits), so each stage's output doubles as a test fixture.
Every subcommand computes its full result before writing anything, so a
failing run never leaves a partial output file.

Exit codes: 0 success, 1 usage error, 2 domain error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import distributions, encounters, genmodel, graph, metrics, query, scanlog
from . import sessionizer, simulator
from .errors import PipelineError

EXIT_USAGE = 1
EXIT_DOMAIN = 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse defaults to exit code 2
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _write(path: str | None, content: str) -> None:
    if path is None:
        sys.stdout.write(content)
    else:
        Path(path).write_text(content, encoding="utf-8")


def _read(path: str) -> str:
    return Path(path).read_text(encoding="utf-8")


def _session_config(args) -> sessionizer.SessionConfig:
    return sessionizer.SessionConfig(gap_threshold=args.gap, pad=args.pad)


def _cmd_simulate(args) -> int:
    profile = simulator.parse_profile(_read(args.profile))
    events = simulator.simulate_location(profile, args.duration, args.seed)
    _write(args.output, scanlog.serialize_scan_log(events))
    return 0


def _cmd_sessionize(args) -> int:
    events = scanlog.parse_scan_log(_read(args.input))
    sessions = sessionizer.sessionize(events, _session_config(args))
    _write(args.output, sessionizer.serialize_sessions(sessions))
    return 0


def _cmd_encounters(args) -> int:
    sessions = sessionizer.parse_sessions(_read(args.input))
    encs = encounters.detect_encounters(sessions, min_overlap=args.min_overlap)
    out = encounters.serialize_encounters(encs)
    edges_out = (
        encounters.serialize_edges(encounters.aggregate_edges(encs))
        if args.edges
        else None
    )
    _write(args.output, out)
    if edges_out is not None:
        _write(args.edges, edges_out)
    return 0


def _cmd_graph(args) -> int:
    records = encounters.parse_edges(_read(args.input))
    presence: dict[str, float] = {}
    if args.sessions:
        sessions = sessionizer.parse_sessions(_read(args.sessions))
        presence = graph.presence_for_location(
            sessionizer.total_presence(sessions), args.location
        )
    g = graph.build_graph(
        [r for r in records if r.scanner_id == args.location], presence, args.location
    )
    _write(args.output, g.dumps())
    return 0


def _cmd_metrics(args) -> int:
    g = graph.EncounterGraph.loads(_read(args.input))
    report = metrics.metrics_report(g)
    _write(args.output, report.dumps())
    return 0


def _measure_values(g, measure: str) -> dict[str, float]:
    core = graph.induced_subgraph(g, graph.connected_components(g)[0])
    if measure == "degree":
        return {v: float(d) for v, d in metrics.degree_centrality(core).items()}
    if measure == "closeness":
        return metrics.closeness_centrality(core)
    return metrics.betweenness_centrality(core)


def _cmd_rankplot(args) -> int:
    g = graph.EncounterGraph.loads(_read(args.input))
    if g.num_nodes == 0:
        raise PipelineError("empty graph has no ranked series")
    series = distributions.ranked_values(
        _measure_values(g, args.measure), measure=args.measure
    )
    _write(args.output, distributions.serialize_rank_series(series))
    return 0


def _cmd_fit(args) -> int:
    series = distributions.parse_rank_series(_read(args.input), measure=args.measure)
    fit_range = None
    if args.fit_from is not None or args.fit_to is not None:
        lo = args.fit_from if args.fit_from is not None else 1
        hi = args.fit_to if args.fit_to is not None else len(series)
        fit_range = (lo, hi)
    fit = distributions.fit_rank_exponent(series, fit_range)
    _write(args.output, fit.dumps())
    return 0


def _cmd_genmodel(args) -> int:
    spec = genmodel.ModelSpec(kind=args.kind, n=args.n, m=args.m, seed=args.seed)
    g = genmodel.generate(spec)
    _write(args.output, g.dumps())
    return 0


def _load_store(args) -> query.EncounterStore:
    return query.EncounterStore.from_files(
        [_read(p) for p in args.sessions or []],
        [_read(p) for p in args.edges or []],
    )


def _cmd_query(args) -> int:
    store = _load_store(args)
    if args.action == "relationship":
        result = store.relationship_report(args.device_a, args.device_b)
    elif args.action == "ego":
        result = store.ego_network(args.device, args.radius).to_json_dict()
    else:  # contacts
        ranked = store.likely_contacts(args.device, args.k)
        result = {
            "device": args.device,
            "heuristic": query.LIKELY_CONTACTS_HEURISTIC,
            "contacts": [
                {"device": other, "score": score} for other, score in ranked
            ],
        }
    _write(args.output, json.dumps(result, indent=2) + "\n")
    return 0


def _cmd_pipeline(args) -> int:
    """Chain scan log -> sessions -> encounters -> per-location graph + report."""
    outdir = Path(args.outdir)
    events = scanlog.parse_scan_log(_read(args.input))
    sessions = sessionizer.sessionize(events, _session_config(args))
    encs = encounters.detect_encounters(sessions, min_overlap=args.min_overlap)
    edges = encounters.aggregate_edges(encs)
    totals = sessionizer.total_presence(sessions)

    locations = sorted({s.scanner_id for s in sessions})
    graphs = {}
    reports = {}
    for location in locations:
        g = graph.build_graph(
            [r for r in edges if r.scanner_id == location],
            graph.presence_for_location(totals, location),
            location,
        )
        graphs[location] = g.dumps()
        reports[location] = metrics.metrics_report(g).dumps()

    # everything computed; only now touch the filesystem
    outdir.mkdir(parents=True, exist_ok=True)
    (outdir / "sessions.csv").write_text(
        sessionizer.serialize_sessions(sessions), encoding="utf-8"
    )
    (outdir / "encounters.csv").write_text(
        encounters.serialize_encounters(encs), encoding="utf-8"
    )
    (outdir / "edges.csv").write_text(
        encounters.serialize_edges(edges), encoding="utf-8"
    )
    for location in locations:
        (outdir / f"graph_{location}.json").write_text(
            graphs[location], encoding="utf-8"
        )
        (outdir / f"report_{location}.json").write_text(
            reports[location], encoding="utf-8"
        )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="encounternet", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("simulate", help="generate a synthetic scan log")
    p.add_argument("--profile", required=True, help="location profile file")
    p.add_argument("--duration", type=float, default=3600.0, help="seconds to simulate")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=_cmd_simulate)

    p = sub.add_parser("sessionize", help="scan log CSV -> sessions CSV")
    p.add_argument("input")
    p.add_argument("--gap", type=float, default=sessionizer.DEFAULT_GAP_THRESHOLD)
    p.add_argument("--pad", type=float, default=sessionizer.DEFAULT_PAD)
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=_cmd_sessionize)

    p = sub.add_parser("encounters", help="sessions CSV -> encounters CSV")
    p.add_argument("input")
    p.add_argument("--min-overlap", type=float, default=0.0)
    p.add_argument("--edges", default=None, help="also write aggregated edges CSV here")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=_cmd_encounters)

    p = sub.add_parser("graph", help="edges CSV -> graph JSON for one location")
    p.add_argument("input")
    p.add_argument("--location", required=True)
    p.add_argument("--sessions", default=None, help="sessions CSV for presence weights")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=_cmd_graph)

    p = sub.add_parser("metrics", help="graph JSON -> report JSON")
    p.add_argument("input")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=_cmd_metrics)

    p = sub.add_parser("rankplot", help="graph JSON -> ranked value CSV")
    p.add_argument("input")
    p.add_argument(
        "--measure", choices=("degree", "closeness", "betweenness"), default="degree"
    )
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=_cmd_rankplot)

    p = sub.add_parser("fit", help="ranked CSV -> power-law fit JSON")
    p.add_argument("input")
    p.add_argument(
        "--measure", choices=("degree", "closeness", "betweenness"), default="degree"
    )
    p.add_argument("--fit-from", type=int, default=None)
    p.add_argument("--fit-to", type=int, default=None)
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=_cmd_fit)

    p = sub.add_parser("genmodel", help="generate a reference model graph")
    p.add_argument("--kind", choices=("ba", "er"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=float, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=_cmd_genmodel)

    p = sub.add_parser("query", help="analyst queries over merged outputs")
    p.add_argument("--sessions", action="append", default=[])
    p.add_argument("--edges", action="append", default=[])
    p.add_argument("-o", "--output", default=None)
    qsub = p.add_subparsers(dest="action", required=True)
    q = qsub.add_parser("relationship")
    q.add_argument("device_a")
    q.add_argument("device_b")
    q = qsub.add_parser("ego")
    q.add_argument("device")
    q.add_argument("--radius", type=int, choices=(1, 2), default=1)
    q = qsub.add_parser("contacts")
    q.add_argument("device")
    q.add_argument("-k", type=int, default=10)
    p.set_defaults(func=_cmd_query)

    p = sub.add_parser("pipeline", help="scan log -> sessions/encounters/graphs/reports")
    p.add_argument("input")
    p.add_argument("-o", "--outdir", required=True)
    p.add_argument("--gap", type=float, default=sessionizer.DEFAULT_GAP_THRESHOLD)
    p.add_argument("--pad", type=float, default=sessionizer.DEFAULT_PAD)
    p.add_argument("--min-overlap", type=float, default=0.0)
    p.set_defaults(func=_cmd_pipeline)

    return parser


def run_cli(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except PipelineError as exc:
        print(f"encounternet: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except FileNotFoundError as exc:
        print(f"encounternet: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


def main() -> None:
    raise SystemExit(run_cli())
