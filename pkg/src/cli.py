import argparse
import logging
import sys
from typing import List, Optional

from .config.verification_config import VerificationConfig
from .data.enumerators import enumerate_connected_graphs
from .data.graph6 import emit_edge_list, emit_graph6
from .data.loaders import (
    emit_transit_text,
    fixture_profile,
    list_fixtures,
    load_fixture,
    load_graph,
    load_transit,
)
from .errors import ArgumentError, GraphToolError, InternalConsistencyError
from .models.axioms import ALL_AXIOMS, STRICT, SUBSET, AxiomId, axiom_profile
from .models.campaigns import CampaignEngine, TheoremId, check_fixture, minimize_counterexample
from .models.gated import AmalgamSpec, gate, gated_amalgam, glue, is_gated
from .models.graph import VertexSet, is_connected
from .models.metric import classify
from .models.transit import equals_interval_function, interval_function, underlying_graph
from .reporting.formatters import (
    axiom_report_to_dict,
    classification_to_dict,
    format_axiom_reports,
    format_campaign,
    format_classification,
    format_fixture_table,
    to_json,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


def _parse_vertices(text: str) -> List[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise ArgumentError(f"expected comma-separated vertex numbers, got {text!r}") from None


def cmd_classify(args: argparse.Namespace) -> int:
    g = load_graph(args.graph)
    report = classify(g)
    if args.format == "json":
        print(to_json(classification_to_dict(report, emit_graph6(g))))
    else:
        print(format_classification(report))
    return EXIT_OK


def cmd_check_axioms(args: argparse.Namespace) -> int:
    if (args.graph is None) == (args.transit is None):
        raise ArgumentError("give exactly one of --graph or --transit")
    r = interval_function(load_graph(args.graph)) if args.graph is not None else load_transit(args.transit)
    axioms = AxiomId.parse_list(args.axioms) if args.axioms else list(ALL_AXIOMS)
    reports = list(axiom_profile(r, axioms, containment=args.containment).values())
    if args.format == "json":
        print(to_json([axiom_report_to_dict(rep, r) for rep in reports]))
    else:
        print(format_axiom_reports(reports, r))
    return EXIT_OK


def cmd_underlying_graph(args: argparse.Namespace) -> int:
    r = load_transit(args.transit)
    g = underlying_graph(r)
    interval = equals_interval_function(r) if is_connected(g) else None
    if args.format == "json":
        payload = {"graph6": emit_graph6(g), "edges": [list(e) for e in g.edges()],
                   "connected": is_connected(g), "interval_function": interval}
        print(to_json(payload))
    else:
        print(emit_graph6(g))
        print("edges: " + " ".join(f"{r.name(u)}-{r.name(v)}" for u, v in g.edges()))
        print(f"connected: {str(is_connected(g)).lower()}")
        if interval is not None:
            print(f"interval function: {str(interval).lower()}")
    return EXIT_OK


def cmd_gate(args: argparse.Namespace) -> int:
    g = load_graph(args.graph)
    s = VertexSet.of(_parse_vertices(args.set))
    if args.vertex is not None:
        found = gate(g, args.vertex, s)
        if args.format == "json":
            print(to_json({"vertex": args.vertex, "set": s.to_list(), "gate": found}))
        else:
            print("none" if found is None else found)
        return EXIT_OK
    gates = {y: gate(g, y, s) for y in range(g.n)}
    gated = is_gated(g, s)
    if args.format == "json":
        print(to_json({"set": s.to_list(), "gated": gated, "gates": {str(y): x for y, x in gates.items()}}))
    else:
        print(f"gated: {str(gated).lower()}")
        for y, x in gates.items():
            print(f"  {y} -> {'none' if x is None else x}")
    return EXIT_OK


def cmd_amalgam(args: argparse.Namespace) -> int:
    text = args.spec
    if not text.lstrip().startswith("{"):
        with open(text, "r") as f:
            text = f.read()
    spec = AmalgamSpec.from_json(text)
    g = glue(spec) if args.unchecked else gated_amalgam(spec)
    report = classify(g)
    if args.format == "json":
        print(to_json(classification_to_dict(report, emit_graph6(g))))
    else:
        print(emit_graph6(g))
        print(format_classification(report))
    return EXIT_OK


def build_config(args: argparse.Namespace) -> VerificationConfig:
    base = VerificationConfig.acceptance() if args.acceptance else VerificationConfig()
    config = VerificationConfig.from_env(
        seed=args.seed,
        max_n=base.max_n,
        transit_samples=base.transit_samples,
        workers=base.workers,
        show_progress=base.show_progress,
    )
    return config.with_overrides(
        max_n=args.max_n,
        transit_samples=args.samples,
        workers=args.workers,
        show_progress=True if args.progress else None,
        graph_stream=args.graphs,
    )


def cmd_verify(args: argparse.Namespace) -> int:
    config = build_config(args)
    theorems = list(TheoremId) if args.theorem == "all" else [TheoremId.parse(args.theorem)]
    engine = CampaignEngine(config)
    reports = []
    for theorem in theorems:
        report = engine.verify(theorem)
        if args.minimize and not report.passed:
            report = minimize_counterexample(report)
        reports.append(report)
    if args.format == "json":
        payload = [r.to_dict() for r in reports]
        print(to_json(payload[0] if len(payload) == 1 else payload))
    else:
        print("\n".join(format_campaign(r) for r in reports))
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAILED


def cmd_fixtures(args: argparse.Namespace) -> int:
    if args.show:
        print(emit_transit_text(load_fixture(args.show)), end="")
        return EXIT_OK
    names = list_fixtures()
    if args.check:
        failures = {name: check_fixture(name) for name in names}
        if args.format == "json":
            print(to_json({name: {"pass": msg is None, "message": msg} for name, msg in failures.items()}))
        else:
            for name, msg in failures.items():
                print(f"{name}: {'ok' if msg is None else msg}")
        return EXIT_OK if all(msg is None for msg in failures.values()) else EXIT_FAILED
    rows = []
    for name in names:
        profile = fixture_profile(name)
        rows.append({"name": name, "fails": profile.fails.value, "description": profile.description,
                     "holds": " ".join(a.value for a in profile.holds)})
    if args.format == "json":
        print(to_json(rows))
    else:
        print(format_fixture_table(rows))
    return EXIT_OK


def cmd_generate(args: argparse.Namespace) -> int:
    if (args.graph is None) == (args.connected is None):
        raise ArgumentError("give exactly one of --graph or --connected")
    graphs = [load_graph(args.graph)] if args.graph is not None else enumerate_connected_graphs(args.connected)
    for g in graphs:
        if args.format == "edges":
            print(emit_edge_list(g), end="")
        else:
            print(emit_graph6(g))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="graph-intervals",
        description="Classify graphs by metric class and check betweenness axioms of transit functions.",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="Debug logging on stderr")
    subparsers = parser.add_subparsers(dest="command")

    output = argparse.ArgumentParser(add_help=False)
    output.add_argument("--format", choices=("json", "text"), default="text", help="Output format (default: text)")

    # -- classify --
    p = subparsers.add_parser("classify", parents=[output], help="Decide the five metric graph classes")
    p.add_argument("--graph", required=True, help="graph6 string, file, '-' or constructor such as wheel:5")
    p.set_defaults(handler=cmd_classify)

    # -- check-axioms --
    p = subparsers.add_parser("check-axioms", parents=[output], help="Check axioms on a transit function")
    p.add_argument("--graph", help="Use the interval function of this graph")
    p.add_argument("--transit", help="Transit-function file or fixture name such as fixtures/ex3")
    p.add_argument("--axioms", help="Comma-separated axiom ids (default: all)")
    p.add_argument("--containment", choices=(STRICT, SUBSET), default=STRICT,
                   help="Reading of the J0p intersection hypothesis (default: strict)")
    p.set_defaults(handler=cmd_check_axioms)

    # -- underlying-graph --
    p = subparsers.add_parser("underlying-graph", parents=[output], help="Underlying graph of a transit function")
    p.add_argument("--transit", required=True)
    p.set_defaults(handler=cmd_underlying_graph)

    # -- gate --
    p = subparsers.add_parser("gate", parents=[output], help="Gates of vertices in a vertex set")
    p.add_argument("--graph", required=True)
    p.add_argument("--set", required=True, help="Comma-separated vertices")
    p.add_argument("--vertex", type=int, help="Only report the gate of this vertex")
    p.set_defaults(handler=cmd_gate)

    # -- amalgam --
    p = subparsers.add_parser("amalgam", parents=[output], help="Gated amalgam of two graphs")
    p.add_argument("--spec", required=True, help='JSON {"g1": g6, "g2": g6, "iso": [[a, b], ...]} or a file')
    p.add_argument("--unchecked", action="store_true", help="Glue without requiring gated shared sets")
    p.set_defaults(handler=cmd_amalgam)

    # -- verify --
    p = subparsers.add_parser("verify", parents=[output], help="Run a verification campaign")
    p.add_argument("theorem", help="Campaign id such as T-4.1, or 'all'")
    p.add_argument("--max-n", type=int, help="Largest graph order to enumerate")
    p.add_argument("--samples", type=int, help="Sampled transit functions per size")
    p.add_argument("--seed", type=int, help="Sampling seed (default: $TOOL_SEED or 0)")
    p.add_argument("--workers", type=int, help="Worker processes, 0 for one per CPU")
    p.add_argument("--progress", action="store_true", help="Show a progress bar")
    p.add_argument("--acceptance", action="store_true", help="Use the full acceptance budget")
    p.add_argument("--minimize", action="store_true", help="Shrink counterexamples by vertex deletion")
    p.add_argument("--graphs", metavar="FILE", help="Check graphs from a graph6 file instead of enumerating")
    p.set_defaults(handler=cmd_verify)

    # -- fixtures --
    p = subparsers.add_parser("fixtures", parents=[output], help="List, show or check the shipped fixtures")
    p.add_argument("--list", action="store_true", help="List fixture names (default)")
    p.add_argument("--show", metavar="NAME", help="Print one fixture in transit text format")
    p.add_argument("--check", action="store_true", help="Check every fixture against its profile")
    p.set_defaults(handler=cmd_fixtures)

    # -- generate --
    p = subparsers.add_parser("generate", help="Emit graphs as graph6 or edge lists")
    p.add_argument("--graph", help="Constructor or graph6 to re-emit")
    p.add_argument("--connected", type=int, metavar="N", help="Every connected labeled graph on N vertices")
    p.add_argument("--format", choices=("graph6", "edges"), default="graph6")
    p.set_defaults(handler=cmd_generate)

    return parser


def configure_logging(verbose: bool) -> None:
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )


def run_cli(argv: Optional[List[str]] = None) -> int:
    """Main CLI entry point; returns the exit status"""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE
    if args.command is None:
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    configure_logging(args.verbose)
    try:
        return args.handler(args)
    except InternalConsistencyError as e:
        logger.error("internal consistency check failed: %s", e)
        return EXIT_FAILED
    except (GraphToolError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
