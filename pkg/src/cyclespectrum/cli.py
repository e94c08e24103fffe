"""Command-line interface.

Exit codes: 0 success / claim holds, 1 usage or parse error, 2 hypothesis
not met (or statement out of proved range), 3 alarm / counterexample /
guarantee contradiction.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import ContradictionError, GraphError, HypothesisError
from .graphs import Graph, emit_graph6, named_graph, parse_graph6
from .cycles import (
    cycle_spectrum,
    find_nonseparating_induced_odd_cycle,
    select_structured_odd_cycle,
)
from .campaign import CLAIMS, CampaignSpec, run_campaign
from .paths import three_good_paths, trace_nice_path_search, two_nice_paths
from .structure import RootedGraph
from .consecutive import construct_consecutive_cycles, verify_kcycles

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_HYPOTHESIS = 2
EXIT_ALARM = 3


def _load_graph(text: str, force: str = "auto") -> Graph:
    """Resolve an input as a named expression or a graph6 line.

    Named expressions win ties in auto mode ("C5" is both); pass
    --input-format g6 to force the other reading.  "-" reads one line from
    stdin as graph6.
    """
    if text == "-":
        line = sys.stdin.readline()
        if not line.strip():
            raise GraphError("no graph6 line on stdin")
        return parse_graph6(line)
    if force == "g6":
        return parse_graph6(text)
    if force == "name":
        return named_graph(text)
    try:
        return named_graph(text)
    except GraphError as name_err:
        try:
            return parse_graph6(text)
        except GraphError as g6_err:
            raise GraphError(
                f"input is neither a named expression ({name_err}) "
                f"nor graph6 ({g6_err})"
            )


def _add_input(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("input", help="named expression, graph6 line, or '-' for stdin")
    parser.add_argument(
        "--input-format",
        choices=("auto", "name", "g6"),
        default="auto",
        help="how to interpret the input (default: try name, then graph6)",
    )


def _cmd_spectrum(args) -> int:
    g = _load_graph(args.input, args.input_format)
    report = cycle_spectrum(g, cap=args.cap)
    if args.json:
        print(json.dumps(report.to_json_dict(), indent=2))
    else:
        print(f"graph: n={g.n} m={g.m}")
        print("lengths: {" + ", ".join(str(x) for x in sorted(report.lengths)) + "}")
        print(f"best run: start={report.best_run[0]} length={report.best_run[1]}")
    return EXIT_OK


def _cmd_verify(args) -> int:
    g = _load_graph(args.input, args.input_format)
    report = verify_kcycles(g, args.k)
    if args.json:
        print(json.dumps(report.to_json_dict(), indent=2))
    else:
        hyps = " ".join(f"{name}={'yes' if ok else 'no'}" for name, ok in report.hypotheses.items())
        print(f"k={args.k} hypotheses: {hyps}")
        print(report.note)
    if report.alarm:
        return EXIT_ALARM
    if not report.applicable:
        return EXIT_HYPOTHESIS
    return EXIT_OK


def _cmd_construct(args) -> int:
    g = _load_graph(args.input, args.input_format)
    cert = construct_consecutive_cycles(g, args.k)
    print(json.dumps(cert.to_json_dict(), indent=2))
    return EXIT_OK


def _cmd_paths(args) -> int:
    g = _load_graph(args.input, args.input_format)
    rooted = RootedGraph(g, args.x, args.y)
    if args.trace:
        for line in trace_nice_path_search(rooted):
            print(f"trace: {line}", file=sys.stderr)
    family = two_nice_paths(rooted) if args.mode == "nice2" else three_good_paths(rooted)
    for path in family.paths:
        print(f"length {len(path) - 1}: " + "-".join(str(v) for v in path))
    return EXIT_OK


def _cmd_oddcycle(args) -> int:
    g = _load_graph(args.input, args.input_format)
    if args.structured:
        cyc, tag = select_structured_odd_cycle(g)
        print(f"{tag}: " + "-".join(str(v) for v in cyc))
    else:
        cyc = find_nonseparating_induced_odd_cycle(g)
        print("-".join(str(v) for v in cyc))
    return EXIT_OK


def _cmd_campaign(args) -> int:
    spec = CampaignSpec(
        claim=args.claim, n_min=args.n_min, n_max=args.n_max, k=args.k, corpus=args.corpus
    )
    report = run_campaign(spec, workers=args.workers)
    text = report.to_json()
    if args.out:
        with open(args.out, "w", encoding="ascii") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return EXIT_OK if not report.alarms else EXIT_ALARM


def _cmd_named(args) -> int:
    g = named_graph(args.expr)
    sys.stdout.write(emit_graph6(g))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cyclespectrum",
        description="Cycle spectra, consecutive cycle lengths, and exhaustive verification",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectrum", help="exact cycle spectrum of one graph")
    _add_input(p)
    p.add_argument("--cap", type=int, default=16, help="order cap for exact spectrum")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_spectrum)

    p = sub.add_parser("verify", help="check the k-consecutive-cycles statement")
    _add_input(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("construct", help="emit a consecutive-cycles certificate (k=4 or 5)")
    _add_input(p)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("paths", help="find a nice pair or good triple of root paths")
    _add_input(p)
    p.add_argument("--mode", choices=("nice2", "good3"), required=True)
    p.add_argument("--x", type=int, required=True)
    p.add_argument("--y", type=int, required=True)
    p.add_argument("--trace", action="store_true", help="log the structural case walk to stderr")
    p.set_defaults(func=_cmd_paths)

    p = sub.add_parser("oddcycle", help="find a non-separating induced odd cycle")
    _add_input(p)
    p.add_argument("--structured", action="store_true", help="apply the spaced-neighbor selection")
    p.set_defaults(func=_cmd_oddcycle)

    p = sub.add_parser("campaign", help="exhaustive claim verification over a graph universe")
    p.add_argument("--claim", required=True, choices=CLAIMS)
    p.add_argument("--n-min", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--corpus", default=None, help="graph6 file instead of built-in generation")
    p.add_argument("--out", default=None, help="write the JSON report here instead of stdout")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=_cmd_campaign)

    p = sub.add_parser("named", help="emit graph6 for a named expression")
    p.add_argument("expr")
    p.set_defaults(func=_cmd_named)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except HypothesisError as exc:
        print(f"hypothesis not met: {exc}", file=sys.stderr)
        return EXIT_HYPOTHESIS
    except ContradictionError as exc:
        print(f"ALARM: {exc}", file=sys.stderr)
        return EXIT_ALARM
    except GraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
