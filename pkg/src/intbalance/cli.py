"""Command-line front end.

Exit codes: 0 success, 1 domain error (unbalanced, infeasible, fractional
vertex weights), 2 usage or parse error.  Data goes to stdout (or --output),
diagnostics to stderr.  "-" means stdin/stdout.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import feasibility, graphio
from .digraph import (
    WeightedDigraph,
    check_balanced,
    is_integral,
    strongly_connected_components,
)
from .errors import (
    GraphInputError,
    InfeasibleError,
    NonIntegerVertexWeightError,
    NotBalancedError,
)
from .integerize import integerize
from .rational import format_weight, parse_weight

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_USAGE = 2


def _read_input(path: str) -> WeightedDigraph:
    if path == "-":
        return graphio.parse_graph(sys.stdin.read())
    return graphio.read_graph(path)


def _write_output(path: str, g: WeightedDigraph) -> None:
    if path == "-":
        sys.stdout.write(graphio.format_graph(g))
    else:
        graphio.write_graph(path, g)


def _load_graph(source: str):
    try:
        return feasibility.builtin_graph(source)
    except GraphInputError:
        pass
    return graphio.read_graph(source).graph


def cmd_check(args) -> int:
    g = _read_input(args.input)
    try:
        u = check_balanced(g)
    except NotBalancedError as exc:
        print(exc, file=sys.stderr)
        return EXIT_DOMAIN
    for i, ui in enumerate(u):
        print(f"u[{i}] = {format_weight(ui)}")
    print("balanced: yes")
    print(f"u integral: {'yes' if is_integral(u) else 'no'}")
    sccs = strongly_connected_components(g.graph)
    if len(sccs) == 1:
        print("strongly connected: yes")
    else:
        print(f"strongly connected: no ({len(sccs)} components)")
    return EXIT_OK


def cmd_integerize(args) -> int:
    g = _read_input(args.input)
    try:
        weights, report = integerize(g)
    except (NotBalancedError, NonIntegerVertexWeightError) as exc:
        print(exc, file=sys.stderr)
        return EXIT_DOMAIN
    _write_output(args.output, g.replace_weights(weights))
    print(
        f"integerized in {report.iterations} iterations "
        f"({report.initial_decimal_edges} decimal edges eliminated)",
        file=sys.stderr,
    )
    if args.report:
        with open(args.report, "w", encoding="utf-8") as fh:
            for i, step in enumerate(report.steps, start=1):
                fh.write(
                    json.dumps(
                        {
                            "iter": i,
                            "cycle_len": step.cycle_length,
                            "eps": format_weight(step.epsilon),
                            "decimal_edges_remaining": step.decimal_edges_remaining,
                        }
                    )
                    + "\n"
                )
    if args.figure:
        from .plotting import save_convergence_figure

        save_convergence_figure(report, args.figure)
    return EXIT_OK


def cmd_synth(args) -> int:
    if (args.u is None) == (args.seed is None):
        print("synth: give exactly one of --u or --seed", file=sys.stderr)
        return EXIT_USAGE
    g = _load_graph(args.graph)
    if args.u is not None:
        u = [parse_weight(part) for part in args.u.split(",")]
        try:
            weights = feasibility.solve_feasible_w(g, u)
        except InfeasibleError as exc:
            print(exc, file=sys.stderr)
            return EXIT_DOMAIN
        instance = WeightedDigraph(g, weights)
    else:
        instance = feasibility.generate_balanced_instance(
            g,
            args.seed,
            max_weight=args.max_weight,
            max_denominator=args.max_denominator,
        )
    sccs = strongly_connected_components(g)
    if len(sccs) > 1:
        print(f"note: graph has {len(sccs)} strongly connected components",
              file=sys.stderr)
    _write_output(args.output, instance)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="intbalance",
        description="Rewrite balanced digraph weights into nonnegative "
        "integers preserving every vertex's in/out sum.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_check = sub.add_parser("check", help="verify balance, print vertex weights")
    p_check.add_argument("--input", "-i", default="-")
    p_check.set_defaults(func=cmd_check)

    p_int = sub.add_parser("integerize", help="rewrite weights to integers")
    p_int.add_argument("--input", "-i", default="-")
    p_int.add_argument("--output", "-o", default="-")
    p_int.add_argument("--report", help="write a JSON-lines iteration trace")
    p_int.add_argument("--figure", help="write a convergence plot (PNG/PDF)")
    p_int.set_defaults(func=cmd_integerize)

    p_synth = sub.add_parser("synth", help="emit a balanced instance")
    p_synth.add_argument(
        "--graph",
        default="bidirected-triangle",
        help="builtin name (cycleN, bidirected-triangle, two-cycle-loops) "
        "or a graph file path",
    )
    p_synth.add_argument("--u", help="comma-separated vertex weights to realize")
    p_synth.add_argument("--seed", type=int, help="random fractional instance")
    p_synth.add_argument("--max-weight", type=int, default=3)
    p_synth.add_argument("--max-denominator", type=int, default=4)
    p_synth.add_argument("--output", "-o", default="-")
    p_synth.set_defaults(func=cmd_synth)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except GraphInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
