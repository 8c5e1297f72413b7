"""Command-line front end.

Exit codes: 0 success, 1 infeasible instance (or solver/oracle mismatch),
2 input error. Results go to stdout or the requested files, diagnostics to
stderr.
"""

from __future__ import annotations

import argparse
import re
import sys

import numpy as np

from .exports import emit_plot, write_frontier_csv, write_frontier_json
from .frontier import frontier_report, sweep
from .model import max_excess_budget
from .scenario_io import (
    ScenarioFormatError,
    load_scenario,
    load_weight_sequences,
    scenario_coefficients,
)
from .sensitivity import weight_range, weight_sequence_study
from .solver import (
    BudgetRangeError,
    InfeasibleError,
    OracleLimitError,
    brute_force_oracle,
    solve_budgeted,
)


def _budget_span(text: str) -> range:
    m = re.fullmatch(r"(\d+)\.\.(\d+)", text)
    if not m:
        raise argparse.ArgumentTypeError(f"expected LO..HI, got '{text}'")
    lo, hi = int(m.group(1)), int(m.group(2))
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty budget range '{text}'")
    return range(lo, hi + 1)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hfdf-assign",
        description="Exact two-objective HFDF receiver-to-frequency assignment.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="maximize f1 at one excess budget")
    p.add_argument("--scenario", required=True)
    p.add_argument("--budget", type=int, required=True)

    p = sub.add_parser("frontier", help="sweep budgets and report the efficient frontier")
    p.add_argument("--scenario", required=True)
    p.add_argument("--budgets", type=_budget_span, default=None, metavar="LO..HI")
    p.add_argument("--csv", default=None)
    p.add_argument("--json", default=None)
    p.add_argument("--svg", default=None)

    p = sub.add_parser("oracle", help="cross-check the solver against exhaustive enumeration")
    p.add_argument("--scenario", required=True)
    p.add_argument("--budget", type=int, required=True)

    p = sub.add_parser("weights", help="re-solve under each weight sequence and compare")
    p.add_argument("--scenario", required=True)
    p.add_argument("--sequences", required=True)
    p.add_argument("--budget", type=int, required=True)

    p = sub.add_parser("range", help="invariance interval of one transmitter weight")
    p.add_argument("--scenario", required=True)
    p.add_argument("--budget", type=int, required=True)
    p.add_argument("--transmitter", type=int, required=True)
    p.add_argument("--tol", type=float, default=1e-4)

    return parser


def _print_solution(budget: int, f1: float, f2: int, x: np.ndarray, y: np.ndarray) -> None:
    print(f"budget = {budget}")
    print(f"f1 = {f1:.6f}")
    print(f"f2 = {f2}")
    print("x =")
    for row in x:
        print(" ".join(str(v) for v in row))
    print("y = " + " ".join(str(v) for v in y))


def _cmd_solve(args) -> int:
    scenario, explicit = load_scenario(args.scenario)
    result = solve_budgeted(scenario, scenario_coefficients(scenario, explicit), args.budget)
    _print_solution(args.budget, result.f1, result.f2, result.assignment.x, result.assignment.y)
    return 0


def _cmd_frontier(args) -> int:
    scenario, explicit = load_scenario(args.scenario)
    budgets = args.budgets if args.budgets is not None else range(max_excess_budget(scenario) + 1)
    front = sweep(scenario, scenario_coefficients(scenario, explicit), budgets)
    print(frontier_report(front))
    if args.csv:
        write_frontier_csv(front, args.csv)
    if args.json:
        write_frontier_json(front, args.json)
    if args.svg:
        emit_plot(front, args.svg)
    return 0


def _cmd_oracle(args) -> int:
    scenario, explicit = load_scenario(args.scenario)
    coefficients = scenario_coefficients(scenario, explicit)
    solved = solve_budgeted(scenario, coefficients, args.budget)
    reference = brute_force_oracle(scenario, coefficients, args.budget)
    print(f"solver f1 = {solved.f1:.6f}")
    print(f"oracle f1 = {reference.f1:.6f}")
    same_value = solved.f1 == reference.f1
    same_x = bool(np.array_equal(solved.assignment.x, reference.assignment.x))
    if same_value and same_x:
        print("match")
        return 0
    print(
        f"mismatch: solver f1={solved.f1!r} x={solved.assignment.x.reshape(-1).tolist()}, "
        f"oracle f1={reference.f1!r} x={reference.assignment.x.reshape(-1).tolist()}",
        file=sys.stderr,
    )
    return 1


def _cmd_weights(args) -> int:
    scenario, _ = load_scenario(args.scenario)
    sequences = load_weight_sequences(args.sequences)
    report = weight_sequence_study(scenario, sequences, args.budget)
    for entry in report.results:
        x_flat = " ".join(str(v) for v in entry.assignment.x.reshape(-1))
        print(f"{entry.label}  f1 = {entry.f1:.6f}  x = {x_flat}")
    print(f"all assignments identical: {'yes' if report.all_assignments_identical else 'no'}")
    for a, b in report.disagreements:
        print(f"disagreement: {a} vs {b}")
    return 0


def _cmd_range(args) -> int:
    scenario, _ = load_scenario(args.scenario)
    result = weight_range(scenario, args.budget, args.transmitter, args.tol)
    print(
        f"transmitter {result.weight_index}: low = {result.low:.6f}  "
        f"original = {result.original_value:.6f}  high = {result.high:.6f}"
    )
    return 0


_COMMANDS = {
    "solve": _cmd_solve,
    "frontier": _cmd_frontier,
    "oracle": _cmd_oracle,
    "weights": _cmd_weights,
    "range": _cmd_range,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except InfeasibleError as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return 1
    except (ScenarioFormatError, BudgetRangeError, OracleLimitError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())
