#!/usr/bin/env python3
"""Enumerate the efficient frontier of the bundled toy instance.

Sweeps the excess-coverage budget over its full range, prints the N-point
table, and optionally writes CSV/JSON/SVG artifacts.
"""

import argparse
from pathlib import Path

from hfdf_assign import (
    bundled_path,
    frontier_report,
    load_scenario,
    max_excess_budget,
    scenario_coefficients,
    sweep,
)
from hfdf_assign.exports import emit_plot, write_frontier_csv, write_frontier_json


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--scenario", default=str(bundled_path("toy.json")))
    parser.add_argument("--out-dir", default=None, help="write frontier.{csv,json,svg} here")
    args = parser.parse_args()

    scenario, explicit = load_scenario(args.scenario)
    coefficients = scenario_coefficients(scenario, explicit)
    budgets = range(max_excess_budget(scenario) + 1)
    front = sweep(scenario, coefficients, budgets)

    print(f"scenario: {args.scenario}")
    print(f"budgets: 0..{max_excess_budget(scenario)}")
    print(frontier_report(front))

    if args.out_dir:
        out = Path(args.out_dir)
        out.mkdir(parents=True, exist_ok=True)
        write_frontier_csv(front, out / "frontier.csv")
        write_frontier_json(front, out / "frontier.json")
        emit_plot(front, out / "frontier.svg")
        print(f"wrote {out}/frontier.csv, frontier.json, frontier.svg")


if __name__ == "__main__":
    main()
