#!/usr/bin/env python3
"""Weight-robustness experiments on the bundled study instance.

Part one re-solves the assignment under each bundled weighting sequence at a
range of budgets and reports where the optimum is weight-independent. Part
two ranges each transmitter weight individually, holding the others fixed,
to find how far it can move before the optimal assignment changes.
"""

import argparse

from hfdf_assign import (
    bundled_path,
    load_scenario,
    load_weight_sequences,
    max_excess_budget,
    weight_range,
    weight_sequence_study,
)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--scenario", default=str(bundled_path("study.json")))
    parser.add_argument("--sequences", default=str(bundled_path("weight_sequences.json")))
    parser.add_argument("--tol", type=float, default=1e-4)
    args = parser.parse_args()

    scenario, _ = load_scenario(args.scenario)
    sequences = load_weight_sequences(args.sequences)
    top = max_excess_budget(scenario)

    print("== assignment invariance across weighting sequences ==")
    for budget in range(top + 1):
        report = weight_sequence_study(scenario, sequences, budget)
        verdict = "identical" if report.all_assignments_identical else (
            f"{len(report.disagreements)} disagreeing pair(s)"
        )
        print(f"budget {budget}: {verdict}")

    budget = top // 2
    print(f"\n== per-weight invariance ranges at budget {budget} ==")
    for i in range(scenario.num_transmitters):
        r = weight_range(scenario, budget, i, args.tol)
        print(
            f"transmitter {i}: [{r.low:.4f}, {r.high:.4f}] "
            f"around {r.original_value:.4f}"
        )


if __name__ == "__main__":
    main()
