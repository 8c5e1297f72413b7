"""Weight-independence studies and per-weight invariance ranging.

The questions answered here are about the chosen assignment, not the
objective value: objective values always move with the transmitter weights,
but an assignment committed to in advance is justified when it stays optimal
across the weightings that might realize.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from .coeffs import compute_coefficients
from .model import Assignment, Scenario
from .solver import solve_budgeted


@dataclass(frozen=True, eq=False)
class WeightSequence:
    """A labelled transmitter-weight vector."""

    label: str
    u: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.u, dtype=float)
        arr.setflags(write=False)
        object.__setattr__(self, "u", arr)


@dataclass(frozen=True)
class SequenceResult:
    label: str
    assignment: Assignment
    f1: float


@dataclass(frozen=True)
class InvarianceReport:
    """Per-sequence optima plus whether they all coincide.

    ``disagreements`` lists every unordered label pair whose optimal
    assignments differ; it is empty exactly when
    ``all_assignments_identical`` is true.
    """

    results: tuple[SequenceResult, ...]
    all_assignments_identical: bool
    disagreements: tuple[tuple[str, str], ...]


@dataclass(frozen=True)
class SensitivityRange:
    """Interval of one weight over which the optimal assignment is unchanged."""

    weight_index: int
    original_value: float
    low: float
    high: float
    budget: int


def _with_weight(s: Scenario, index: int, value: float) -> Scenario:
    u = np.array(s.weights, dtype=float)
    u[index] = value
    return replace(s, weights=u)


def weight_sequence_study(s: Scenario, sequences, budget: int) -> InvarianceReport:
    """Re-solve the instance under each weight vector and compare assignments.

    Coefficients are rebuilt from the probability tables for every sequence,
    so the scenario must carry complete tables. Assignments are compared
    exactly, in input order.
    """
    results: list[SequenceResult] = []
    for seq in sequences:
        if len(seq.u) != s.num_transmitters:
            raise ValueError(
                f"sequence '{seq.label}' has {len(seq.u)} weights, "
                f"expected {s.num_transmitters}"
            )
        probe = replace(s, weights=seq.u)
        result = solve_budgeted(probe, compute_coefficients(probe), budget)
        results.append(SequenceResult(seq.label, result.assignment, result.f1))
    disagreements = tuple(
        (a.label, b.label)
        for idx, a in enumerate(results)
        for b in results[idx + 1:]
        if not np.array_equal(a.assignment.x, b.assignment.x)
    )
    return InvarianceReport(tuple(results), not disagreements, disagreements)


def weight_range(s: Scenario, budget: int, transmitter: int, tol: float) -> SensitivityRange:
    """Widest interval around one weight keeping the optimal assignment fixed.

    The weight is perturbed in isolation (no renormalization of the others)
    and the instance re-solved at each probe; endpoints are located by
    bisection to within ``tol`` and clamped to [0, 1]. The optimum is an
    argmax of finitely many functions affine in the weight, so the
    invariance region is an interval and bisection is exact.
    """
    if tol <= 0:
        raise ValueError(f"tol must be positive, got {tol}")
    if not 0 <= transmitter < s.num_transmitters:
        raise ValueError(f"transmitter index {transmitter} out of range")
    original = float(s.weights[transmitter])

    baseline = solve_budgeted(s, compute_coefficients(s), budget)
    base_x = baseline.assignment.x

    def matches(value: float) -> bool:
        probe = _with_weight(s, transmitter, value)
        result = solve_budgeted(probe, compute_coefficients(probe), budget)
        return bool(np.array_equal(result.assignment.x, base_x))

    def edge(limit: float) -> float:
        if matches(limit):
            return limit
        good, bad = original, limit
        while abs(bad - good) > tol / 2:
            mid = (good + bad) / 2
            if matches(mid):
                good = mid
            else:
                bad = mid
        return good

    return SensitivityRange(
        weight_index=transmitter,
        original_value=original,
        low=edge(0.0),
        high=edge(1.0),
        budget=int(budget),
    )
