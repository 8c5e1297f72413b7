"""Exact budgeted maximization of f1 and its exhaustive verification oracle.

Both solvers treat the excess-coverage objective as a budget constraint
(total excess <= B) and maximize the expected accurate-bearing-line count
over binary assignments, subject to per-station receiver capacities, an
optional global receiver cap, and the per-frequency minimum coverage.

``solve_budgeted`` runs a depth-first branch and bound over the assignment
cells in row-major order, zero branch first, so that candidate solutions are
reached in lexicographic order and the first incumbent among equal-valued
optima is automatically the lexicographically smallest. ``brute_force_oracle``
enumerates every binary matrix with the same visiting order and identical
value arithmetic, providing an independent check on the search.
"""

from __future__ import annotations

from dataclasses import dataclass
from heapq import nlargest

import numpy as np

from .coeffs import objective1_flat
from .model import Assignment, CoefficientMatrix, Scenario, max_excess_budget

# Enumeration cap for the oracle: 2^24 matrices is the practical ceiling.
ORACLE_CELL_LIMIT = 24

# Upper bounds are computed in floating point; nodes whose bound sits within
# this guard of the incumbent are explored rather than pruned, so rounding in
# the bound arithmetic can never cut off a true optimum.
_BOUND_GUARD = 1e-12


class InfeasibleError(RuntimeError):
    """No assignment satisfies the constraint set."""


class BudgetRangeError(ValueError):
    """Requested excess budget lies outside [0, max_excess_budget]."""


class OracleLimitError(ValueError):
    """Instance too large for exhaustive enumeration."""


@dataclass(frozen=True)
class FeasibilityReport:
    feasible: bool
    violations: tuple[tuple[str, int | None, int], ...]


@dataclass(frozen=True)
class SolveResult:
    assignment: Assignment
    f1: float
    f2: int
    optimal: bool
    nodes_explored: int


def check_feasible(a: Assignment, s: Scenario, budget: int) -> FeasibilityReport:
    """Report every constraint violation of an assignment at a given budget.

    Violations are listed as (constraint id, index, slack) in a fixed order:
    station capacities, the global receiver cap, per-frequency minimum
    coverage, then the excess budget. Slack is negative exactly when the
    constraint is violated; only violated constraints are listed.
    """
    if budget < 0:
        raise ValueError(f"budget must be >= 0, got {budget}")
    x = np.asarray(a.x, dtype=np.int64)
    if x.shape != (s.num_stations, s.num_frequencies):
        raise ValueError(f"assignment shape {x.shape} != ({s.num_stations}, {s.num_frequencies})")
    rows = x.sum(axis=1)
    cols = x.sum(axis=0)
    violations: list[tuple[str, int | None, int]] = []
    for j in range(s.num_stations):
        slack = int(s.station_capacity[j] - rows[j])
        if slack < 0:
            violations.append(("station_capacity", j, slack))
    if s.total_receivers is not None:
        slack = int(s.total_receivers - rows.sum())
        if slack < 0:
            violations.append(("total_receivers", None, slack))
    for k in range(s.num_frequencies):
        slack = int(cols[k] - s.min_coverage)
        if slack < 0:
            violations.append(("min_coverage", k, slack))
    total_excess = int(np.maximum(0, cols - s.fair_share).sum())
    slack = int(budget) - total_excess
    if slack < 0:
        violations.append(("budget", None, slack))
    return FeasibilityReport(not violations, tuple(violations))


def _check_coeff_dims(s: Scenario, c: CoefficientMatrix) -> None:
    if c.c.shape != (s.num_stations, s.num_frequencies):
        raise ValueError(
            f"coefficient shape {c.c.shape} != ({s.num_stations}, {s.num_frequencies})"
        )


def _depth_tables(cf: list[float], j_n: int, k_n: int):
    """Per-depth sorted views of the still-free coefficients.

    At DFS depth d the free cells are exactly the row-major cells d..n-1.
    For each depth this precomputes the descending-sorted free coefficients
    per frequency column, per station row, and overall, each with prefix
    sums, so node bounds are cheap lookups.
    """
    n = j_n * k_n
    col_vals: list[list[tuple[float, ...]]] = [[] for _ in range(n + 1)]
    row_vals: list[list[tuple[float, ...]]] = [[] for _ in range(n + 1)]
    all_vals: list[tuple[float, ...]] = [()] * (n + 1)
    col_vals[n] = [()] * k_n
    row_vals[n] = [()] * j_n
    for d in range(n - 1, -1, -1):
        j, k = divmod(d, k_n)
        cols = list(col_vals[d + 1])
        cols[k] = tuple(sorted(cols[k] + (cf[d],), reverse=True))
        col_vals[d] = cols
        rows = list(row_vals[d + 1])
        rows[j] = tuple(sorted(rows[j] + (cf[d],), reverse=True))
        row_vals[d] = rows
        all_vals[d] = tuple(sorted(all_vals[d + 1] + (cf[d],), reverse=True))

    def prefixes(vals: tuple[float, ...]) -> tuple[float, ...]:
        acc, out = 0.0, [0.0]
        for v in vals:
            acc += v
            out.append(acc)
        return tuple(out)

    col_pre = [[prefixes(v) for v in per_depth] for per_depth in col_vals]
    row_pre = [[prefixes(v) for v in per_depth] for per_depth in row_vals]
    all_pre = [prefixes(v) for v in all_vals]
    return col_vals, col_pre, row_pre, all_pre


def solve_budgeted(s: Scenario, c: CoefficientMatrix, budget: int) -> SolveResult:
    """Maximize f1 subject to all constraints and total excess <= budget.

    Returns a certified optimum; among equal-valued optima the assignment
    whose row-major flattening is lexicographically smallest is returned,
    with the minimal excess vector. Raises ``BudgetRangeError`` when the
    budget is outside [0, max_excess_budget] and ``InfeasibleError`` when
    the minimum-coverage constraint cannot be met.
    """
    _check_coeff_dims(s, c)
    budget = int(budget)
    max_b = max_excess_budget(s)
    if budget < 0 or budget > max_b:
        raise BudgetRangeError(f"budget out of range [0, {max_b}]")

    j_n, k_n = s.num_stations, s.num_frequencies
    n = j_n * k_n
    cf = [float(v) for v in c.c.reshape(-1)]
    caps = [int(v) for v in s.station_capacity]
    tn = None if s.total_receivers is None else int(s.total_receivers)
    fs = int(s.fair_share)
    mc = int(s.min_coverage)

    col_vals, col_pre, row_pre, all_pre = _depth_tables(cf, j_n, k_n)
    j_of = [d // k_n for d in range(n)]
    k_of = [d % k_n for d in range(n)]

    best_val: float | None = None
    best_x: list[int] | None = None
    nodes = 0
    cur = [0] * n
    cov = [0] * k_n
    rowc = [0] * j_n

    def bound(d: int, total: int, exc: int) -> float:
        # Column relaxation: additions below the fair share are free, the
        # rest consume one unit of budget each, so take the best free slots
        # per column and then the best budget-priced leftovers overall.
        free_part = 0.0
        leftovers: list[float] = []
        for k in range(k_n):
            vals = col_vals[d][k]
            slots = fs - cov[k]
            if slots >= len(vals):
                free_part += col_pre[d][k][len(vals)]
            else:
                take = max(0, slots)
                free_part += col_pre[d][k][take]
                leftovers.extend(vals[take:])
        b_res = budget - exc
        ub = free_part + sum(nlargest(b_res, leftovers)) if b_res > 0 else free_part
        if tn is not None:
            pre = all_pre[d]
            ub = min(ub, pre[min(tn - total, len(pre) - 1)])
        row_part = 0.0
        for j in range(j_n):
            pre = row_pre[d][j]
            row_part += pre[min(caps[j] - rowc[j], len(pre) - 1)]
        return min(ub, row_part)

    def visit(d: int, total: int, exc: int, partial: float) -> None:
        nonlocal best_val, best_x, nodes
        nodes += 1
        if d == n:
            for v in cov:
                if v < mc:
                    return
            if best_val is None or partial > best_val:
                best_val = partial
                best_x = cur.copy()
            return
        for k in range(k_n):
            if cov[k] + len(col_vals[d][k]) < mc:
                return
        if best_val is not None and partial + bound(d, total, exc) <= best_val - _BOUND_GUARD:
            return
        visit(d + 1, total, exc, partial)
        j, k = j_of[d], k_of[d]
        if rowc[j] < caps[j] and (tn is None or total < tn):
            new_cov = cov[k] + 1
            new_exc = exc + 1 if new_cov > fs else exc
            if new_exc <= budget:
                cur[d] = 1
                cov[k] = new_cov
                rowc[j] += 1
                visit(d + 1, total + 1, new_exc, partial + cf[d])
                cur[d] = 0
                cov[k] = new_cov - 1
                rowc[j] -= 1

    visit(0, 0, 0, 0.0)
    if best_x is None:
        raise InfeasibleError("no feasible assignment")
    assignment = Assignment.from_x(np.array(best_x, dtype=np.int64).reshape(j_n, k_n), fs)
    return SolveResult(
        assignment=assignment,
        f1=best_val,
        f2=-assignment.total_excess,
        optimal=True,
        nodes_explored=nodes,
    )


def brute_force_oracle(s: Scenario, c: CoefficientMatrix, budget: int) -> SolveResult:
    """Exhaustively enumerate every binary assignment matrix.

    Visits all 2^(J*K) matrices in lexicographic row-major order, keeps the
    first feasible maximum, and evaluates f1 with the same sequential
    arithmetic as the branch-and-bound solver, so results are bit-identical
    whenever both are correct. Intended as an independent correctness
    reference, not a production path.
    """
    _check_coeff_dims(s, c)
    budget = int(budget)
    if budget < 0:
        raise ValueError(f"budget must be >= 0, got {budget}")
    j_n, k_n = s.num_stations, s.num_frequencies
    n = j_n * k_n
    if n > ORACLE_CELL_LIMIT:
        raise OracleLimitError(
            f"oracle limit exceeded: {j_n} x {k_n} = {n} cells > {ORACLE_CELL_LIMIT}"
        )
    cf = [float(v) for v in c.c.reshape(-1)]
    caps = [int(v) for v in s.station_capacity]
    tn = None if s.total_receivers is None else int(s.total_receivers)
    fs = int(s.fair_share)
    mc = int(s.min_coverage)
    j_of = [d // k_n for d in range(n)]
    k_of = [d % k_n for d in range(n)]

    best_val: float | None = None
    best_x: list[int] | None = None
    leaves = 0
    cur = [0] * n
    cov = [0] * k_n
    rowc = [0] * j_n

    def visit(d: int, total: int, partial: float) -> None:
        nonlocal best_val, best_x, leaves
        if d == n:
            leaves += 1
            for j in range(j_n):
                if rowc[j] > caps[j]:
                    return
            if tn is not None and total > tn:
                return
            exc = 0
            for v in cov:
                if v < mc:
                    return
                if v > fs:
                    exc += v - fs
            if exc > budget:
                return
            if best_val is None or partial > best_val:
                best_val = partial
                best_x = cur.copy()
            return
        visit(d + 1, total, partial)
        j, k = j_of[d], k_of[d]
        cur[d] = 1
        cov[k] += 1
        rowc[j] += 1
        visit(d + 1, total + 1, partial + cf[d])
        cur[d] = 0
        cov[k] -= 1
        rowc[j] -= 1

    visit(0, 0, 0.0)
    if best_x is None:
        raise InfeasibleError("no feasible assignment")
    assignment = Assignment.from_x(np.array(best_x, dtype=np.int64).reshape(j_n, k_n), fs)
    # Recompute through the shared evaluator as a belt-and-braces check that
    # the incremental partial sums followed the canonical order.
    f1 = objective1_flat(best_x, cf)
    assert f1 == best_val
    return SolveResult(
        assignment=assignment,
        f1=f1,
        f2=-assignment.total_excess,
        optimal=True,
        nodes_explored=leaves,
    )
