"""Budget sweep and dominance filtering of the efficient frontier."""

from __future__ import annotations

from typing import Iterable, Sequence

from .model import CoefficientMatrix, Frontier, NPoint, Scenario, max_excess_budget
from .solver import BudgetRangeError, InfeasibleError, solve_budgeted


def sweep(s: Scenario, c: CoefficientMatrix, budgets: Iterable[int]) -> Frontier:
    """Solve at every budget in ascending order and keep the nondominated points.

    Each point records f2 from the excess the returned assignment actually
    realizes, not from the requested budget, so non-binding budget levels
    produce duplicates that the dominance filter collapses.
    """
    levels = sorted({int(b) for b in budgets})
    max_b = max_excess_budget(s)
    for b in levels:
        if b < 0 or b > max_b:
            raise BudgetRangeError(f"budget out of range [0, {max_b}]")
    points = []
    for b in levels:
        try:
            result = solve_budgeted(s, c, b)
        except InfeasibleError as exc:
            raise InfeasibleError(f"sweep aborted at budget {b}: {exc}") from exc
        points.append(NPoint(assignment=result.assignment, f1=result.f1, f2=result.f2, budget=b))
    return Frontier(tuple(dominance_filter(points)))


def _dominates(a: NPoint, b: NPoint) -> bool:
    return a.f1 >= b.f1 and a.f2 >= b.f2 and (a.f1 > b.f1 or a.f2 > b.f2)


def dominance_filter(points: Sequence[NPoint]) -> list[NPoint]:
    """Drop weakly dominated points; keep the first of exact duplicates.

    Input order is preserved. A point dominates another when it is at least
    as good in both objectives and strictly better in one.
    """
    kept = []
    for idx, p in enumerate(points):
        if any(i != idx and _dominates(q, p) for i, q in enumerate(points)):
            continue
        if any(q.f1 == p.f1 and q.f2 == p.f2 for q in points[:idx]):
            continue
        kept.append(p)
    return kept


def frontier_report(f: Frontier) -> str:
    """Plain-text table: budget, assignment, excess vector, then f1 and f2."""
    lines = ["budget  x (row-major)  y  f1  f2"]
    for p in f.points:
        x_flat = " ".join(str(v) for v in p.assignment.x.reshape(-1))
        y_flat = " ".join(str(v) for v in p.assignment.y)
        lines.append(f"{p.budget:>6}  {x_flat}  {y_flat}  {p.f1:.6f}  {p.f2}")
    return "\n".join(lines)
