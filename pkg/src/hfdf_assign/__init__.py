"""Exact two-objective assignment of HFDF receivers to frequency bands.

The package maximizes the expected number of accurate lines of bearing a
search-and-rescue network produces while keeping excess frequency coverage
in check, and enumerates the full efficient frontier between the two goals
by sweeping an excess budget.
"""

from .coeffs import compute_coefficients, excess, objective1
from .frontier import dominance_filter, frontier_report, sweep
from .model import (
    Assignment,
    CoefficientMatrix,
    Frontier,
    NPoint,
    Scenario,
    ValidationReport,
    fair_share_default,
    max_excess_budget,
    validate_scenario,
)
from .scenario_io import (
    ScenarioFormatError,
    bundled_path,
    load_scenario,
    load_weight_sequences,
    save_scenario,
    scenario_coefficients,
)
from .sensitivity import (
    InvarianceReport,
    SensitivityRange,
    WeightSequence,
    weight_range,
    weight_sequence_study,
)
from .solver import (
    BudgetRangeError,
    FeasibilityReport,
    InfeasibleError,
    OracleLimitError,
    SolveResult,
    brute_force_oracle,
    check_feasible,
    solve_budgeted,
)

__all__ = [
    "Assignment",
    "BudgetRangeError",
    "CoefficientMatrix",
    "FeasibilityReport",
    "Frontier",
    "InfeasibleError",
    "InvarianceReport",
    "NPoint",
    "OracleLimitError",
    "Scenario",
    "ScenarioFormatError",
    "SensitivityRange",
    "SolveResult",
    "ValidationReport",
    "WeightSequence",
    "brute_force_oracle",
    "bundled_path",
    "check_feasible",
    "compute_coefficients",
    "dominance_filter",
    "excess",
    "fair_share_default",
    "frontier_report",
    "load_scenario",
    "load_weight_sequences",
    "max_excess_budget",
    "objective1",
    "save_scenario",
    "scenario_coefficients",
    "solve_budgeted",
    "sweep",
    "validate_scenario",
    "weight_range",
    "weight_sequence_study",
]
