"""Problem instances for HFDF receiver-to-frequency assignment.

Index conventions used throughout the package: ``i`` ranges over transmitter
areas, ``j`` over receiving stations and ``k`` over frequency bands. A station
covers a frequency by dedicating one of its HFDF receivers to it; coverage of
a frequency beyond the fair share FS counts as excess.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

# One station hosts at most this many HFDF receivers.
MAX_RECEIVERS_PER_STATION = 10

WEIGHT_SUM_TOL = 0.01


def _frozen(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class Scenario:
    """A full problem instance.

    ``emission_prob[i][k]`` is the probability of a distress signal from
    area i on frequency k, ``acquisition_prob[i][j][k]`` the probability that
    station j acquires such a signal, and ``bearing_prob[i][j]`` the
    probability that a line of bearing taken by station j lands inside the
    acceptable error region of area i. ``weights[i]`` is the normalized
    importance of area i.

    ``fair_share`` is the per-frequency receiver allotment above which
    coverage counts as excess. It is an explicit input; use
    :func:`fair_share_default` for the conventional ceil(TN / K) value.
    ``station_capacity`` defaults to the physical maximum of 10 receivers
    per station when omitted. ``total_receivers`` is an optional global cap
    on the number of assignments.

    Instances are immutable after construction (arrays are marked read-only)
    and safe to share across workers.
    """

    num_transmitters: int
    num_stations: int
    num_frequencies: int
    emission_prob: np.ndarray
    acquisition_prob: np.ndarray
    bearing_prob: np.ndarray
    weights: np.ndarray
    fair_share: int
    station_capacity: np.ndarray | None = None
    total_receivers: int | None = None
    min_coverage: int = 2

    def __post_init__(self):
        set_ = object.__setattr__
        set_(self, "num_transmitters", int(self.num_transmitters))
        set_(self, "num_stations", int(self.num_stations))
        set_(self, "num_frequencies", int(self.num_frequencies))
        set_(self, "emission_prob", _frozen(np.asarray(self.emission_prob, dtype=float)))
        set_(self, "acquisition_prob", _frozen(np.asarray(self.acquisition_prob, dtype=float)))
        set_(self, "bearing_prob", _frozen(np.asarray(self.bearing_prob, dtype=float)))
        set_(self, "weights", _frozen(np.asarray(self.weights, dtype=float)))
        set_(self, "fair_share", int(self.fair_share))
        cap = self.station_capacity
        if cap is None:
            cap = np.full(self.num_stations, MAX_RECEIVERS_PER_STATION, dtype=np.int64)
        set_(self, "station_capacity", _frozen(np.asarray(cap, dtype=np.int64)))
        if self.total_receivers is not None:
            set_(self, "total_receivers", int(self.total_receivers))
        set_(self, "min_coverage", int(self.min_coverage))

    def __eq__(self, other):
        if not isinstance(other, Scenario):
            return NotImplemented
        return (
            self.num_transmitters == other.num_transmitters
            and self.num_stations == other.num_stations
            and self.num_frequencies == other.num_frequencies
            and np.array_equal(self.emission_prob, other.emission_prob)
            and np.array_equal(self.acquisition_prob, other.acquisition_prob)
            and np.array_equal(self.bearing_prob, other.bearing_prob)
            and np.array_equal(self.weights, other.weights)
            and self.fair_share == other.fair_share
            and np.array_equal(self.station_capacity, other.station_capacity)
            and self.total_receivers == other.total_receivers
            and self.min_coverage == other.min_coverage
        )


@dataclass(frozen=True, eq=False)
class CoefficientMatrix:
    """Composite objective coefficients c[j][k].

    c[j][k] is the expected number of accurate lines of bearing gained by
    assigning station j to frequency k, aggregated over all transmitter
    areas. Entries are nonnegative by construction.
    """

    c: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "c", _frozen(np.asarray(self.c, dtype=float)))

    def __eq__(self, other):
        if not isinstance(other, CoefficientMatrix):
            return NotImplemented
        return np.array_equal(self.c, other.c)

    @property
    def shape(self) -> tuple[int, int]:
        return self.c.shape


@dataclass(frozen=True, eq=False)
class Assignment:
    """A binary station-frequency assignment plus its excess vector.

    ``x[j][k]`` is 1 when station j covers frequency k. ``y[k]`` is the
    excess coverage of frequency k, always the minimal value
    max(0, coverage_k - FS) for assignments produced by the solvers.
    """

    x: np.ndarray
    y: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "x", _frozen(np.asarray(self.x, dtype=np.int64)))
        object.__setattr__(self, "y", _frozen(np.asarray(self.y, dtype=np.int64)))

    @classmethod
    def from_x(cls, x, fair_share: int) -> "Assignment":
        """Build an assignment with the minimal excess vector for ``x``."""
        x = np.asarray(x, dtype=np.int64)
        y = np.maximum(0, x.sum(axis=0) - int(fair_share))
        return cls(x, y)

    def __eq__(self, other):
        if not isinstance(other, Assignment):
            return NotImplemented
        return np.array_equal(self.x, other.x) and np.array_equal(self.y, other.y)

    @property
    def total_excess(self) -> int:
        return int(self.y.sum())


@dataclass(frozen=True)
class NPoint:
    """One nondominated solution: f1 maximized under an excess budget.

    ``f2`` is the negated total excess of the realized assignment;
    ``budget`` is the excess cap the point was solved under.
    """

    assignment: Assignment
    f1: float
    f2: int
    budget: int


@dataclass(frozen=True)
class Frontier:
    """N-points ordered by increasing budget, mutually nondominated."""

    points: tuple[NPoint, ...]

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)


@dataclass(frozen=True)
class ValidationReport:
    passed: bool
    failures: tuple[str, ...]


def _prob_failures(name: str, table: np.ndarray) -> list[str]:
    bad = np.argwhere((table < 0.0) | (table > 1.0))
    return [
        "probability out of range at {}[{}]".format(name, "][".join(str(v) for v in idx))
        for idx in bad
    ]


def validate_scenario(s: Scenario) -> ValidationReport:
    """Check every instance invariant; report all violations, abort nothing.

    Pure and idempotent: the scenario is never modified and repeated calls
    return the same report.
    """
    failures: list[str] = []
    i_n, j_n, k_n = s.num_transmitters, s.num_stations, s.num_frequencies
    for label, count in (("num_transmitters", i_n), ("num_stations", j_n), ("num_frequencies", k_n)):
        if count < 1:
            failures.append(f"{label} must be positive, got {count}")
    if i_n < 1 or j_n < 1 or k_n < 1:
        return ValidationReport(False, tuple(failures))

    shapes = (
        ("F", s.emission_prob, (i_n, k_n)),
        ("P", s.acquisition_prob, (i_n, j_n, k_n)),
        ("W", s.bearing_prob, (i_n, j_n)),
        ("U", s.weights, (i_n,)),
        ("m", s.station_capacity, (j_n,)),
    )
    for name, table, want in shapes:
        if table.shape != want:
            failures.append(f"{name} has shape {table.shape}, expected {want}")
    if failures:
        return ValidationReport(False, tuple(failures))

    failures += _prob_failures("F", s.emission_prob)
    failures += _prob_failures("P", s.acquisition_prob)
    failures += _prob_failures("W", s.bearing_prob)
    failures += _prob_failures("U", s.weights)

    total_u = float(s.weights.sum())
    if abs(total_u - 1.0) > WEIGHT_SUM_TOL:
        failures.append(f"weights sum {total_u:.4f} outside [0.99, 1.01]")

    if s.fair_share < 1:
        failures.append(f"fair_share must be >= 1, got {s.fair_share}")
    if s.min_coverage < 0:
        failures.append(f"min_coverage must be >= 0, got {s.min_coverage}")
    if s.total_receivers is not None and s.total_receivers < 0:
        failures.append(f"total_receivers must be >= 0, got {s.total_receivers}")
    for j in range(j_n):
        cap = int(s.station_capacity[j])
        if not 0 <= cap <= MAX_RECEIVERS_PER_STATION:
            failures.append(f"m[{j}] = {cap} outside [0, {MAX_RECEIVERS_PER_STATION}]")

    active = int((s.station_capacity >= 1).sum())
    if active < s.min_coverage:
        failures.append(
            f"coverage infeasible for every k: {active} station(s) have receivers, "
            f"min_coverage = {s.min_coverage}"
        )

    return ValidationReport(not failures, tuple(failures))


def fair_share_default(total_receivers: int, num_frequencies: int) -> int:
    """Conventional fair share: smallest integer >= TN / K."""
    if num_frequencies < 1:
        raise ValueError("zero frequencies")
    if total_receivers < 0:
        raise ValueError(f"negative receiver count {total_receivers}")
    return -(-int(total_receivers) // int(num_frequencies))


def max_excess_budget(s: Scenario) -> int:
    """Largest total excess any assignment can realize.

    Per frequency the achievable coverage is capped by the number of
    stations holding at least one receiver and by the global receiver cap;
    whatever exceeds the fair share is excess. This is the natural upper
    endpoint for a budget sweep.
    """
    active = int((s.station_capacity >= 1).sum())
    per_freq = active if s.total_receivers is None else min(active, s.total_receivers)
    return s.num_frequencies * max(0, per_freq - s.fair_share)
