"""Scenario file format: a single self-describing JSON document per instance.

Top-level keys mirror the model fields. ``coefficients`` may carry an
explicit J x K objective-coefficient block that takes precedence over the
matrix assembled from the probability tables; instances whose tables are not
trustworthy ship their coefficients directly this way.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .coeffs import compute_coefficients
from .model import CoefficientMatrix, Scenario, fair_share_default, validate_scenario
from .sensitivity import WeightSequence

DATA_DIR = Path(__file__).resolve().parent / "data"

_REQUIRED_KEYS = (
    "num_transmitters",
    "num_stations",
    "num_frequencies",
    "emission_prob",
    "acquisition_prob",
    "bearing_prob",
    "weights",
)
_OPTIONAL_KEYS = (
    "station_capacity",
    "total_receivers",
    "fair_share",
    "min_coverage",
    "coefficients",
)


class ScenarioFormatError(ValueError):
    """Malformed or invalid scenario / sequence file."""


def bundled_path(name: str) -> Path:
    """Path of a data file shipped with the package, e.g. ``toy.json``."""
    return DATA_DIR / name


def _load_json(path) -> object:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ScenarioFormatError(f"{path}: {exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ScenarioFormatError(
            f"{path}: parse error at line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from exc


def load_scenario(path) -> tuple[Scenario, CoefficientMatrix | None]:
    """Load and validate a scenario, plus its explicit coefficient block if any.

    Unknown keys are rejected outright. ``fair_share`` may be omitted only
    when ``total_receivers`` is present, in which case the conventional
    ceiling default is derived. Every validation failure is reported in one
    error.
    """
    raw = _load_json(path)
    if not isinstance(raw, dict):
        raise ScenarioFormatError(f"{path}: top level must be a JSON object")
    unknown = sorted(set(raw) - set(_REQUIRED_KEYS) - set(_OPTIONAL_KEYS))
    if unknown:
        raise ScenarioFormatError(f"{path}: unknown key(s): {', '.join(unknown)}")
    missing = sorted(set(_REQUIRED_KEYS) - set(raw))
    if missing:
        raise ScenarioFormatError(f"{path}: missing key(s): {', '.join(missing)}")

    fair_share = raw.get("fair_share")
    if fair_share is None:
        if raw.get("total_receivers") is None:
            raise ScenarioFormatError(f"{path}: fair_share required or derivable")
        fair_share = fair_share_default(raw["total_receivers"], raw["num_frequencies"])

    try:
        scenario = Scenario(
            num_transmitters=raw["num_transmitters"],
            num_stations=raw["num_stations"],
            num_frequencies=raw["num_frequencies"],
            emission_prob=raw["emission_prob"],
            acquisition_prob=raw["acquisition_prob"],
            bearing_prob=raw["bearing_prob"],
            weights=raw["weights"],
            fair_share=fair_share,
            station_capacity=raw.get("station_capacity"),
            total_receivers=raw.get("total_receivers"),
            min_coverage=raw.get("min_coverage", 2),
        )
    except (TypeError, ValueError) as exc:
        raise ScenarioFormatError(f"{path}: malformed field: {exc}") from exc

    report = validate_scenario(scenario)
    if not report.passed:
        raise ScenarioFormatError(f"{path}: invalid scenario: " + "; ".join(report.failures))

    coefficients = None
    if raw.get("coefficients") is not None:
        c = np.asarray(raw["coefficients"], dtype=float)
        want = (scenario.num_stations, scenario.num_frequencies)
        if c.shape != want:
            raise ScenarioFormatError(f"{path}: coefficients shape {c.shape}, expected {want}")
        if (c < 0).any():
            raise ScenarioFormatError(f"{path}: coefficients must be nonnegative")
        coefficients = CoefficientMatrix(c)
    return scenario, coefficients


def scenario_coefficients(s: Scenario, explicit: CoefficientMatrix | None) -> CoefficientMatrix:
    """The coefficient matrix to solve with: the explicit block wins."""
    return explicit if explicit is not None else compute_coefficients(s)


def scenario_to_dict(s: Scenario, coefficients: CoefficientMatrix | None = None) -> dict:
    doc = {
        "num_transmitters": s.num_transmitters,
        "num_stations": s.num_stations,
        "num_frequencies": s.num_frequencies,
        "emission_prob": s.emission_prob.tolist(),
        "acquisition_prob": s.acquisition_prob.tolist(),
        "bearing_prob": s.bearing_prob.tolist(),
        "weights": s.weights.tolist(),
        "station_capacity": s.station_capacity.tolist(),
        "total_receivers": s.total_receivers,
        "fair_share": s.fair_share,
        "min_coverage": s.min_coverage,
    }
    if coefficients is not None:
        doc["coefficients"] = coefficients.c.tolist()
    return doc


def save_scenario(path, s: Scenario, coefficients: CoefficientMatrix | None = None) -> None:
    """Write a scenario so that reloading reproduces it field-for-field."""
    doc = scenario_to_dict(s, coefficients)
    Path(path).write_text(json.dumps(doc, indent=2) + "\n", encoding="utf-8")


def load_weight_sequences(path) -> list[WeightSequence]:
    """Load a JSON array of ``{"label": ..., "weights": [...]}`` entries."""
    raw = _load_json(path)
    if not isinstance(raw, list):
        raise ScenarioFormatError(f"{path}: top level must be a JSON array")
    sequences = []
    for pos, entry in enumerate(raw):
        if not isinstance(entry, dict) or set(entry) != {"label", "weights"}:
            raise ScenarioFormatError(
                f"{path}: entry {pos} must have exactly the keys 'label' and 'weights'"
            )
        u = np.asarray(entry["weights"], dtype=float)
        if u.ndim != 1 or len(u) == 0:
            raise ScenarioFormatError(f"{path}: entry '{entry['label']}' weights must be a flat list")
        if ((u < 0) | (u > 1)).any():
            raise ScenarioFormatError(f"{path}: entry '{entry['label']}' has weights outside [0, 1]")
        if abs(float(u.sum()) - 1.0) > 0.01:
            raise ScenarioFormatError(
                f"{path}: entry '{entry['label']}' weights sum to {float(u.sum()):.4f}, expected ~1"
            )
        sequences.append(WeightSequence(label=str(entry["label"]), u=u))
    return sequences
