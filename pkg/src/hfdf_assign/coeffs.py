"""Objective coefficients and evaluation of both criterion functions."""

from __future__ import annotations

import numpy as np

from .model import Assignment, CoefficientMatrix, Scenario


def compute_coefficients(s: Scenario) -> CoefficientMatrix:
    """Assemble c[j][k] = sum_i U[i] * W[i][j] * F[i][k] * P[i][j][k].

    Accumulation runs in ascending transmitter order with left-to-right
    products, so results are bit-for-bit reproducible.
    """
    i_n, j_n, k_n = s.num_transmitters, s.num_stations, s.num_frequencies
    for name, table, want in (
        ("emission_prob", s.emission_prob, (i_n, k_n)),
        ("acquisition_prob", s.acquisition_prob, (i_n, j_n, k_n)),
        ("bearing_prob", s.bearing_prob, (i_n, j_n)),
        ("weights", s.weights, (i_n,)),
    ):
        if table.shape != want:
            raise ValueError(f"{name} has shape {table.shape}, expected {want}")
    c = np.zeros((j_n, k_n))
    for i in range(i_n):
        c += (s.weights[i] * s.bearing_prob[i])[:, None] * s.emission_prob[i][None, :] * s.acquisition_prob[i]
    return CoefficientMatrix(c)


def objective1(a: Assignment, c: CoefficientMatrix) -> float:
    """Expected number of accurate lines of bearing for an assignment.

    Summation order is fixed (stations outer, frequencies inner) so that
    equal assignments always yield bit-identical values.
    """
    if a.x.shape != c.c.shape:
        raise ValueError(f"assignment shape {a.x.shape} != coefficient shape {c.c.shape}")
    return objective1_flat(a.x.reshape(-1).tolist(), c.c.reshape(-1).tolist())


def objective1_flat(x_flat, c_flat) -> float:
    """Row-major sequential accumulation shared by solver and oracle."""
    total = 0.0
    for sel, coeff in zip(x_flat, c_flat):
        if sel:
            total += coeff
    return total


def excess(x, fair_share: int) -> tuple[np.ndarray, int]:
    """Minimal excess vector and the negated excess objective.

    y[k] = max(0, coverage_k - FS); the second objective is reported with
    the customary negated sign, f2 = -sum(y).
    """
    if fair_share < 0:
        raise ValueError(f"fair_share must be >= 0, got {fair_share}")
    x = np.asarray(x, dtype=np.int64)
    y = np.maximum(0, x.sum(axis=0) - int(fair_share))
    return y, -int(y.sum())
