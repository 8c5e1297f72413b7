"""Shared builders for test scenarios."""

import numpy as np

from hfdf_assign import CoefficientMatrix, Scenario

# Objective coefficients of the bundled toy instance, row-major.
TOY_COEFFS = [
    [0.0043, 0.004275, 0.004725],
    [0.007325, 0.00726, 0.00736],
    [0.001938, 0.0032, 0.002725],
    [0.001183, 0.0013, 0.001103],
    [0.007813, 0.007495, 0.0076],
]

# Published objective values of the seven toy N-points, budgets 0..6.
TOY_F1 = [0.058152, 0.061352, 0.064077, 0.066015, 0.067315, 0.068498, 0.069602]


def placeholder_scenario(num_stations, num_frequencies, *, fair_share, min_coverage=2,
                         total_receivers=None, station_capacity=None):
    """A scenario with inert probability tables, for explicit-coefficient runs."""
    return Scenario(
        num_transmitters=1,
        num_stations=num_stations,
        num_frequencies=num_frequencies,
        emission_prob=np.zeros((1, num_frequencies)),
        acquisition_prob=np.zeros((1, num_stations, num_frequencies)),
        bearing_prob=np.zeros((1, num_stations)),
        weights=[1.0],
        fair_share=fair_share,
        station_capacity=station_capacity,
        total_receivers=total_receivers,
        min_coverage=min_coverage,
    )


def random_coeff_instance(rng):
    """Random explicit-coefficient instance within the oracle's comfort zone."""
    j_n = int(rng.integers(2, 6))
    k_n = int(rng.integers(1, 4))
    fair_share = int(rng.integers(1, 4))
    min_coverage = int(rng.integers(0, 3))
    caps = rng.integers(0, k_n + 1, size=j_n)
    caps[rng.integers(0, j_n)] = 10  # keep at least one station unconstrained
    total = int(rng.integers(min_coverage * k_n, j_n * k_n + 1)) if rng.random() < 0.5 else None
    scenario = placeholder_scenario(
        j_n, k_n,
        fair_share=fair_share,
        min_coverage=min_coverage,
        total_receivers=total,
        station_capacity=caps,
    )
    coefficients = CoefficientMatrix(rng.uniform(0.0, 0.01, size=(j_n, k_n)))
    return scenario, coefficients


def random_table_scenario(rng):
    """Random instance with full probability tables (weights matter)."""
    i_n = int(rng.integers(2, 5))
    j_n = int(rng.integers(2, 5))
    k_n = int(rng.integers(1, 3))
    u = rng.uniform(0.1, 1.0, size=i_n)
    u = u / u.sum()
    return Scenario(
        num_transmitters=i_n,
        num_stations=j_n,
        num_frequencies=k_n,
        emission_prob=rng.uniform(0.0, 1.0, size=(i_n, k_n)),
        acquisition_prob=rng.uniform(0.0, 1.0, size=(i_n, j_n, k_n)),
        bearing_prob=rng.uniform(0.0, 1.0, size=(i_n, j_n)),
        weights=u,
        fair_share=int(rng.integers(1, 3)),
        min_coverage=int(rng.integers(0, 3)),
    )
