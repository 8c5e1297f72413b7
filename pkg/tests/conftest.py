import numpy as np
import pytest

from hfdf_assign import bundled_path, load_scenario, scenario_coefficients


@pytest.fixture(scope="session")
def toy():
    """(scenario, coefficients) for the bundled 5-station, 3-frequency instance."""
    scenario, explicit = load_scenario(bundled_path("toy.json"))
    return scenario, scenario_coefficients(scenario, explicit)


@pytest.fixture(scope="session")
def study():
    """Scenario with complete probability tables for the weight studies."""
    scenario, explicit = load_scenario(bundled_path("study.json"))
    assert explicit is None
    return scenario


@pytest.fixture()
def rng():
    return np.random.default_rng(20260810)
