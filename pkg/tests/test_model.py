import dataclasses

import numpy as np
import pytest
from hypothesis import given, strategies as st

from hfdf_assign import fair_share_default, max_excess_budget, validate_scenario

from helpers import placeholder_scenario


class TestValidateScenario:
    def test_toy_passes(self, toy):
        scenario, _ = toy
        report = validate_scenario(scenario)
        assert report.passed
        assert report.failures == ()

    def test_probability_out_of_range(self, toy):
        scenario, _ = toy
        f = np.array(scenario.emission_prob)
        f[0][0] = 1.5
        bad = dataclasses.replace(scenario, emission_prob=f)
        report = validate_scenario(bad)
        assert not report.passed
        assert "probability out of range at F[0][0]" in report.failures

    def test_coverage_precheck(self):
        s = placeholder_scenario(3, 2, fair_share=1, station_capacity=[1, 0, 0])
        report = validate_scenario(s)
        assert not report.passed
        assert any(f.startswith("coverage infeasible for every k") for f in report.failures)

    def test_weight_sum_out_of_tolerance(self, toy):
        scenario, _ = toy
        bad = dataclasses.replace(scenario, weights=[0.7])
        report = validate_scenario(bad)
        assert not report.passed
        assert any("weights sum" in f for f in report.failures)

    def test_table_4_style_rounding_is_accepted(self):
        s = placeholder_scenario(5, 3, fair_share=3)
        s = dataclasses.replace(
            s,
            num_transmitters=4,
            emission_prob=np.zeros((4, 3)),
            acquisition_prob=np.zeros((4, 5, 3)),
            bearing_prob=np.zeros((4, 5)),
            weights=[0.5, 0.167, 0.167, 0.167],  # sums to 1.001
        )
        assert validate_scenario(s).passed

    def test_negative_capacity(self, toy):
        scenario, _ = toy
        bad = dataclasses.replace(scenario, station_capacity=[-1, 10, 10, 10, 10])
        report = validate_scenario(bad)
        assert not report.passed
        assert any(f.startswith("m[0]") for f in report.failures)

    def test_shape_mismatch_names_table(self, toy):
        scenario, _ = toy
        bad = dataclasses.replace(scenario, bearing_prob=np.zeros((1, 4)))
        report = validate_scenario(bad)
        assert not report.passed
        assert any(f.startswith("W has shape") for f in report.failures)

    def test_idempotent_and_pure(self, toy):
        scenario, _ = toy
        before = np.array(scenario.emission_prob)
        first = validate_scenario(scenario)
        second = validate_scenario(scenario)
        assert first == second
        assert np.array_equal(scenario.emission_prob, before)

    def test_reports_multiple_failures(self, toy):
        scenario, _ = toy
        f = np.array(scenario.emission_prob)
        f[0][0] = 1.5
        f[0][2] = -0.25
        bad = dataclasses.replace(scenario, emission_prob=f, fair_share=0)
        report = validate_scenario(bad)
        assert len(report.failures) >= 3


class TestFairShareDefault:
    def test_exact_division(self):
        assert fair_share_default(15, 3) == 5

    def test_ceiling(self):
        assert fair_share_default(10, 3) == 4

    def test_empty_network(self):
        assert fair_share_default(0, 3) == 0

    def test_zero_frequencies(self):
        with pytest.raises(ValueError, match="zero frequencies"):
            fair_share_default(5, 0)

    @given(tn=st.integers(0, 10_000), k=st.integers(1, 100))
    def test_covers_total(self, tn, k):
        fs = fair_share_default(tn, k)
        assert fs * k >= tn
        assert (fs - 1) * k < tn or fs == 0


class TestMaxExcessBudget:
    def test_toy_value(self, toy):
        scenario, _ = toy
        assert max_excess_budget(scenario) == 6

    def test_no_excess_possible(self):
        s = placeholder_scenario(3, 2, fair_share=3)
        assert max_excess_budget(s) == 0

    def test_four_stations_two_frequencies(self):
        # Enumerated by hand: max coverage per frequency is 4, one over FS=3.
        s = placeholder_scenario(4, 2, fair_share=3)
        assert max_excess_budget(s) == 2

    def test_capacity_zero_stations_do_not_count(self):
        s = placeholder_scenario(4, 2, fair_share=1, station_capacity=[10, 10, 0, 0])
        assert max_excess_budget(s) == 2

    def test_total_receiver_cap_limits_coverage(self):
        s = placeholder_scenario(5, 2, fair_share=1, total_receivers=3)
        assert max_excess_budget(s) == 4


class TestImmutability:
    def test_arrays_are_read_only(self, toy):
        scenario, coefficients = toy
        with pytest.raises(ValueError):
            scenario.emission_prob[0][0] = 0.5
        with pytest.raises(ValueError):
            coefficients.c[0][0] = 1.0

    def test_scenario_equality(self, toy):
        scenario, _ = toy
        clone = dataclasses.replace(scenario)
        assert clone == scenario
        assert dataclasses.replace(scenario, fair_share=4) != scenario
