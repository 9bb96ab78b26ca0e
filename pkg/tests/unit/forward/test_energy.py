import math

import numpy as np
import pytest

from layerscatter.errors import DomainError
from layerscatter.forward import Medium, energy_report, inner_distance, inner_probability_bound, norm_bounds, reversed_energy


class TestEnergyReport:
    def test_single_interface_is_complete(self):
        reflected, transmitted, residual = energy_report(Medium(tau=[1], R=[0.3], tau_last=1), 1.0)
        assert (reflected, transmitted) == (pytest.approx(0.09), pytest.approx(0.91))
        assert residual == pytest.approx(0, abs=1e-12)

    def test_zero_reflectivity(self):
        report = energy_report(Medium(tau=[1, 1], R=[0, 0], tau_last=1), 2.0)
        assert (report.reflected, report.transmitted, report.residual) == (0, pytest.approx(1, abs=1e-12), pytest.approx(0, abs=1e-12))

    def test_total_reflection_transmits_nothing(self):
        for T in (2.0, 5.0, 9.0):
            assert energy_report(Medium(tau=[1, 1], R=[0.4, 1.0], tau_last=1), T).transmitted == 0

    def test_residual_decreases(self):
        medium = Medium(tau=[1, math.sqrt(2)], R=[0.3, 0.5], tau_last=1)
        residuals = [energy_report(medium, T).residual for T in (2, 4, 8, 16, 32)]

        assert all(later <= earlier + 1e-12 for earlier, later in zip(residuals, residuals[1:]))
        assert all(value >= -1e-12 for value in residuals)
        assert residuals[-1] < 1e-3

    @pytest.mark.parametrize("seed", range(20))
    def test_random_media_long_cutoff(self, seed):
        rng = np.random.default_rng(seed)
        size = int(rng.integers(1, 3))
        medium = Medium(tau=rng.uniform(0.5, 1.5, size), R=rng.uniform(-0.7, 0.7, size), tau_last=float(rng.uniform(0.5, 1.5)))

        reports = [energy_report(medium, factor*sum(medium.tau)) for factor in (10, 20, 40)]
        totals = [report.reflected + report.transmitted for report in reports]

        assert all(later >= earlier - 1e-12 for earlier, later in zip(totals, totals[1:]))
        assert all(total <= 1 + 1e-12 for total in totals)
        assert reports[-1].residual < 1e-3

    def test_three_interfaces_long_cutoff(self):
        medium = Medium(tau=[1.0, 0.6, 0.7], R=[0.3, -0.5, 0.4], tau_last=1.0)
        report = energy_report(medium, 40*sum(medium.tau))

        assert report.reflected + report.transmitted <= 1 + 1e-12
        assert -1e-12 <= report.residual < 1e-3

    def test_requires_tau_last(self):
        with pytest.raises(DomainError):
            energy_report(Medium(tau=[1], R=[0.3]), 2.0)


class TestNormBounds:
    def test_bracket(self):
        bounds = norm_bounds([0.3, -0.6, 0.4], 12)
        assert bounds.consistent
        assert bounds.lower == pytest.approx(0.6)
        assert bounds.lower <= bounds.upper


class TestReversedEnergy:
    def test_converges_to_each_other(self):
        forward, backward = reversed_energy([0.3, -0.6, 0.4], 24)
        assert forward == pytest.approx(backward, abs=5e-3)


class TestInnerDistance:
    def test_within_bound(self):
        distance = inner_distance([0.5, 0.2, -0.3], 10)
        assert distance.truncated_distance <= distance.bound + 1e-12

    def test_needs_two_coordinates(self):
        with pytest.raises(DomainError):
            inner_distance([0.5], 4)


class TestInnerProbabilityBound:
    def test_value(self):
        assert inner_probability_bound(12, 0.5) == pytest.approx(1 - (1 - 0.0625)**6)

    def test_domain(self):
        with pytest.raises(DomainError):
            inner_probability_bound(0, 0.5)
        with pytest.raises(DomainError):
            inner_probability_bound(3, 2.0)
