import math

import numpy as np
import pytest

from layerscatter.errors import InconsistentDataError, NonGenericError
from layerscatter.forward import DeltaTrain, Medium, reflection_response
from layerscatter.inverse import Agreement, invert_medium, is_generic, run_inversion

TAU = 0.5*np.array([1.0, math.sqrt(2), math.sqrt(3)])
R = (0.3, -0.5, 0.2)


@pytest.fixture(scope="module")
def train():
    return reflection_response(Medium(tau=TAU, R=R), 6.5)


class TestRunInversion:
    def test_round_trip(self, train):
        report = run_inversion(train)

        assert report.medium.tau.tolist() == pytest.approx(TAU.tolist(), abs=1e-12)
        assert report.medium.R.tolist() == pytest.approx(list(R), abs=1e-8)
        assert report.consistent
        assert [estimate.agreement for estimate in report.estimates] == [Agreement.UNCHECKED, Agreement.CONSISTENT, Agreement.UNCHECKED]
        assert report.estimates[1].method == "seven-points"

    def test_table(self, train):
        table = run_inversion(train).table()
        assert "seven-points" in table
        assert "consistent" in table

    def test_corrupted_primary(self, train):
        time = TAU[0] + TAU[1]
        corrupted = train.with_amplitude(time, train.amplitude_at(time)*1.01)
        report = run_inversion(corrupted)

        assert [estimate.j for estimate in report.discrepancies] == [1]
        assert report.estimates[1].recursive == pytest.approx(-0.505)
        assert report.medium.R.tolist() == pytest.approx(list(R), abs=1e-8)

    def test_four_interfaces(self):
        tau, R4 = 0.5*np.sqrt([1.0, 2.0, 3.0, 5.0]), (0.4, -0.3, 0.5, -0.2)
        report = run_inversion(reflection_response(Medium(tau=tau, R=R4), 8.6))

        assert report.medium.tau.tolist() == pytest.approx(tau.tolist(), abs=1e-12)
        assert report.medium.R.tolist() == pytest.approx(list(R4), abs=1e-8)
        assert report.consistent

    def test_empty_train(self):
        with pytest.raises(InconsistentDataError) as info:
            run_inversion(DeltaTrain())
        assert info.value.exit_code == 4

    def test_non_generic(self):
        with pytest.raises(NonGenericError, match="non-generic"):
            run_inversion(reflection_response(Medium(tau=[1, 1], R=[0.3, 0.5]), 3.0))


class TestInvertMedium:
    def test_two_interfaces(self):
        tau = (1.0, math.sqrt(2))
        medium = invert_medium(reflection_response(Medium(tau=tau, R=[0.3, 0.5]), 2.5))

        assert medium.tau.tolist() == pytest.approx(list(tau))
        assert medium.R.tolist() == pytest.approx([0.3, 0.5])
        assert medium.tau_last is None


def random_medium(seed):
    rng = np.random.default_rng(seed)
    size = 3 + seed % 4
    while not is_generic(tau := rng.uniform(0.8, 1.2, size)):
        pass
    return Medium(tau=tau, R=rng.uniform(0.05, 0.8, size)*rng.choice([-1, 1], size))


def seven_points_cutoff(tau):
    # the deepest seven-points arrival for interface j sits at 1^{j+1} + 2e^j + 3e^{j+1}
    return max([math.fsum(tau)] + [math.fsum(tau[:j + 2]) + 2*tau[j] + 3*tau[j + 1] for j in range(1, len(tau) - 1)]) + 0.05


class TestRandomMedia:
    @pytest.mark.parametrize("seed", range(25))
    def test_round_trip(self, seed):
        medium = random_medium(seed)
        recovered = invert_medium(reflection_response(medium, seven_points_cutoff(medium.tau)))

        assert recovered.tau.tolist() == pytest.approx(medium.tau.tolist(), abs=1e-8)
        assert recovered.R.tolist() == pytest.approx(medium.R.tolist(), abs=1e-8)

    @pytest.mark.parametrize("seed", range(25))
    def test_corrupted_primary_is_flagged(self, seed):
        medium = random_medium(seed)
        train = reflection_response(medium, seven_points_cutoff(medium.tau))
        time = medium.tau[0] + medium.tau[1]
        report = run_inversion(train.with_amplitude(time, 1.01*train.amplitude_at(time)))

        assert 1 in [estimate.j for estimate in report.discrepancies]
        assert report.estimates[1].method == "seven-points"
        assert report.medium.R[1:-1].tolist() == pytest.approx(medium.R[1:-1].tolist(), abs=1e-6)
