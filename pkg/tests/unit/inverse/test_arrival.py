import math

import numpy as np
import pytest

from layerscatter.amplitude import LatticePoint
from layerscatter.errors import NonGenericError, ValidationError
from layerscatter.inverse import ArrivalVector, TransitionKind, cell_neighbours, cell_signature, invert_arrival_times, is_generic, phi_map

ROOT2 = math.sqrt(2)


class TestArrivalVector:
    def test_validation(self):
        with pytest.raises(ValidationError):
            ArrivalVector([2, 1])
        with pytest.raises(ValidationError):
            ArrivalVector([-1, 1])

    def test_scaling_and_deletion(self):
        sigma = 2*ArrivalVector([1, 2, 3])
        assert list(sigma) == [2, 4, 6]
        assert list(sigma.without([1])) == [2, 6]


class TestPhiMap:
    def test_irrational_ratio(self):
        assert list(phi_map((1, ROOT2))) == pytest.approx([1, 2, 1 + ROOT2])

    def test_integer_times(self):
        assert list(phi_map((2, 3))) == [2, 4, 5]

    def test_collisions_are_merged(self):
        assert list(phi_map((1, 1))) == [1, 2]

    def test_homogeneous(self):
        tau = (1, ROOT2, math.sqrt(3))
        assert list(phi_map(np.multiply(tau, 2.5))) == pytest.approx(list(2.5*phi_map(tau)))


class TestIsGeneric:
    def test_cases(self):
        assert not is_generic((1, 1))
        assert is_generic((1, ROOT2))
        assert is_generic((2, 3))


class TestInvertArrivalTimes:
    def test_irrational_ratio(self):
        result = invert_arrival_times(phi_map((1, ROOT2)))
        assert result.tau.tolist() == pytest.approx([1, ROOT2])
        assert result.A.tolist() == [[1, 0], [2, 0], [1, 1]]

    def test_integer_times(self):
        result = invert_arrival_times(ArrivalVector([2, 4, 5]))
        assert result.tau.tolist() == [2, 3]
        assert result.rows == [LatticePoint((1, 0)), LatticePoint((2, 0)), LatticePoint((1, 1))]
        assert result.observed.all()
        assert result.N == 1

    def test_primary_subvector(self):
        tau = (1, ROOT2, math.sqrt(3))
        full = phi_map(tau)
        kept = [index for index, time in enumerate(full) if any(math.isclose(time, partial) for partial in np.cumsum(tau))]
        primary = full.without([index for index in range(len(full)) if index not in kept])

        result = invert_arrival_times(primary)
        assert result.tau.tolist() == pytest.approx(list(tau))
        assert result.times.tolist() == pytest.approx(list(full))
        assert result.observed.sum() == len(primary)

    def test_round_trip(self):
        rng = np.random.default_rng(11)
        for _ in range(10):
            tau = rng.uniform(0.5, 1.5, 4)
            result = invert_arrival_times(phi_map(tau))
            assert result.tau.tolist() == pytest.approx(tau.tolist(), rel=1e-12)
            assert result.times.tolist() == pytest.approx(list(phi_map(tau)), rel=1e-12)

    def test_collision(self):
        with pytest.raises(NonGenericError) as info:
            invert_arrival_times(ArrivalVector([1, 2, 2 + 1e-10]))
        assert info.value.stage == 1
        assert info.value.exit_code == 4


class TestCellSignature:
    def test_same_cell(self):
        assert cell_signature((1, ROOT2)) == cell_signature((1, 1.42)) == ((1, 0), (2, 0), (1, 1))

    def test_non_generic(self):
        with pytest.raises(NonGenericError):
            cell_signature((1, 1))


class TestCellNeighbours:
    def test_deleted_row(self):
        transition = cell_neighbours((1, ROOT2), (0, -1))
        assert transition.kind == TransitionKind.DELETED
        assert transition.tau[1] < 1
        assert transition.after == ((1, 0), (1, 1))

    def test_added_row(self):
        transition = cell_neighbours((1, ROOT2), (0, 1))
        assert transition.kind == TransitionKind.ADDED
        assert transition.tau[1] > 2

    def test_no_change(self):
        assert cell_neighbours((1, ROOT2), (0, 1), max_steps=10) is None

    def test_dimension_mismatch(self):
        with pytest.raises(ValidationError):
            cell_neighbours((1, ROOT2), (1,))


def generic_tau(rng, size):
    while not is_generic(tau := rng.uniform(0.5, 1.5, size)):
        pass
    return tau


class TestRandomTravelTimes:
    @pytest.mark.parametrize("seed", range(200))
    def test_round_trip(self, seed):
        rng = np.random.default_rng(seed)
        tau = generic_tau(rng, int(rng.integers(2, 8)))
        sigma = phi_map(tau)
        result = invert_arrival_times(sigma)

        assert np.max(np.abs(result.tau - tau)/tau) <= 1e-10
        assert tuple(row.entries for row in result.rows) == cell_signature(tau)
        assert np.allclose(result.times, list(sigma), rtol=1e-10, atol=0)

    @pytest.mark.parametrize("seed", range(20))
    def test_linear_on_each_cell(self, seed):
        rng = np.random.default_rng(seed)
        tau = generic_tau(rng, int(rng.integers(2, 6)))
        A = np.array(cell_signature(tau))

        for nearby in (tau*2.5, tau*(1 + rng.uniform(-1e-7, 1e-7, len(tau)))):
            assert cell_signature(nearby) == cell_signature(tau)
            assert list(phi_map(nearby)) == pytest.approx((A @ nearby).tolist(), rel=1e-12)
