import math

import numpy as np
import pytest

from layerscatter.amplitude import LatticePoint, amplitude_a
from layerscatter.errors import DimensionMismatchError, DomainError, InconsistentDataError, MissingAmplitudeError
from layerscatter.forward import DeltaTrain, Medium, reflection_response
from layerscatter.inverse import (
    eight_amplitude_lattice, eight_amplitudes_xj, localized_xj, match_amplitudes, quadratic_coefficients, quadratic_roots, recover_R_recursive,
    seven_points_lattice, seven_points_xj, sign_of_xj, xi_product,
)

X = (0.3, -0.5, 0.2)


def amplitudes(x, points):
    return [amplitude_a(x, point) for point in points]


class TestRecoverRRecursive:
    def test_two_interfaces(self):
        train = reflection_response(Medium(tau=[1, math.sqrt(2)], R=[0.3, 0.5]), 2.5)
        assert recover_R_recursive(match_amplitudes(train, (1, math.sqrt(2)))).tolist() == pytest.approx([0.3, 0.5], abs=1e-12)

    def test_four_interfaces(self):
        rng = np.random.default_rng(5)
        tau = (1.0, math.sqrt(2), math.sqrt(3), math.sqrt(5))
        for _ in range(5):
            R = rng.uniform(-0.9, 0.9, 4)
            train = reflection_response(Medium(tau=tau, R=R), math.fsum(tau) + 0.1)
            assert recover_R_recursive(match_amplitudes(train, tau)).tolist() == pytest.approx(R.tolist(), abs=1e-10)

    def test_missing_primary(self):
        matched = match_amplitudes(DeltaTrain(times=[1.0], amplitudes=[0.3]), (1, math.sqrt(2)), cutoff=3.0)
        with pytest.raises(MissingAmplitudeError, match="stage 1"):
            recover_R_recursive(matched)


class TestQuadraticCoefficients:
    def test_leading_coefficient(self):
        assert quadratic_coefficients(1.0, 0.5, 0.25, 1, 1, 0.01)[0] == 20

    def test_true_root(self):
        a = amplitudes(X, eight_amplitude_lattice(1, 3, 1, 1, 2, 2))
        xi = xi_product(*a[3:7], u=2)
        roots = quadratic_roots(*quadratic_coefficients(a[0], a[1], a[2], 1, 1, xi))
        assert min(abs(root - 0.06) for root in roots) < 1e-10

    def test_invalid(self):
        with pytest.raises(DomainError):
            quadratic_coefficients(1.0, 0.5, 0.25, 0, 1, 0.01)
        with pytest.raises(MissingAmplitudeError):
            quadratic_coefficients(0.0, 0.5, 0.25, 1, 1, 0.01)


class TestQuadraticRoots:
    def test_order(self):
        assert quadratic_roots(1, -3, 2) == (2.0, 1.0)
        assert quadratic_roots(1, 3, 2) == (-1.0, -2.0)

    def test_negative_discriminant(self):
        with pytest.raises(InconsistentDataError):
            quadratic_roots(1, 0, 1)


class TestXiProduct:
    def test_forward_amplitudes(self):
        a = amplitudes(X, eight_amplitude_lattice(1, 3, 1, 1, 2, 2))
        assert xi_product(*a[3:7], u=2) == pytest.approx(0.015, abs=1e-10)

    def test_vanishing_coefficient(self):
        x = (0.3, 0.0, 0.2)
        a = amplitudes(x, eight_amplitude_lattice(1, 3, 1, 1, 1, 1))
        assert xi_product(*a[3:7], u=1) == 0


class TestSignOfXj:
    def test_signs(self):
        assert sign_of_xj(0.1) == -1
        assert sign_of_xj(-0.1) == 1
        with pytest.raises(MissingAmplitudeError):
            sign_of_xj(0.0)

    def test_forward_amplitude(self):
        a7 = amplitude_a(X, (1, 1, 2))
        assert a7 == pytest.approx(0.91*0.75*0.5*0.04)
        assert sign_of_xj(a7) == -1


class TestEightAmplitudesXj:
    @pytest.mark.parametrize("p, q", [(1, 1), (1, 2), (2, 1), (2, 2)])
    def test_one_candidate_is_true(self, p, q):
        a = amplitudes(X, eight_amplitude_lattice(1, 3, p, q, 2, 2))
        candidates = [value for value in eight_amplitudes_xj(a, p, q, 2) if not math.isnan(value)]
        assert min(abs(value + 0.5) for value in candidates) < 1e-9

    def test_degenerate(self):
        a = amplitudes(X, eight_amplitude_lattice(1, 3, 1, 1, 2, 2))
        with pytest.raises(MissingAmplitudeError):
            eight_amplitudes_xj(a[:7] + [0.0], 1, 1, 2)

    def test_lattice(self):
        points = eight_amplitude_lattice(1, 3, 1, 1, 2, 2)
        assert [point.entries for point in points] == [(1, 1, 1), (1, 2, 2), (1, 3, 3), (1, 2, 1), (1, 3, 1), (1, 1, 2), (1, 1, 3), (1, 1, 2)]


class TestSevenPointsXj:
    def test_lattice(self):
        assert seven_points_lattice(1, 3) == [LatticePoint(entries) for entries in [(1, 1, 1), (1, 2, 2), (1, 3, 3), (1, 1, 2), (1, 2, 1), (1, 2, 3), (1, 3, 4)]]
        with pytest.raises(DomainError):
            seven_points_lattice(0, 3)

    def test_forward_amplitudes(self):
        assert seven_points_xj(amplitudes(X, seven_points_lattice(1, 3))) == pytest.approx(-0.5, abs=1e-9)

    def test_homogeneity(self):
        a = np.array(amplitudes(X, seven_points_lattice(1, 3)))
        value = seven_points_xj(a)
        for scale in (0.5, 10.0):
            assert seven_points_xj(scale*a) == pytest.approx(value, rel=1e-12)
        assert seven_points_xj(-2.0*a) == pytest.approx(-value, rel=1e-12)

    def test_random_media(self):
        rng = np.random.default_rng(2024)
        for _ in range(200):
            x = rng.uniform(0.15, 0.85, 3)*rng.choice([-1, 1], 3)
            assert seven_points_xj(amplitudes(x, seven_points_lattice(1, 3))) == pytest.approx(x[1], abs=1e-8)

    def test_deeper_interface(self):
        x = (0.4, -0.3, 0.6, 0.5, -0.2)
        for j in (1, 2, 3):
            assert seven_points_xj(amplitudes(x, seven_points_lattice(j, 5))) == pytest.approx(x[j], abs=1e-9)

    def test_wrong_count(self):
        with pytest.raises(DimensionMismatchError):
            seven_points_xj([0.1]*6)


class TestLocalizedXj:
    def test_interior_interface(self):
        tau = (1.0, math.sqrt(2), math.sqrt(3))
        train = reflection_response(Medium(tau=tau, R=X), 13.0)
        estimate = localized_xj(match_amplitudes(train, tau), 1)

        assert estimate.value == pytest.approx(-0.5, abs=1e-9)
        assert estimate.method == "seven-points"

    def test_boundary_interface(self):
        tau = (1.0, math.sqrt(2), math.sqrt(3))
        train = reflection_response(Medium(tau=tau, R=X), 13.0)
        with pytest.raises(DomainError):
            localized_xj(match_amplitudes(train, tau), 0)


def draw_interior(rng, size=3, low=0.05, high=0.9):
    while np.any(np.abs(x := rng.uniform(-high, high, size)) < low):
        pass
    return x


class TestRandomAmplitudes:
    def test_seven_points(self):
        rng = np.random.default_rng(77)
        for _ in range(500):
            x = draw_interior(rng)
            assert seven_points_xj(amplitudes(x, seven_points_lattice(1, 3))) == pytest.approx(x[1], abs=1e-8)

    @pytest.mark.parametrize("p, q", [(1, 1), (1, 2), (2, 1), (2, 2)])
    def test_eight_amplitudes_contain_true_value(self, p, q):
        rng = np.random.default_rng(100 + 10*p + q)
        for _ in range(125):
            x = draw_interior(rng)
            candidates = [value for value in eight_amplitudes_xj(amplitudes(x, eight_amplitude_lattice(1, 3, p, q, 2, 2)), p, q, 2) if not math.isnan(value)]
            assert min(abs(value - x[1]) for value in candidates) <= 1e-8

    @pytest.mark.parametrize("p", range(1, 5))
    @pytest.mark.parametrize("q", range(1, 5))
    def test_quadratic_vanishes_at_neighbour_product(self, p, q):
        rng = np.random.default_rng(10*p + q)
        for _ in range(20):
            x = draw_interior(rng)
            a = amplitudes(x, eight_amplitude_lattice(1, 3, p, q, 1, 1))
            A, B, C = quadratic_coefficients(a[0], a[1], a[2], p, q, xi=x[0]*x[1]**2*x[2])
            y = x[0]*x[2]

            assert abs(A*y**2 + B*y + C) <= 1e-9*np.linalg.norm([A, B, C])
