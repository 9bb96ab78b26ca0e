"""
Reflection coefficients from amplitude data. The primary amplitudes give every R_j recursively, so one bad amplitude spoils every later layer.
The localized formulas here instead recover an interior x_j from a handful of amplitudes whose lattice points differ only around j, through
a quadratic whose root is x_{j-1}x_{j+1}, the product x_{j-1}x_j^2x_{j+1} and the sign of one further amplitude.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product
from typing import Sequence

import numpy as np

from layerscatter.amplitude import LatticePoint
from layerscatter.errors import AmbiguityError, DimensionMismatchError, DomainError, InconsistentDataError, InversionError, MissingAmplitudeError
from layerscatter.log import Log, logged
from layerscatter.misc.config import settings

from .matching import MatchedAmplitudes


def _is_zero(value: float) -> bool:
    return abs(value) <= settings.zero_threshold


def _require(amplitudes: Sequence[float], count: int, name: str) -> list[float]:
    amplitudes = [float(amplitude) for amplitude in amplitudes]
    if len(amplitudes) != count:
        raise DimensionMismatchError(f"{name} needs {count} amplitudes, got {len(amplitudes)}.", field="a")
    return amplitudes


@logged
def recover_R_recursive(matched: MatchedAmplitudes) -> np.ndarray:
    """
    R_0 is the primary amplitude at (1, 0, ..., 0), and each later R_j is the primary amplitude at 1^j divided by prod_{s<j} (1 - R_s^2),
    the transmission loss of the two passes through every shallower interface.
    """
    dimension, R = matched.N + 1, []
    for j in range(dimension):
        primary = matched.amplitude(LatticePoint.ones(j, dimension), stage=j)
        loss = math.prod(1 - value**2 for value in R)

        if _is_zero(primary) or _is_zero(loss):
            raise MissingAmplitudeError(f"the primary amplitude at 1^{j} is zero, so R_{j} and every later coefficient cannot be recovered.", stage=j)

        R.append(primary/loss)
        if abs(R[-1]) > 1:
            raise InconsistentDataError(f"recovered |R_{j}| = {abs(R[-1])} exceeds 1.", stage=j)

    return np.array(R)


def quadratic_coefficients(a0: float, a1: float, a2: float, p: int, q: int, xi: float) -> tuple[float, float, float]:
    """
    The coefficients (A, B, C) of the quadratic with root x_{j-1}x_{j+1}, built from the amplitudes at k0, k0 + e^j + e^{j+1} and
    k0 + 2(e^j + e^{j+1}), where k0 holds (1, p, q) at (j-1, j, j+1), and from xi = x_{j-1}x_j^2x_{j+1}.
    """
    if min(p, q) < 1:
        raise DomainError(f"p and q must both be at least 1, got ({p}, {q}).", field="p")
    if _is_zero(a0):
        raise MissingAmplitudeError(f"the amplitude a0 = {a0} is zero.")

    N, alpha = min(p, q) - 1, abs(p - q)
    first, second = a1/a0, a2/a0
    if p > q:
        first, second = first*p*(q + 1)/(q*(p + 1)), second*p*(q + 2)/(q*(p + 2))

    A = 2*(N + alpha + 1)*(N + 2)*(2*N + alpha + 5)
    B = (2*N + alpha + 4)*((2*N + alpha + 5)*(2*N + alpha + 3) + alpha**2 - 1)*first
    C = (2*N + 4)*(N + alpha + 3)*(2*N + alpha + 3)*second - 2*(2*N + alpha + 4)*(2*N + alpha + 5)*(2*N + alpha + 3)*first*xi

    return float(A), float(B), float(C)


def quadratic_roots(A: float, B: float, C: float) -> tuple[float, float]:
    """The roots ((-B + sqrt(D))/2A, (-B - sqrt(D))/2A), each computed without cancellation. Raises on a negative discriminant."""
    discriminant = B*B - 4*A*C
    if discriminant < 0:
        raise InconsistentDataError(f"negative radicand {discriminant} in the quadratic with coefficients ({A}, {B}, {C}).")

    root = math.sqrt(discriminant)
    if (half := -0.5*(B + math.copysign(root, B))) == 0:
        return 0.0, 0.0

    return (C/half, half/A) if B >= 0 else (half/A, C/half)


def xi_product(a3: float, a4: float, a5: float, a6: float, u: int) -> float:
    """x_{j-1}x_j^2x_{j+1} = (u/(u+1)) * a4*a6/(a3*a5)."""
    if u < 1:
        raise DomainError(f"u must be at least 1, got {u}.", field="u")
    if _is_zero(a3) or _is_zero(a5):
        raise MissingAmplitudeError(f"the product a3*a5 = {a3*a5} is zero.")

    return u/(u + 1)*(a4*a6)/(a3*a5)


def sign_of_xj(a7: float) -> int:
    """The amplitude at 1^j + 2m*e^{j+1} has the opposite sign to x_j."""
    if _is_zero(a7):
        raise MissingAmplitudeError(f"the amplitude a7 = {a7} is zero, so the sign of x_j is undetermined.")
    return -1 if a7 > 0 else 1


def _from_root(xi: float, root: float, sign: int) -> float:
    if root == 0 or (square := xi/root) < 0:
        return math.nan
    return sign*math.sqrt(square)


def eight_amplitudes_xj(a: Sequence[float], p: int, q: int, u: int) -> tuple[float, float]:
    """
    Both candidates for x_j, one per root of the quadratic. An inadmissible candidate (a root of zero, or one giving x_j^2 < 0) is NaN.
    One of the two is the true value; telling them apart takes a second (p, q).
    """
    a = _require(a, 8, "eight_amplitudes_xj")
    if any(_is_zero(a[index]) for index in (0, 3, 5, 7)):
        raise MissingAmplitudeError(f"a0*a3*a5*a7 must not vanish, got amplitudes {a}.")

    xi, sign = xi_product(*a[3:7], u=u), sign_of_xj(a[7])
    plus, minus = (_from_root(xi, root, sign) for root in quadratic_roots(*quadratic_coefficients(a[0], a[1], a[2], p, q, xi)))

    if math.isnan(plus) and math.isnan(minus):
        raise InconsistentDataError(f"neither root of the quadratic gives an admissible x_j for (p, q, u) = ({p}, {q}, {u}).")

    return plus, minus


def _roots_agree(first: float, second: float) -> bool:
    return abs(first - second) <= settings.root_tolerance*max(1.0, abs(first))


def seven_points_xj(a: Sequence[float]) -> float:
    """
    x_j from the amplitudes at the seven points k0 = 1^{j+1}, k0 + e^j + e^{j+1}, k0 + 2e^j + 2e^{j+1}, k0 + e^{j+1}, k0 + e^j,
    k0 + e^j + 2e^{j+1} and k0 + 2e^j + 3e^{j+1}. The first three and the last three points each define a quadratic with
    x_{j-1}x_{j+1} as a root, and only the true value is a root of both.
    The product xi = x_{j-1}x_j^2x_{j+1} is taken with (u, v) = (1, 1), which reduces it to a3*a4/(2*a0^2).
    """
    a0, a1, a2, a3, a4, a5, a6 = _require(a, 7, "seven_points_xj")
    if _is_zero(a0) or _is_zero(a3):
        raise MissingAmplitudeError(f"a0*a3 must not vanish, got a0={a0}, a3={a3}.")
    if _roots_agree(7*a1/(5*a0), 5*a5/(4*a3)):
        raise AmbiguityError("the two quadratics share their root sum, so their common root is not unique.")

    xi = a3*a4/(2*a0**2)
    near = quadratic_roots(*quadratic_coefficients(a0, a1, a2, 1, 1, xi))
    far = quadratic_roots(*quadratic_coefficients(a3, a5, a6, 1, 2, xi))

    common = [root for root in near if any(_roots_agree(root, other) for other in far)]
    if not common:
        raise InconsistentDataError(f"the quadratics have no common root: {near} against {far}.")
    if len(common) == 2 and not _roots_agree(*common):
        raise AmbiguityError(f"both roots {common} are common to the two quadratics.")

    if math.isnan(value := _from_root(xi, common[0], -1 if a3 > 0 else 1)):
        raise InconsistentDataError(f"negative radicand: xi/y = {xi}/{common[0]}.")

    return value


def _point(dimension: int, ones_through: int, entries: dict[int, int]) -> LatticePoint:
    values = [1 if index <= ones_through else 0 for index in range(dimension)]
    for index, value in entries.items():
        values[index] = value
    return LatticePoint(tuple(values))


def _check_interior(j: int, dimension: int) -> None:
    if not 1 <= j <= dimension - 2:
        raise DomainError(f"Localized formulas need an interior interface 1 <= j <= {dimension - 2}, got j={j}.", field="j")


def seven_points_lattice(j: int, dimension: int) -> list[LatticePoint]:
    _check_interior(j, dimension)
    k0 = LatticePoint.ones(j + 1, dimension)
    ej, ej1 = LatticePoint.basis(j, dimension), LatticePoint.basis(j + 1, dimension)

    def shifted(first: int, second: int) -> LatticePoint:
        return LatticePoint(tuple(entry + first*a + second*b for entry, a, b in zip(k0, ej, ej1)))

    return [k0, shifted(1, 1), shifted(2, 2), shifted(0, 1), shifted(1, 0), shifted(1, 2), shifted(2, 3)]


def eight_amplitude_lattice(j: int, dimension: int, p: int, q: int, u: int, v: int, m: int = 1) -> list[LatticePoint]:
    """The points k0..k7 for one configuration, with zeros after position j+1 throughout."""
    _check_interior(j, dimension)
    k0 = _point(dimension, j - 1, {j: p, j + 1: q})
    k3 = _point(dimension, j - 1, {j: u, j + 1: 1})
    k5 = _point(dimension, j, {j + 1: v})
    ej, ej1 = LatticePoint.basis(j, dimension), LatticePoint.basis(j + 1, dimension)
    diagonal = ej + ej1

    return [
        k0, k0 + diagonal, k0 + diagonal + diagonal,
        k3, k3 + ej,
        k5, k5 + ej1,
        _point(dimension, j, {j + 1: 2*m}),
    ]


@dataclass
class LocalizedEstimate:
    value: float
    method: str
    configuration: tuple[int, ...] = ()


CONFIGURATIONS = tuple(product((1, 2), repeat=3))
PAIRS = ((1, 1), (1, 2), (2, 1), (2, 2))


def _eight_amplitude_estimate(matched: MatchedAmplitudes, j: int) -> LocalizedEstimate:
    dimension, failures = matched.N + 1, []

    for u, v, m in CONFIGURATIONS:
        seen: list[list[float]] = []
        for p, q in PAIRS:
            points = eight_amplitude_lattice(j, dimension, p, q, u, v, m)
            try:
                candidates = [value for value in eight_amplitudes_xj([matched.amplitude(point, stage=j) for point in points], p, q, u) if not math.isnan(value)]
            except InversionError as ex:
                failures.append(ex)
                continue

            if len(candidates) == 1 or _roots_agree(*candidates):
                return LocalizedEstimate(candidates[0], "eight-amplitudes", (p, q, u, v, m))

            for earlier in seen:
                common = [value for value in candidates if any(_roots_agree(value, other) for other in earlier)]
                if len(common) == 1:
                    return LocalizedEstimate(common[0], "eight-amplitudes", (p, q, u, v, m))
            seen.append(candidates)

    raise InconsistentDataError(f"no eight-amplitude configuration determines x_{j} ({len(failures)} failed).", stage=j)


@logged
def localized_xj(matched: MatchedAmplitudes, j: int) -> LocalizedEstimate:
    """Recover an interior x_j, trying the seven-points formula first and then the eight-amplitude configurations in turn."""
    _check_interior(j, matched.N + 1)

    try:
        amplitudes = [matched.amplitude(point, stage=j) for point in seven_points_lattice(j, matched.N + 1)]
        return LocalizedEstimate(seven_points_xj(amplitudes), "seven-points")
    except InversionError as ex:
        Log.debug(f"Seven-points formula unavailable at j={j}: {ex}")

    return _eight_amplitude_estimate(matched, j)
