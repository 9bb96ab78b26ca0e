"""
Frequency-domain evaluation of the reflection Green's function. The recurrence path composes one disk automorphism per interface, from the deepest inwards,
and is exact. The series path sums the delta train's Fourier terms up to a time cutoff, and converges to the recurrence in the time-averaged sense.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

import numpy as np

from subtypes import Enum
from maybe import Maybe

from layerscatter.errors import DimensionMismatchError, DomainError
from layerscatter.misc.config import settings
from layerscatter.log import logged

from .energy import energy_report, inner_probability_bound
from .medium import Medium
from .response import reflection_response

Frequencies = Union[float, Sequence[float], np.ndarray]


class Method(Enum):
    RECURRENCE = SERIES = Enum.Auto()


@dataclass(eq=False)
class FrequencyResponse:
    """Complex samples of the reflection spectrum on a frequency grid, tagged with the method that produced them."""
    omegas: np.ndarray
    values: np.ndarray
    method: Method

    def __post_init__(self) -> None:
        self.omegas, self.values = np.asarray(self.omegas, dtype=float), np.asarray(self.values, dtype=complex)
        if self.omegas.shape != self.values.shape:
            raise DimensionMismatchError(f"Got {self.omegas.size} frequencies but {self.values.size} values.")

    def __len__(self) -> int:
        return len(self.omegas)

    @property
    def modulus(self) -> np.ndarray:
        return np.abs(self.values)

    def mean_square_gap(self, other: FrequencyResponse) -> float:
        """Grid average of |self - other|^2."""
        if not np.array_equal(self.omegas, other.omegas):
            raise DimensionMismatchError("Responses sampled on different frequency grids cannot be compared.")
        return float(np.mean(np.abs(self.values - other.values)**2))


@dataclass
class BesicovitchGap:
    mean_square_gap: float
    residual: float

    @property
    def within_bound(self) -> bool:
        return self.mean_square_gap <= self.residual + 1e-8


def _grid(omega: Frequencies) -> np.ndarray:
    grid = np.asarray(omega, dtype=float)
    if not np.all(np.isfinite(grid)):
        raise DomainError("Frequencies must be finite.", field="omega")
    return grid


def _shaped(values: np.ndarray) -> Union[complex, np.ndarray]:
    return complex(values) if np.ndim(values) == 0 else values


def ghat_recurrence(medium: Medium, omega: Frequencies) -> Union[complex, np.ndarray]:
    """
    Evaluate the reflection spectrum by the backward recurrence: starting from 0, apply z -> exp(i*tau_j*omega)*(z + R_j)/(1 + R_j*z) for j = n down to 0.
    Vectorized over 'omega'. An interface with |R_j| = 1 beneath another makes the map 0/0 at isolated frequencies, which raises DomainError.
    """
    omega = _grid(omega)
    guard = settings.denominator_guard

    z = np.zeros_like(omega, dtype=complex)
    for j in reversed(range(len(medium))):
        numerator, denominator = z + medium.R[j], 1 + medium.R[j]*z
        if np.any(singular := np.abs(denominator) <= guard):
            raise DomainError(f"The recurrence is 0/0 at interface {j} for omega={float(omega[singular][0])}.", field="omega", index=j)
        z = np.exp(1j*medium.tau[j]*omega)*numerator/denominator

    return _shaped(z)


def ghat_series(medium: Medium, omega: Frequencies, T: float) -> Union[complex, np.ndarray]:
    """Evaluate the truncated Fourier series of the reflection spectrum, summing a(R, k)*exp(i*omega*<k, tau>) over arrivals up to time T."""
    omega, train = _grid(omega), reflection_response(medium, T)
    if not train:
        return _shaped(np.zeros_like(omega, dtype=complex))

    return _shaped(np.exp(1j*np.multiply.outer(omega, train.times)) @ train.amplitudes)


@logged
def frequency_response(medium: Medium, omegas: Sequence[float], method: Method = Method.RECURRENCE, T: float = None) -> FrequencyResponse:
    """Sample the reflection spectrum on a grid. The series method needs the time cutoff T."""
    omegas = np.atleast_1d(_grid(omegas))

    if method == Method.SERIES:
        if T is None:
            raise DomainError("The series method needs a time cutoff.", field="T")
        values = ghat_series(medium, omegas, T)
    else:
        values = ghat_recurrence(medium, omegas)

    return FrequencyResponse(omegas=omegas, values=np.atleast_1d(values), method=method)


def frequency_grid(omega_max: float, samples: int, symmetric: bool = True) -> np.ndarray:
    """A uniform grid of 'samples' frequencies on [-omega_max, omega_max], or [0, omega_max] when not symmetric."""
    if not omega_max > 0:
        raise DomainError(f"The frequency range must be positive, got {omega_max}.", field="omega_max")
    if samples < 2:
        raise DomainError(f"At least two samples are needed, got {samples}.", field="samples")

    return np.linspace(-omega_max if symmetric else 0.0, omega_max, int(samples))


@logged
def flatness_statistic(medium: Medium, omega_max: float, samples: int, jitter: bool = False, seed: int = None) -> float:
    """
    The average of (1 - |G(omega)|)^2 over a uniform grid on [-omega_max, omega_max], evaluated by the recurrence.
    With 'jitter', every grid point is displaced uniformly within its own cell, drawn from a generator seeded with 'seed'.
    """
    grid = frequency_grid(omega_max, samples)

    if jitter:
        rng = np.random.default_rng(Maybe(seed).else_(settings.seed))
        step = grid[1] - grid[0]
        grid = np.clip(grid + rng.uniform(-step/2, step/2, size=grid.shape), -omega_max, omega_max)

    return float(np.mean((1 - np.abs(ghat_recurrence(medium, grid)))**2))


@logged
def besicovitch_gap(medium: Medium, omegas: Sequence[float], T: float) -> BesicovitchGap:
    """
    Compare the truncated series against the exact recurrence on a grid. The grid average of their squared difference estimates the energy
    of the arrivals after T, which is bounded by the residual energy at the same cutoff. Without 'tau_last' the transmitted share cannot be
    counted, and the looser bound 1 - reflected is reported.
    """
    gap = frequency_response(medium, omegas, Method.SERIES, T=T).mean_square_gap(frequency_response(medium, omegas, Method.RECURRENCE))

    if medium.tau_last is None:
        residual = 1 - reflection_response(medium, T).energy
    else:
        residual = energy_report(medium, T).residual

    return BesicovitchGap(mean_square_gap=gap, residual=residual)


@dataclass
class FlatnessSummary:
    fraction: float
    bound: float
    statistics: np.ndarray

    @property
    def within_bound(self) -> bool:
        return self.fraction >= self.bound


@logged
def flatness_fraction(n: int, epsilon: float, draws: int, omega_max: float, samples: int, seed: int = None) -> FlatnessSummary:
    """
    Draw media with n+1 interfaces, travel times uniform on [0.5, 1.5] and reflection coefficients uniform on [-1, 1], and report the fraction
    whose flatness statistic on [0, omega_max] is at most epsilon^2, next to the lower bound the inner-proximity estimate gives for it.
    """
    bound, rng = inner_probability_bound(n, epsilon), np.random.default_rng(Maybe(seed).else_(settings.seed))
    grid = frequency_grid(omega_max, samples, symmetric=False)

    statistics = np.array([
        np.mean((1 - np.abs(ghat_recurrence(Medium(tau=rng.uniform(0.5, 1.5, n + 1), R=rng.uniform(-1, 1, n + 1)), grid)))**2)
        for _ in range(int(draws))
    ])

    return FlatnessSummary(fraction=float(np.mean(statistics <= epsilon**2)), bound=bound, statistics=statistics)
