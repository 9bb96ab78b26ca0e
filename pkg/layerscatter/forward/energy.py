from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from layerscatter.amplitude import LatticeKind, amplitude_a, amplitude_b, enumerate_reflection_lattice, enumerate_transmission_lattice
from layerscatter.errors import DomainError
from layerscatter.log import logged

from .medium import Medium


@dataclass
class EnergyReport:
    """How the energy of the initial pulse is split up to a time cutoff: reflected, transmitted, and not yet arrived."""
    reflected: float
    transmitted: float

    @property
    def residual(self) -> float:
        return 1 - self.reflected - self.transmitted

    def __iter__(self) -> Iterator[float]:
        return iter((self.reflected, self.transmitted, self.residual))


@dataclass
class NormBounds:
    lower: float
    truncated_norm: float
    upper: float

    @property
    def consistent(self) -> bool:
        """The lower bound max|x_j| cannot exceed the norm, which the truncation and residual bracket."""
        return self.lower <= self.upper + 1e-12 and self.truncated_norm <= 1 + 1e-12


@dataclass
class InnerDistance:
    truncated_distance: float
    bound: float


def _reflected_energy(medium: Medium, T: float) -> float:
    points = enumerate_reflection_lattice(medium.tau, T, kind=LatticeKind.REFLECTION)
    return math.fsum(amplitude_a(medium.R, point)**2 for point in points)


def _transmitted_energy(medium: Medium, T: float) -> float:
    return math.fsum(amplitude_b(medium.R, point)**2 for point, _ in enumerate_transmission_lattice(medium.tau_prime, T))


@logged
def energy_report(medium: Medium, T: float) -> EnergyReport:
    """Sum the squared reflection and transmission amplitudes of every arrival up to time T."""
    if medium.tau_last is None:
        raise DomainError("An energy report needs 'tau_last' to account for transmission.", field="tau_last")

    return EnergyReport(reflected=_reflected_energy(medium, T), transmitted=_transmitted_energy(medium, T))


def _unit_medium(x: Sequence[float]) -> Medium:
    return Medium(tau=np.ones(len(x)), R=x, tau_last=1.0)


def norm_bounds(x: Sequence[float], T: float) -> NormBounds:
    """
    Bracket the norm of the amplitude family of x, truncated to lattice points of total order at most T.
    The norm is at least max|x_j|, at least the truncated sum, and at most the truncated sum plus the residual energy.
    """
    report = energy_report(medium := _unit_medium(x), T)
    return NormBounds(lower=float(np.max(np.abs(medium.R))), truncated_norm=math.sqrt(report.reflected), upper=math.sqrt(report.reflected + max(report.residual, 0.0)))


def reversed_energy(x: Sequence[float], T: float) -> tuple[float, float]:
    """The truncated reflected energy of x and of x in reverse order. The untruncated values are equal."""
    medium = _unit_medium(x)
    return _reflected_energy(medium, T), _reflected_energy(medium.reversed(), T)


def inner_distance(x: Sequence[float], T: float) -> InnerDistance:
    """
    The distance between the amplitude families of x and of x with its last coordinate replaced by 1, truncated to total order T,
    together with its upper bound min_{j<n} 2*sqrt(1 - x_j^2).
    """
    medium = _unit_medium(x)
    if medium.n < 1:
        raise DomainError("The inner distance needs at least two coordinates.", field="x")

    capped = np.append(medium.R[:-1], 1.0)
    points = enumerate_reflection_lattice(medium.tau, T, kind=LatticeKind.REFLECTION)
    distance = math.sqrt(math.fsum((amplitude_a(medium.R, point) - amplitude_a(capped, point))**2 for point in points))

    return InnerDistance(truncated_distance=distance, bound=float(np.min(2*np.sqrt(1 - medium.R[:-1]**2))))


def inner_probability_bound(n: int, epsilon: float) -> float:
    """Lower bound 1 - (1 - (epsilon/2)^2)^(n/2) on the chance that a uniform draw from [-1, 1]^(n+1) lies within epsilon of an inner family."""
    if not 0 < epsilon < 2:
        raise DomainError(f"epsilon must lie in (0, 2), got {epsilon}.", field="epsilon")
    if n < 1:
        raise DomainError(f"n must be at least 1, got {n}.", field="n")

    return 1 - (1 - (epsilon/2)**2)**(n/2)
