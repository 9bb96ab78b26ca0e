from __future__ import annotations

import math
from typing import Sequence, Union

import numpy as np

from layerscatter.errors import DimensionMismatchError, DomainError

from .factor import amp_factor_f, amp_factor_g
from .lattice import LatticePoint

PointLike = Union[LatticePoint, Sequence[int]]


def _operands(x: Sequence[float], k: PointLike) -> tuple[np.ndarray, tuple[int, ...]]:
    x, entries = np.asarray(x, dtype=float), tuple(int(entry) for entry in k)

    if x.ndim != 1 or x.size != len(entries):
        raise DimensionMismatchError(f"x has dimension {x.size} but k has dimension {len(entries)}.")
    if not len(x):
        raise DomainError("Amplitude polynomials need at least one coordinate.", field="x")
    if np.any(np.abs(x) > 1):
        raise DomainError(f"Every coordinate of x must lie in [-1, 1], got {x.tolist()}.", field="x")

    return x, entries


def amplitude_a(x: Sequence[float], k: PointLike) -> float:
    """Reflection amplitude a(x, k) = delta(k_0, 1) * x_n^k_n * prod_j f^(k_j, k_{j+1})(x_j)."""
    x, k = _operands(x, k)

    if k[0] != 1 or any(entry < 0 for entry in k):
        return 0.0

    return float(x[-1]**k[-1]*math.prod(amp_factor_f(k[j], k[j + 1], x[j]) for j in range(len(k) - 1)))


def amplitude_b(x: Sequence[float], k: PointLike) -> float:
    """Transmission amplitude b(x, k) = delta(k_0, 0) * sqrt(1 - x_n^2) * x_n^k_n * prod_j g^(k_j, k_{j+1})(x_j)."""
    x, k = _operands(x, k)

    if k[0] != 0 or any(entry < 0 for entry in k):
        return 0.0

    return float(math.sqrt(1 - x[-1]**2)*x[-1]**k[-1]*math.prod(amp_factor_g(k[j], k[j + 1], x[j]) for j in range(len(k) - 1)))


def covering_amplitude(y: Sequence[float]) -> float:
    """
    The covering amplitude: reduce every coordinate to [-1, 1) modulo 2 and read off the lattice point from the number of periods removed,
    so that covering_amplitude(x + 2k) == amplitude_a(x, k). Odd-integer coordinates are rejected since they reduce onto the excluded value 1.
    """
    y = np.asarray(y, dtype=float)

    if odd := [index for index, value in enumerate(y) if float(value).is_integer() and int(value) % 2]:
        raise DomainError(f"Coordinates {odd} of y are odd integers, which lie outside the covered domain.", field="y")

    periods = np.floor((y + 1)/2)
    return amplitude_a(y - 2*periods, [int(period) for period in periods])
