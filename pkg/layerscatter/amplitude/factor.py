from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from layerscatter.errors import DomainError

from .jacobi import EXACT_LIMIT, ArrayLike, binomial, jacobi, jacobi_recurrence, shaped


@dataclass(frozen=True)
class FactorPair:
    """The exponent pair (p, q) of one amplitude factor, with the Jacobi parameters it maps onto."""
    p: int
    q: int

    @property
    def alpha(self) -> int:
        return abs(self.p - self.q)

    @property
    def N(self) -> int:
        return min(self.p, self.q) - 1

    @property
    def ascending(self) -> bool:
        return self.p <= self.q

    @property
    def cancelling(self) -> bool:
        """Whether a term of the defining sums can exceed 2**53."""
        return math.comb(self.p + self.q, self.p) > EXACT_LIMIT

    @property
    def evaluator(self) -> Callable[..., ArrayLike]:
        return jacobi_recurrence if self.cancelling else jacobi


def amp_factor_f(p: int, q: int, x: ArrayLike) -> ArrayLike:
    """Reflection amplitude factor f^(p,q)(x), by its defining sum."""
    x = np.asarray(x, dtype=float)

    if min(p, q) < 0:
        return shaped(np.zeros_like(x))
    if p == q == 0:
        return shaped(np.ones_like(x))
    if q == 0:
        return shaped(x**p)
    if p == 0:
        return shaped(np.zeros_like(x))
    if FactorPair(p, q).cancelling:
        return amp_factor_f_jacobi(p, q, x)

    complement = 1 - x**2
    total = np.zeros_like(x)
    for j in range(1, min(p, q) + 1):
        total = total + (-1)**(q - j)*binomial(p, j)*binomial(q - 1, j - 1)*x**(p + q - 2*j)*complement**j

    return shaped(total)


def amp_factor_f_jacobi(p: int, q: int, x: ArrayLike) -> ArrayLike:
    """Reflection amplitude factor f^(p,q)(x) through P^(alpha,1) evaluated at 1 - 2x^2. Requires min(p, q) >= 1."""
    if min(p, q) < 1:
        raise DomainError(f"The Jacobi form of f^(p,q) needs min(p, q) >= 1, got ({p}, {q}).")

    pair, x = FactorPair(p, q), np.asarray(x, dtype=float)
    body = (1 - x**2)*np.asarray(pair.evaluator(pair.N, pair.alpha, 1, 1 - 2*x**2))

    if pair.ascending:
        return shaped((-x)**pair.alpha*body)
    return shaped((p/q)*x**pair.alpha*body)


def amp_factor_g(p: int, q: int, x: ArrayLike) -> ArrayLike:
    """Transmission amplitude factor g^(p,q)(x), by its defining sum."""
    x = np.asarray(x, dtype=float)

    if min(p, q) < 0:
        return shaped(np.zeros_like(x))
    if FactorPair(p, q).cancelling:
        return amp_factor_g_jacobi(p, q, x)

    complement = 1 - x**2
    total = np.zeros_like(x)
    for j in range(min(p, q) + 1):
        total = total + (-1)**(q - j)*binomial(p, j)*binomial(q, j)*x**(p + q - 2*j)*complement**j

    return shaped(np.sqrt(np.clip(complement, 0, None))*total)


def amp_factor_g_jacobi(p: int, q: int, x: ArrayLike) -> ArrayLike:
    """Transmission amplitude factor g^(p,q)(x) through P^(alpha,0) evaluated at 1 - 2x^2. Requires min(p, q) >= 0."""
    if min(p, q) < 0:
        raise DomainError(f"The Jacobi form of g^(p,q) needs min(p, q) >= 0, got ({p}, {q}).")

    pair, x = FactorPair(p, q), np.asarray(x, dtype=float)
    body = np.sqrt(np.clip(1 - x**2, 0, None))*np.asarray(pair.evaluator(pair.N + 1, pair.alpha, 0, 1 - 2*x**2))

    if pair.ascending:
        return shaped((-x)**pair.alpha*body)
    return shaped(x**pair.alpha*body)
