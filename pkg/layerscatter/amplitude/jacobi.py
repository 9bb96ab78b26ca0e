"""
Classical Jacobi polynomials P_n^(alpha, beta), evaluated either by the explicit binomial sum or by the three-term recurrence.
Both paths accept a scalar or a numpy array for the evaluation point and return the same shape.
"""

from __future__ import annotations

import math
from typing import Union

import numpy as np

from layerscatter.errors import DomainError, PrecisionError

ArrayLike = Union[float, np.ndarray]

EXACT_LIMIT = 2**53


def binomial(top: float, bottom: int) -> float:
    """
    Binomial coefficient C(top, bottom) for integer 'bottom'. Integer 'top' is computed exactly, then rounded to the nearest double;
    real 'top' uses the falling-factorial product.
    """
    if bottom < 0:
        return 0.0

    if float(top).is_integer():
        top = int(top)
        if top < 0:
            # C(-m, k) = (-1)^k C(m+k-1, k)
            return (-1)**bottom * binomial(bottom - top - 1, bottom)
        if bottom > top:
            return 0.0
        try:
            return float(math.comb(top, bottom))
        except OverflowError:
            raise PrecisionError(f"C({top}, {bottom}) overflows a double.")

    return math.prod((top - index) / (index + 1) for index in range(bottom))


def _check_parameters(n: int, alpha: float, beta: float) -> None:
    if int(n) != n or n < 0:
        raise DomainError(f"Jacobi degree must be a non-negative integer, got {n}.", field="n")
    if alpha <= -1:
        raise DomainError(f"Jacobi parameter alpha must exceed -1, got {alpha}.", field="alpha")
    if beta <= -1:
        raise DomainError(f"Jacobi parameter beta must exceed -1, got {beta}.", field="beta")


def shaped(value: np.ndarray) -> ArrayLike:
    """Collapse a zero-dimensional array to a float, leaving arrays untouched."""
    return float(value) if np.ndim(value) == 0 else value


def jacobi(n: int, alpha: float, beta: float, z: ArrayLike) -> ArrayLike:
    """Evaluate P_n^(alpha, beta)(z) by the explicit binomial sum."""
    _check_parameters(n, alpha, beta)
    z = np.asarray(z, dtype=float)

    lower, upper = (z - 1)/2, (z + 1)/2
    total = np.zeros_like(z)
    for j in range(int(n) + 1):
        total = total + binomial(n + alpha, n - j)*binomial(n + beta, j)*lower**j*upper**(n - j)

    return shaped(total)


def jacobi_beta_one_step(N: int, alpha: float, p_n: ArrayLike, p_n1: ArrayLike, z: ArrayLike) -> ArrayLike:
    """Given P_N and P_{N+1} with beta = 1, return P_{N+2} from the classical beta = 1 recurrence."""
    lead = (2*N + 4)*(N + alpha + 3)*(2*N + alpha + 3)
    middle = (2*N + alpha + 4)*((2*N + alpha + 5)*(2*N + alpha + 3)*np.asarray(z, dtype=float) + alpha**2 - 1)
    last = 2*(N + alpha + 1)*(N + 2)*(2*N + alpha + 5)
    return shaped((middle*p_n1 - last*np.asarray(p_n, dtype=float))/lead)


def jacobi_recurrence(n: int, alpha: float, beta: float, z: ArrayLike) -> ArrayLike:
    """Evaluate P_n^(alpha, beta)(z) by three-term recurrence from P_0 = 1 and P_1."""
    _check_parameters(n, alpha, beta)
    z = np.asarray(z, dtype=float)

    previous = np.ones_like(z)
    if n == 0:
        return shaped(previous)

    current = 0.5*(alpha - beta + (alpha + beta + 2)*z)
    if beta == 1:
        for N in range(int(n) - 1):
            previous, current = current, jacobi_beta_one_step(N, alpha, previous, current, z)
        return shaped(np.asarray(current))

    both = alpha + beta
    for k in range(2, int(n) + 1):
        a1 = 2*k*(k + both)*(2*k + both - 2)
        a2 = (2*k + both - 1)*(alpha**2 - beta**2)
        a3 = (2*k + both - 2)*(2*k + both - 1)*(2*k + both)
        a4 = 2*(k + alpha - 1)*(k + beta - 1)*(2*k + both)
        previous, current = current, ((a2 + a3*z)*current - a4*previous)/a1

    return shaped(current)
