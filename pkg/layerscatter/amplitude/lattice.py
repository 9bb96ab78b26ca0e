from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from subtypes import Enum
from maybe import Maybe

from layerscatter.errors import DomainError, ResourceCapError
from layerscatter.misc.config import settings


class LatticeKind(Enum):
    """
    Membership rule for reflection lattice points. Both require non-negative entries supported on an initial interval
    (k_j = 0 implies k_{j+1} = 0). PROJECTION admits any k_0 >= 1 and is the lattice of the arrival-time problem;
    REFLECTION fixes k_0 = 1, the only points carrying a non-zero reflection amplitude.
    """
    PROJECTION = REFLECTION = Enum.Auto()


@dataclass(frozen=True, order=True)
class LatticePoint:
    """An integer multi-index k = (k_0, ..., k_n) labelling one scattering amplitude."""
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.entries:
            raise DomainError("A lattice point needs at least one entry.")
        object.__setattr__(self, "entries", tuple(int(entry) for entry in self.entries))

    def __repr__(self) -> str:
        return f"{type(self).__name__}{self.entries}"

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def __getitem__(self, index: int) -> int:
        return self.entries[index]

    def __add__(self, other: Sequence[int]) -> LatticePoint:
        if len(other) != len(self):
            raise DomainError(f"Cannot add lattice points of dimension {len(self)} and {len(other)}.")
        return LatticePoint(tuple(a + b for a, b in zip(self, other)))

    @property
    def n(self) -> int:
        return len(self.entries) - 1

    def time(self, tau: Sequence[float]) -> float:
        """The arrival time <k, tau>."""
        return math.fsum(entry*step for entry, step in zip(self.entries, tau))

    def is_member(self, kind: LatticeKind = LatticeKind.PROJECTION) -> bool:
        if any(entry < 0 for entry in self.entries) or self.entries[0] < 1:
            return False
        if kind == LatticeKind.REFLECTION and self.entries[0] != 1:
            return False
        return all(current > 0 or following == 0 for current, following in zip(self.entries, self.entries[1:]))

    def in_transmission_support(self) -> bool:
        return self.entries[0] == 0 and all(entry >= 0 for entry in self.entries)

    def padded(self, dimension: int) -> LatticePoint:
        """Extend with trailing zeros to the given dimension."""
        if dimension < len(self):
            raise DomainError(f"Cannot pad a lattice point of dimension {len(self)} down to {dimension}.")
        return LatticePoint(self.entries + (0,)*(dimension - len(self)))

    @classmethod
    def ones(cls, last: int, dimension: int) -> LatticePoint:
        """The point with ones in coordinates 0..last and zeros after it."""
        return cls(tuple(1 if index <= last else 0 for index in range(dimension)))

    @classmethod
    def basis(cls, index: int, dimension: int) -> LatticePoint:
        return cls(tuple(1 if position == index else 0 for position in range(dimension)))


def _as_positive_vector(values: Sequence[float], name: str) -> np.ndarray:
    vector = np.asarray(values, dtype=float)
    if vector.ndim != 1 or not len(vector):
        raise DomainError(f"'{name}' must be a non-empty vector.", field=name)
    if not np.all(np.isfinite(vector)) or np.any(vector <= 0):
        raise DomainError(f"Every entry of '{name}' must be positive and finite, got {vector.tolist()}.", field=name)
    return vector


def _reach(T: float) -> float:
    if not math.isfinite(T) or T <= 0:
        raise DomainError(f"The cutoff must be positive and finite, got {T}.", field="T")
    return T + settings.merge_tolerance*max(1.0, T)


class _Counter:
    def __init__(self, cap: int) -> None:
        self.cap, self.count = cap, 0

    def tick(self) -> None:
        self.count += 1
        if self.count > self.cap:
            raise ResourceCapError(f"Lattice enumeration exceeded the cap of {self.cap} points.", cap=self.cap)


def _extend(prefix: list[int], elapsed: float, tau: np.ndarray, reach: float, counter: _Counter, supported: bool) -> Iterator[tuple[int, ...]]:
    position = len(prefix)
    if position == len(tau):
        counter.tick()
        yield tuple(prefix)
        return

    if supported:
        counter.tick()
        yield tuple(prefix) + (0,)*(len(tau) - position)
    else:
        yield from _extend(prefix + [0], elapsed, tau, reach, counter, supported)

    count = 1
    while elapsed + count*tau[position] <= reach:
        yield from _extend(prefix + [count], elapsed + count*tau[position], tau, reach, counter, supported)
        count += 1


def enumerate_reflection_lattice(tau: Sequence[float], T: float, kind: LatticeKind = LatticeKind.PROJECTION, cap: int = None) -> list[LatticePoint]:
    """
    Every lattice point k of the given kind with 0 < <k, tau> <= T, ordered by arrival time with ties broken lexicographically.
    The cutoff is inclusive up to the merge tolerance. Raises ResourceCapError once more than 'cap' points are found.
    """
    tau, reach = _as_positive_vector(tau, "tau"), _reach(T)
    counter = _Counter(Maybe(cap).else_(settings.lattice_cap))

    first_choices = [1] if kind == LatticeKind.REFLECTION else range(1, int(reach // tau[0]) + 1)

    points = []
    for first in first_choices:
        if first*tau[0] > reach:
            break
        for entries in _extend([first], first*tau[0], tau, reach, counter, supported=True):
            points.append(LatticePoint(entries))

    return sorted(points, key=lambda point: (point.time(tau), point.entries))


def enumerate_transmission_lattice(tau_prime: Sequence[float], T: float, cap: int = None) -> list[tuple[LatticePoint, float]]:
    """
    Every k in {0} x Z_+^n whose transmitted arrival time 0.5*tau_{n+1} + <k + 0.5, tau> is at most T, paired with that time and sorted by it.
    'tau_prime' holds the n+1 layer travel times followed by the travel time of the final layer.
    """
    tau_prime, reach = _as_positive_vector(tau_prime, "tau_prime"), _reach(T)
    if len(tau_prime) < 2:
        raise DomainError("'tau_prime' needs at least two entries.", field="tau_prime")

    tau = tau_prime[:-1]
    base = 0.5*tau_prime[-1] + 0.5*math.fsum(tau)
    if base > reach:
        return []

    counter = _Counter(Maybe(cap).else_(settings.lattice_cap))
    arrivals = []
    for entries in _extend([0], base, tau, reach, counter, supported=False):
        point = LatticePoint(entries)
        arrivals.append((point, base + point.time(tau)))

    return sorted(arrivals, key=lambda pair: (pair[1], pair[0].entries))

