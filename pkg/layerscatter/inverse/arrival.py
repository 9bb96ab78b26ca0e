"""
Recovery of layer travel times from arrival times. The reflection arrivals of a medium are the values <k, tau> over lattice points supported on
initial intervals, and for generic tau these values are distinct, so the sorted arrival vector factors uniquely as A @ tau with integer rows.
The factorization peels off one layer at a time: the earliest arrival not yet explained is always the next partial sum of tau.
"""

from __future__ import annotations

import bisect
import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from subtypes import Enum

from layerscatter.amplitude import LatticeKind, LatticePoint, enumerate_reflection_lattice
from layerscatter.errors import InconsistentDataError, NonGenericError, ValidationError
from layerscatter.forward.train import times_coincide
from layerscatter.log import Log, logged
from layerscatter.misc.validator import Validate


class ArrivalVector:
    """A strictly increasing vector of positive arrival times."""

    def __init__(self, sigma: Sequence[float]) -> None:
        self.sigma: np.ndarray = Validate.Vector().of_type(Validate.Float().positive()).min_length(1).strictly_increasing().convert_field(sigma, "sigma")

    def __repr__(self) -> str:
        return f"{type(self).__name__}(sigma={self.sigma.tolist()})"

    def __len__(self) -> int:
        return len(self.sigma)

    def __iter__(self):
        return iter(self.sigma.tolist())

    def __getitem__(self, index: int) -> float:
        return float(self.sigma[index])

    def __mul__(self, factor: float) -> ArrivalVector:
        return type(self)(self.sigma*factor)

    __rmul__ = __mul__

    def without(self, indices: Sequence[int]) -> ArrivalVector:
        """A copy with the entries at the given indices deleted."""
        return type(self)(np.delete(self.sigma, list(indices)))


@dataclass(eq=False)
class FactorizationResult:
    """
    The integer matrix A (one lattice point per row, ordered by arrival time) and travel times tau with A @ tau equal to the full arrival vector.
    'observed' marks the rows whose arrival was present in the input.
    """
    A: np.ndarray
    tau: np.ndarray
    observed: np.ndarray

    @property
    def N(self) -> int:
        return len(self.tau) - 1

    @property
    def rows(self) -> list[LatticePoint]:
        return [LatticePoint(tuple(row)) for row in self.A.tolist()]

    @property
    def times(self) -> np.ndarray:
        return self.A @ self.tau


def _predicted_times(tau: np.ndarray) -> list[tuple[LatticePoint, float]]:
    return [(point, point.time(tau)) for point in enumerate_reflection_lattice(tau, math.fsum(tau), kind=LatticeKind.PROJECTION)]


@logged
def phi_map(tau: Sequence[float]) -> ArrivalVector:
    """The sorted distinct arrival times <k, tau> over lattice points with 0 < <k, tau> <= <1, tau>."""
    times: list[float] = []
    for _, time in _predicted_times(np.asarray(tau, dtype=float)):
        if not times or not times_coincide(times[-1], time):
            times.append(time)

    return ArrivalVector(times)


def is_generic(tau: Sequence[float]) -> bool:
    """Whether every lattice point up to <1, tau> arrives at a distinct time, beyond the merge tolerance."""
    times = [time for _, time in _predicted_times(np.asarray(tau, dtype=float))]
    return not any(times_coincide(first, second) for first, second in zip(times, times[1:]))


def cell_signature(tau: Sequence[float]) -> tuple[tuple[int, ...], ...]:
    """The integer matrix A of the cell containing tau, as a tuple of rows. Raises NonGenericError off the generic set."""
    if not is_generic(tau):
        raise NonGenericError(f"Travel times {list(tau)} are not generic: two lattice points share an arrival time.")

    return tuple(point.entries for point, _ in _predicted_times(np.asarray(tau, dtype=float)))


class _Deleter:
    """The observed arrivals not yet explained, and every predicted arrival so far, both kept sorted."""

    def __init__(self, sigma: np.ndarray) -> None:
        self.remaining, self.predicted = sigma.tolist(), []
        self.observed: dict[LatticePoint, bool] = {}

    def predict(self, point: LatticePoint, time: float, stage: int) -> None:
        position = bisect.bisect_left(self.predicted, time)
        for neighbour in self.predicted[max(position - 1, 0):position + 1]:
            if times_coincide(neighbour, time):
                raise NonGenericError(f"lattice point {point.entries} collides with another arrival at t={time}; non-generic travel times.", stage=stage)
        self.predicted.insert(position, time)

        position = bisect.bisect_left(self.remaining, time)
        candidates = [index for index in (position - 1, position) if 0 <= index < len(self.remaining) and times_coincide(self.remaining[index], time)]
        if candidates:
            del self.remaining[min(candidates, key=lambda index: abs(self.remaining[index] - time))]
        self.observed[point] = bool(candidates)


@logged
def invert_arrival_times(sigma: ArrivalVector) -> FactorizationResult:
    """
    Factor a primary subvector of an arrival vector. The first arrival is tau_0. Each later step takes the earliest arrival left unexplained,
    reads off the next travel time as that arrival minus the sum of those already known, and deletes every arrival the new layer predicts up
    to the last observed time. Predicted arrivals that were not observed are kept in the output but flagged in 'observed'.
    """
    sigma = sigma if isinstance(sigma, ArrivalVector) else ArrivalVector(sigma)
    last, deleter = sigma[-1], _Deleter(sigma.sigma)

    tau = [sigma[0]]
    for count in range(1, int(math.floor(last/tau[0]*(1 + 1e-12))) + 1):
        deleter.predict(LatticePoint((count,)), count*tau[0], stage=0)

    while deleter.remaining:
        stage, earliest = len(tau), deleter.remaining[0]
        step = earliest - math.fsum(tau)

        if step <= 0 or times_coincide(earliest, math.fsum(tau)):
            raise InconsistentDataError(f"the arrival at t={earliest} implies a non-positive travel time {step}; the input is not a primary subvector of a generic arrival vector.", stage=stage)

        tau.append(step)
        Log.debug(f"Recovered tau_{stage} = {step}.")

        for point in enumerate_reflection_lattice(tau, last, kind=LatticeKind.PROJECTION):
            if point[-1] >= 1:
                deleter.predict(point, point.time(tau), stage=stage)

    dimension = len(tau)
    ordered = sorted(((point.padded(dimension), observed) for point, observed in deleter.observed.items()), key=lambda item: (item[0].time(tau), item[0].entries))

    return FactorizationResult(
        A=np.array([point.entries for point, _ in ordered], dtype=int).reshape(len(ordered), dimension),
        tau=np.asarray(tau, dtype=float),
        observed=np.array([observed for _, observed in ordered], dtype=bool),
    )


class TransitionKind(Enum):
    PERMUTATION = ADDED = DELETED = MIXED = Enum.Auto()


@dataclass
class CellTransition:
    """The first change of cell met when walking tau along a direction."""
    kind: TransitionKind
    tau: np.ndarray
    before: tuple[tuple[int, ...], ...]
    after: tuple[tuple[int, ...], ...]


def _classify(before: tuple, after: tuple) -> TransitionKind:
    if set(before) == set(after):
        return TransitionKind.PERMUTATION
    if set(before) < set(after):
        return TransitionKind.ADDED
    if set(after) < set(before):
        return TransitionKind.DELETED
    return TransitionKind.MIXED


def cell_neighbours(tau: Sequence[float], direction: Sequence[float], step: float = 1e-3, max_steps: int = 10_000) -> Optional[CellTransition]:
    """
    Walk tau + t*direction in increments of 'step' and report the first point whose cell signature differs from that of tau, classified as a
    permutation of rows, an added row, a deleted row, or a mixture. Non-generic points along the way are stepped over. Returns None if the walk
    leaves the positive orthant or runs out of steps without changing cell.
    """
    tau, direction = np.asarray(tau, dtype=float), np.asarray(direction, dtype=float)
    if tau.shape != direction.shape:
        raise ValidationError(f"tau and direction must share a dimension, got {tau.size} and {direction.size}.", field="direction")

    start = cell_signature(tau)
    for count in range(1, max_steps + 1):
        current = tau + count*step*direction
        if np.any(current <= 0):
            return None
        try:
            signature = cell_signature(current)
        except NonGenericError:
            continue
        if signature != start:
            return CellTransition(kind=_classify(start, signature), tau=current, before=start, after=signature)

    return None
