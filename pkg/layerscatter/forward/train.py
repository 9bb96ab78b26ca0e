from __future__ import annotations

import math
from typing import Iterable, Iterator, Sequence

import numpy as np

from maybe import Maybe

from layerscatter.errors import DimensionMismatchError, ValidationError
from layerscatter.misc.config import settings
from layerscatter.misc.validator import Validate


def times_coincide(first: float, second: float, tolerance: float = None) -> bool:
    """Two arrival times coincide when they differ by at most tolerance*max(1, t)."""
    return abs(first - second) <= Maybe(tolerance).else_(settings.merge_tolerance)*max(1.0, abs(first))


class DeltaTrain:
    """A time-domain Green's function: a sum of impulses with strictly increasing arrival times and real amplitudes."""

    def __init__(self, times: Sequence[float] = (), amplitudes: Sequence[float] = ()) -> None:
        self.times: np.ndarray = Validate.Vector().strictly_increasing().convert_field(list(times), "time")
        self.amplitudes: np.ndarray = Validate.Vector().convert_field(list(amplitudes), "amplitude")

        if len(self.times) != len(self.amplitudes):
            raise DimensionMismatchError(f"Got {len(self.times)} times but {len(self.amplitudes)} amplitudes.", field="amplitude")

    def __repr__(self) -> str:
        return f"{type(self).__name__}(events={self.events})"

    def __len__(self) -> int:
        return len(self.times)

    def __bool__(self) -> bool:
        return len(self) > 0

    def __iter__(self) -> Iterator[tuple[float, float]]:
        return iter(self.events)

    def __getitem__(self, index: int) -> tuple[float, float]:
        return float(self.times[index]), float(self.amplitudes[index])

    @property
    def events(self) -> list[tuple[float, float]]:
        return [(float(time), float(amplitude)) for time, amplitude in zip(self.times, self.amplitudes)]

    @property
    def energy(self) -> float:
        """The sum of squared amplitudes."""
        return math.fsum(self.amplitudes**2)

    @classmethod
    def from_events(cls, events: Iterable[tuple[float, float]], merge_tolerance: float = None, amplitude_floor: float = None) -> DeltaTrain:
        """
        Build a train from unordered (time, amplitude) pairs. Times that coincide within the merge tolerance collapse onto the earliest of them
        with their amplitudes summed, and merged amplitudes below the amplitude floor are dropped.
        """
        floor = Maybe(amplitude_floor).else_(settings.amplitude_floor)

        clusters: list[tuple[float, list[float]]] = []
        for time, amplitude in sorted(events, key=lambda event: event[0]):
            if clusters and times_coincide(clusters[-1][0], time, merge_tolerance):
                clusters[-1][1].append(amplitude)
            else:
                clusters.append((time, [amplitude]))

        kept = [(time, total) for time, parts in clusters if abs(total := math.fsum(parts)) >= floor]
        return cls(times=[time for time, _ in kept], amplitudes=[amplitude for _, amplitude in kept])

    def index_of(self, time: float, tolerance: float = None) -> int:
        """The index of the event arriving at the given time, or -1 if there is none."""
        position = int(np.searchsorted(self.times, time))
        for candidate in (position - 1, position):
            if 0 <= candidate < len(self) and times_coincide(self.times[candidate], time, tolerance):
                return candidate
        return -1

    def amplitude_at(self, time: float, default: float = 0.0) -> float:
        return default if (index := self.index_of(time)) < 0 else float(self.amplitudes[index])

    def with_amplitude(self, time: float, amplitude: float) -> DeltaTrain:
        """A copy with the amplitude of the event at the given time replaced."""
        if (index := self.index_of(time)) < 0:
            raise ValidationError(f"No event arrives at t={time}.", field="time")

        amplitudes = self.amplitudes.copy()
        amplitudes[index] = amplitude
        return type(self)(times=self.times, amplitudes=amplitudes)

    def truncated(self, T: float) -> DeltaTrain:
        keep = self.times <= T + settings.merge_tolerance*max(1.0, T)
        return type(self)(times=self.times[keep], amplitudes=self.amplitudes[keep])

    def deviation_from(self, other: DeltaTrain) -> float:
        """
        The largest absolute amplitude difference between two trains, pairing events by coincident arrival time.
        An event present in only one train counts with its full amplitude.
        """
        deviation, matched = 0.0, set()
        for time, amplitude in self:
            index = other.index_of(time)
            if index >= 0:
                matched.add(index)
                deviation = max(deviation, abs(amplitude - other.amplitudes[index]))
            else:
                deviation = max(deviation, abs(amplitude))

        for index, (time, amplitude) in enumerate(other):
            if index not in matched:
                deviation = max(deviation, abs(amplitude))

        return float(deviation)
