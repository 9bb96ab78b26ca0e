from __future__ import annotations

from typing import Iterator, Sequence

import numpy as np

from maybe import Maybe

from layerscatter.amplitude import LatticeKind, LatticePoint, enumerate_reflection_lattice
from layerscatter.errors import AmbiguityError, MissingAmplitudeError
from layerscatter.forward.train import DeltaTrain, times_coincide
from layerscatter.log import Log, logged


class MatchedAmplitudes:
    """
    Observed amplitudes keyed by the lattice point that explains their arrival time. Points that arrive by the cutoff but are absent
    from the train carry amplitude zero; asking for a point past the cutoff raises MissingAmplitudeError.
    """

    def __init__(self, amplitudes: dict[LatticePoint, float], tau: Sequence[float], cutoff: float, unmatched: list[tuple[float, float]] = None) -> None:
        self.amplitudes, self.tau, self.cutoff = amplitudes, np.asarray(tau, dtype=float), cutoff
        self.unmatched = Maybe(unmatched).else_([])

    def __repr__(self) -> str:
        return f"{type(self).__name__}(points={len(self)}, tau={self.tau.tolist()}, cutoff={self.cutoff}, unmatched={len(self.unmatched)})"

    def __len__(self) -> int:
        return len(self.amplitudes)

    def __iter__(self) -> Iterator[tuple[LatticePoint, float]]:
        return iter(self.amplitudes.items())

    def __contains__(self, point: LatticePoint) -> bool:
        return point in self.amplitudes

    def __getitem__(self, point: LatticePoint) -> float:
        return self.amplitude(point)

    @property
    def N(self) -> int:
        return len(self.tau) - 1

    def amplitude(self, point: LatticePoint, stage: object = None) -> float:
        point = point if isinstance(point, LatticePoint) else LatticePoint(tuple(point))
        if point in self.amplitudes:
            return self.amplitudes[point]

        time = point.time(self.tau)
        if time <= self.cutoff or times_coincide(time, self.cutoff):
            return 0.0

        raise MissingAmplitudeError(f"the amplitude at {point.entries} arrives at t={time}, after the cutoff {self.cutoff}.", stage=stage)


@logged
def match_amplitudes(train: DeltaTrain, tau: Sequence[float], cutoff: float = None) -> MatchedAmplitudes:
    """
    Pair every event of the train with the lattice point whose arrival time <k, tau> it coincides with. An event explained by more than
    one lattice point raises AmbiguityError. Events explained by no lattice point are kept aside as unmatched.
    """
    tau = np.asarray(tau, dtype=float)
    cutoff = Maybe(cutoff).else_(float(train.times[-1]) if train else 0.0)

    amplitudes: dict[LatticePoint, float] = {}
    unmatched: list[tuple[float, float]] = []
    if not train:
        return MatchedAmplitudes(amplitudes, tau, cutoff)

    points = enumerate_reflection_lattice(tau, cutoff, kind=LatticeKind.PROJECTION)
    times = np.array([point.time(tau) for point in points])

    for time, amplitude in train:
        position = int(np.searchsorted(times, time))
        candidates = [points[index] for index in range(max(position - 1, 0), min(position + 2, len(points))) if times_coincide(times[index], time)]

        if len(candidates) > 1:
            raise AmbiguityError(f"the event at t={time} is explained by lattice points {[point.entries for point in candidates]}.", stage="matching")
        if candidates:
            amplitudes[candidates[0]] = amplitude
        else:
            unmatched.append((time, amplitude))

    if unmatched:
        Log.warning(f"{len(unmatched)} event(s) match no lattice point, the first at t={unmatched[0][0]}.")

    return MatchedAmplitudes(amplitudes, tau, cutoff, unmatched=unmatched)
