"""
A brute-force ray tracer for layered media. It follows every up- and down-going path through the stack, multiplying in one coefficient per
interface encounter, and knows nothing of lattice points or amplitude polynomials. That independence is what makes it useful as a check on them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterator

from subtypes import Enum
from maybe import Maybe

from layerscatter.errors import DomainError, ResourceCapError
from layerscatter.forward import DeltaTrain, Medium
from layerscatter.log import logged
from layerscatter.misc.config import settings


class Direction(Enum):
    DOWN = UP = Enum.Auto()


class Exit(Enum):
    """Where a path leaves the stack: back out through the top (reflection) or out through the bottom (transmission)."""
    TOP = BOTTOM = Enum.Auto()


@dataclass
class RayPath:
    """One path through the medium: the (layer, direction) of every layer transit, its arrival time and the product of its interface coefficients."""
    segments: list[tuple[int, Direction]] = field(default_factory=list)
    time: float = 0.0
    amplitude: float = 1.0

    def __len__(self) -> int:
        return len(self.segments)

    def extended(self, layer: int, direction: Direction, half_time: float, factor: float) -> RayPath:
        return RayPath(segments=[*self.segments, (layer, direction)], time=self.time + half_time, amplitude=self.amplitude*factor)

    @property
    def bounces(self) -> int:
        """Number of reflections along the path."""
        return sum(1 for (_, first), (_, second) in zip(self.segments, self.segments[1:]) if first != second)


def enumerate_ray_paths(medium: Medium, T: float, exit_: Exit = Exit.TOP, cap: int = None) -> Iterator[RayPath]:
    """
    Depth-first enumeration of every path that starts down-going at the top of layer 0 and leaves through the given side by time T.
    Each transit of layer j takes 0.5*tau_j. A down-going wave meeting interface j reflects with R_j, an up-going one with -R_j,
    and either transmits with sqrt(1 - R_j^2). A path reaching the top of layer 0 leaves the medium, as does one crossing the final layer.
    """
    if not T > 0:
        raise DomainError(f"The cutoff must be positive, got {T}.", field="T")

    durations = list(medium.tau_prime if exit_ == Exit.BOTTOM else medium.tau)
    R, transmission = medium.R, medium.transmission
    deepest, reach = len(medium) - 1, T + settings.merge_tolerance*max(1.0, T)
    cap, count = Maybe(cap).else_(settings.path_cap), 0

    stack = [RayPath().extended(0, Direction.DOWN, 0.5*durations[0], 1.0)]
    while stack:
        path = stack.pop()
        if path.time > reach or path.amplitude == 0:
            continue

        count += 1
        if count > cap:
            raise ResourceCapError(f"Ray path enumeration exceeded the cap of {cap} segments.", cap=cap)

        layer, direction = path.segments[-1]

        if direction == Direction.UP:
            if layer == 0:
                if exit_ == Exit.TOP:
                    yield path
                continue
            stack.append(path.extended(layer, Direction.DOWN, 0.5*durations[layer], -R[layer - 1]))
            stack.append(path.extended(layer - 1, Direction.UP, 0.5*durations[layer - 1], transmission[layer - 1]))
        elif layer > deepest:
            if exit_ == Exit.BOTTOM:
                yield path
        else:
            stack.append(path.extended(layer, Direction.UP, 0.5*durations[layer], R[layer]))
            if layer < deepest or exit_ == Exit.BOTTOM:
                stack.append(path.extended(layer + 1, Direction.DOWN, 0.5*durations[layer + 1], transmission[layer]))


def _train(paths: Iterator[RayPath]) -> DeltaTrain:
    return DeltaTrain.from_events((path.time, path.amplitude) for path in paths)


@logged
def ray_reflection_train(medium: Medium, T: float, cap: int = None) -> DeltaTrain:
    """Sum the amplitudes of every path leaving through the top by time T, grouped by arrival time."""
    return _train(enumerate_ray_paths(medium, T, Exit.TOP, cap=cap))


@logged
def ray_transmission_train(medium: Medium, T: float, cap: int = None) -> DeltaTrain:
    """Sum the amplitudes of every path leaving through the bottom of the final layer by time T, grouped by arrival time."""
    return _train(enumerate_ray_paths(medium, T, Exit.BOTTOM, cap=cap))


def path_energy(medium: Medium, T: float) -> float:
    """Reflected plus transmitted energy of the oracle trains up to T."""
    return math.fsum((ray_reflection_train(medium, T).energy, ray_transmission_train(medium, T).energy))
