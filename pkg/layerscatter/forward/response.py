from __future__ import annotations

from layerscatter.amplitude import LatticeKind, amplitude_a, amplitude_b, enumerate_reflection_lattice, enumerate_transmission_lattice
from layerscatter.log import logged

from .medium import Medium
from .train import DeltaTrain


@logged
def reflection_response(medium: Medium, T: float) -> DeltaTrain:
    """The reflection Green's function up to time T: an impulse of amplitude a(R, k) at each time <k, tau> <= T, merged where times coincide."""
    points = enumerate_reflection_lattice(medium.tau, T, kind=LatticeKind.REFLECTION)
    return DeltaTrain.from_events((point.time(medium.tau), amplitude_a(medium.R, point)) for point in points)


@logged
def transmission_response(medium: Medium, T: float) -> DeltaTrain:
    """The transmission Green's function up to time T: an impulse of amplitude b(R, k) at each time 0.5*tau_n+1 + <k + 0.5, tau> <= T."""
    arrivals = enumerate_transmission_lattice(medium.tau_prime, T)
    return DeltaTrain.from_events((time, amplitude_b(medium.R, point)) for point, time in arrivals)
