__all__ = [
    "jacobi", "jacobi_recurrence", "jacobi_beta_one_step", "binomial",
    "FactorPair", "amp_factor_f", "amp_factor_f_jacobi", "amp_factor_g", "amp_factor_g_jacobi",
    "amplitude_a", "amplitude_b", "covering_amplitude",
    "LatticeKind", "LatticePoint", "enumerate_reflection_lattice", "enumerate_transmission_lattice",
]

from .jacobi import jacobi, jacobi_recurrence, jacobi_beta_one_step, binomial
from .factor import FactorPair, amp_factor_f, amp_factor_f_jacobi, amp_factor_g, amp_factor_g_jacobi
from .polynomial import amplitude_a, amplitude_b, covering_amplitude
from .lattice import LatticeKind, LatticePoint, enumerate_reflection_lattice, enumerate_transmission_lattice
