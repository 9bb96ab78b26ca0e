__all__ = [
    "ArrivalVector", "FactorizationResult", "phi_map", "is_generic", "invert_arrival_times", "cell_signature",
    "TransitionKind", "CellTransition", "cell_neighbours",
    "MatchedAmplitudes", "match_amplitudes",
    "recover_R_recursive", "quadratic_coefficients", "quadratic_roots", "xi_product", "sign_of_xj",
    "eight_amplitudes_xj", "seven_points_xj", "seven_points_lattice", "eight_amplitude_lattice", "LocalizedEstimate", "localized_xj",
    "Agreement", "InterfaceEstimate", "InversionReport", "run_inversion", "invert_medium",
]

from .arrival import (
    ArrivalVector, FactorizationResult, phi_map, is_generic, invert_arrival_times, cell_signature,
    TransitionKind, CellTransition, cell_neighbours,
)
from .matching import MatchedAmplitudes, match_amplitudes
from .localized import (
    recover_R_recursive, quadratic_coefficients, quadratic_roots, xi_product, sign_of_xj,
    eight_amplitudes_xj, seven_points_xj, seven_points_lattice, eight_amplitude_lattice, LocalizedEstimate, localized_xj,
)
from .pipeline import Agreement, InterfaceEstimate, InversionReport, run_inversion, invert_medium
