__all__ = [
    "Medium", "Layer", "physical_to_medium",
    "DeltaTrain", "times_coincide",
    "reflection_response", "transmission_response",
    "EnergyReport", "energy_report", "norm_bounds", "reversed_energy", "inner_distance", "inner_probability_bound",
    "Method", "FrequencyResponse", "ghat_recurrence", "ghat_series", "frequency_response", "frequency_grid",
    "flatness_statistic", "flatness_fraction", "besicovitch_gap",
]

from .medium import Medium, Layer, physical_to_medium
from .train import DeltaTrain, times_coincide
from .response import reflection_response, transmission_response
from .energy import EnergyReport, energy_report, norm_bounds, reversed_energy, inner_distance, inner_probability_bound
from .spectrum import (
    Method, FrequencyResponse, ghat_recurrence, ghat_series, frequency_response, frequency_grid,
    flatness_statistic, flatness_fraction, besicovitch_gap,
)
