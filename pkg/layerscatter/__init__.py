__all__ = [
    "LayerScatterError", "ValidationError", "ResourceCapError", "InversionError",
    "Medium", "Layer", "physical_to_medium", "DeltaTrain",
    "reflection_response", "transmission_response", "energy_report", "frequency_response", "flatness_statistic", "Method",
    "ray_reflection_train", "ray_transmission_train",
    "run_inversion", "invert_medium", "invert_arrival_times", "phi_map",
    "MediumFile", "TrainFile", "SpectrumFile",
    "Config", "settings", "Log",
]

from .errors import LayerScatterError, ValidationError, ResourceCapError, InversionError
from .forward import (
    Medium, Layer, physical_to_medium, DeltaTrain,
    reflection_response, transmission_response, energy_report, frequency_response, flatness_statistic, Method,
)
from .oracle import ray_reflection_train, ray_transmission_train
from .inverse import run_inversion, invert_medium, invert_arrival_times, phi_map
from .files import MediumFile, TrainFile, SpectrumFile
from .misc import Config, settings
from .log import Log
