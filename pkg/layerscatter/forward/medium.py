from __future__ import annotations

import math
from typing import Any, Optional, Sequence

import numpy as np

from layerscatter.errors import DimensionMismatchError, DomainError, ValidationError
from layerscatter.misc.validator import Validate


class Medium:
    """
    A layered medium described by its two-way layer travel times 'tau' and interface reflection coefficients 'R', one of each per interface.
    'tau_last' is the travel time of the final layer below the deepest interface, and is only needed to synthesize transmission.
    """

    def __init__(self, tau: Sequence[float], R: Sequence[float], tau_last: float = None) -> None:
        self.tau: np.ndarray = Validate.Vector().of_type(Validate.Float().positive()).min_length(1).convert_field(tau, "tau")
        self.R: np.ndarray = Validate.Vector().of_type(Validate.Float().within(-1, 1)).min_length(1).convert_field(R, "R")
        self.tau_last: Optional[float] = Validate.Float(nullable=True).positive().convert_field(tau_last, "tau_last")

        if len(self.tau) != len(self.R):
            raise DimensionMismatchError(f"'tau' has {len(self.tau)} entries but 'R' has {len(self.R)}.", field="R")

    def __repr__(self) -> str:
        return f"{type(self).__name__}(tau={self.tau.tolist()}, R={self.R.tolist()}, tau_last={self.tau_last})"

    def __len__(self) -> int:
        return len(self.tau)

    @property
    def n(self) -> int:
        """Index of the deepest interface."""
        return len(self.tau) - 1

    @property
    def transmission(self) -> np.ndarray:
        """The interface transmission factors sqrt(1 - R_j^2)."""
        return np.sqrt(np.clip(1 - self.R**2, 0, None))

    @property
    def tau_prime(self) -> np.ndarray:
        if self.tau_last is None:
            raise DomainError("This medium has no 'tau_last', which transmission requires.", field="tau_last")
        return np.append(self.tau, self.tau_last)

    @property
    def total_time(self) -> float:
        """The two-way time <1, tau> down to the deepest interface."""
        return math.fsum(self.tau)

    def reversed(self) -> Medium:
        """The medium with its layers in reverse order."""
        return type(self)(tau=self.tau[::-1], R=self.R[::-1], tau_last=self.tau_last)

    def with_reflectivity(self, R: Sequence[float]) -> Medium:
        return type(self)(tau=self.tau, R=R, tau_last=self.tau_last)

    def to_dict(self) -> dict[str, Any]:
        data = {"tau": self.tau.tolist(), "R": self.R.tolist()}
        if self.tau_last is not None:
            data["tau_last"] = self.tau_last
        return data


class Layer:
    """A homogeneous layer, given by its density and bulk modulus."""

    def __init__(self, density: float, bulk_modulus: float) -> None:
        self.density = Validate.Float().positive().convert_field(density, "density")
        self.bulk_modulus = Validate.Float().positive().convert_field(bulk_modulus, "bulk_modulus")

    def __repr__(self) -> str:
        return f"{type(self).__name__}({', '.join([f'{attr}={repr(val)}' for attr, val in self.__dict__.items() if not attr.startswith('_')])})"

    @property
    def impedance(self) -> float:
        return math.sqrt(self.bulk_modulus*self.density)

    @property
    def velocity(self) -> float:
        return math.sqrt(self.bulk_modulus/self.density)


def physical_to_medium(layers: Sequence[Layer], depths: Sequence[float], references: Sequence[float]) -> Medium:
    """
    Convert n+2 layers separated by the n+1 interface depths z_0 < ... < z_n into a medium. 'references' holds the depths (z_-1, z_n+1)
    that bound the first and last layer. Layer j spans [z_j-1, z_j] and is crossed in 2(z_j - z_j-1)/v_j seconds, while interface j reflects with
    (I_j - I_j+1)/(I_j + I_j+1) for layer impedances I.
    """
    layers = [layer if isinstance(layer, Layer) else Layer(**layer) for layer in layers]
    depths = Validate.Vector().min_length(1).convert_field(depths, "depths")
    references = Validate.Vector().of_length(2).convert_field(references, "references")

    if len(layers) != len(depths) + 1:
        raise DimensionMismatchError(f"{len(depths)} interfaces need {len(depths) + 1} layers, got {len(layers)}.", field="layers")

    bounds = np.concatenate(([references[0]], depths, [references[1]]))
    if not np.all(np.diff(bounds) > 0):
        raise ValidationError(f"Depths must be strictly increasing from the upper to the lower reference, got {bounds.tolist()}.", field="depths")

    times = [2*thickness/layer.velocity for thickness, layer in zip(np.diff(bounds), layers)]
    reflectivity = [(upper.impedance - lower.impedance)/(upper.impedance + lower.impedance) for upper, lower in zip(layers, layers[1:])]

    return Medium(tau=times[:-1], R=reflectivity, tau_last=times[-1])
