from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

from subtypes import Enum
from tabulate import tabulate

from layerscatter.amplitude import LatticePoint
from layerscatter.errors import InconsistentDataError, InversionError, MissingAmplitudeError, NonGenericError
from layerscatter.forward.medium import Medium
from layerscatter.forward.train import DeltaTrain
from layerscatter.log import Log, logged
from layerscatter.misc.config import settings

from .arrival import ArrivalVector, FactorizationResult, invert_arrival_times
from .localized import localized_xj
from .matching import MatchedAmplitudes, match_amplitudes


class Agreement(Enum):
    CONSISTENT = DISCREPANCY = UNCHECKED = Enum.Auto()


@dataclass
class InterfaceEstimate:
    j: int
    recursive: float
    localized: Optional[float]
    chosen: float
    method: str
    agreement: Agreement


@dataclass
class InversionReport:
    """The recovered medium along with how every reflection coefficient was obtained and whether the two recoveries agreed."""
    medium: Medium
    factorization: FactorizationResult
    matched: MatchedAmplitudes
    estimates: list[InterfaceEstimate] = field(default_factory=list)

    def __str__(self) -> str:
        return self.table()

    @property
    def discrepancies(self) -> list[InterfaceEstimate]:
        return [estimate for estimate in self.estimates if estimate.agreement == Agreement.DISCREPANCY]

    @property
    def consistent(self) -> bool:
        return not self.discrepancies

    def table(self, tablefmt: str = "fancy_grid") -> str:
        rows = [
            [estimate.j, f"{self.medium.tau[estimate.j]:.12g}", f"{estimate.recursive:.12g}",
             "" if estimate.localized is None else f"{estimate.localized:.12g}", f"{estimate.chosen:.12g}", estimate.method, estimate.agreement.name.lower()]
            for estimate in self.estimates
        ]
        return tabulate(rows, headers=["j", "tau", "recursive", "localized", "chosen", "method", "flag"], tablefmt=tablefmt)


def _recursive_value(matched: MatchedAmplitudes, chosen: list[float], j: int) -> float:
    primary = matched.amplitude(LatticePoint.ones(j, matched.N + 1), stage=j)
    loss = math.prod(1 - value**2 for value in chosen)

    if abs(primary) <= settings.zero_threshold or abs(loss) <= settings.zero_threshold:
        raise MissingAmplitudeError(f"the primary amplitude at 1^{j} is zero, so R_{j} cannot be recovered.", stage=j)

    return primary/loss


def _check_primary(matched: MatchedAmplitudes) -> None:
    for point, amplitude in matched:
        if point[0] >= 2 and abs(amplitude) > settings.zero_threshold:
            raise NonGenericError(f"non-generic travel times: the event at t={point.time(matched.tau)} matches {point.entries}, which carries no reflection.", stage="matching")


@logged
def run_inversion(train: DeltaTrain) -> InversionReport:
    """
    Recover the medium behind a reflection train. Travel times come from factoring the event times, and reflection coefficients from the
    matched amplitudes: R_0 and R_n from the primary arrivals, every interior R_j from the localized formulas, checked against the recursive
    value. Where the two disagree beyond the agreement tolerance the localized value is kept and the interface is flagged.
    """
    if not train:
        raise InconsistentDataError("the train holds no events.", stage="arrival times")

    factorization = invert_arrival_times(ArrivalVector(train.times))
    if factorization.N < 1:
        raise NonGenericError("non-generic travel times: the events determine fewer than two layers.", stage="arrival times")

    matched = match_amplitudes(train, factorization.tau)
    _check_primary(matched)

    chosen: list[float] = []
    estimates: list[InterfaceEstimate] = []
    for j in range(factorization.N + 1):
        recursive = _recursive_value(matched, chosen, j)
        localized, method, agreement = None, "recursive", Agreement.UNCHECKED

        if 0 < j < factorization.N:
            try:
                estimate = localized_xj(matched, j)
            except InversionError as ex:
                Log.warning(f"Interface {j}: no localized estimate ({ex}), keeping the recursive value.")
            else:
                localized, method = estimate.value, estimate.method
                if abs(recursive - localized) > settings.agreement_tolerance*max(1.0, abs(localized)):
                    agreement = Agreement.DISCREPANCY
                    Log.warning(f"Interface {j}: recursive value {recursive} disagrees with the {method} value {localized}.")
                else:
                    agreement = Agreement.CONSISTENT

        value = recursive if localized is None else localized
        if abs(value) > 1:
            raise InconsistentDataError(f"recovered |R_{j}| = {abs(value)} exceeds 1.", stage=j)

        chosen.append(value)
        estimates.append(InterfaceEstimate(j=j, recursive=recursive, localized=localized, chosen=value, method=method, agreement=agreement))

    medium = Medium(tau=factorization.tau, R=chosen)
    Log.info(f"Recovered {medium}.")

    return InversionReport(medium=medium, factorization=factorization, matched=matched, estimates=estimates)


def invert_medium(train: DeltaTrain) -> Medium:
    """Recover the medium behind a reflection train. See 'run_inversion' for the report of how each coefficient was obtained."""
    return run_inversion(train).medium
