from __future__ import annotations

from typing import Any


class LayerScatterError(Exception):
    """Base class of every error raised by this library. Carries the process exit code the command line reports for it."""
    exit_code = 1

    def __init__(self, message: str, **context: Any) -> None:
        super().__init__(message)
        self.message, self.context = message, context

    def __repr__(self) -> str:
        return f"{type(self).__name__}({', '.join([f'{attr}={repr(val)}' for attr, val in self.__dict__.items() if not attr.startswith('_')])})"

    def __str__(self) -> str:
        return self.message


class ValidationError(LayerScatterError, ValueError):
    """Input that fails validation: malformed files, out-of-range flags or parameters."""
    exit_code = 2


class DomainError(ValidationError):
    """An argument lies outside the domain of the function it was passed to."""


class DimensionMismatchError(ValidationError):
    """Two vectors that must share a dimension do not."""


class PrecisionError(ValidationError):
    """An exact integer quantity cannot be represented in a double without loss."""


class ResourceCapError(LayerScatterError):
    """An enumeration exceeded its configured cap."""
    exit_code = 3

    def __init__(self, message: str, cap: int, **context: Any) -> None:
        super().__init__(message, **context)
        self.cap = cap


class InversionError(LayerScatterError):
    """Base class for failures of the inversion pipeline. The 'stage' names where it failed."""
    exit_code = 4

    def __init__(self, message: str, stage: Any = None, **context: Any) -> None:
        super().__init__(message if stage is None else f"stage {stage}: {message}", **context)
        self.stage = stage


class InconsistentDataError(InversionError):
    """The data contradicts the model it is being inverted against."""


class NonGenericError(InversionError):
    """Travel times lie on (or numerically next to) a collision hyperplane."""


class AmbiguityError(InversionError):
    """An observed arrival time is explained by more than one lattice point."""


class MissingAmplitudeError(InversionError):
    """An amplitude the inversion needs is absent from the data or numerically zero."""
