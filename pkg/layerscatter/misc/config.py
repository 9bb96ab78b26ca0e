from __future__ import annotations

from contextlib import contextmanager
from typing import Any, Iterator

from subtypes import Dict
from pathmagic import PathLike, File

from layerscatter.errors import ValidationError
from .validator import Validate


class Config:
    """
    A config class holding the numerical tolerances and caps used throughout the library.
    The values can be accessed through the 'Config.data' attribute, holding a special kind of dictionary that allows its items to be accessed through attribute access.
    Overrides can be imported from a json file, applied temporarily with 'Config.override()', and reverted to the defaults with 'Config.clear()'.
    This class is intended to be used through the module-level 'settings' instance, but can be subclassed with a different 'Config.default' (dict) class attribute.
    """

    default: dict = {
        "merge_tolerance": 1e-9,
        "amplitude_floor": 1e-14,
        "zero_threshold": 1e-12,
        "root_tolerance": 1e-7,
        "agreement_tolerance": 1e-8,
        "denominator_guard": 1e-15,
        "lattice_cap": 10**7,
        "path_cap": 10**7,
        "oracle_max_interfaces": 4,
        "seed": 0,
    }

    def __init__(self, default: dict = None) -> None:
        self.default = default or self.default
        self.data: Dict = Dict(self.default)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({', '.join([f'{attr}={repr(val)}' for attr, val in self.__dict__.items() if not attr.startswith('_')])})"

    def __getattr__(self, name: str) -> Any:
        if name.startswith("_") or name in ("default", "data"):
            raise AttributeError(name)

        try:
            return self.data[name]
        except KeyError:
            raise AttributeError(f"{type(self).__name__} has no setting '{name}'.")

    def clear(self) -> None:
        """Restore the default values."""
        self.data = Dict(self.default)

    def update(self, values: dict) -> None:
        """Validate the given values against the known settings and apply them."""
        if unknown := set(values) - set(self.default):
            raise ValidationError(f"Unknown setting(s): {', '.join(sorted(unknown))}.")

        for name, value in values.items():
            expected = type(self.default[name])
            if isinstance(value, bool) or not isinstance(value, (int, float)):
                raise ValidationError(f"Setting '{name}' must be numeric, got {repr(value)}.", field=name)
            if value < 0:
                raise ValidationError(f"Setting '{name}' must be non-negative, got {value}.", field=name)
            if expected is int and value != int(value):
                raise ValidationError(f"Setting '{name}' must be an integer, got {value}.", field=name)

            self.data[name] = expected(value)

    def import_(self, path: PathLike) -> None:
        """Import the overrides held by the json file at the given path."""
        if not Validate.File().is_valid(path):
            raise ValidationError(f"Config file '{path}' does not exist.", field="config")

        file = File.from_pathlike(path)

        if file.extension != "json":
            raise ValidationError(f"Config file to import must be type 'json'.", field="config")

        # pathmagic hands back the raw text (or None) when the json does not parse
        values = file.content
        if not isinstance(values, dict):
            raise ValidationError(f"Config file '{file}' must hold a valid json object.", field="config")

        self.update(values)

    def export_as(self, path: PathLike) -> None:
        """Export the current values to the given path as json."""
        File.from_pathlike(path).content = dict(self.data)

    @contextmanager
    def override(self, **values: Any) -> Iterator[Config]:
        """Apply the given values for the duration of the context, then restore the previous ones."""
        previous = Dict(self.data)
        self.update(values)
        try:
            yield self
        finally:
            self.data = previous


settings = Config()
