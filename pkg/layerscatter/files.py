"""
The file formats of the command line: media as json, delta trains and spectra as comma-delimited text written at 17 significant digits,
so a float survives a write and read unchanged.
"""

from __future__ import annotations

import io
import pathlib
from typing import Any, Union

import numpy as np

from pathmagic import File, PathLike

from layerscatter.errors import LayerScatterError, ValidationError
from layerscatter.misc import Validate
from layerscatter.forward import DeltaTrain, FrequencyResponse, Layer, Medium, physical_to_medium

FLOAT_FORMAT = "%.17g"


class DelimitedFile:
    """Base class for the delimited text files: a fixed header line, then one comma-separated row per record."""
    header: tuple[str, ...] = ()

    def __init__(self, path: Union[PathLike, File]) -> None:
        self.path = pathlib.Path(str(path))

    def __repr__(self) -> str:
        return f"{type(self).__name__}(path={repr(str(self.path))})"

    def write_rows(self, rows: np.ndarray) -> None:
        buffer = io.StringIO()
        np.savetxt(buffer, np.asarray(rows, dtype=float).reshape(-1, len(self.header)), fmt=FLOAT_FORMAT, delimiter=",", header=",".join(self.header), comments="")
        File.from_pathlike(self.path).path.write_text(buffer.getvalue())

    def read_rows(self) -> np.ndarray:
        if not Validate.File().is_valid(self.path):
            raise ValidationError(f"File '{self.path}' does not exist.", field="path")

        lines = File.from_pathlike(self.path).path.read_text().splitlines()
        if not lines or lines[0].strip().replace(" ", "") != ",".join(self.header):
            raise ValidationError(f"File '{self.path}' must start with the header '{','.join(self.header)}'.", field="header")

        body = [line for line in lines[1:] if line.strip()]
        if not body:
            return np.empty((0, len(self.header)))

        try:
            rows = np.loadtxt(io.StringIO("\n".join(body)), delimiter=",", ndmin=2)
        except ValueError as ex:
            raise ValidationError(f"File '{self.path}' holds a malformed row: {ex}", field="row")

        if rows.shape[1] != len(self.header):
            raise ValidationError(f"File '{self.path}' rows must have {len(self.header)} columns, got {rows.shape[1]}.", field="row")
        if not np.all(np.isfinite(rows)):
            raise ValidationError(f"File '{self.path}' holds a non-finite value in row {int(np.argwhere(~np.isfinite(rows))[0][0]) + 1}.", field="row")

        return rows


class TrainFile(DelimitedFile):
    """A delta train, one 'time,amplitude' row per impulse in order of arrival."""
    header = ("time", "amplitude")

    def write(self, train: DeltaTrain) -> None:
        self.write_rows(np.column_stack([train.times, train.amplitudes]))

    def read(self) -> DeltaTrain:
        rows = self.read_rows()
        return DeltaTrain(times=rows[:, 0], amplitudes=rows[:, 1])


class SpectrumFile(DelimitedFile):
    """A sampled frequency response, one 'omega,re,im,abs' row per frequency."""
    header = ("omega", "re", "im", "abs")

    def write(self, response: FrequencyResponse) -> None:
        values = np.asarray(response.values, dtype=complex)
        self.write_rows(np.column_stack([response.omegas, values.real, values.imag, np.abs(values)]))

    def read(self) -> np.ndarray:
        return self.read_rows()


class MediumFile:
    """
    A medium as a json object, in one of two shapes: travel times and reflection coefficients {"tau", "R", "tau_last"?},
    or a physical description {"layers": [{"density", "bulk_modulus"}, ...], "depths", "references"}.
    """
    direct_keys, physical_keys = {"tau", "R"}, {"layers", "depths", "references"}

    def __init__(self, path: Union[PathLike, File]) -> None:
        self.path = pathlib.Path(str(path))

    def __repr__(self) -> str:
        return f"{type(self).__name__}(path={repr(str(self.path))})"

    def read(self) -> Medium:
        if not Validate.File().is_valid(self.path):
            raise ValidationError(f"Medium file '{self.path}' does not exist.", field="path")

        return self.from_dict(self._json_file().content)

    def write(self, medium: Medium) -> None:
        self._json_file().content = medium.to_dict()

    def _json_file(self) -> File:
        if self.path.suffix.lower() != ".json":
            raise ValidationError(f"Medium file '{self.path}' must be type 'json'.", field="path")
        return File.from_pathlike(self.path)

    @classmethod
    def from_dict(cls, data: Any) -> Medium:
        if not isinstance(data, dict):
            raise ValidationError("A medium file must hold a json object.", field="medium")

        direct, physical = cls.direct_keys & set(data), cls.physical_keys & set(data)
        if direct and physical:
            raise ValidationError(f"A medium file holds either {sorted(cls.direct_keys)} or {sorted(cls.physical_keys)}, not both.", field="medium")

        if direct:
            if missing := cls.direct_keys - direct:
                raise ValidationError(f"Missing field '{missing.pop()}'.", field="medium")
            if unknown := set(data) - cls.direct_keys - {"tau_last"}:
                raise ValidationError(f"Unknown field '{sorted(unknown)[0]}'.", field=sorted(unknown)[0])
            return Medium(tau=data["tau"], R=data["R"], tau_last=data.get("tau_last"))

        if physical:
            if missing := cls.physical_keys - physical:
                raise ValidationError(f"Missing field '{missing.pop()}'.", field="medium")
            return physical_to_medium(layers=cls._layers(data["layers"]), depths=data["depths"], references=data["references"])

        raise ValidationError(f"A medium file must hold either {sorted(cls.direct_keys)} or {sorted(cls.physical_keys)}.", field="medium")

    @staticmethod
    def _layers(layers: Any) -> list[Layer]:
        if not isinstance(layers, list) or not layers:
            raise ValidationError("Field 'layers' must be a non-empty list.", field="layers")

        parsed = []
        for index, layer in enumerate(layers):
            if not isinstance(layer, dict) or set(layer) != {"density", "bulk_modulus"}:
                raise ValidationError(f"Invalid field 'layers[{index}]': expected an object with 'density' and 'bulk_modulus'.", field=f"layers[{index}]")
            try:
                parsed.append(Layer(density=layer["density"], bulk_modulus=layer["bulk_modulus"]))
            except LayerScatterError as ex:
                raise ValidationError(f"Invalid field 'layers[{index}]': {ex}", field=f"layers[{index}]")

        return parsed

