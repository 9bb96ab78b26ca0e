import pathlib

import numpy as np
import pytest

from layerscatter.errors import ValidationError
from layerscatter.forward import Method
from layerscatter.misc import Condition, Validate


class TestCondition:
    def test_name_from_lambda(self):
        assert str(Condition(lambda val: val > 0)) == "val > 0"

    def test_explicit_name(self):
        assert str(Condition(lambda val: True, name="always")) == "always"


class TestFloatValidator:
    def test_convert(self):
        assert Validate.Float().convert("2.5") == 2.5
        assert isinstance(Validate.Float().convert(3), float)

    def test_rejects_non_finite(self):
        for value in ("nan", float("inf"), "abc"):
            assert not Validate.Float().is_valid(value)

    def test_conditions(self):
        validator = Validate.Float().within(-1, 1)
        assert validator.is_valid(1.0)
        assert not validator.is_valid(1.01)
        assert not Validate.Float().positive().is_valid(0)

    def test_nullable(self):
        assert Validate.Float(nullable=True).convert(None) is None
        with pytest.raises(ValidationError):
            Validate.Float().convert(None)


class TestIntegerValidator:
    def test_convert(self):
        assert Validate.Integer().convert("12") == 12
        assert not Validate.Integer().min_value(2).is_valid(1)


class TestBooleanValidator:
    def test_convert(self):
        assert Validate.Boolean().convert("true") is True
        assert Validate.Boolean().convert(False) is False


class TestVectorValidator:
    def test_convert(self):
        vector = Validate.Vector().convert([1, "2.5", 3])
        assert isinstance(vector, np.ndarray)
        assert vector.tolist() == [1.0, 2.5, 3.0]

    def test_json_string(self):
        assert Validate.Vector().convert("[0.5, 0.25]").tolist() == [0.5, 0.25]

    def test_entry_index_in_error(self):
        with pytest.raises(ValidationError, match=r"R\[2\]"):
            Validate.Vector().of_type(Validate.Float().within(-1, 1)).convert_field([0.1, 0.2, 1.5], "R")

    def test_shape_conditions(self):
        assert not Validate.Vector().of_length(2).is_valid([1, 2, 3])
        assert not Validate.Vector().min_length(1).is_valid([])
        assert not Validate.Vector().strictly_increasing().is_valid([1, 1])
        assert Validate.Vector().strictly_increasing().is_valid([1, 2])


class TestPathValidators:
    def test_path(self, tmp_path):
        assert Validate.Path().convert(str(tmp_path)) == pathlib.Path(tmp_path)

    def test_file(self, tmp_path):
        assert not Validate.File().is_valid(str(tmp_path/"absent.csv"))
        (present := tmp_path/"present.csv").write_text("time,amplitude\n")
        assert Validate.File().is_valid(str(present))


class TestEnumValidator:
    def test_case_insensitive(self):
        validator = Validate.Enum().parametrize(Method)
        assert validator.convert("Series") == Method.SERIES
        assert validator.convert(Method.RECURRENCE) == Method.RECURRENCE
        assert not validator.is_valid("laplace")


class TestValidate:
    def test_infer_type(self):
        assert isinstance(Validate.infer_type(float), Validate.Float)
        assert isinstance(Validate.infer_type(Method), Validate.Enum)
        with pytest.raises(TypeError):
            Validate.infer_type(complex)
