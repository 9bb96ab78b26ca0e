import logbook
import pytest

from layerscatter.log import IndentationLog, Log, Tracer, logged


@logged
def double(value, scale=2):
    Log.debug("doubling")
    return value*scale


class Doubler:
    @logged
    def apply(self, value):
        return 2*value


class TestLogged:
    def test_call_and_result(self):
        with logbook.TestHandler(level=Log.LogLevel.DEBUG) as handler:
            assert double(3, scale=4) == 12

        messages = [record.message for record in handler.records]
        assert messages[0] == "double(3, scale=4)"
        assert messages[-1].startswith("double [") and messages[-1].endswith("-> 12")

    def test_method(self):
        with logbook.TestHandler(level=Log.LogLevel.DEBUG) as handler:
            Doubler().apply(1.5)
        assert handler.records[0].message == "Doubler.apply(self, 1.5)"

    def test_summarizes_long_values(self):
        with logbook.TestHandler(level=Log.LogLevel.DEBUG) as handler:
            double("x"*500, scale=1)
        assert len(handler.records[0].message) < 200

    def test_nests_inside_tracer_log(self, tmp_path, monkeypatch):
        path = tmp_path/"run.log"
        with IndentationLog(path, indentation_token=">") as log:
            monkeypatch.setattr(Tracer, "log", log)
            double(1)

        assert any(line.endswith(" | >doubling") for line in path.read_text().splitlines())

    def test_exception_propagates(self):
        @logged
        def fail():
            raise RuntimeError("boom")

        with pytest.raises(RuntimeError):
            fail()
