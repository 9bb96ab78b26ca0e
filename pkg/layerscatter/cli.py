from __future__ import annotations

import sys
from contextlib import ExitStack
from typing import Sequence

import logbook

from layerscatter.command import ArgType, Command
from layerscatter.errors import LayerScatterError
from layerscatter.files import MediumFile, SpectrumFile, TrainFile
from layerscatter.forward import (
    Medium, Method, energy_report, flatness_statistic, frequency_grid, frequency_response, reflection_response, transmission_response,
)
from layerscatter.inverse import run_inversion
from layerscatter.log import IndentationLog, Log, Tracer, logged
from layerscatter.misc import Report, settings
from layerscatter.oracle import ray_reflection_train, ray_transmission_train


ORACLE_TOLERANCE = 1e-10


def positive(value: float) -> bool:
    return value > 0


class LayerScatter(Command):
    """Forward synthesis and inversion of plane-wave scattering in layered media."""
    config = ArgType.File(nullable=True, info="json file of setting overrides (tolerances and caps)")
    log = ArgType.Path(nullable=True, info="append every log record of the run to this file")

    def _callback_(self) -> None:
        cleanup: ExitStack = self["cleanup"]

        if self.log() is not None:
            Tracer.log = cleanup.enter_context(IndentationLog(self.log()))
            cleanup.callback(setattr, Tracer, "log", None)

        if self.config() is not None:
            cleanup.enter_context(settings.override())
            settings.import_(self.config())
            Log.info(f"Settings after '{self.config()}': {dict(settings.data)}")

    class Forward(Command):
        """Synthesize the reflection (or transmission) delta train of a medium up to a time cutoff."""
        medium = ArgType.File(positional=True, info="json medium file")
        cutoff = ArgType.Float(info="time cutoff T", conditions={"T > 0": positive})
        transmission = ArgType.Boolean(info="synthesize the transmission train instead of the reflection train")
        out = ArgType.Path(info="delimited train file to write")

        @logged
        def _callback_(self) -> None:
            medium = MediumFile(self.medium()).read()
            train = (transmission_response if self.transmission() else reflection_response)(medium, self.cutoff())

            TrainFile(self.out()).write(train)
            Log.info(f"Wrote {len(train)} events to '{self.out()}'.")

    class Spectrum(Command):
        """Sample the reflection spectrum of a medium on [0, omega_max]."""
        medium = ArgType.File(positional=True, info="json medium file")
        omega_max = ArgType.Float(info="largest frequency of the grid", conditions={"omega_max > 0": positive})
        samples = ArgType.Integer(default=1024, info="number of grid frequencies", conditions={"samples >= 2": lambda val: val >= 2})
        method = ArgType.Enum[Method](default=Method.RECURRENCE, info="backward recurrence (exact) or truncated series")
        cutoff = ArgType.Float(nullable=True, info="time cutoff for the series method", conditions={"T > 0": positive})
        out = ArgType.Path(info="delimited spectrum file to write")

        @logged
        def _callback_(self) -> None:
            medium = MediumFile(self.medium()).read()
            response = frequency_response(medium, frequency_grid(self.omega_max(), self.samples(), symmetric=False), method=self.method(), T=self.cutoff())

            SpectrumFile(self.out()).write(response)
            Log.info(f"Wrote {len(response)} samples to '{self.out()}'.")

    class Invert(Command):
        """Recover travel times and reflection coefficients from a reflection train, reporting how each coefficient was obtained."""
        train = ArgType.File(positional=True, info="delimited train file")
        out = ArgType.Path(nullable=True, info="json medium file to write")

        @logged
        def _callback_(self) -> None:
            inversion = run_inversion(TrainFile(self.train()).read())

            if self.out() is not None:
                MediumFile(self.out()).write(inversion.medium)

            report = Report(f"Inversion of '{self.train()}'")
            report.add_text("Status", "consistent" if inversion.consistent else f"discrepancy at j = {', '.join(str(row.j) for row in inversion.discrepancies)}")
            report.add_text("Interfaces", inversion.table())
            report.print()

    class Validate(Command):
        """Check a medium: energy partition up to the cutoff, agreement with the ray-path oracle, and spectral flatness."""
        medium = ArgType.File(positional=True, info="json medium file")
        cutoff = ArgType.Float(info="time cutoff T", conditions={"T > 0": positive})
        omega_max = ArgType.Float(default=100.0, info="largest frequency of the flatness grid", conditions={"omega_max > 0": positive})
        samples = ArgType.Integer(default=4096, info="number of flatness grid frequencies", conditions={"samples >= 2": lambda val: val >= 2})
        seed = ArgType.Integer(nullable=True, info="seed of the flatness grid jitter")

        @logged
        def _callback_(self) -> None:
            medium, T = MediumFile(self.medium()).read(), self.cutoff()
            report = Report(f"Validation of '{self.medium()}' up to T = {T}")

            report.add_table("Energy", self.energy_rows(medium, T), headers=["quantity", "value"])
            report.add_table("Oracle", self.oracle_rows(medium, T), headers=["train", "max deviation", "result"])

            statistic = flatness_statistic(medium, self.omega_max(), self.samples(), jitter=True, seed=self.seed())
            report.add_table("Flatness", [["mean (1 - |G|)^2", statistic]], headers=["statistic", "value"])

            report.print()

        @staticmethod
        def energy_rows(medium: Medium, T: float) -> list[list]:
            if medium.tau_last is None:
                return [["reflected", reflection_response(medium, T).energy], ["transmitted", "n/a (no tau_last)"], ["residual", "n/a"]]

            reflected, transmitted, residual = energy_report(medium, T)
            return [["reflected", reflected], ["transmitted", transmitted], ["residual", residual]]

        @staticmethod
        def oracle_rows(medium: Medium, T: float) -> list[list]:
            if len(medium) > settings.oracle_max_interfaces:
                return [["all", "", f"skipped (n>{settings.oracle_max_interfaces - 1})"]]

            pairs = [("reflection", reflection_response(medium, T), ray_reflection_train(medium, T))]
            if medium.tau_last is not None:
                pairs.append(("transmission", transmission_response(medium, T), ray_transmission_train(medium, T)))

            rows = []
            for name, synthesized, traced in pairs:
                deviation = synthesized.deviation_from(traced)
                rows.append([name, deviation, "PASS" if deviation <= ORACLE_TOLERANCE else "FAIL"])
                if deviation > ORACLE_TOLERANCE:
                    Log.error(f"The {name} train deviates from the ray-path oracle by {deviation}.")

            return rows

    class Oracle(Command):
        """Trace every ray path of a medium up to a time cutoff and write the resulting train."""
        _hidden_ = True

        medium = ArgType.File(positional=True, info="json medium file")
        cutoff = ArgType.Float(info="time cutoff T", conditions={"T > 0": positive})
        transmission = ArgType.Boolean(info="collect paths leaving through the bottom instead of the top")
        out = ArgType.Path(info="delimited train file to write")

        @logged
        def _callback_(self) -> None:
            medium = MediumFile(self.medium()).read()
            train = (ray_transmission_train if self.transmission() else ray_reflection_train)(medium, self.cutoff())
            TrainFile(self.out()).write(train)


def main(argv: Sequence[str] = None) -> int:
    """Run the command line and return its exit code: 0 on success, 2 for invalid input, 3 when a cap is exceeded, 4 when inversion fails."""
    with ExitStack() as cleanup:
        cleanup.enter_context(logbook.NullHandler().applicationbound())
        cleanup.enter_context(Log.console(Log.LogLevel.WARNING).applicationbound())

        command = LayerScatter(name="layerscatter")
        command["cleanup"] = cleanup

        try:
            command(list(sys.argv[1:] if argv is None else argv))
        except SystemExit as ex:
            return ex.code if isinstance(ex.code, int) else 0
        except LayerScatterError as ex:
            Log.error(ex.message)
            return ex.exit_code

    return 0


def run() -> None:
    sys.exit(main())
