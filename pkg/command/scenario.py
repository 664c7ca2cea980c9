from __future__ import annotations

import argparse
from pathlib import Path

import config
from scenario import Report, ScenarioKind, execute, load_scenario, render_report
from toolkit.command import BasicCommand, ScenarioCommand
from toolkit.errors import ParseError, SchemaError
from toolkit.verdict import Verdict
from utils.local_logger import LocalLogger

log = LocalLogger("Command")


def colors_for(command: BasicCommand) -> bool:
    return config.COLOR and config.OUTPUT_FORMAT is config.OutputFormat.TEXT and command.is_terminal()


def _error_report(path: Path, kind: str, e: Exception) -> Report:
    return Report(str(path), kind, Verdict.ERROR, error=f"{type(e).__name__}: {e}")


class RunScenario(BasicCommand):
    """
    Runs a single scenario file of any kind.
    """

    path = ("scenario", "run")
    help = "run one scenario file"

    def add_arguments(self, parser: argparse.ArgumentParser):
        parser.add_argument("file", type=Path, help="scenario.json or a check directory")

    def accepts(self, kind: ScenarioKind) -> bool:
        return True

    def execute(self, args: argparse.Namespace) -> int:
        try:
            scenario = load_scenario(args.file)
            if not self.accepts(scenario.kind):
                raise SchemaError(f"{self.name} expects a {self.kind.value} scenario, got {scenario.kind.value}.")
        except (ParseError, SchemaError) as e:
            log.warn(f"{args.file}: {e}")
            report = _error_report(args.file, self.name, e)
        else:
            report = execute(scenario)
        self.write(render_report(report, config.OUTPUT_FORMAT, colors_for(self)))
        return report.exit_code


class RunKind(ScenarioCommand[ScenarioKind], RunScenario):
    """
    A surface command such as `isometry` or `order classify`: runs a
    scenario file whose kind must match the command.
    """

    def accepts(self, kind: ScenarioKind) -> bool:
        return kind is self.kind


KIND_COMMANDS: tuple[tuple[ScenarioKind, tuple[str, ...], str], ...] = (
    (ScenarioKind.SIGNATURE, ("signature",), "signature and determinant of a Gram matrix"),
    (ScenarioKind.EMBEDDING_CHECK, ("embed-check",), "isometry and primitivity of a lattice embedding"),
    (ScenarioKind.ISOMETRY_EXTEND, ("isometry",), "extend an involution by -1 on the complement"),
    (ScenarioKind.H1, ("h1",), "first cohomology of a cyclic lattice action"),
    (ScenarioKind.QUOTIENT_PIC, ("quotient-pic",), "fixed sublattice and half-Gram quotient"),
    (ScenarioKind.AMPLE_CERT, ("ample",), "numerical ampleness certificate"),
    (ScenarioKind.ORDER_CLASSIFY, ("order", "classify"), "canonical class and type of an order"),
    (ScenarioKind.FIBRATION_H1, ("fibration", "h1"), "H^1 of a section group action"),
    (ScenarioKind.TWIST_CHECK, ("twist", "check"), "cocycle and coboundary test for a twist"),
)


def kind_commands(out=None) -> list[RunKind]:
    return [RunKind(kind, path, help, out) for kind, path, help in KIND_COMMANDS]
