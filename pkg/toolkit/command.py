from __future__ import annotations

import argparse
import sys
from typing import Generic, TextIO, TypeVar

T = TypeVar("T")


class BasicCommand:
    """
    Extendable basic command

    path is the word sequence that selects the command on the command
    line, e.g. ("corpus", "run").
    """

    path: tuple[str, ...] = ()
    help: str = ""

    def __init__(self, out: TextIO | None = None):
        self.out = out

    @property
    def name(self) -> str:
        return " ".join(self.path)

    def add_arguments(self, parser: argparse.ArgumentParser):
        pass

    def write(self, text: str):
        (self.out or sys.stdout).write(text)

    def is_terminal(self) -> bool:
        stream = self.out or sys.stdout
        return bool(getattr(stream, "isatty", lambda: False)())

    def execute(self, args: argparse.Namespace) -> int:
        raise NotImplementedError(f"{type(self).__name__} does not implement execute().")


class ScenarioCommand(BasicCommand, Generic[T]):
    """
    Extendable command bound to one scenario kind
    """

    def __init__(self, kind: T, path: tuple[str, ...], help: str = "", out: TextIO | None = None):
        super().__init__(out)
        self.kind = kind
        self.path = path
        self.help = help
