from __future__ import annotations

import argparse
from pathlib import Path

import config
from scenario import render_summary, run_corpus
from command.scenario import colors_for
from toolkit.command import BasicCommand


class RunCorpus(BasicCommand):
    """
    Runs every check of the golden corpus, or those selected by --case.
    """

    path = ("corpus", "run")
    help = "run the golden corpus"

    def add_arguments(self, parser: argparse.ArgumentParser):
        parser.add_argument("pattern", nargs="?", default=None, help="same as --case")

    def execute(self, args: argparse.Namespace) -> int:
        pattern = args.pattern or getattr(args, "case", None)
        summary = run_corpus(Path(config.CORPUS_DIR), pattern)
        self.write(render_summary(summary, config.OUTPUT_FORMAT, colors_for(self)))
        return summary.exit_code
