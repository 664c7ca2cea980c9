"""
Command-line entry point.

    k3ord isometry corpus/sextic-n18/isometry
    k3ord --format json corpus run 'sextic-*'
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence, TextIO

import command
import config
from toolkit.command import BasicCommand
from toolkit.errors import K3OrdError
from toolkit.utils.toolkit_math import clamp
from toolkit.verdict import Verdict
from utils.local_logger import LocalLogger

log = LocalLogger("CLI")


def commands(out: TextIO | None = None) -> list[BasicCommand]:
    return [*command.kind_commands(out), command.RunScenario(out), command.RunCorpus(out)]


def _global_flags(suppress: bool) -> argparse.ArgumentParser:
    """
    Flags accepted both before and after the subcommand. The copy attached
    to subcommands suppresses its defaults so it cannot reset a value
    given earlier.
    """
    default = (lambda value: argparse.SUPPRESS) if suppress else (lambda value: value)
    flags = argparse.ArgumentParser(add_help=False)
    flags.add_argument("--format", choices=[f.value for f in config.OutputFormat], default=default(None),
                       help="report format (default: text)")
    flags.add_argument("--case", default=default(None), help="glob over case names, or over ids when it has a '/'")
    flags.add_argument("--debug", action="store_true", default=default(False),
                       help="re-raise unexpected exceptions")
    flags.add_argument("-v", "--verbose", action="count", default=default(0), help="more log output on stderr")
    flags.add_argument("--timing", action="store_true", default=default(False), help="include timings in reports")
    flags.add_argument("--corpus-dir", type=Path, default=default(None), help="corpus location")
    return flags


def build_parser(available: Sequence[BasicCommand]) -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="k3ord", parents=[_global_flags(False)],
                                     description="Exact lattice, cohomology and order computations.")
    top = parser.add_subparsers(dest="command", required=True, metavar="command")
    groups: dict[str, argparse._SubParsersAction] = {}
    for cmd in available:
        *prefix, leaf = cmd.path
        subparsers = top
        if prefix:
            group = prefix[0]
            if group not in groups:
                group_parser = top.add_parser(group, help=f"{group} commands")
                groups[group] = group_parser.add_subparsers(dest=f"{group}_command", required=True, metavar="command")
            subparsers = groups[group]
        sub = subparsers.add_parser(leaf, help=cmd.help, parents=[_global_flags(True)])
        cmd.add_arguments(sub)
        sub.set_defaults(handler=cmd)
    return parser


def apply_flags(args: argparse.Namespace):
    """
    Command-line flags override config for this run.
    """
    if args.format is not None:
        config.OUTPUT_FORMAT = config.OutputFormat(args.format)
    if args.debug:
        config.DEBUG_MODE = True
    if args.verbose:
        config.LOG_OUT_LEVEL = clamp(config.LOG_OUT_LEVEL - args.verbose, 0, LocalLogger.LogLevels.SETUP)
    if args.timing:
        config.REPORT_TIMING = True
    if args.corpus_dir is not None:
        config.CORPUS_DIR = args.corpus_dir


def handle(func, *args, **kwargs) -> int:
    try:
        return func(*args, **kwargs)
    except K3OrdError as e:
        log.error(f"{type(e).__name__}: {e}")
        return Verdict.ERROR.exit_code
    except Exception as e:
        log.error(f"unexpected {type(e).__name__}: {e}")
        if config.DEBUG_MODE:
            raise e
        return Verdict.ERROR.exit_code


def main(argv: Sequence[str] | None = None, out: TextIO | None = None) -> int:
    parser = build_parser(commands(out))
    args = parser.parse_args(argv)
    apply_flags(args)
    LocalLogger.setup_logging(force=True)

    if config.DEBUG_MODE:
        log.setup("WARNING: DEBUG MODE IS ENABLED")

    return handle(args.handler.execute, args)


if __name__ == "__main__":
    sys.exit(main())
