"""
Loads scenario files, runs them through the kind handlers and compares the
result with the expected block.

A corpus is a directory of cases, each a directory of checks:

    corpus/<case>/<check>/scenario.json
    corpus/<case>/<check>/expected.json   (optional)

The scenario id is "<case>/<check>".
"""
from __future__ import annotations

import time
from fnmatch import fnmatchcase
from fractions import Fraction
from pathlib import Path
from typing import Any

import config
import constants
from scenario.codec import encode_value, load_json
from scenario.kinds import HANDLERS
from scenario.model import CorpusSummary, Diff, Report, Scenario, ScenarioKind
from toolkit.errors import K3OrdError, MissingCorpusError, ParseError, SchemaError
from toolkit.verdict import Verdict
from utils.local_logger import LocalLogger

log = LocalLogger("Runner")


def scenario_id(path: Path) -> str:
    return f"{path.parent.name}/{path.name}"


def _check_schema(document: Any, path: Path) -> dict[str, Any]:
    if not isinstance(document, dict):
        raise SchemaError(f"{path}: top level must be an object.")
    if document.get("schema") != constants.SCHEMA:
        raise SchemaError(f"{path}: schema must be {constants.SCHEMA!r}, got {document.get('schema')!r}.")
    return document


def load_scenario(path: Path) -> Scenario:
    """
    Reads a scenario from a check directory or a scenario.json file; an
    expected.json next to it supplies the expected block.

    :raises ParseError: unreadable or malformed JSON
    :raises SchemaError: wrong schema tag, unknown kind or missing payload
    """
    path = Path(path)
    if path.is_dir():
        path = path / constants.SCENARIO_FILE
    document = _check_schema(load_json(path), path)

    try:
        kind = ScenarioKind(document.get("kind"))
    except ValueError:
        raise SchemaError(f"{path}: unknown kind {document.get('kind')!r}.") from None
    payload = document.get("payload")
    if not isinstance(payload, dict):
        raise SchemaError(f"{path}: payload must be an object.")
    computed = document.get("computed", True)
    if not isinstance(computed, bool):
        raise SchemaError(f"{path}: computed must be true or false.")
    if (kind is ScenarioKind.ANNOTATION) == computed:
        raise SchemaError(f"{path}: annotations, and only annotations, carry \"computed\": false.")
    if not computed and not isinstance(payload.get("statement"), str):
        raise SchemaError(f"{path}: an annotation needs a statement.")

    expected, source = None, document.get("source")
    expected_path = path.with_name(constants.EXPECTED_FILE)
    if expected_path.exists():
        expected_document = _check_schema(load_json(expected_path), expected_path)
        expected = expected_document.get("expected")
        if not isinstance(expected, dict):
            raise SchemaError(f"{expected_path}: expected must be an object.")
        source = expected_document.get("source", source)

    return Scenario(
        id=document.get("id") or scenario_id(_check_directory(path)),
        kind=kind,
        payload=payload,
        expected=expected,
        source=source,
        computed=computed,
        path=path,
    )


def canonical(value: Any) -> Any:
    """
    Normal form for comparison: integers and rationals become reduced
    decimal strings ("3", "-1/2"), containers are normalized recursively.
    """
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, int):
        return str(value)
    if isinstance(value, str):
        try:
            return str(Fraction(value))
        except ValueError:
            return value
    if isinstance(value, dict):
        if set(value) == {"num", "den"}:
            try:
                return str(Fraction(int(value["num"]), int(value["den"])))
            except (TypeError, ValueError, ZeroDivisionError):
                pass
        return {k: canonical(v) for k, v in value.items()}
    if isinstance(value, list):
        return [canonical(v) for v in value]
    return value


def compare(expected: Any, computed: Any, path: str = "") -> list[Diff]:
    """
    Subset comparison: every key of an expected object must be present and
    equal in the computed one; lists must match entry by entry.
    """
    if isinstance(expected, dict) and not set(expected) == {"num", "den"}:
        if not isinstance(computed, dict):
            return [Diff(path or ".", expected, computed)]
        diffs = []
        for key, value in expected.items():
            where = f"{path}.{key}" if path else key
            if key not in computed:
                diffs.append(Diff(where, value, None))
            else:
                diffs.extend(compare(value, computed[key], where))
        return diffs
    if isinstance(expected, list):
        if not isinstance(computed, list) or len(expected) != len(computed):
            return [Diff(path or ".", expected, computed)]
        diffs = []
        for i, (e, c) in enumerate(zip(expected, computed)):
            diffs.extend(compare(e, c, f"{path}[{i}]"))
        return diffs
    if canonical(expected) != canonical(computed):
        return [Diff(path or ".", expected, computed)]
    return []


def execute(scenario: Scenario) -> Report:
    """
    Runs one scenario. Library errors become an Error report; anything else
    is logged and reported the same way unless DEBUG_MODE is set. Annotations
    are reported as they stand, without a handler.
    """
    start = time.perf_counter()
    kind = scenario.kind.value
    if not scenario.computed:
        log.debug(f"{scenario.id}: annotation, not computed")
        return Report(scenario.id, kind, Verdict.ANNOTATED, dict(scenario.payload), timing_ms=_elapsed(start))
    try:
        outcome = HANDLERS[scenario.kind](scenario.payload)
    except K3OrdError as e:
        log.warn(f"{scenario.id}: {type(e).__name__}: {e}")
        return Report(scenario.id, kind, Verdict.ERROR, error=f"{type(e).__name__}: {e}",
                      timing_ms=_elapsed(start))
    except Exception as e:
        if config.DEBUG_MODE:
            raise
        log.error(f"{scenario.id}: unexpected {type(e).__name__}: {e}")
        return Report(scenario.id, kind, Verdict.ERROR, error=f"{type(e).__name__}: {e}",
                      timing_ms=_elapsed(start))

    computed = encode_value(outcome.computed)
    diffs = tuple(compare(scenario.expected, computed)) if scenario.expected is not None else ()
    verdict = Verdict.FAIL if diffs else Verdict.PASS
    if diffs:
        log.info(f"{scenario.id}: {len(diffs)} difference(s) against expected")
    else:
        log.debug(f"{scenario.id}: pass")
    return Report(scenario.id, kind, verdict, computed, outcome.assumptions, diffs, timing_ms=_elapsed(start))


def _check_directory(path: Path) -> Path:
    path = Path(path)
    return path.parent if path.name == constants.SCENARIO_FILE else path


def run_scenario(path: Path) -> Report:
    """
    Loads and runs a scenario file. A file that cannot be loaded gives an
    Error report carrying the ParseError or SchemaError.
    """
    try:
        scenario = load_scenario(path)
    except (ParseError, SchemaError) as e:
        log.warn(f"{path}: {type(e).__name__}: {e}")
        return Report(scenario_id(_check_directory(path)), "unknown", Verdict.ERROR, error=f"{type(e).__name__}: {e}")
    return execute(scenario)


def discover(corpus_dir: Path, pattern: str | None = None) -> list[Path]:
    """
    Check directories under corpus_dir, sorted by id. The pattern is matched
    against the case name, or against the whole id when it contains "/".

    :raises MissingCorpusError: if corpus_dir is not a directory
    """
    corpus_dir = Path(corpus_dir)
    if not corpus_dir.is_dir():
        raise MissingCorpusError(f"Corpus directory {corpus_dir} does not exist.")
    checks = sorted(p.parent for p in corpus_dir.glob(f"*/*/{constants.SCENARIO_FILE}"))
    if pattern is None:
        return checks
    if "/" in pattern:
        return [c for c in checks if fnmatchcase(scenario_id(c), pattern)]
    return [c for c in checks if fnmatchcase(c.parent.name, pattern)]


def run_corpus(corpus_dir: Path | None = None, pattern: str | None = None) -> CorpusSummary:
    corpus_dir = Path(corpus_dir) if corpus_dir is not None else config.CORPUS_DIR
    checks = discover(corpus_dir, pattern)
    log.info(f"Running {len(checks)} scenario(s) from {corpus_dir}")
    reports = tuple(run_scenario(c) for c in checks)
    summary = CorpusSummary(reports, len({c.parent.name for c in checks}))
    log.complete(
        f"{summary.count(Verdict.PASS)} passed, {summary.count(Verdict.FAIL)} failed, "
        f"{summary.count(Verdict.ERROR)} errors, {summary.count(Verdict.ANNOTATED)} annotated"
    )
    return summary


def _elapsed(start: float) -> int | None:
    if not config.REPORT_TIMING:
        return None
    return round((time.perf_counter() - start) * 1000)
