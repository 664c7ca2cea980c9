import json
from unittest.mock import MagicMock

import pytest

import config
import constants
from scenario import (
    HANDLERS,
    Report,
    ScenarioKind,
    canonical,
    compare,
    discover,
    execute,
    load_scenario,
    run_corpus,
    run_scenario,
)
from toolkit.errors import MissingCorpusError, ParseError, SchemaError
from toolkit.verdict import Verdict

GRAM = {"gram": [["2", "1"], ["1", "2"]]}
ANNOTATION = {"statement": "H^1(G, Pic C') is cyclic of order n.", "setting": {"cover": "etale cyclic"}}


def test_every_computed_kind_has_a_handler():
    assert set(HANDLERS) == set(ScenarioKind) - {ScenarioKind.ANNOTATION}


@pytest.mark.parametrize(
    "value, expected",
    [
        (3, "3"),
        ("3", "3"),
        ({"num": "6", "den": "2"}, "3"),
        ({"num": "-3", "den": "2"}, "-3/2"),
        ("-6/4", "-3/2"),
        ("ncy", "ncy"),
        (True, True),
        ([1, {"a": "2/1"}], ["1", {"a": "2"}]),
    ],
)
def test_canonical(value, expected):
    assert canonical(value) == expected


def test_compare_is_a_subset_check():
    computed = {"a": "1", "b": ["1", "2"], "extra": "x"}
    assert compare({"a": 1, "b": ["1", "2"]}, computed) == []
    diffs = compare({"a": "2", "missing": "1"}, computed)
    assert [(d.path, d.expected, d.computed) for d in diffs] == [("a", "2", "1"), ("missing", "1", None)]


def test_compare_lists_and_nesting():
    diffs = compare({"x": [{"y": "1"}, {"y": "2"}]}, {"x": [{"y": "1"}, {"y": "3"}]})
    assert [d.path for d in diffs] == ["x[1].y"]
    assert [d.path for d in compare({"x": ["1"]}, {"x": ["1", "2"]})] == ["x"]
    assert compare({"r": {"num": "1", "den": "2"}}, {"r": {"num": "2", "den": "4"}}) == []


def test_load_scenario(corpus):
    directory = corpus("lattice", "signature", "signature", GRAM, {"det": "3"})
    for path in (directory, directory / constants.SCENARIO_FILE):
        scenario = load_scenario(path)
        assert scenario.id == "lattice/signature"
        assert scenario.kind is ScenarioKind.SIGNATURE
        assert scenario.expected == {"det": "3"}
        assert scenario.source == "test"


def test_load_without_expected(corpus):
    scenario = load_scenario(corpus("lattice", "signature", "signature", GRAM))
    assert scenario.expected is None


@pytest.mark.parametrize(
    "raw, error",
    [
        ("{", ParseError),
        ("[]", SchemaError),
        ('{"schema": "other/1", "kind": "h1", "payload": {}}', SchemaError),
        ('{"schema": "k3ord/1", "kind": "volume", "payload": {}}', SchemaError),
        ('{"schema": "k3ord/1", "kind": "h1", "payload": []}', SchemaError),
    ],
)
def test_load_errors(corpus, raw, error):
    directory = corpus("broken", "check", "", {}, raw=raw)
    with pytest.raises(error):
        load_scenario(directory)
    report = run_scenario(directory)
    assert report.verdict is Verdict.ERROR
    assert report.kind == "unknown"
    assert report.scenario_id == "broken/check"
    assert report.error.startswith(error.__name__)


def test_execute_pass(corpus):
    report = execute(load_scenario(corpus("lattice", "signature", "signature", GRAM,
                                          {"det": "3", "signature": ["2", "0", "0"], "even": True})))
    assert report.verdict is Verdict.PASS
    assert report.computed["rank"] == "2"
    assert report.timing_ms is None


def test_execute_fail(corpus):
    report = execute(load_scenario(corpus("lattice", "signature", "signature", GRAM, {"det": "4"})))
    assert report.verdict is Verdict.FAIL
    assert report.diffs[0].path == "det"
    assert report.exit_code == 1


def test_execute_without_expected_passes(corpus):
    assert execute(load_scenario(corpus("lattice", "signature", "signature", GRAM))).verdict is Verdict.PASS


def test_action_of_wrong_rank(corpus):
    payload = {"case": {"ref": "quadric"}, "action": [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]]}
    report = execute(load_scenario(corpus("quadric", "isometry", "isometry-extend", payload)))
    assert report.verdict is Verdict.ERROR
    assert report.error.startswith("SchemaError")


def test_library_error_is_reported(corpus):
    report = execute(load_scenario(corpus("lattice", "asymmetric", "signature", {"gram": [["0", "1"], ["0", "0"]]})))
    assert report.verdict is Verdict.ERROR
    assert report.error.startswith("NotSymmetricError: ")


def test_bad_ramification_index_is_reported_in_debug_mode(corpus, monkeypatch):
    monkeypatch.setattr(config, "DEBUG_MODE", True)
    payload = {"surface": {"ref": "p2"}, "ramification": [{"class": ["3"], "e": "1"}], "cover_degree": "2"}
    report = execute(load_scenario(corpus("p2", "order", "order-classify", payload)))
    assert report.verdict is Verdict.ERROR
    assert report.error.startswith("UnsupportedParameterError")


def test_vertical_section_symbol_is_refused(corpus):
    report = execute(load_scenario(corpus("fibration", "vertical", "section-bundle", {"section": {"vertical": "c0"}})))
    assert report.verdict is Verdict.ERROR
    assert report.error.startswith("SchemaError")


def test_per_class_errors_are_results(corpus):
    payload = {"case": {"ref": "sextic", "n": "3"}, "classes": [["1", "0", "-1"], ["1", "0", "0"]]}
    report = execute(load_scenario(corpus("sextic", "effectivity", "effectivity", payload)))
    assert report.verdict is Verdict.PASS
    assert [r["result"] for r in report.computed["results"]] == ["SquareTooNegativeError", "effective"]


def test_unexpected_exception(corpus, monkeypatch):
    monkeypatch.setitem(HANDLERS, ScenarioKind.H0, MagicMock(side_effect=RuntimeError("boom")))
    scenario = load_scenario(corpus("f2", "h0", "h0", {"a": "1", "b": "2"}))
    report = execute(scenario)
    assert report.verdict is Verdict.ERROR
    assert report.error == "RuntimeError: boom"
    monkeypatch.setattr(config, "DEBUG_MODE", True)
    with pytest.raises(RuntimeError):
        execute(scenario)


def _annotation(computed=False, kind="annotation", payload=ANNOTATION):
    return json.dumps({"schema": constants.SCHEMA, "kind": kind, "computed": computed, "payload": payload})


def test_annotation_is_not_computed(corpus, monkeypatch):
    monkeypatch.setattr(config, "DEBUG_MODE", True)
    scenario = load_scenario(corpus("curve", "annotation", "", {}, raw=_annotation()))
    assert scenario.kind is ScenarioKind.ANNOTATION
    assert not scenario.computed
    report = execute(scenario)
    assert report.verdict is Verdict.ANNOTATED
    assert report.computed == ANNOTATION
    assert report.exit_code == 0
    assert Report.from_json(report.to_json()) == report


@pytest.mark.parametrize(
    "raw",
    [
        _annotation(computed=True),
        _annotation(kind="signature", payload=GRAM),
        _annotation(computed="no"),
        _annotation(payload={"setting": {}}),
    ],
)
def test_annotation_shape(corpus, raw):
    with pytest.raises(SchemaError):
        load_scenario(corpus("curve", "annotation", "", {}, raw=raw))


def test_annotations_do_not_change_the_exit_code(corpus):
    corpus("lattice", "pass", "signature", GRAM, {"det": "3"})
    corpus("curve", "annotation", "", {}, raw=_annotation())
    summary = run_corpus(corpus.root)
    assert [r.verdict for r in summary.reports] == [Verdict.ANNOTATED, Verdict.PASS]
    assert summary.exit_code == 0


def test_timing_is_opt_in(corpus, monkeypatch):
    monkeypatch.setattr(config, "REPORT_TIMING", True)
    report = execute(load_scenario(corpus("lattice", "signature", "signature", GRAM)))
    assert isinstance(report.timing_ms, int)
    assert report.to_json()["timing_ms"] == str(report.timing_ms)


def test_report_json_round_trip(corpus):
    report = execute(load_scenario(corpus("lattice", "signature", "signature", GRAM, {"det": "4"})))
    assert Report.from_json(report.to_json()) == report


def test_discover(corpus):
    corpus("b-case", "one", "signature", GRAM)
    corpus("a-case", "two", "signature", GRAM)
    corpus("a-case", "one", "signature", GRAM)
    ids = [f"{p.parent.name}/{p.name}" for p in discover(corpus.root)]
    assert ids == ["a-case/one", "a-case/two", "b-case/one"]
    assert len(discover(corpus.root, "a-*")) == 2
    assert [p.name for p in discover(corpus.root, "*/one")] == ["one", "one"]
    assert discover(corpus.root, "nothing*") == []


def test_missing_corpus(tmp_path):
    with pytest.raises(MissingCorpusError):
        discover(tmp_path / "absent")


def test_corpus_summary(corpus):
    corpus("lattice", "pass", "signature", GRAM, {"det": "3"})
    corpus("lattice", "fail", "signature", GRAM, {"det": "4"})
    summary = run_corpus(corpus.root)
    assert summary.case_count == 1
    assert summary.count(Verdict.FAIL) == 1
    assert summary.exit_code == 1
    corpus("other", "broken", "", {}, raw="{")
    assert run_corpus(corpus.root).exit_code == 2


def test_empty_selection_passes(corpus):
    corpus("lattice", "pass", "signature", GRAM)
    summary = run_corpus(corpus.root, "nothing*")
    assert summary.reports == ()
    assert summary.exit_code == 0


def test_shipped_corpus_passes():
    summary = run_corpus()
    failures = [
        (r.scenario_id, r.error, r.diffs) for r in summary.reports if r.verdict not in (Verdict.PASS, Verdict.ANNOTATED)
    ]
    assert failures == []
    assert len(summary.reports) == len(list(config.CORPUS_DIR.glob(f"*/*/{constants.SCENARIO_FILE}")))
    cases = [p for p in config.CORPUS_DIR.iterdir() if p.is_dir() and p != constants.DATA_DIR]
    assert summary.case_count == len(cases)
    assert summary.count(Verdict.ANNOTATED) == 2
    assert summary.exit_code == 0


@pytest.mark.parametrize("pattern, prefix", [("sextic-n1*", "sextic-n1"), ("quadric/h1", "quadric/h1")])
def test_shipped_corpus_filter(pattern, prefix):
    summary = run_corpus(pattern=pattern)
    assert summary.reports
    assert all(r.scenario_id.startswith(prefix) for r in summary.reports)
