import io
import json
from unittest.mock import MagicMock

import pytest

import config
from command import RunCorpus, RunKind, RunScenario, kind_commands
from k3ord import build_parser, commands, handle, main
from scenario import ScenarioKind
from toolkit.command import BasicCommand
from toolkit.errors import SchemaError

SIGNATURE = str(config.CORPUS_DIR / "sextic-n03" / "signature")
H1 = str(config.CORPUS_DIR / "quadric" / "h1")


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_kind_command():
    code, text = run("signature", SIGNATURE)
    assert code == 0
    assert text.startswith("PASS  sextic-n03/signature (signature)")
    assert "\033[" not in text


def test_json_format():
    code, text = run("--format", "json", "h1", H1)
    assert code == 0
    document = json.loads(text)
    assert document["verdict"] == "pass"
    assert document["computed"]["invariant_factors"] == ["2"]


def test_flags_after_the_command():
    code, text = run("h1", H1, "--format", "json", "-vv")
    assert code == 0
    assert json.loads(text)["id"] == "quadric/h1"
    assert config.LOG_OUT_LEVEL == 0


def test_kind_mismatch():
    code, text = run("h1", SIGNATURE)
    assert code == 2
    assert "error: SchemaError: h1 expects a h1 scenario, got signature." in text


def test_scenario_run_accepts_any_kind():
    assert run("scenario", "run", SIGNATURE)[0] == 0
    assert run("scenario", "run", H1)[0] == 0


def test_missing_scenario_file(tmp_path):
    code, text = run("scenario", "run", str(tmp_path / "absent.json"))
    assert code == 2
    assert "ParseError" in text


def test_corpus_run():
    code, text = run("corpus", "run", "quadric")
    assert code == 0
    assert text.splitlines()[-1] == "1 case(s), 6 scenario(s): 6 passed, 0 failed, 0 errors"


def test_corpus_run_with_annotation():
    code, text = run("corpus", "run", "rational-elliptic")
    assert code == 0
    assert text.splitlines()[-1] == "1 case(s), 3 scenario(s): 2 passed, 0 failed, 0 errors, 1 annotated"


def test_corpus_case_flag():
    code, text = run("corpus", "run", "--case", "nothing*")
    assert code == 0
    assert text.splitlines()[-1] == "0 case(s), 0 scenario(s): 0 passed, 0 failed, 0 errors"


def test_corpus_failure(corpus):
    corpus("lattice", "signature", "signature", {"gram": [["2"]]}, {"det": "3"})
    code, text = run("--corpus-dir", str(corpus.root), "corpus", "run")
    assert code == 1
    assert "diff det: expected 3, computed 2" in text


def test_missing_corpus(tmp_path):
    assert run("--corpus-dir", str(tmp_path / "absent"), "corpus", "run")[0] == 2


def test_timing_flag():
    code, text = run("--timing", "--format", "json", "signature", SIGNATURE)
    assert code == 0
    assert "timing_ms" in json.loads(text)


def test_debug_flag():
    run("--debug", "signature", SIGNATURE)
    assert config.DEBUG_MODE


def test_unknown_command():
    with pytest.raises(SystemExit):
        main(["volume"], out=io.StringIO())


def test_parser_routes_two_word_commands():
    parser = build_parser(commands())
    args = parser.parse_args(["order", "classify", "x"])
    assert isinstance(args.handler, RunKind)
    assert args.handler.kind is ScenarioKind.ORDER_CLASSIFY
    assert isinstance(parser.parse_args(["corpus", "run"]).handler, RunCorpus)
    assert isinstance(parser.parse_args(["scenario", "run", "x"]).handler, RunScenario)


def test_command_names():
    assert [c.name for c in kind_commands()][-3:] == ["order classify", "fibration h1", "twist check"]


def test_handle():
    assert handle(lambda: 0) == 0
    assert handle(MagicMock(side_effect=SchemaError("bad"))) == 2
    assert handle(MagicMock(side_effect=RuntimeError("boom"))) == 2
    config.DEBUG_MODE = True
    with pytest.raises(RuntimeError):
        handle(MagicMock(side_effect=RuntimeError("boom")))


def test_basic_command():
    out = MagicMock()
    cmd = BasicCommand(out)
    cmd.write("text")
    out.write.assert_called_once_with("text")
    assert cmd.is_terminal()
    with pytest.raises(NotImplementedError):
        cmd.execute(None)
