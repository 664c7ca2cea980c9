import json
import random

import pytest

import catalog
import config
import constants
from lattice import build_K3

# fixtures shared by the whole suite


@pytest.fixture(autouse=True)
def restore_config(monkeypatch):
    # the CLI writes flag values into config; undo that after every test
    for name in ("OUTPUT_FORMAT", "DEBUG_MODE", "LOG_OUT_LEVEL", "REPORT_TIMING", "CORPUS_DIR", "COLOR", "LOGGING"):
        monkeypatch.setattr(config, name, getattr(config, name))


@pytest.fixture()
def rng() -> random.Random:
    return random.Random(config.PROPERTY_SEED)


@pytest.fixture(scope="session")
def k3():
    return build_K3()


@pytest.fixture(scope="session")
def sextic18() -> catalog.GeometricCase:
    return catalog.sextic(18)


@pytest.fixture(scope="session")
def quadric_case() -> catalog.GeometricCase:
    return catalog.quadric()


@pytest.fixture(scope="session")
def f2_case() -> catalog.GeometricCase:
    return catalog.f2()


@pytest.fixture(params=["sextic18", "quadric_case", "f2_case"])
def geometric_case(request) -> catalog.GeometricCase:
    return request.getfixturevalue(request.param)


@pytest.fixture()
def corpus(tmp_path):
    """
    Returns a function that writes corpus/<case>/<check>/scenario.json (and
    expected.json when given) under a temporary directory.
    """
    root = tmp_path / "corpus"
    root.mkdir()

    def write(case: str, check: str, kind: str, payload: dict, expected: dict | None = None, raw: str | None = None):
        directory = root / case / check
        directory.mkdir(parents=True)
        if raw is not None:
            (directory / constants.SCENARIO_FILE).write_text(raw, encoding="utf-8")
        else:
            document = {"schema": constants.SCHEMA, "kind": kind, "payload": payload}
            (directory / constants.SCENARIO_FILE).write_text(json.dumps(document), encoding="utf-8")
        if expected is not None:
            document = {"schema": constants.SCHEMA, "expected": expected, "source": "test"}
            (directory / constants.EXPECTED_FILE).write_text(json.dumps(document), encoding="utf-8")
        return directory

    write.root = root
    return write
