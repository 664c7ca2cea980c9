import logging
from unittest.mock import MagicMock

import pytest

from toolkit.utils.logger import ROOT_LOGGER, ConsoleFilter, get_default_logging
from utils.local_logger import LocalLogger


@pytest.fixture()
def logger() -> LocalLogger:
    log = LocalLogger("Test")
    log._logger = MagicMock()
    return log


def test_logger_name():
    assert LocalLogger("Lattice")._logger.name == f"{ROOT_LOGGER}.Lattice"


@pytest.mark.parametrize(
    "method, level, prefix",
    [
        ("info", logging.INFO, "|  INFO  |  "),
        ("debug", logging.DEBUG, "|  DEBUG  |  "),
        ("complete", logging.INFO, "|  DONE  |  "),
        ("warn", logging.WARNING, "|  WARN  |  "),
        ("error", logging.ERROR, "|  ERROR  |  "),
        ("setup", LocalLogger.SETUP_LEVEL, "|  SETUP  |  "),
    ],
)
def test_log_levels(logger, method, level, prefix):
    getattr(logger, method)("hello")
    logger._logger.log.assert_called_once_with(level, f"{prefix}hello", extra={"file_only": False})


def test_message_is_file_only(logger):
    logger.message("quiet")
    logger._logger.log.assert_called_once_with(logging.INFO, "quiet", extra={"file_only": True})


@pytest.mark.parametrize(
    "level, expected",
    [
        (0, logging.DEBUG),
        (2, logging.WARNING),
        (4, LocalLogger.SETUP_LEVEL),
        (9, logging.CRITICAL + 10),
    ],
)
def test_stdlib_level(level, expected):
    assert LocalLogger.stdlib_level(level) == expected


def test_console_filter():
    record = logging.LogRecord("k3ord", logging.INFO, __file__, 1, "x", None, None)
    assert ConsoleFilter().filter(record)
    record.file_only = True
    assert not ConsoleFilter().filter(record)


def test_default_logging_file_handler():
    without = get_default_logging()
    assert list(without["handlers"]) == ["console"]
    with_file = get_default_logging(log_file="k3ord.log", colors=False)
    assert with_file["handlers"]["file"]["filename"] == "k3ord.log"
    assert with_file["loggers"][ROOT_LOGGER]["handlers"] == ["console", "file"]
    assert "\033" not in with_file["formatters"]["standard"]["format"]
