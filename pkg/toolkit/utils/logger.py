import logging.config
import sys

from toolkit.utils.color import palette as color_palette

"""
Logging setup shared by every LocalLogger.

Example usage:
    toolkit.utils.logger.configure_logging(out_level=logging.INFO)
"""

ROOT_LOGGER = "k3ord"

_configured = False


class ConsoleFilter(logging.Filter):
    """
    Drops records flagged file_only so they reach the log file alone.
    """

    def filter(self, record: logging.LogRecord) -> bool:
        return not getattr(record, "file_only", False)


def get_default_logging(
    out_level: int = logging.WARNING,
    file_level: int = logging.INFO,
    log_file: str | None = None,
    colors: bool = True,
) -> dict:
    """
    Returns a dictConfig dictionary: console handler on stderr, plus a file
    handler when log_file is given.
    """
    palette = color_palette(colors)
    handlers = {
        "console": {
            "class": "logging.StreamHandler",
            "formatter": "standard",
            "level": out_level,
            "stream": "ext://sys.stderr",
            "filters": ["console_only"],
        },
    }
    if log_file:
        handlers["file"] = {
            "class": "logging.FileHandler",
            "formatter": "plain",
            "level": file_level,
            "filename": log_file,
            "encoding": "utf-8",
        }
    return {
        "version": 1,
        "disable_existing_loggers": False,
        "filters": {"console_only": {"()": ConsoleFilter}},
        "formatters": {
            "standard": {
                "format": palette.PURPLE
                + "%(levelname)-8s"
                + palette.END
                + palette.CYAN
                + " %(name)s"
                + palette.END
                + " %(message)s",
            },
            "plain": {
                "format": "%(asctime)s %(levelname)-8s %(name)s %(message)s",
                "datefmt": "%Y-%m-%d:%H:%M:%S",
            },
        },
        "handlers": handlers,
        "loggers": {
            ROOT_LOGGER: {
                "level": logging.DEBUG,
                "handlers": list(handlers),
                "propagate": False,
            },
        },
    }


def configure_logging(
    out_level: int = logging.WARNING,
    file_level: int = logging.INFO,
    log_file: str | None = None,
    colors: bool | None = None,
    force: bool = False,
):
    """
    Applies get_default_logging() once per process (again when force is set).
    """
    global _configured
    if _configured and not force:
        return
    if colors is None:
        colors = sys.stderr.isatty()
    logging.config.dictConfig(get_default_logging(out_level, file_level, log_file, colors))
    _configured = True
