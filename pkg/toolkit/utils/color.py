"""
ANSI styles for terminal output. Logging and text reports share them.
"""
from toolkit.verdict import Verdict


class Color:
    PURPLE = "\033[95m"
    CYAN = "\033[96m"
    GREEN = "\033[92m"
    YELLOW = "\033[93m"
    RED = "\033[91m"
    END = "\033[0m"


class NoColor:
    PURPLE = ""
    CYAN = ""
    GREEN = ""
    YELLOW = ""
    RED = ""
    END = ""


def palette(enabled: bool):
    return Color if enabled else NoColor


def verdict_style(verdict: Verdict, enabled: bool) -> tuple[str, str]:
    """
    Opening and closing codes for a verdict label.
    """
    p = palette(enabled)
    opening = {Verdict.PASS: p.GREEN, Verdict.FAIL: p.YELLOW, Verdict.ERROR: p.RED, Verdict.ANNOTATED: p.CYAN}[verdict]
    return opening, p.END
