from enum import Enum


class Verdict(Enum):
    PASS = "pass"
    FAIL = "fail"
    ERROR = "error"
    # a recorded statement that is not computed
    ANNOTATED = "annotated"

    @property
    def exit_code(self) -> int:
        return {Verdict.PASS: 0, Verdict.FAIL: 1, Verdict.ERROR: 2, Verdict.ANNOTATED: 0}[self]
