from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Any

from toolkit.verdict import Verdict


class ScenarioKind(Enum):
    SIGNATURE = "signature"
    EMBEDDING_CHECK = "embedding-check"
    ISOMETRY_EXTEND = "isometry-extend"
    H1 = "h1"
    QUOTIENT_PIC = "quotient-pic"
    AMPLE_CERT = "ample-cert"
    EFFECTIVITY = "effectivity"
    ORDER_CLASSIFY = "order-classify"
    MAXIMALITY = "maximality"
    RESTRICTION = "restriction"
    H0 = "h0"
    FIBRATION_H1 = "fibration-h1"
    TWIST_CHECK = "twist-check"
    SECTION_BUNDLE = "section-bundle"
    MW_SUM = "mw-sum"
    ANNOTATION = "annotation"


@dataclass(frozen=True)
class Scenario:
    """
    One check: a kind, its payload and optionally the values it must produce.
    An annotation (computed false) records a statement the corpus relies on
    without computing it.
    """

    id: str
    kind: ScenarioKind
    payload: dict[str, Any]
    expected: dict[str, Any] | None = None
    source: str | None = None
    computed: bool = True
    path: Path | None = field(default=None, compare=False)


@dataclass(frozen=True)
class Diff:
    path: str
    expected: Any
    computed: Any

    def to_json(self) -> dict[str, Any]:
        return {"path": self.path, "expected": self.expected, "computed": self.computed}


@dataclass(frozen=True)
class Report:
    """
    Outcome of a scenario. computed holds JSON-ready encoded values.
    """

    scenario_id: str
    kind: str
    verdict: Verdict
    computed: dict[str, Any] = field(default_factory=dict)
    assumptions: tuple[str, ...] = ()
    diffs: tuple[Diff, ...] = ()
    error: str | None = None
    timing_ms: int | None = None

    @property
    def exit_code(self) -> int:
        return self.verdict.exit_code

    def to_json(self) -> dict[str, Any]:
        document: dict[str, Any] = {
            "id": self.scenario_id,
            "kind": self.kind,
            "verdict": self.verdict.value,
            "computed": self.computed,
            "assumptions": list(self.assumptions),
        }
        if self.diffs:
            document["diffs"] = [d.to_json() for d in self.diffs]
        if self.error is not None:
            document["error"] = self.error
        if self.timing_ms is not None:
            document["timing_ms"] = str(self.timing_ms)
        return document

    @classmethod
    def from_json(cls, document: dict[str, Any]) -> Report:
        return cls(
            scenario_id=document["id"],
            kind=document["kind"],
            verdict=Verdict(document["verdict"]),
            computed=document.get("computed", {}),
            assumptions=tuple(document.get("assumptions", ())),
            diffs=tuple(Diff(d["path"], d["expected"], d["computed"]) for d in document.get("diffs", ())),
            error=document.get("error"),
            timing_ms=int(document["timing_ms"]) if "timing_ms" in document else None,
        )


@dataclass(frozen=True)
class CorpusSummary:
    reports: tuple[Report, ...]
    case_count: int

    @property
    def exit_code(self) -> int:
        verdicts = {r.verdict for r in self.reports}
        if Verdict.ERROR in verdicts:
            return Verdict.ERROR.exit_code
        if Verdict.FAIL in verdicts:
            return Verdict.FAIL.exit_code
        return Verdict.PASS.exit_code

    def count(self, verdict: Verdict) -> int:
        return sum(1 for r in self.reports if r.verdict is verdict)

    def to_json(self) -> dict[str, Any]:
        return {
            "cases": str(self.case_count),
            "scenarios": str(len(self.reports)),
            "passed": str(self.count(Verdict.PASS)),
            "failed": str(self.count(Verdict.FAIL)),
            "errors": str(self.count(Verdict.ERROR)),
            "annotated": str(self.count(Verdict.ANNOTATED)),
            "reports": [r.to_json() for r in self.reports],
        }
