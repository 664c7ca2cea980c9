from __future__ import annotations

import json
from typing import Any

import config
import constants
from scenario.codec import dumps
from scenario.model import CorpusSummary, Report
from toolkit.utils.color import verdict_style
from toolkit.verdict import Verdict


def _flat(value: Any) -> str:
    if isinstance(value, str):
        return value
    return json.dumps(value, sort_keys=True, ensure_ascii=False)


def _headline(report: Report, colors: bool) -> str:
    opening, closing = verdict_style(report.verdict, colors)
    line = f"{opening}{report.verdict.value.upper():<5}{closing} {report.scenario_id} ({report.kind})"
    if report.timing_ms is not None:
        line += f" {report.timing_ms} ms"
    return line


def report_text(report: Report, colors: bool = False, details: bool = True) -> str:
    lines = [_headline(report, colors)]
    if details:
        for key in sorted(report.computed):
            lines.append(f"  {key}: {_flat(report.computed[key])}")
        for assumption in report.assumptions:
            lines.append(f"  assumes: {assumption}")
    for diff in report.diffs:
        lines.append(f"  diff {diff.path}: expected {_flat(diff.expected)}, computed {_flat(diff.computed)}")
    if report.error is not None:
        lines.append(f"  error: {report.error}")
    return "\n".join(lines) + "\n"


def summary_text(summary: CorpusSummary, colors: bool = False) -> str:
    body = "".join(report_text(r, colors, details=False) for r in summary.reports)
    line = (
        f"{summary.case_count} case(s), {len(summary.reports)} scenario(s): "
        f"{summary.count(Verdict.PASS)} passed, {summary.count(Verdict.FAIL)} failed, "
        f"{summary.count(Verdict.ERROR)} errors"
    )
    annotated = summary.count(Verdict.ANNOTATED)
    if annotated:
        line += f", {annotated} annotated"
    return body + line + "\n"


def render_report(report: Report, output_format: config.OutputFormat | None = None, colors: bool = False) -> str:
    output_format = output_format or config.OUTPUT_FORMAT
    if output_format is config.OutputFormat.JSON:
        return dumps({"schema": constants.SCHEMA, **report.to_json()})
    return report_text(report, colors)


def render_summary(summary: CorpusSummary, output_format: config.OutputFormat | None = None,
                   colors: bool = False) -> str:
    output_format = output_format or config.OUTPUT_FORMAT
    if output_format is config.OutputFormat.JSON:
        return dumps({"schema": constants.SCHEMA, **summary.to_json()})
    return summary_text(summary, colors)
