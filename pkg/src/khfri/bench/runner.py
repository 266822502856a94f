"""Scoring benchmark cases against their expected values."""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from decimal import Decimal
from typing import Callable, Sequence

from ..errors import FRIError
from ..khcore import DEFAULT_GRID, Conclusion, InterpolationProblem, interpolate
from ..linearity import CASES, LinearityReport, analyze
from .corpus import NAN, BenchmarkCase


@dataclass(frozen=True)
class Method:
    interpolate: Callable[[InterpolationProblem, Sequence[float]], Conclusion]
    # closed-form flank analysis; None for methods without one
    analyze: Callable[[InterpolationProblem], LinearityReport] | None = None


METHODS: dict[str, Method] = {"KH": Method(interpolate, analyze)}


def register_method(name: str, method: Method) -> None:
    METHODS[name] = method


def tolerance_for(value: Decimal, scale: float = 1.0) -> float:
    """Half a unit in the last printed digit.

    Values printed with fewer than two decimals are exact (integers, 8.5) and
    are held to four.
    """
    decimals = max(0, -value.as_tuple().exponent)
    if decimals < 2:
        decimals = 4
    return 0.5 * 10.0**-decimals * scale


@dataclass(frozen=True)
class FieldCheck:
    field: str
    expected: str
    computed: str
    tolerance: float | None  # None: exact comparison
    delta: float | None
    passed: bool


@dataclass
class CaseResult:
    case_id: str
    provenance: str = ""
    conclusion: Conclusion | None = None
    linearity: LinearityReport | None = None
    checks: list[FieldCheck] = field(default_factory=list)
    error: str | None = None

    @property
    def scored(self) -> bool:
        return bool(self.checks) or self.error is not None

    @property
    def passed(self) -> bool:
        return self.error is None and all(c.passed for c in self.checks)

    def failures(self) -> list[FieldCheck]:
        return [c for c in self.checks if not c.passed]


@dataclass
class RunReport:
    suite: str
    method: str
    tol_scale: float
    results: list[CaseResult]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    @property
    def summary(self) -> dict[str, int]:
        return {
            "cases": len(self.results),
            "passed": sum(r.passed for r in self.results),
            "failed": sum(not r.passed for r in self.results),
            "unscored": sum(not r.scored for r in self.results),
            "fields": sum(len(r.checks) for r in self.results),
            "field_failures": sum(len(r.failures()) for r in self.results),
        }


def _fmt(x: float) -> str:
    s = f"{x:.4f}"
    return "0.0000" if s == "-0.0000" else s


def _numeric(name: str, expected: Decimal, computed: float, scale: float) -> FieldCheck:
    tol = tolerance_for(expected, scale)
    delta = computed - float(expected)
    return FieldCheck(name, str(expected), _fmt(computed), tol, delta, abs(delta) <= tol)


def _bound(name: str, expected, computed: float | None, scale: float) -> FieldCheck:
    if expected == NAN or computed is None:
        ok = expected == NAN and computed is None
        shown = NAN if computed is None else _fmt(computed)
        return FieldCheck(name, str(expected), shown, None, None, ok)
    return _numeric(name, expected, computed, scale)


def _exact(name: str, expected, computed) -> FieldCheck:
    return FieldCheck(name, str(expected), str(computed), None, None, expected == computed)


def case_label(cases) -> str:
    known = [c for c in CASES if c in cases]
    return " ".join(known + sorted(set(cases) - set(CASES))) or "-"


def score_case(case: BenchmarkCase, method: Method, tol_scale: float = 1.0, grid=DEFAULT_GRID) -> CaseResult:
    result = CaseResult(case.id, case.provenance)
    try:
        result.conclusion = method.interpolate(case.problem, grid)
        if method.analyze is not None:
            result.linearity = method.analyze(case.problem)
    except FRIError as exc:
        result.error = f"{type(exc).__name__}: {exc}"
        return result

    e = case.expected
    if e is None:
        return result
    checks = result.checks
    if e.bstar is not None:
        for i, (want, got) in enumerate(zip(e.bstar, result.conclusion.characteristic)):
            checks.append(_numeric(f"Bstar[{i}]", want, got, tol_scale))
    lin = result.linearity
    if lin is None:
        return result
    left, right = lin.left, lin.right
    if e.max_dev_left is not None:
        checks.append(_numeric("maxDevLeft", e.max_dev_left, left.max_deviation, tol_scale))
    if e.max_dev_right is not None:
        checks.append(_numeric("maxDevRight", e.max_dev_right, right.max_deviation, tol_scale))
    if e.e_left is not None:
        checks.append(_bound("ELeft", e.e_left, left.error_bound, tol_scale))
    if e.e_right is not None:
        checks.append(_bound("ERight", e.e_right, right.error_bound, tol_scale))
    if e.slope_left is not None:
        checks.append(_exact("slopeLeft", e.slope_left, int(left.slope_check)))
    if e.slope_right is not None:
        checks.append(_exact("slopeRight", e.slope_right, int(right.slope_check)))
    if e.cases is not None:
        checks.append(_exact("cases", case_label(e.cases), case_label(lin.case_set)))
    return result


def run_benchmark(
    cases: Sequence[BenchmarkCase],
    tol_scale: float = 1.0,
    method: str = "KH",
    suite: str = "",
) -> RunReport:
    """Score every case; a case that raises is marked failed, the rest still run."""
    if method not in METHODS:
        raise KeyError(f"unknown method {method!r}; available: {', '.join(sorted(METHODS))}")
    results = [score_case(c, METHODS[method], tol_scale) for c in cases]
    results.sort(key=lambda r: r.case_id)
    return RunReport(suite, method, tol_scale, results)


def format_text(report: RunReport) -> str:
    s = report.summary
    lines = [f"method {report.method} | suite {report.suite or '-'} | tolerance scale {report.tol_scale:g}", ""]
    for r in report.results:
        status = "PASS" if r.passed else "FAIL"
        if not r.scored:
            status = "----"
        lines.append(f"[{status}] {r.case_id}" + (f"  ({r.provenance})" if r.provenance else ""))
        if r.error:
            lines.append(f"    error: {r.error}")
        for c in r.checks:
            tol = "exact" if c.tolerance is None else f"+/-{c.tolerance:.1e}"
            mark = "ok" if c.passed else "FAIL"
            lines.append(f"    {c.field:<12} expected {c.expected:<10} computed {c.computed:<10} {tol:<10} {mark}")
        if r.linearity is not None:
            for f in r.linearity.findings:
                lines.append(f"    finding: {f}")
    lines.append("")
    lines.append(
        f"{s['passed']}/{s['cases']} cases passed, {s['field_failures']} of {s['fields']} fields failed"
        + (f", {s['unscored']} unscored" if s["unscored"] else "")
    )
    return "\n".join(lines) + "\n"


CSV_HEADER = ("case", "field", "expected", "computed", "tolerance", "delta", "status")


def format_csv(report: RunReport) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in report.results:
        if r.error:
            w.writerow((r.case_id, "error", "", r.error, "", "", "FAIL"))
        for c in r.checks:
            w.writerow((
                r.case_id,
                c.field,
                c.expected,
                c.computed,
                "" if c.tolerance is None else f"{c.tolerance:.1e}",
                "" if c.delta is None else f"{c.delta:.6f}",
                "PASS" if c.passed else "FAIL",
            ))
    return buf.getvalue()


def _flank_json(fr) -> dict:
    return {
        "max_deviation": fr.max_deviation,
        "argmax": fr.argmax,
        "error_bound": NAN if fr.error_bound is None else fr.error_bound,
        "slope_check": int(fr.slope_check),
        "polynomial": fr.polynomial,
    }


def format_json(report: RunReport) -> str:
    doc = {
        "suite": report.suite,
        "method": report.method,
        "tol_scale": report.tol_scale,
        "cases": [
            {
                "id": r.case_id,
                "status": "PASS" if r.passed else "FAIL",
                "scored": r.scored,
                "error": r.error,
                "Bstar": None if r.conclusion is None else list(r.conclusion.characteristic),
                "left": None if r.linearity is None else _flank_json(r.linearity.left),
                "right": None if r.linearity is None else _flank_json(r.linearity.right),
                "cases": None if r.linearity is None else r.linearity.cases,
                "findings": [] if r.linearity is None else r.linearity.findings,
                "checks": [
                    {
                        "field": c.field,
                        "expected": c.expected,
                        "computed": c.computed,
                        "tolerance": c.tolerance,
                        "delta": c.delta,
                        "passed": c.passed,
                    }
                    for c in r.checks
                ],
            }
            for r in report.results
        ],
        "summary": report.summary,
        "passed": report.passed,
    }
    return json.dumps(doc, indent=2) + "\n"


FORMATTERS = {"text": format_text, "csv": format_csv, "json": format_json}
