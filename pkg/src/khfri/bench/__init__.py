"""Benchmark corpus, suite files, scoring and curve export."""
from .corpus import FIGURE_DELTAS, NAN, BenchmarkCase, Expected, embedded_corpus, get_case
from .curves import CURVE_HEADER, CurveRow, curves_csv, export_curves
from .runner import (
    FORMATTERS,
    METHODS,
    CaseResult,
    FieldCheck,
    Method,
    RunReport,
    register_method,
    run_benchmark,
    tolerance_for,
)
from .suite import dump_suite, load_suite, parse_suite, save_suite

__all__ = [
    "BenchmarkCase",
    "CURVE_HEADER",
    "CaseResult",
    "CurveRow",
    "Expected",
    "FIGURE_DELTAS",
    "FORMATTERS",
    "FieldCheck",
    "METHODS",
    "Method",
    "NAN",
    "RunReport",
    "curves_csv",
    "dump_suite",
    "embedded_corpus",
    "export_curves",
    "get_case",
    "load_suite",
    "parse_suite",
    "register_method",
    "run_benchmark",
    "save_suite",
    "tolerance_for",
]
