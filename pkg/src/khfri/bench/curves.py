"""Per-level flank tables: interpolated value, chord value and their gap."""
from __future__ import annotations

import csv
import io
from typing import NamedTuple

from ..errors import OutOfRange
from ..khcore import InterpolationProblem, alpha_grid, conclusion_cut

CURVE_HEADER = ("alpha", "real_left", "approx_left", "delta_left", "real_right", "approx_right", "delta_right")


class CurveRow(NamedTuple):
    alpha: float
    real_left: float
    approx_left: float
    delta_left: float
    real_right: float
    approx_right: float
    delta_right: float


def export_curves(problem: InterpolationProblem, step: float = 0.1) -> list[CurveRow]:
    """Rows at alpha = 0, step, ..., 1.

    "Real" values come from the cut-wise interpolation; "approx" is the chord
    through the alpha = 0 and alpha = 1 values; delta is real minus approx.
    """
    if not 0.0 < step <= 0.5:
        raise OutOfRange(f"curve step must lie in (0, 0.5], got {step!r}")
    grid = alpha_grid(step)
    cuts = [conclusion_cut(problem, a) for a in grid]
    bottom, top = cuts[0], cuts[-1]
    rows = []
    for a, cut in zip(grid, cuts):
        approx_lo = (1.0 - a) * bottom.lo + a * top.lo
        approx_hi = (1.0 - a) * bottom.hi + a * top.hi
        rows.append(CurveRow(a, cut.lo, approx_lo, cut.lo - approx_lo, cut.hi, approx_hi, cut.hi - approx_hi))
    return rows


def _fmt(x: float, decimals: int) -> str:
    s = f"{x:.{decimals}f}"
    # no "-0.000" from rounding noise
    return s[1:] if s.startswith("-") and float(s) == 0.0 else s


def curves_csv(rows: list[CurveRow], decimals: int = 4, delta_decimals: int = 3) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CURVE_HEADER)
    for r in rows:
        w.writerow((
            _fmt(r.alpha, decimals),
            _fmt(r.real_left, decimals),
            _fmt(r.approx_left, decimals),
            _fmt(r.delta_left, delta_decimals),
            _fmt(r.real_right, decimals),
            _fmt(r.approx_right, decimals),
            _fmt(r.delta_right, delta_decimals),
        ))
    return buf.getvalue()
