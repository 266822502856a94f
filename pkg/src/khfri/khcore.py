"""Koczy-Hirota linear rule interpolation, evaluated cut by cut."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import DegenerateRules, OrderingError, OutOfRange
from .fuzzyset import Interval, Trapezoid, alpha_cut, lower_distance, make_trapezoid, precedes, upper_distance

AlphaGrid = tuple[float, ...]


def alpha_grid(step: float = 0.1) -> AlphaGrid:
    """Levels ``0, step, 2*step, ..., 1``; 1 is always the last level.

    When ``1/step`` is (numerically) an integer n the levels are ``i/n``, so
    the default grid holds exactly 0.0, 0.1, ..., 1.0 as written.
    """
    if not 0.0 < step <= 1.0:
        raise OutOfRange(f"grid step must lie in (0, 1], got {step!r}")
    n = round(1.0 / step)
    if n > 0 and abs(n * step - 1.0) < 1e-9:
        return tuple(i / n for i in range(n + 1))
    levels = []
    k = 0
    while k * step < 1.0 - 1e-12:
        levels.append(k * step)
        k += 1
    levels.append(1.0)
    return tuple(levels)


DEFAULT_GRID: AlphaGrid = alpha_grid(0.1)


@dataclass(frozen=True)
class InterpolationProblem:
    """Two rules ``A1 -> B1``, ``A2 -> B2`` and an observation ``astar``.

    Constructing the dataclass directly does not check the ordering; use
    :func:`make_problem` for validated input.
    """

    a1: Trapezoid
    b1: Trapezoid
    a2: Trapezoid
    b2: Trapezoid
    astar: Trapezoid

    def ordering_violations(self) -> list[str]:
        problems = []
        if not precedes(self.a1, self.astar):
            problems.append("A1 < A* does not hold")
        if not precedes(self.astar, self.a2):
            problems.append("A* < A2 does not hold")
        if not precedes(self.b1, self.b2):
            problems.append("B1 < B2 does not hold")
        return problems


def make_problem(a1, b1, a2, b2, astar, *, strict: bool = True) -> InterpolationProblem:
    """Build a problem from trapezoids or 4-sequences of points.

    With ``strict`` set, raises :class:`OrderingError` unless
    ``A1 < A* < A2`` and ``B1 < B2``.
    """

    def coerce(x, role):
        if isinstance(x, Trapezoid):
            return x.with_role(role)
        return make_trapezoid(*x, role=role)

    p = InterpolationProblem(
        a1=coerce(a1, "antecedent"),
        b1=coerce(b1, "consequent"),
        a2=coerce(a2, "antecedent"),
        b2=coerce(b2, "consequent"),
        astar=coerce(astar, "observation"),
    )
    if strict:
        bad = p.ordering_violations()
        if bad:
            raise OrderingError("; ".join(bad))
    return p


@dataclass(frozen=True)
class Conclusion:
    """Interpolated cuts in ascending alpha, plus the 4-point summary."""

    cuts: tuple[Interval, ...]

    @property
    def levels(self) -> tuple[float, ...]:
        return tuple(c.level for c in self.cuts)

    @property
    def characteristic(self) -> tuple[float, float, float, float]:
        bottom, top = self.cuts[0], self.cuts[-1]
        return (bottom.lo, top.lo, top.hi, bottom.hi)

    @property
    def abnormal(self) -> tuple[bool, ...]:
        return tuple(not c.valid for c in self.cuts)

    @property
    def valid(self) -> bool:
        return not any(self.abnormal)

    @property
    def nested(self) -> bool:
        """True if every cut contains the cut above it (convex assembly)."""
        return all(
            lo.lo <= hi.lo and hi.hi <= lo.hi for lo, hi in zip(self.cuts, self.cuts[1:])
        )


def _weighted(d1: float, d2: float, near1: float, near2: float, alpha: float, which: str) -> float:
    total = d1 + d2
    if total == 0.0:
        raise DegenerateRules(f"{which} antecedent distances sum to zero at alpha={alpha}", alpha)
    return (d1 * near2 + d2 * near1) / total


def conclusion_cut(p: InterpolationProblem, alpha: float) -> Interval:
    """Solve the fundamental rule-interpolation equation at one level.

    Each endpoint of the conclusion is the distance-weighted average of the
    consequent endpoints; the weight of ``B2`` is the observation's distance
    to ``A1`` and vice versa.
    """
    a1 = alpha_cut(p.a1, alpha)
    a2 = alpha_cut(p.a2, alpha)
    obs = alpha_cut(p.astar, alpha)
    b1 = alpha_cut(p.b1, alpha)
    b2 = alpha_cut(p.b2, alpha)
    lo = _weighted(lower_distance(obs, a1), lower_distance(obs, a2), b1.lo, b2.lo, alpha, "lower")
    hi = _weighted(upper_distance(obs, a1), upper_distance(obs, a2), b1.hi, b2.hi, alpha, "upper")
    return Interval(lo, hi, alpha)


def _check_grid(grid: Sequence[float]) -> None:
    if len(grid) < 2 or grid[0] != 0.0 or grid[-1] != 1.0:
        raise OutOfRange("alpha grid must start at 0 and end at 1")
    if any(b <= a for a, b in zip(grid, grid[1:])):
        raise OutOfRange("alpha grid must be strictly increasing")


def interpolate(p: InterpolationProblem, grid: Sequence[float] = DEFAULT_GRID) -> Conclusion:
    _check_grid(grid)
    return Conclusion(tuple(conclusion_cut(p, a) for a in grid))
