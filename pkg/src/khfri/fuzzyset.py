"""Trapezoidal CNF fuzzy sets and their alpha-cuts."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Literal

from .errors import LevelMismatch, NotCNF, OutOfRange

Role = Literal["antecedent", "consequent", "observation", "conclusion", "unspecified"]


@dataclass(frozen=True)
class Trapezoid:
    """Four characteristic points: support [a1, a4], core [a2, a3].

    A triangle is a trapezoid with ``a2 == a3``. The ``role`` tag is used for
    reporting only and does not take part in equality.
    """

    a1: float
    a2: float
    a3: float
    a4: float
    role: Role = field(default="unspecified", compare=False)

    def __post_init__(self):
        if not (self.a1 <= self.a2 <= self.a3 <= self.a4):
            raise NotCNF(
                f"points must satisfy a1 <= a2 <= a3 <= a4, got "
                f"[{self.a1}, {self.a2}, {self.a3}, {self.a4}]"
            )

    @property
    def points(self) -> tuple[float, float, float, float]:
        return (self.a1, self.a2, self.a3, self.a4)

    @property
    def left_slope(self) -> float:
        """Width of the left flank, |a2 - a1|."""
        return abs(self.a2 - self.a1)

    @property
    def right_slope(self) -> float:
        """Width of the right flank, |a4 - a3|."""
        return abs(self.a4 - self.a3)

    def with_role(self, role: Role) -> Trapezoid:
        return Trapezoid(*self.points, role=role)


@dataclass(frozen=True)
class Interval:
    """A crisp alpha-cut ``[lo, hi]`` at membership level ``level``.

    ``lo > hi`` is representable on purpose: interpolated cuts can come out
    abnormal and are reported rather than repaired.
    """

    lo: float
    hi: float
    level: float

    @property
    def valid(self) -> bool:
        return self.lo <= self.hi


def make_trapezoid(a1: float, a2: float, a3: float, a4: float, role: Role = "unspecified") -> Trapezoid:
    """Build a trapezoid, raising :class:`NotCNF` on misordered points."""
    return Trapezoid(float(a1), float(a2), float(a3), float(a4), role)


def _check_alpha(alpha: float) -> None:
    if not 0.0 <= alpha <= 1.0:
        raise OutOfRange(f"alpha must lie in [0, 1], got {alpha!r}")


def alpha_cut(s: Trapezoid, alpha: float) -> Interval:
    _check_alpha(alpha)
    lo = alpha * (s.a2 - s.a1) + s.a1
    hi = alpha * (s.a3 - s.a4) + s.a4
    return Interval(lo, hi, alpha)


def precedes(a: Trapezoid, b: Trapezoid) -> bool:
    """Strict ordering ``a < b``: both cut endpoints strictly smaller at every level.

    Cut endpoints are affine in alpha, so checking the support (alpha = 0) and
    the core (alpha = 1) is sufficient.
    """
    return a.a1 < b.a1 and a.a2 < b.a2 and a.a3 < b.a3 and a.a4 < b.a4


def _same_level(a: Interval, b: Interval) -> None:
    if a.level != b.level:
        raise LevelMismatch(f"cuts at different levels: {a.level} vs {b.level}")


def lower_distance(a: Interval, b: Interval) -> float:
    _same_level(a, b)
    return abs(b.lo - a.lo)


def upper_distance(a: Interval, b: Interval) -> float:
    _same_level(a, b)
    return abs(b.hi - a.hi)
