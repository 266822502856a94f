"""Closed-form conclusion flanks.

For trapezoidal inputs every flank of the KH conclusion is the rational
function

    B*(alpha) = (D1*alpha**2 + D2*alpha + D3) / (c9*alpha + c10)

whose coefficients follow from the characteristic points. When c9 != 0 it
splits into a hyperbola plus a straight line,
``A/(alpha + B) + C*alpha + D``.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import DegenerateRules, OutOfRange, PolynomialFlank
from .khcore import InterpolationProblem


class FlankSide(enum.Enum):
    LEFT = "left"
    RIGHT = "right"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class FlankCoefficients:
    side: FlankSide
    c: tuple[float, ...]  # c1..c10, stored at index 0..9
    d: tuple[float, float, float]  # D1, D2, D3

    @property
    def c9(self) -> float:
        return self.c[8]

    @property
    def c10(self) -> float:
        return self.c[9]

    @property
    def d1(self) -> float:
        return self.d[0]

    @property
    def d2(self) -> float:
        return self.d[1]

    @property
    def d3(self) -> float:
        return self.d[2]

    @property
    def polynomial(self) -> bool:
        return self.c9 == 0.0

    def denominator(self, alpha: float) -> float:
        return self.c9 * alpha + self.c10


def bilinear_d(c: tuple[float, ...]) -> tuple[float, float, float]:
    """D1..D3 from c1..c8: numerator of (c1 a + c2)(c7 a + c8) + (c3 a + c4)(c5 a + c6)."""
    c1, c2, c3, c4, c5, c6, c7, c8 = c[:8]
    return (
        c3 * c5 + c1 * c7,
        c3 * c6 + c4 * c5 + c1 * c8 + c2 * c7,
        c4 * c6 + c2 * c8,
    )


def flank_coefficients(p: InterpolationProblem, side: FlankSide) -> FlankCoefficients:
    """Coefficient system of one conclusion flank.

    The left flank works on (support, core) points (index 1, 2); the right
    flank mirrors it onto (index 4, 3). c1*alpha + c2 and c3*alpha + c4 are
    the observation's distances to A1 and A2; c5..c8 are the consequent
    endpoints B1 and B2; c9*alpha + c10 is their sum.
    """
    side = FlankSide(side)
    if side is FlankSide.LEFT:
        outer, inner = 0, 1
    else:
        outer, inner = 3, 2
    a1, a2, ast = p.a1.points, p.a2.points, p.astar.points
    b1, b2 = p.b1.points, p.b2.points

    c1 = ast[inner] - ast[outer] - a1[inner] + a1[outer]
    c2 = ast[outer] - a1[outer]
    c3 = a2[inner] - a2[outer] - ast[inner] + ast[outer]
    c4 = a2[outer] - ast[outer]
    c5 = b1[inner] - b1[outer]
    c6 = b1[outer]
    c7 = b2[inner] - b2[outer]
    c8 = b2[outer]
    c9 = a1[outer] - a1[inner] + a2[inner] - a2[outer]
    c10 = a2[outer] - a1[outer]
    c = (c1, c2, c3, c4, c5, c6, c7, c8, c9, c10)
    return FlankCoefficients(side, c, bilinear_d(c))


def flank_value(f: FlankCoefficients, alpha: float) -> float:
    if not 0.0 <= alpha <= 1.0:
        raise OutOfRange(f"alpha must lie in [0, 1], got {alpha!r}")
    den = f.c9 * alpha + f.c10
    if den == 0.0:
        raise DegenerateRules(f"{f.side} flank denominator vanishes at alpha={alpha}", alpha)
    return (f.d1 * alpha * alpha + f.d2 * alpha + f.d3) / den


@dataclass(frozen=True)
class HyperbolaDecomposition:
    """``flank(alpha) = a / (alpha + b) + c*alpha + d``."""

    a: float
    b: float
    c: float
    d: float

    def hyperbola(self, alpha: float) -> float:
        return self.a / (alpha + self.b)

    def line(self, alpha: float) -> float:
        return self.c * alpha + self.d

    def __call__(self, alpha: float) -> float:
        return self.hyperbola(alpha) + self.line(alpha)


def hyperbola_numerator(f: FlankCoefficients) -> float:
    """D3*c9^2 - D2*c9*c10 + D1*c10^2; zero iff the hyperbolic part vanishes."""
    return f.d3 * f.c9**2 - f.d2 * f.c9 * f.c10 + f.d1 * f.c10**2


def hyperbola_decompose(f: FlankCoefficients) -> HyperbolaDecomposition:
    c9, c10 = f.c9, f.c10
    if c9 == 0.0:
        raise PolynomialFlank(f"{f.side} flank has c9 = 0; it is a polynomial in alpha")
    return HyperbolaDecomposition(
        a=hyperbola_numerator(f) / c9**3,
        b=c10 / c9,
        c=f.d1 / c9,
        d=(f.d2 * c9 - f.d1 * c10) / c9**2,
    )
