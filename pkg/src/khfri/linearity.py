"""Piece-wise linearity analysis of KH conclusion flanks.

Each flank is compared with its chord, the straight line through its
alpha = 0 and alpha = 1 values. The deviation between the two vanishes
exactly when the hyperbolic part of the flank vanishes, which happens in the
four classic situations C1.1, C1.2, C2 and C3.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import DegenerateRules, OutOfRange
from .flank import FlankCoefficients, FlankSide, flank_coefficients, flank_value, hyperbola_numerator
from .fuzzyset import Trapezoid
from .khcore import InterpolationProblem

EXACT_TOL = 1e-9
"""Absolute tolerance for calling a flank linear from its maximum deviation."""

REL_TOL = 1e-9
ZERO_TOL = 1e-12

CASES = ("C1.1", "C1.2", "C2", "C3")


def _near_zero(x: float, *scales: float, rel: float = ZERO_TOL) -> bool:
    return abs(x) <= rel * max((abs(s) for s in scales), default=0.0)


def _close(x: float, y: float) -> bool:
    return math.isclose(x, y, rel_tol=REL_TOL, abs_tol=ZERO_TOL)


def is_polynomial(f: FlankCoefficients) -> bool:
    """c9 == 0, allowing for rounding in the difference of two widths."""
    c = f.c
    return f.c9 == 0.0 or _near_zero(f.c9, c[0], c[2], f.c10)


@dataclass(frozen=True)
class Chord:
    v0: float
    v1: float

    def __call__(self, alpha: float) -> float:
        # convex-combination form keeps both endpoints bit-exact
        return (1.0 - alpha) * self.v0 + alpha * self.v1

    @property
    def slope(self) -> float:
        return self.v1 - self.v0


def chord(f: FlankCoefficients) -> Chord:
    if f.c10 == 0.0 or f.c9 + f.c10 == 0.0:
        raise DegenerateRules(f"{f.side} flank denominator vanishes at an endpoint")
    return Chord(f.d3 / f.c10, (f.d1 + f.d2 + f.d3) / (f.c9 + f.c10))


def deviation(f: FlankCoefficients, alpha: float, ch: Chord | None = None) -> float:
    """Signed ``flank(alpha) - chord(alpha)``."""
    ch = ch or chord(f)
    return flank_value(f, alpha) - ch(alpha)


def _stationary_points(f: FlankCoefficients, s: float) -> list[float]:
    """Real roots of d/dalpha [flank - chord] = 0.

    Clearing the squared denominator of the flank derivative leaves
    ``qa*alpha^2 + qb*alpha + qc = 0``.
    """
    d1, d2, d3, c9, c10 = f.d1, f.d2, f.d3, f.c9, f.c10
    qa = d1 * c9 - s * c9 * c9
    qb = 2.0 * (d1 * c10 - s * c9 * c10)
    qc = d2 * c10 - c9 * d3 - s * c10 * c10
    if qa == 0.0:
        return [] if qb == 0.0 else [-qc / qb]
    disc = qb * qb - 4.0 * qa * qc
    if disc < 0.0:
        return []
    # numerically stable pair
    q = -0.5 * (qb + math.copysign(math.sqrt(disc), qb))
    roots = [q / qa]
    if q != 0.0:
        roots.append(qc / q)
    return roots


def max_deviation(f: FlankCoefficients) -> tuple[float, float]:
    """``(argmax, magnitude)`` of |flank - chord| over [0, 1], analytically."""
    ch = chord(f)
    best_alpha, best = 0.0, abs(deviation(f, 0.0, ch))
    candidates = [r for r in _stationary_points(f, ch.slope) if 0.0 < r < 1.0]
    for a in candidates + [1.0]:
        v = abs(deviation(f, a, ch))
        if v > best:
            best_alpha, best = a, v
    return best_alpha, best


def max_deviation_scan(f: FlankCoefficients, points: int = 1001) -> tuple[float, float]:
    """Sampled maximum of |flank - chord|, refined by golden-section search.

    Independent of the stationary-point algebra in :func:`max_deviation`.
    """
    if points < 3:
        raise OutOfRange("scan needs at least 3 points")
    ch = chord(f)
    g = lambda a: abs(deviation(f, a, ch))  # noqa: E731
    step = 1.0 / (points - 1)
    k, best = max(((i, g(i * step)) for i in range(points)), key=lambda t: t[1])
    best_alpha = k * step
    lo, hi = max(0.0, (k - 1) * step), min(1.0, (k + 1) * step)
    invphi = (math.sqrt(5.0) - 1.0) / 2.0
    x1, x2 = hi - invphi * (hi - lo), lo + invphi * (hi - lo)
    g1, g2 = g(x1), g(x2)
    for _ in range(60):
        if g1 < g2:
            lo, x1, g1 = x1, x2, g2
            x2 = lo + invphi * (hi - lo)
            g2 = g(x2)
        else:
            hi, x2, g2 = x2, x1, g1
            x1 = hi - invphi * (hi - lo)
            g1 = g(x1)
    for a, v in ((x1, g1), (x2, g2)):
        if v > best:
            best_alpha, best = a, v
    return best_alpha, best


def error_bound_signed(f: FlankCoefficients) -> float | None:
    """``yH(0) - yH(1)`` of the hyperbolic component, or None if undefined."""
    den = f.c9 * f.c10 * (f.c9 + f.c10)
    if is_polynomial(f) or den == 0.0:
        return None
    return hyperbola_numerator(f) / den


def error_bound(f: FlankCoefficients) -> float | None:
    e = error_bound_signed(f)
    return None if e is None else abs(e)


def slope_polynomial(f: FlankCoefficients, epsilon: float = 0.0) -> float:
    """The linearity-error polynomial Q(eps).

    Q(eps) = (D3 - c10*eps)*c9^2 - (D2*c10 + c10^2*eps)*c9 + D1*c10^2,
    which equals ``N - eps*c9*c10*(c9 + c10)`` with N the hyperbola numerator.
    """
    c9, c10 = f.c9, f.c10
    return (f.d3 - c10 * epsilon) * c9 * c9 - (f.d2 * c10 + c10 * c10 * epsilon) * c9 + f.d1 * c10 * c10


def _amplitude_scale(f: FlankCoefficients) -> float:
    c9, c10 = f.c9, f.c10
    return max(abs(f.d3 * c9 * c9), abs(f.d2 * c9 * c10), abs(f.d1 * c10 * c10))


def slope_check(f: FlankCoefficients, epsilon: float = 0.0) -> bool:
    """True if the linearity error of the flank does not exceed ``epsilon``.

    Two-sided sign test on Q: ``|N| <= eps*|c9*c10*(c9 + c10)|``, i.e. both
    Q(eps) for the flank and for its mirror image are <= 0. At eps = 0 this
    accepts exactly the flanks whose hyperbolic amplitude vanishes.
    """
    if epsilon < 0.0:
        raise OutOfRange(f"epsilon must be >= 0, got {epsilon!r}")
    n = hyperbola_numerator(f)
    k = abs(f.c9 * f.c10 * (f.c9 + f.c10))
    return abs(n) <= epsilon * k + REL_TOL * _amplitude_scale(f)


def is_linear_flank(f: FlankCoefficients) -> bool:
    chord(f)  # same preconditions
    if is_polynomial(f):
        return _near_zero(f.d1, f.d1, f.d2, f.d3, rel=REL_TOL)
    return abs(hyperbola_numerator(f)) <= REL_TOL * _amplitude_scale(f)


def _slopes(s: Trapezoid, side: FlankSide) -> float:
    return s.left_slope if side is FlankSide.LEFT else s.right_slope


def _all_close(values) -> bool:
    first, *rest = values
    return all(_close(first, v) for v in rest)


def classify_case(p: InterpolationProblem) -> tuple[frozenset[str], tuple[bool, bool]]:
    """Which sufficient linearity conditions hold, plus per-side polynomiality."""
    sides = (FlankSide.LEFT, FlankSide.RIGHT)
    poly = tuple(_close(_slopes(p.a1, s), _slopes(p.a2, s)) for s in sides)
    found = set()
    if all(
        _all_close([_slopes(p.a1, s), _slopes(p.a2, s)]) and _all_close([_slopes(p.b1, s), _slopes(p.b2, s)])
        for s in sides
    ):
        found.add("C1.1")
    if all(_close(x, y) for x, y in zip(p.a1.points + p.a2.points, p.b1.points + p.b2.points)):
        found.add("C1.2")
    if all(_all_close([_slopes(x, s) for x in (p.a1, p.a2, p.astar)]) for s in sides):
        found.add("C2")
    if all(_all_close([_slopes(x, s) for x in (p.a1, p.a2, p.astar, p.b1, p.b2)]) for s in sides):
        found.add("C3")
    return frozenset(found), poly


@dataclass(frozen=True)
class FlankReport:
    side: FlankSide
    coefficients: FlankCoefficients
    chord: Chord
    argmax: float
    max_deviation: float
    error_bound_signed: float | None
    slope_q: float
    slope_check: bool
    amplitude_linear: bool
    polynomial: bool
    epsilon: float = 0.0

    @property
    def error_bound(self) -> float | None:
        return None if self.error_bound_signed is None else abs(self.error_bound_signed)

    @property
    def is_linear(self) -> bool:
        return self.max_deviation <= EXACT_TOL

    @property
    def findings(self) -> list[str]:
        """Disagreements among the three linearity verdicts, if any.

        Only meaningful at epsilon = 0, where all three answer the same question.
        """
        if self.epsilon != 0.0:
            return []
        verdicts = {
            "Q-test": self.slope_check,
            "amplitude": self.amplitude_linear,
            "max-deviation": self.is_linear,
        }
        if len(set(verdicts.values())) == 1:
            return []
        detail = ", ".join(f"{k}={'linear' if v else 'nonlinear'}" for k, v in verdicts.items())
        return [f"{self.side} flank verdicts disagree: {detail}"]


@dataclass(frozen=True)
class LinearityReport:
    left: FlankReport
    right: FlankReport
    case_set: frozenset[str] = field(default_factory=frozenset)

    @property
    def flanks(self) -> tuple[FlankReport, FlankReport]:
        return (self.left, self.right)

    @property
    def is_linear(self) -> bool:
        return self.left.is_linear and self.right.is_linear

    @property
    def findings(self) -> list[str]:
        return self.left.findings + self.right.findings

    @property
    def cases(self) -> list[str]:
        return [c for c in CASES if c in self.case_set]


def analyze_flank(f: FlankCoefficients, epsilon: float = 0.0) -> FlankReport:
    argmax, magnitude = max_deviation(f)
    return FlankReport(
        side=f.side,
        coefficients=f,
        chord=chord(f),
        argmax=argmax,
        max_deviation=magnitude,
        error_bound_signed=error_bound_signed(f),
        slope_q=slope_polynomial(f, epsilon),
        slope_check=slope_check(f, epsilon),
        amplitude_linear=is_linear_flank(f),
        polynomial=is_polynomial(f),
        epsilon=epsilon,
    )


def analyze(p: InterpolationProblem, epsilon: float = 0.0) -> LinearityReport:
    left, right = (analyze_flank(flank_coefficients(p, s), epsilon) for s in (FlankSide.LEFT, FlankSide.RIGHT))
    case_set, _ = classify_case(p)
    return LinearityReport(left, right, case_set)
