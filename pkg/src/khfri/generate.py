"""Seeded generators of valid interpolation problems.

Coordinates are multiples of 1/4 with small magnitude, so every coefficient
is computed exactly in double precision. Each case generator builds problems
that satisfy one sufficient linearity condition by construction.
"""
from __future__ import annotations

import random
from typing import Callable, Iterator

from .fuzzyset import Trapezoid, make_trapezoid
from .khcore import InterpolationProblem, make_problem

QUANTUM = 0.25


def _q(rng: random.Random, lo: float, hi: float) -> float:
    return QUANTUM * rng.randint(round(lo / QUANTUM), round(hi / QUANTUM))


def _shape(rng: random.Random, left: float | None = None, right: float | None = None):
    """(left width, core width, right width)."""
    left = _q(rng, QUANTUM, 4.0) if left is None else left
    right = _q(rng, QUANTUM, 4.0) if right is None else right
    return left, _q(rng, 0.0, 3.0), right


def _place(shape, after: Trapezoid | None, rng: random.Random) -> Trapezoid:
    """Lay out ``shape`` strictly to the right of ``after`` (pointwise)."""
    left, core, right = shape
    pts = [0.0, left, left + core, left + core + right]
    if after is None:
        offset = _q(rng, -5.0, 5.0)
    else:
        offset = max(p - q for p, q in zip(after.points, pts)) + _q(rng, QUANTUM, 4.0)
    return make_trapezoid(*(p + offset for p in pts))


def _build(rng, shapes) -> InterpolationProblem:
    sa1, sast, sa2, sb1, sb2 = shapes
    a1 = _place(sa1, None, rng)
    astar = _place(sast, a1, rng)
    a2 = _place(sa2, astar, rng)
    b1 = _place(sb1, None, rng)
    b2 = _place(sb2, b1, rng)
    return make_problem(a1, b1, a2, b2, astar)


def random_problem(rng: random.Random) -> InterpolationProblem:
    return _build(rng, [_shape(rng) for _ in range(5)])


def case_c11(rng: random.Random) -> InterpolationProblem:
    """Antecedents share flank widths, and so do consequents."""
    al, ar = _q(rng, QUANTUM, 4.0), _q(rng, QUANTUM, 4.0)
    bl, br = _q(rng, QUANTUM, 4.0), _q(rng, QUANTUM, 4.0)
    return _build(
        rng,
        [_shape(rng, al, ar), _shape(rng), _shape(rng, al, ar), _shape(rng, bl, br), _shape(rng, bl, br)],
    )


def case_c12(rng: random.Random) -> InterpolationProblem:
    """Each consequent is identical to its antecedent."""
    p = random_problem(rng)
    return make_problem(p.a1, p.a1, p.a2, p.a2, p.astar)


def case_c2(rng: random.Random) -> InterpolationProblem:
    """Antecedents and observation share flank widths; consequents are free."""
    al, ar = _q(rng, QUANTUM, 4.0), _q(rng, QUANTUM, 4.0)
    return _build(rng, [_shape(rng, al, ar) for _ in range(3)] + [_shape(rng), _shape(rng)])


def case_c3(rng: random.Random) -> InterpolationProblem:
    """All five sets share flank widths."""
    sl, sr = _q(rng, QUANTUM, 4.0), _q(rng, QUANTUM, 4.0)
    return _build(rng, [_shape(rng, sl, sr) for _ in range(5)])


CASE_GENERATORS: dict[str, Callable[[random.Random], InterpolationProblem]] = {
    "C1.1": case_c11,
    "C1.2": case_c12,
    "C2": case_c2,
    "C3": case_c3,
}


def problems(generator: Callable[[random.Random], InterpolationProblem], n: int, seed: int = 0) -> Iterator[InterpolationProblem]:
    rng = random.Random(seed)
    for _ in range(n):
        yield generator(rng)


def mirror(p: InterpolationProblem) -> InterpolationProblem:
    """Reflect a problem through x -> -x, swapping the rules to keep the ordering."""

    def flip(s: Trapezoid) -> Trapezoid:
        return make_trapezoid(-s.a4, -s.a3, -s.a2, -s.a1)

    return make_problem(flip(p.a2), flip(p.b2), flip(p.a1), flip(p.b1), flip(p.astar))
