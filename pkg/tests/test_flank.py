from fractions import Fraction

import pytest
from hypothesis import given

from khfri import (
    DEFAULT_GRID,
    DegenerateRules,
    FlankSide,
    InterpolationProblem,
    OutOfRange,
    PolynomialFlank,
    conclusion_cut,
    flank_coefficients,
    flank_value,
    hyperbola_decompose,
    make_trapezoid,
)
from khfri.flank import bilinear_d, hyperbola_numerator
from khfri.generate import mirror

from .strategies import problems

LEFT, RIGHT = FlankSide.LEFT, FlankSide.RIGHT


def fitted_rational(p, side):
    """(D1, D2, D3, c9, c10) by exact interpolation of the FERI numerator and denominator.

    The numerator is quadratic and the denominator affine in alpha, so three
    levels pin them down.
    """

    def endpoint(s, a):
        pts = [Fraction(v) for v in s.points]
        if side is LEFT:
            return pts[0] + a * (pts[1] - pts[0])
        return pts[3] + a * (pts[2] - pts[3])

    def num_den(a):
        x1, x2, xs = endpoint(p.a1, a), endpoint(p.a2, a), endpoint(p.astar, a)
        y1, y2 = endpoint(p.b1, a), endpoint(p.b2, a)
        return (xs - x1) * y2 + (x2 - xs) * y1, x2 - x1

    (n0, d0), (nh, _), (n1, d1) = (num_den(Fraction(k, 2)) for k in range(3))
    # n(a) = D1 a^2 + D2 a + D3 through (0, n0), (1/2, nh), (1, n1)
    q2 = 2 * n1 - 4 * nh + 2 * n0
    q1 = n1 - n0 - q2
    return q2, q1, n0, d1 - d0, d0


def test_bilinear_identities(corpus):
    for case in corpus.values():
        for side in (LEFT, RIGHT):
            f = flank_coefficients(case.problem, side)
            assert f.d == bilinear_d(f.c)
            c1, c2, c3, c4 = f.c[:4]
            assert f.c9 == c1 + c3 and f.c10 == c2 + c4


def test_coefficients_y1s1_left(corpus):
    f = flank_coefficients(corpus["Y1s1"].problem, LEFT)
    assert (f.c9, f.c10) == (4, 14)
    assert f.d == (8, 28, 81)
    assert fitted_rational(corpus["Y1s1"].problem, LEFT) == (8, 28, 81, 4, 14)
    assert round(flank_value(f, 0.0), 2) == 5.79


def test_coefficients_y1s1_right_matches_table(corpus):
    f = flank_coefficients(corpus["Y1s1"].problem, RIGHT)
    assert f.d3 / f.c10 == pytest.approx(101 / 14)
    assert round(f.d3 / f.c10, 2) == 7.21


def test_coefficients_x2_and_x1(corpus):
    x2 = flank_coefficients(corpus["X2"].problem, LEFT)
    assert x2.c9 == -2 and x2.d1 == -2
    x1 = flank_coefficients(corpus["X1"].problem, LEFT)
    assert x1.c9 == 0 and x1.d1 == 0


@pytest.mark.parametrize("cid", ["X1", "X2", "X3", "X4", "Y1s1", "Y1s2", "Y1s3", "Y2", "Y3", "Y4"])
@pytest.mark.parametrize("side", [LEFT, RIGHT])
def test_coefficients_match_exact_fit_on_corpus(corpus, cid, side):
    f = flank_coefficients(corpus[cid].problem, side)
    assert (*f.d, f.c9, f.c10) == fitted_rational(corpus[cid].problem, side)


@given(problems)
def test_coefficients_match_exact_fit(p):
    for side in (LEFT, RIGHT):
        f = flank_coefficients(p, side)
        assert (*f.d, f.c9, f.c10) == fitted_rational(p, side)


@pytest.mark.parametrize(
    "cid, side, alpha, expected",
    [
        ("Y1s1", LEFT, 0.0, 81 / 14),
        ("Y1s1", LEFT, 1.0, 117 / 18),
        ("Y4", LEFT, 0.5, (0.5 + 6.5 + 60) / 9.5),
    ],
)
def test_flank_value_examples(corpus, cid, side, alpha, expected):
    f = flank_coefficients(corpus[cid].problem, side)
    assert flank_value(f, alpha) == pytest.approx(expected, abs=1e-12)


def test_y4_left_coefficients(corpus):
    f = flank_coefficients(corpus["Y4"].problem, LEFT)
    assert f.d == (2, 13, 60) and (f.c9, f.c10) == (1, 9)
    assert round(flank_value(f, 0.5), 4) == 7.0526


def test_flank_value_errors(corpus):
    f = flank_coefficients(corpus["Y4"].problem, LEFT)
    with pytest.raises(OutOfRange):
        flank_value(f, 1.5)
    s = make_trapezoid(0, 1, 1, 2)
    degenerate = InterpolationProblem(s, s, s, make_trapezoid(3, 4, 4, 5), s)
    with pytest.raises(DegenerateRules):
        flank_value(flank_coefficients(degenerate, LEFT), 0.0)


@given(problems)
def test_flank_agrees_with_engine(p):
    fl, fr = flank_coefficients(p, LEFT), flank_coefficients(p, RIGHT)
    for a in DEFAULT_GRID:
        cut = conclusion_cut(p, a)
        assert abs(flank_value(fl, a) - cut.lo) <= 1e-9
        assert abs(flank_value(fr, a) - cut.hi) <= 1e-9


@given(problems)
def test_endpoint_identities(p):
    for side in (LEFT, RIGHT):
        f = flank_coefficients(p, side)
        assert flank_value(f, 0.0) == f.d3 / f.c10
        assert flank_value(f, 1.0) == (f.d1 + f.d2 + f.d3) / (f.c9 + f.c10)


def test_hyperbola_y1s1(corpus):
    h = hyperbola_decompose(flank_coefficients(corpus["Y1s1"].problem, LEFT))
    assert (h.a, h.b, h.c, h.d) == (20.25, 3.5, 2.0, 0.0)
    assert h.a / (h.b * (1 + h.b)) == pytest.approx(1.2857, abs=5e-5)


def test_hyperbola_x2_has_no_amplitude(corpus):
    f = flank_coefficients(corpus["X2"].problem, LEFT)
    assert hyperbola_numerator(f) == 50 * 4 - 0 - 2 * 100 == 0
    assert hyperbola_decompose(f).a == 0.0


def test_hyperbola_needs_nonzero_c9(corpus):
    with pytest.raises(PolynomialFlank):
        hyperbola_decompose(flank_coefficients(corpus["X1"].problem, LEFT))


@given(problems)
def test_decomposition_reproduces_flank(p):
    for side in (LEFT, RIGHT):
        f = flank_coefficients(p, side)
        if f.c9 == 0:
            continue
        h = hyperbola_decompose(f)
        assert h.b != 0
        for a in DEFAULT_GRID:
            v = flank_value(f, a)
            assert h(a) == pytest.approx(v, abs=1e-9 * max(1.0, abs(h.line(a)), abs(h.hyperbola(a))))


@given(problems)
def test_right_flank_mirrors_left(p):
    """Reflecting x -> -x turns the left flank into the negated right flank."""
    q = mirror(p)
    left, right = flank_coefficients(p, LEFT), flank_coefficients(q, RIGHT)
    c = left.c
    assert right.c == (c[2], c[3], c[0], c[1], -c[6], -c[7], -c[4], -c[5], c[8], c[9])
    assert right.d == tuple(-v for v in left.d)
    for a in DEFAULT_GRID:
        assert flank_value(right, a) == pytest.approx(-flank_value(left, a), abs=1e-12)
