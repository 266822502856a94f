"""The ten-case KH piece-wise linearity benchmark.

Group 1 (X1-X4) has exactly linear conclusion flanks; group 2 (Y1 in three
observation placements, Y2-Y4) does not. Expected values keep the digits
they were published with: comparison tolerances are derived from them.
"""
from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal
from typing import Literal, Union

from ..khcore import InterpolationProblem, make_problem

NAN = "NAN"
Bound = Union[Decimal, Literal["NAN"]]


@dataclass(frozen=True)
class Expected:
    """Published results for one case; any field may be absent (None)."""

    bstar: tuple[Decimal, Decimal, Decimal, Decimal] | None = None
    max_dev_left: Decimal | None = None
    max_dev_right: Decimal | None = None
    e_left: Bound | None = None
    e_right: Bound | None = None
    slope_left: int | None = None
    slope_right: int | None = None
    cases: frozenset[str] | None = None


@dataclass(frozen=True)
class BenchmarkCase:
    id: str
    problem: InterpolationProblem
    expected: Expected | None = None
    provenance: str = ""


def _d(*values: str) -> tuple[Decimal, ...]:
    return tuple(Decimal(v) for v in values)


def _case(cid, a1, a2, astar, b1, b2, bstar, dev, e, slope, cases, provenance) -> BenchmarkCase:
    problem = make_problem(a1, b1, a2, b2, astar)
    dl, dr = _d(*dev)
    el, er = (v if v == NAN else Decimal(v) for v in e)
    return BenchmarkCase(
        id=cid,
        problem=problem,
        expected=Expected(
            bstar=_d(*bstar),
            max_dev_left=dl,
            max_dev_right=dr,
            e_left=el,
            e_right=er,
            slope_left=slope[0],
            slope_right=slope[1],
            cases=frozenset(cases),
        ),
        provenance=provenance,
    )


_Y1_RULES = dict(a1=(0, 2, 2, 8), a2=(14, 20, 20, 22), b1=(0, 2, 2, 4), b2=(9, 11, 11, 13))


def embedded_corpus() -> list[BenchmarkCase]:
    return [
        _case("X1", (0, 2, 2, 6), (10, 12, 12, 16), (7, 8, 8, 9), (0, 2, 2, 6), (10, 12, 12, 16),
              ("7", "8", "8", "9"), ("0", "0"), (NAN, NAN), (1, 1), ("C1.1", "C1.2"),
              "Table 1, Example X1 (case C1.1)"),
        _case("X2", (0, 3, 3, 4), (10, 11, 11, 14), (5, 6, 6, 7), (0, 3, 3, 4), (10, 11, 11, 14),
              ("5", "6", "6", "7"), ("0", "0"), ("0", "0"), (1, 1), ("C1.2",),
              "Table 2, Example X2 (case C1.2)"),
        # printed support point 4.5 contradicts the interpolation of the printed inputs; 4 stored
        _case("X3", (0, 3, 3, 6), (13, 16, 16, 19), (6.5, 9.5, 9.5, 12.5), (1, 2, 2, 3), (7, 9, 9, 11),
              ("4", "5.5", "5.5", "7"), ("0", "0"), (NAN, NAN), (1, 1), ("C2",),
              "Table 3, Example X3 (case C2); printed B* support 4.5 corrected to 4"),
        _case("X4", (1, 2, 2, 3), (10, 11, 11, 12), (5, 6, 6, 7), (1, 2, 2, 3), (10, 11, 11, 12),
              ("5", "6", "6", "7"), ("0", "0"), (NAN, NAN), (1, 1), ("C1.1", "C1.2", "C2", "C3"),
              "Table 4, Example X4 (case C3)"),
        _case("Y1s1", astar=(9, 11, 11, 13), **_Y1_RULES,
              bstar=("5.79", "6.50", "6.50", "7.21"), dev=("0.08", "0.08"), e=("1.2857", "1.2857"),
              slope=(0, 0), cases=(), provenance="Table 5, Example Y1 situation 1"),
        _case("Y1s2", astar=(8, 11, 11, 14), **_Y1_RULES,
              bstar=("5.14", "6.50", "6.50", "7.86"), dev=("0.04", "0.04"), e=("0.6429", "0.6429"),
              slope=(0, 0), cases=(), provenance="Table 5, Example Y1 situation 2"),
        _case("Y1s3", astar=(10, 11, 11, 12), **_Y1_RULES,
              bstar=("6.4286", "6.5000", "6.5000", "6.571"), dev=("0.121", "0.121"), e=("1.9286", "1.9286"),
              slope=(0, 0), cases=(), provenance="Table 5, Example Y1 situation 3"),
        _case("Y2", (0, 3, 3, 4), (10, 11, 11, 14), (5, 6, 6, 7), (1, 4, 4, 5), (15, 16, 16, 19),
              ("8", "8.5", "8.5", "9.2"), ("0.028", "0.017"), ("0.500", "0.300"), (0, 0), (),
              "Table 6, Example Y2"),
        _case("Y3", (0, 3, 3, 7), (15, 18, 18, 22), (7, 8, 8, 10), (0, 2, 2, 5), (8, 9, 9, 10),
              ("3.7333", "4.3333", "4.3333", "6.0000"), ("0.033", "0.067"), (NAN, NAN), (0, 0), (),
              "Table 7, Example Y3"),
        _case("Y4", (1, 2, 2, 4), (10, 12, 12, 15), (6, 7, 7, 8), (0, 2, 2, 5), (12, 13, 13, 14),
              ("6.6667", "7.5", "7.5", "8.2727"), ("0.031", "0.101"), ("1.1667", "4.2273"), (0, 0), (),
              "Table 8, Example Y4"),
    ]


def get_case(case_id: str) -> BenchmarkCase:
    for c in embedded_corpus():
        if c.id == case_id:
            return c
    raise KeyError(case_id)


# Published |deviation| tables at alpha = 0, 0.1, ..., 1. The right column is
# listed along x from core to support: entry i belongs to alpha = 1 - i/10.
FIGURE_DELTAS: dict[str, dict[str, tuple[str, ...]]] = {
    "Y2": {
        "left": ("0.000", "0.009", "0.017", "0.022", "0.026", "0.028", "0.027", "0.024", "0.019", "0.011", "0.000"),
        "right": ("0.000", "0.007", "0.011", "0.015", "0.016", "0.017", "0.016", "0.013", "0.010", "0.006", "0.000"),
    },
    "Y3": {
        "left": ("0.000", "0.012", "0.021", "0.028", "0.032", "0.033", "0.032", "0.028", "0.021", "0.012", "0.000"),
        "right": ("0.000", "0.024", "0.043", "0.056", "0.064", "0.067", "0.064", "0.056", "0.043", "0.024", "0.000"),
    },
}
