"""Koczy-Hirota fuzzy rule interpolation and piece-wise linearity analysis."""
from .errors import (
    DegenerateRules,
    FRIError,
    LevelMismatch,
    NotCNF,
    OrderingError,
    OutOfRange,
    ParseError,
    PolynomialFlank,
    SchemaError,
)
from .flank import (
    FlankCoefficients,
    FlankSide,
    HyperbolaDecomposition,
    flank_coefficients,
    flank_value,
    hyperbola_decompose,
)
from .fuzzyset import Interval, Trapezoid, alpha_cut, lower_distance, make_trapezoid, precedes, upper_distance
from .khcore import (
    DEFAULT_GRID,
    Conclusion,
    InterpolationProblem,
    alpha_grid,
    conclusion_cut,
    interpolate,
    make_problem,
)
from .linearity import (
    Chord,
    FlankReport,
    LinearityReport,
    analyze,
    chord,
    classify_case,
    deviation,
    error_bound,
    error_bound_signed,
    is_linear_flank,
    max_deviation,
    max_deviation_scan,
    slope_check,
    slope_polynomial,
)

__version__ = "0.1.0"
