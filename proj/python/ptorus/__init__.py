"""Simple closed geodesics on hyperbolic punctured tori."""

from ._ptorus import (
    MODULAR,
    Ball,
    PtorusError,
    asymptotic_prediction,
    build_ball,
    cli,
    complete_triple,
    count_series,
    cusp_heights,
    enumerate_spectrum,
    exact_spectrum,
    hyperbolic_length,
    oz_word,
    primitive_pairs_count,
    run_suite,
    slope_trace,
    totient_sum,
    triangle_margin,
    validate_triple,
    valuation,
    word_trace,
)

__all__ = [
    "MODULAR",
    "Ball",
    "PtorusError",
    "asymptotic_prediction",
    "build_ball",
    "cli",
    "complete_triple",
    "count_series",
    "cusp_heights",
    "enumerate_spectrum",
    "exact_spectrum",
    "hyperbolic_length",
    "oz_word",
    "primitive_pairs_count",
    "run_suite",
    "slope_trace",
    "totient_sum",
    "triangle_margin",
    "validate_triple",
    "valuation",
    "word_trace",
]
