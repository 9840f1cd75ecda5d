"""Exact weight-refined Ehrhart series of lattice polytopes."""

from ._ehrq import (
    Polytope,
    QLaurent,
    QTPoly,
    QTRational,
    QTSeries,
    cross_ehrhart_count,
    cross_series,
    cube_series,
    cube_slice_product,
    descent_count,
    eulerian,
    macmahon_carlitz,
    major_index,
    q_binomial,
    q_integer,
    quotient_hilbert,
    rational_equal,
    refined_eulerian,
    series_equal,
    simplex_series,
    square_series,
    square_series_simplifies,
    verify_regular_sequence,
    verify_suite,
    y_element_support,
)

__all__ = [
    "Polytope",
    "QLaurent",
    "QTPoly",
    "QTRational",
    "QTSeries",
    "cross_ehrhart_count",
    "cross_series",
    "cube_series",
    "cube_slice_product",
    "descent_count",
    "eulerian",
    "macmahon_carlitz",
    "major_index",
    "q_binomial",
    "q_integer",
    "quotient_hilbert",
    "rational_equal",
    "refined_eulerian",
    "series_equal",
    "simplex_series",
    "square_series",
    "square_series_simplifies",
    "verify_regular_sequence",
    "verify_suite",
    "y_element_support",
]
