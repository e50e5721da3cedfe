"""Exact Bell-based Apostol-type polynomials and their identities.

Polynomials live in Q[X1, X2] with exact rational coefficients; every family
is read off a truncated exponential generating function.
"""

from .backend import NAME as RATIONAL_BACKEND, Q, format_rational, parse_rational
from .errors import (
    BellApostolError, NegativeValuation, OrderExceeded, ParameterError, PoleAtZero,
    PositiveValuationRequired,
)
from .exact import binomial, falling_factorial, stirling2, stirling2_poly
from .families import (
    FamilyKind, FamilySpec, PolyTable, apostol_bernoulli, apostol_euler, apostol_genocchi,
    apostol_type_poly, bell_apostol_egf, bell_apostol_number, bell_apostol_poly, bell_bivariate,
    bell_classical, bell_number, build_table, classical_order_family,
)
from .identities import (
    DEFAULT_GRID, Grid, GridPoint, Status, VerifyReport, run_suite, verify_eq_4_2,
    verify_reduction, verify_thm_3_3, verify_thm_3_3_printed, verify_thm_3_4, verify_thm_3_5,
    verify_thm_3_6, verify_thm_4_1, verify_thm_4_4, verify_thm_4_5, verify_thm_4_7,
    verify_thm_4_7_printed, verify_thm_5_1, verify_thm_5_3,
)
from .poly import X1, X2, BiPoly
from .series import QQ, LaurentSeries, Ring, egf_coeff, series_exp, series_inv, series_mul

__version__ = "0.1.0"

__all__ = [
    "RATIONAL_BACKEND", "Q", "format_rational", "parse_rational", "BellApostolError",
    "NegativeValuation", "OrderExceeded", "ParameterError", "PoleAtZero",
    "PositiveValuationRequired", "binomial", "falling_factorial", "stirling2",
    "stirling2_poly", "FamilyKind", "FamilySpec", "PolyTable", "apostol_bernoulli",
    "apostol_euler", "apostol_genocchi", "apostol_type_poly", "bell_apostol_egf",
    "bell_apostol_number", "bell_apostol_poly", "bell_bivariate", "bell_classical",
    "bell_number", "build_table", "classical_order_family", "DEFAULT_GRID", "Grid",
    "GridPoint", "Status", "VerifyReport", "run_suite", "verify_eq_4_2", "verify_reduction",
    "verify_thm_3_3", "verify_thm_3_3_printed", "verify_thm_3_4", "verify_thm_3_5",
    "verify_thm_3_6", "verify_thm_4_1", "verify_thm_4_4", "verify_thm_4_5", "verify_thm_4_7",
    "verify_thm_4_7_printed", "verify_thm_5_1", "verify_thm_5_3", "X1", "X2", "BiPoly", "QQ",
    "LaurentSeries", "Ring", "egf_coeff", "series_exp", "series_inv", "series_mul",
    "__version__",
]
