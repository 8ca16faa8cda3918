"""Exact Frobenius-trace statistics for a K3 family via Clausen elliptic curves."""

from .brackets import (
    bracket_coeff,
    chebyshev_closed,
    chebyshev_coeffs,
    chebyshev_eval,
    deligne_audit,
    mertens_coeff,
    pihol_coeff,
)
from .clausen import AValue, TraceTable, a_value, build_trace_table, chebyshev_sum, clausen_trace, moment
from .field import FieldContext, is_prime, make_context, two_squares
from .hurwitz import HurwitzTable, build_hurwitz_table, c_pm, class_number, hurwitz_star, moment_rhs
from .measures import EarParameters, density_f, ear_parameters, mu_bat, mu_st, optimal_delta
from .selberg import TrigPolynomial, eval_trig, proof_bound_audit, selberg_pair
from .stats import (
    DiscrepancyReport,
    IntervalCounts,
    discrepancy_report,
    empirical_A_count,
    interval_counts,
    interval_counts_squared,
    uniform_grid,
)

__version__ = "0.1.0"

__all__ = [
    "AValue",
    "DiscrepancyReport",
    "EarParameters",
    "FieldContext",
    "HurwitzTable",
    "IntervalCounts",
    "TraceTable",
    "TrigPolynomial",
    "a_value",
    "bracket_coeff",
    "build_hurwitz_table",
    "build_trace_table",
    "c_pm",
    "chebyshev_closed",
    "chebyshev_coeffs",
    "chebyshev_eval",
    "chebyshev_sum",
    "class_number",
    "clausen_trace",
    "deligne_audit",
    "density_f",
    "discrepancy_report",
    "ear_parameters",
    "empirical_A_count",
    "eval_trig",
    "hurwitz_star",
    "interval_counts",
    "interval_counts_squared",
    "is_prime",
    "make_context",
    "mertens_coeff",
    "moment",
    "moment_rhs",
    "mu_bat",
    "mu_st",
    "optimal_delta",
    "pihol_coeff",
    "proof_bound_audit",
    "selberg_pair",
    "two_squares",
    "uniform_grid",
]
