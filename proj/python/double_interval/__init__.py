"""Pairwise-intersecting double-interval societies.

Voters are ``(name, lo1, hi1, lo2, hi2)`` tuples; coordinates come back as
:class:`fractions.Fraction`.
"""

from ._core import (
    Error,
    InfeasibleTarget,
    ParseError,
    SearchLimitExceeded,
    approval_lower_bound,
    approval_number,
    bounds_table,
    canonicalize,
    construct_quarter,
    construct_thirteen,
    delta,
    delta_theoretical_lower,
    diameter,
    endpoint_stats,
    max_society_size,
    ratio_lower_bound_estimate,
    search,
    society_from_endpoints,
    society_from_string,
    verify,
    violating_pairs,
)

__all__ = [
    "Error",
    "InfeasibleTarget",
    "ParseError",
    "SearchLimitExceeded",
    "approval_lower_bound",
    "approval_number",
    "bounds_table",
    "canonicalize",
    "construct_quarter",
    "construct_thirteen",
    "delta",
    "delta_theoretical_lower",
    "diameter",
    "endpoint_stats",
    "max_society_size",
    "ratio_lower_bound_estimate",
    "search",
    "society_from_endpoints",
    "society_from_string",
    "verify",
    "violating_pairs",
]
