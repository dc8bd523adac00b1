"""
Closed-form counts and Gamma-graph constructions for A~n, B~n, C~n, D~n.
"""

from .constructors import (
    b_parameters,
    construct_b_family,
    construct_d_family,
    construct_series_families,
    count_families,
    d_parameters,
    gamma_a,
    gamma_b,
    gamma_c,
    gamma_d,
    vectors_from_gamma,
)

__all__ = [
    "b_parameters",
    "construct_b_family",
    "construct_d_family",
    "construct_series_families",
    "count_families",
    "d_parameters",
    "gamma_a",
    "gamma_b",
    "gamma_c",
    "gamma_d",
    "vectors_from_gamma",
]
