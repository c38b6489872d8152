"""Exact Gelfand-Tsetlin orthogonal Appell bases for spherical harmonics and monogenics.

Everything is computed in exact rational arithmetic over Q(i): multivector
coefficients, embedding factors, unit-ball inner products (as rational
multiples of a symbolic pi power) and generalized Taylor coefficients.
"""

from .analysis import (
    ExactBallValue,
    TaylorTable,
    coefficient_relation_check,
    dimension_oracle,
    fischer_inner,
    l2_inner,
    l2_inner_monte_carlo,
    monomial_ball_integral,
    monte_carlo_consistent,
    reconstruct,
    taylor_expand,
)
from .bases import (
    HarmLabel,
    MonoLabel,
    branch_decompose_harmonic,
    enumerate_labels,
    fischer_decompose,
    format_label,
    harmonic_element,
    monogenic_element,
    parse_label,
    spinor_element,
)
from .clifford import (
    DimensionMismatch,
    Multivector,
    SpinorFrame,
    spin_labels,
    spinor_components,
    spinor_frame,
    spinor_generators,
)
from .expressions import ParseError, format_multivector, format_poly, parse_poly
from .factors import embedding_factor_F, embedding_factor_X, gegenbauer, mu_constant
from .poly import (
    CliffPoly,
    ck_extension,
    dirac_left,
    is_harmonic,
    is_monogenic,
    laplacian,
    partial_derivative,
    partial_e12,
    partial_pm,
    poly_mul,
)
from .scalars import GaussianRational, binomial, factorial, format_rational, parse_rational, pochhammer

__all__ = [
    "CliffPoly",
    "DimensionMismatch",
    "ExactBallValue",
    "GaussianRational",
    "HarmLabel",
    "MonoLabel",
    "Multivector",
    "ParseError",
    "SpinorFrame",
    "TaylorTable",
    "binomial",
    "branch_decompose_harmonic",
    "ck_extension",
    "coefficient_relation_check",
    "dimension_oracle",
    "dirac_left",
    "embedding_factor_F",
    "embedding_factor_X",
    "enumerate_labels",
    "factorial",
    "fischer_decompose",
    "fischer_inner",
    "format_label",
    "format_multivector",
    "format_poly",
    "format_rational",
    "gegenbauer",
    "harmonic_element",
    "is_harmonic",
    "is_monogenic",
    "l2_inner",
    "l2_inner_monte_carlo",
    "laplacian",
    "monogenic_element",
    "monomial_ball_integral",
    "monte_carlo_consistent",
    "mu_constant",
    "parse_label",
    "parse_poly",
    "parse_rational",
    "partial_derivative",
    "partial_e12",
    "partial_pm",
    "pochhammer",
    "poly_mul",
    "reconstruct",
    "spin_labels",
    "spinor_components",
    "spinor_element",
    "spinor_frame",
    "spinor_generators",
    "taylor_expand",
]
