"""Exact nonsymmetric, vector- and matrix-valued Jacobi polynomials for BC1.

Laurent polynomials travel as ``{exponent: "p/q"}`` dicts, polynomials in
x = (z + 1/z)/2 as ``{degree: "p/q"}`` dicts, and 2x2 matrix polynomials
as nested lists of those.
"""

from bc1jacobi._core import (  # noqa: F401
    DomainError,
    ModeError,
    NonDivisible,
    ParameterOutOfRange,
    Verdict,
    build_M,
    build_P,
    cherednik,
    ct_pair,
    decompose,
    e_norm_squared,
    eigen_check,
    gauss_jacobi_rule,
    identification_check,
    involve,
    jacobi_poly,
    monic_M,
    n_family,
    nonsym_E,
    quad_pair,
    reflect_divide,
    rescale,
    shift_check,
    spherical_apply,
    spherical_function,
    steinberg_split,
    subleading_check,
    transmute_check,
)

__all__ = [
    "DomainError",
    "ModeError",
    "NonDivisible",
    "ParameterOutOfRange",
    "Verdict",
    "build_M",
    "build_P",
    "cherednik",
    "ct_pair",
    "decompose",
    "e_norm_squared",
    "eigen_check",
    "gauss_jacobi_rule",
    "identification_check",
    "involve",
    "jacobi_poly",
    "monic_M",
    "n_family",
    "nonsym_E",
    "quad_pair",
    "reflect_divide",
    "rescale",
    "shift_check",
    "spherical_apply",
    "spherical_function",
    "steinberg_split",
    "subleading_check",
    "transmute_check",
]
