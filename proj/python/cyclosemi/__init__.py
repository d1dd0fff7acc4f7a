"""Symmetry and cyclotomicity of numerical semigroups.

Polynomials are plain lists of Python ints, constant term first.
"""

from ._core import (
    NonConvergenceError,
    NumericalSemigroup,
    __version__,
    census,
    certificate_check,
    complex_roots,
    count_unit_circle_roots,
    cyclotomic,
    cyclotomic_test,
    exclusion_check,
    family_generators,
    family_polynomial,
    family_verdict,
    is_palindromic,
    poly_divexact,
    poly_mul,
    q_eval,
    q_prime_eval,
    q_second_eval,
    scan,
    theorem7_band_check,
)

__all__ = [
    "NonConvergenceError",
    "NumericalSemigroup",
    "__version__",
    "census",
    "certificate_check",
    "complex_roots",
    "count_unit_circle_roots",
    "cyclotomic",
    "cyclotomic_test",
    "exclusion_check",
    "family_generators",
    "family_polynomial",
    "family_verdict",
    "is_palindromic",
    "poly_divexact",
    "poly_mul",
    "q_eval",
    "q_prime_eval",
    "q_second_eval",
    "scan",
    "theorem7_band_check",
]
