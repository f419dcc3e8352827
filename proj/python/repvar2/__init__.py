"""Exact stratum censuses, PGL2 orbit counts and closed-form checks for
tuples of 2x2 matrices over small finite fields."""

from ._core import (
    Poly,
    census,
    classify,
    formula,
    formula_keys,
    orbit_census,
    stabilizer_order,
    supported_orders,
    verify,
    zeta_checks,
    zeta_factorization,
)

__all__ = [
    "Poly",
    "census",
    "classify",
    "formula",
    "formula_keys",
    "orbit_census",
    "stabilizer_order",
    "supported_orders",
    "verify",
    "zeta_checks",
    "zeta_factorization",
]

__version__ = "0.1.0"
