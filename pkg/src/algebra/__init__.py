"""Algebra package: exact polynomials, term orders and Gröbner bases."""

from .monomials import ExponentVector, IntegerVector, primitive
from .term_order import Ordering, TermOrderMatrix, compare_exponents
from .polynomial import Polynomial, Rational, Term, initial_form, initial_term
from .marked import MarkedBasis, MarkedPolynomial
from .division import autoreduce, normal_form, s_polynomial
from .buchberger import buchberger, buchberger_with_rule, unit_basis
from .ideal import IdealInput

__all__ = [
    "ExponentVector",
    "IntegerVector",
    "primitive",
    "Ordering",
    "TermOrderMatrix",
    "compare_exponents",
    "Polynomial",
    "Rational",
    "Term",
    "initial_form",
    "initial_term",
    "MarkedBasis",
    "MarkedPolynomial",
    "autoreduce",
    "normal_form",
    "s_polynomial",
    "buchberger",
    "buchberger_with_rule",
    "unit_basis",
    "IdealInput",
]
