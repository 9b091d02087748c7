"""Exact linear algebra over Q, delegated to sympy matrices."""

from fractions import Fraction
from typing import List, Sequence, Tuple

from sympy import Matrix, Rational as SympyRational

from ..algebra.monomials import IntegerVector, normalize_equation, primitive_rational


def _to_fraction(x: SympyRational) -> Fraction:
    x = SympyRational(x)
    return Fraction(int(x.p), int(x.q))


def _matrix(rows: Sequence[Sequence], n: int) -> Matrix:
    if not rows:
        return Matrix.zeros(0, n)
    return Matrix([[SympyRational(Fraction(v).numerator, Fraction(v).denominator) for v in r] for r in rows])


def rank(rows: Sequence[Sequence], n: int) -> int:
    if not rows:
        return 0
    return _matrix(rows, n).rank()


def echelon(rows: Sequence[Sequence], n: int) -> Tuple[List[Tuple[Fraction, ...]], Tuple[int, ...]]:
    """
    Reduced row-echelon form.

    Returns:
        (non-zero RREF rows as Fraction tuples, pivot column indices)
    """
    if not rows:
        return [], ()
    reduced, pivots = _matrix(rows, n).rref()
    out = [tuple(_to_fraction(reduced[i, j]) for j in range(n)) for i in range(len(pivots))]
    return out, tuple(pivots)


def echelon_integer(rows: Sequence[Sequence], n: int) -> Tuple[IntegerVector, ...]:
    """RREF rows scaled to primitive integer rows with positive leading entry."""
    reduced, _ = echelon(rows, n)
    return tuple(normalize_equation(primitive_rational(r)) for r in reduced)


def reduce_modulo(
    v: Sequence, reduced: Sequence[Sequence[Fraction]], pivots: Sequence[int]
) -> Tuple[Fraction, ...]:
    """Eliminate the pivot columns of an RREF row space from v."""
    out = [Fraction(x) for x in v]
    for row, p in zip(reduced, pivots):
        factor = out[p]
        if factor:
            out = [a - factor * b for a, b in zip(out, row)]
    return tuple(out)


def nullspace(rows: Sequence[Sequence], n: int) -> List[IntegerVector]:
    """Primitive integer basis of {x : ⟨r,x⟩ = 0 for every row r}."""
    if not rows:
        return [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    basis = _matrix(rows, n).nullspace()
    return [normalize_equation(primitive_rational([_to_fraction(v) for v in b])) for b in basis]
