"""Exponent vectors and integer vectors.

Both are plain tuples of ints. Exponent vectors have non-negative entries and
describe monomials; integer vectors may be signed and describe weights,
exponent differences and facet normals.
"""

from fractions import Fraction
from functools import reduce
from math import gcd, lcm as int_lcm
from typing import Iterable, Sequence, Tuple

ExponentVector = Tuple[int, ...]
IntegerVector = Tuple[int, ...]


def check_length(a: Sequence, b: Sequence) -> None:
    """Raise ValueError when two vectors differ in length."""
    if len(a) != len(b):
        raise ValueError(f"dimension mismatch: {len(a)} != {len(b)}")


def add(a: Sequence[int], b: Sequence[int]) -> Tuple[int, ...]:
    return tuple(x + y for x, y in zip(a, b))


def sub(a: Sequence[int], b: Sequence[int]) -> Tuple[int, ...]:
    return tuple(x - y for x, y in zip(a, b))


def scale(k: int, a: Sequence[int]) -> Tuple[int, ...]:
    return tuple(k * x for x in a)


def dot(a: Sequence, b: Sequence):
    return sum(x * y for x, y in zip(a, b))


def divides(a: ExponentVector, b: ExponentVector) -> bool:
    """True when x^a divides x^b."""
    return all(x <= y for x, y in zip(a, b))


def lcm(a: ExponentVector, b: ExponentVector) -> ExponentVector:
    return tuple(max(x, y) for x, y in zip(a, b))


def total_degree(a: ExponentVector) -> int:
    return sum(a)


def grlex_key(a: ExponentVector) -> Tuple[int, ExponentVector]:
    """Sort key of the internal canonical order (graded, then lexicographic)."""
    return (sum(a), tuple(a))


def vector_gcd(entries: Iterable[int]) -> int:
    """Positive gcd of the entries; the gcd of the zero vector is 1."""
    g = reduce(gcd, (abs(x) for x in entries), 0)
    return g or 1


def primitive(v: Sequence[int]) -> IntegerVector:
    """Divide by the positive gcd; the sign is kept."""
    g = vector_gcd(v)
    return tuple(x // g for x in v)


def primitive_rational(v: Sequence[Fraction]) -> IntegerVector:
    """Scale a rational vector to the primitive integer vector on the same ray."""
    denominators = [Fraction(x).denominator for x in v]
    common = reduce(int_lcm, denominators, 1)
    return primitive([int(Fraction(x) * common) for x in v])


def normalize_equation(v: Sequence[int]) -> IntegerVector:
    """Primitive form with the first non-zero entry positive."""
    p = primitive(v)
    for x in p:
        if x != 0:
            return p if x > 0 else tuple(-y for y in p)
    return p


def is_zero(v: Sequence) -> bool:
    return all(x == 0 for x in v)


def lex_sign(v: Sequence) -> int:
    """Sign of the first non-zero entry (0 for the zero vector)."""
    for x in v:
        if x > 0:
            return 1
        if x < 0:
            return -1
    return 0


def unit_vector(n: int, i: int) -> IntegerVector:
    return tuple(1 if j == i else 0 for j in range(n))
