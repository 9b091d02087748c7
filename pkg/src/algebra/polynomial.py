"""Multivariate polynomials over Q with exact Fraction coefficients."""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Iterator, Mapping, Optional, Sequence, Tuple, Union

from .monomials import ExponentVector, add, check_length, dot, grlex_key
from .term_order import TermOrderMatrix

Rational = Fraction
Coefficient = Union[int, Fraction]


@dataclass(frozen=True)
class Term:
    """A monomial together with its non-zero coefficient."""

    coefficient: Fraction
    exponent: ExponentVector

    def __post_init__(self):
        if self.coefficient == 0:
            raise ValueError("a term needs a non-zero coefficient")


class Polynomial:
    """
    Immutable polynomial in n variables.

    Terms are kept in a dict from exponent to coefficient without zero
    entries; `terms` lists them in the internal canonical order (graded
    lexicographic, ascending).
    """

    __slots__ = ("_coeffs", "n", "_sorted", "_hash")

    def __init__(self, coeffs: Mapping[ExponentVector, Coefficient], n: int):
        self.n = n
        self._coeffs: Dict[ExponentVector, Fraction] = {}
        for e, c in coeffs.items():
            if len(e) != n:
                raise ValueError(f"exponent {e} does not have length {n}")
            if any(x < 0 for x in e):
                raise ValueError(f"exponent {e} has a negative entry")
            if c:
                self._coeffs[tuple(e)] = Fraction(c)
        self._sorted: Optional[Tuple[Term, ...]] = None
        self._hash: Optional[int] = None

    @classmethod
    def _raw(cls, coeffs: Dict[ExponentVector, Fraction], n: int) -> "Polynomial":
        """Wrap a dict that is already clean (no zeros, tuple keys)."""
        p = cls.__new__(cls)
        p.n = n
        p._coeffs = coeffs
        p._sorted = None
        p._hash = None
        return p

    @classmethod
    def zero(cls, n: int) -> "Polynomial":
        return cls._raw({}, n)

    @classmethod
    def constant(cls, c: Coefficient, n: int) -> "Polynomial":
        return cls({(0,) * n: c}, n)

    @classmethod
    def monomial(cls, exponent: Sequence[int], c: Coefficient = 1) -> "Polynomial":
        return cls({tuple(exponent): c}, len(exponent))

    @classmethod
    def variable(cls, i: int, n: int) -> "Polynomial":
        return cls.monomial(tuple(1 if j == i else 0 for j in range(n)))

    @classmethod
    def from_terms(cls, terms: Iterable[Term], n: int) -> "Polynomial":
        coeffs: Dict[ExponentVector, Fraction] = {}
        for t in terms:
            coeffs[t.exponent] = coeffs.get(t.exponent, Fraction(0)) + t.coefficient
        return cls(coeffs, n)

    # -- inspection -------------------------------------------------------

    @property
    def terms(self) -> Tuple[Term, ...]:
        if self._sorted is None:
            self._sorted = tuple(
                Term(self._coeffs[e], e) for e in sorted(self._coeffs, key=grlex_key)
            )
        return self._sorted

    def exponents(self) -> Iterator[ExponentVector]:
        return iter(self._coeffs)

    def items(self):
        return self._coeffs.items()

    def coefficient(self, exponent: ExponentVector) -> Fraction:
        return self._coeffs.get(tuple(exponent), Fraction(0))

    def __contains__(self, exponent: ExponentVector) -> bool:
        return tuple(exponent) in self._coeffs

    def __len__(self) -> int:
        return len(self._coeffs)

    def is_zero(self) -> bool:
        return not self._coeffs

    def total_degree(self) -> int:
        return max((sum(e) for e in self._coeffs), default=0)

    def canonical_key(self) -> Tuple[Tuple[ExponentVector, Fraction], ...]:
        return tuple((t.exponent, t.coefficient) for t in self.terms)

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other: "Polynomial") -> "Polynomial":
        check_length((0,) * self.n, (0,) * other.n)
        coeffs = dict(self._coeffs)
        for e, c in other._coeffs.items():
            s = coeffs.get(e, 0) + c
            if s:
                coeffs[e] = s
            else:
                coeffs.pop(e, None)
        return Polynomial._raw(coeffs, self.n)

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw({e: -c for e, c in self._coeffs.items()}, self.n)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: Union["Polynomial", Coefficient]) -> "Polynomial":
        if isinstance(other, Polynomial):
            result = Polynomial.zero(self.n)
            for e, c in other._coeffs.items():
                result = result + self.shift(e, c)
            return result
        factor = Fraction(other)
        if not factor:
            return Polynomial.zero(self.n)
        return Polynomial._raw({e: c * factor for e, c in self._coeffs.items()}, self.n)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        result = Polynomial.constant(1, self.n)
        for _ in range(k):
            result = result * self
        return result

    def shift(self, exponent: ExponentVector, c: Coefficient = 1) -> "Polynomial":
        """Multiply by the term c·x^exponent."""
        c = Fraction(c)
        if not c:
            return Polynomial.zero(self.n)
        return Polynomial._raw({add(e, exponent): v * c for e, v in self._coeffs.items()}, self.n)

    def normalized(self) -> "Polynomial":
        """Scale so that the canonically largest term has coefficient 1."""
        if self.is_zero():
            return self
        return self * (1 / self.terms[-1].coefficient)

    def permuted(self, pi: Sequence[int]) -> "Polynomial":
        """Substitute x_i -> x_{pi[i]}."""
        coeffs = {}
        for e, c in self._coeffs.items():
            image = [0] * self.n
            for i, k in enumerate(e):
                image[pi[i]] = k
            coeffs[tuple(image)] = c
        return Polynomial._raw(coeffs, self.n)

    # -- comparison -------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.n == other.n and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, frozenset(self._coeffs.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"Polynomial({dict(self._coeffs)!r}, n={self.n})"


def initial_term(M: TermOrderMatrix, f: Polynomial) -> Term:
    """
    The largest term of f under a term order.

    Args:
        M: Term order
        f: Non-zero polynomial

    Returns:
        Term of f whose exponent is maximal

    Raises:
        ValueError: If f is zero
    """
    if f.is_zero():
        raise ValueError("the zero polynomial has no initial term")
    e = max(f.exponents(), key=M.key)
    return Term(f.coefficient(e), e)


def initial_form(omega: Sequence[int], f: Polynomial) -> Tuple[Polynomial, Fraction]:
    """
    Sum of the terms of f of maximal ω-degree.

    Args:
        omega: Weight vector, negative entries allowed
        f: Non-zero polynomial

    Returns:
        (in_ω(f), the common ω-degree of its terms)

    Raises:
        ValueError: If f is zero or the lengths differ
    """
    if f.is_zero():
        raise ValueError("the zero polynomial has no initial form")
    check_length(omega, (0,) * f.n)
    degrees = {e: dot(omega, e) for e in f.exponents()}
    top = max(degrees.values())
    return Polynomial({e: f.coefficient(e) for e, d in degrees.items() if d == top}, f.n), top
