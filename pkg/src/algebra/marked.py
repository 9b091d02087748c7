"""Marked polynomials and marked reduced Gröbner bases."""

from typing import Iterable, List, Sequence, Tuple

from .monomials import ExponentVector, IntegerVector, divides, grlex_key, sub
from .polynomial import Polynomial, Term


class MarkedPolynomial:
    """A polynomial with one distinguished term whose coefficient is scaled to 1."""

    __slots__ = ("body", "marked")

    def __init__(self, body: Polynomial, marked: ExponentVector):
        marked = tuple(marked)
        if marked not in body:
            raise ValueError(f"marked exponent {marked} is not a term of the polynomial")
        c = body.coefficient(marked)
        self.body = body if c == 1 else body * (1 / c)
        self.marked = marked

    @property
    def n(self) -> int:
        return self.body.n

    @property
    def marked_term(self) -> Term:
        return Term(self.body.coefficient(self.marked), self.marked)

    def tail(self) -> List[Term]:
        """Non-marked terms in canonical order."""
        return [t for t in self.body.terms if t.exponent != self.marked]

    def tail_exponents(self) -> List[ExponentVector]:
        return [e for e in self.body.exponents() if e != self.marked]

    def differences(self) -> List[IntegerVector]:
        """marked − e for every non-marked exponent e."""
        return [sub(self.marked, e) for e in self.tail_exponents()]

    def key(self) -> Tuple:
        return (self.marked, self.body.canonical_key())

    def permuted(self, pi: Sequence[int]) -> "MarkedPolynomial":
        image = [0] * self.n
        for i, k in enumerate(self.marked):
            image[pi[i]] = k
        return MarkedPolynomial(self.body.permuted(pi), tuple(image))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MarkedPolynomial):
            return NotImplemented
        return self.marked == other.marked and self.body == other.body

    def __hash__(self) -> int:
        return hash((self.marked, self.body))

    def __repr__(self) -> str:
        return f"MarkedPolynomial(marked={self.marked}, terms={len(self.body)})"


class MarkedBasis:
    """
    A marked reduced Gröbner basis.

    Elements are sorted by marked exponent, largest first in the internal
    canonical order, so equal bases compare and hash equal regardless of how
    they were produced. `key()` is the canonical serialization used for
    visited sets and orbit representatives.
    """

    __slots__ = ("elements", "n", "_key")

    def __init__(self, elements: Iterable[MarkedPolynomial], n: int):
        self.elements: Tuple[MarkedPolynomial, ...] = tuple(
            sorted(elements, key=lambda g: grlex_key(g.marked), reverse=True)
        )
        self.n = n
        for g in self.elements:
            if g.n != n:
                raise ValueError(f"basis element in {g.n} variables, expected {n}")
        self._key = None

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def marked_exponents(self) -> List[ExponentVector]:
        return [g.marked for g in self.elements]

    @property
    def bodies(self) -> List[Polynomial]:
        return [g.body for g in self.elements]

    def differences(self) -> List[IntegerVector]:
        """All exponent differences marked − other over the basis."""
        return [d for g in self.elements for d in g.differences()]

    def is_unit(self) -> bool:
        return len(self.elements) == 1 and not any(self.elements[0].marked)

    def is_reduced(self) -> bool:
        """No exponent of an element is divisible by the marked exponent of another."""
        for i, g in enumerate(self.elements):
            for j, h in enumerate(self.elements):
                if i == j:
                    continue
                if any(divides(h.marked, e) for e in g.body.exponents()):
                    return False
            if any(divides(g.marked, e) for e in g.tail_exponents()):
                return False
        return True

    def in_initial_ideal(self, exponent: ExponentVector) -> bool:
        return any(divides(m, exponent) for m in self.marked_exponents)

    def key(self) -> Tuple:
        if self._key is None:
            self._key = tuple(g.key() for g in self.elements)
        return self._key

    def permuted(self, pi: Sequence[int]) -> "MarkedBasis":
        return MarkedBasis((g.permuted(pi) for g in self.elements), self.n)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MarkedBasis):
            return NotImplemented
        return self.key() == other.key()

    def __lt__(self, other: "MarkedBasis") -> bool:
        return self.key() < other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def __repr__(self) -> str:
        return f"MarkedBasis(n={self.n}, elements={len(self.elements)})"
