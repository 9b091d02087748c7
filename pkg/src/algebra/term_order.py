"""Term orders given by integer matrices."""

from enum import IntEnum
from typing import List, Optional, Sequence, Tuple

from sympy import Matrix

from .monomials import IntegerVector, check_length, dot, lex_sign, sub, unit_vector
from ..exceptions import TermOrderError


class Ordering(IntEnum):
    """Result of comparing two exponent vectors."""

    LESS = -1
    EQUAL = 0
    GREATER = 1


def _rank(rows: Sequence[Sequence[int]]) -> int:
    if not rows:
        return 0
    return Matrix([list(r) for r in rows]).rank()


class TermOrderMatrix:
    """
    Matrix representation of a term order.

    x^a is larger than x^b when M·(a−b) is lexicographically positive. The
    supplied rows must have lexicographically positive columns once the
    matrix is completed; completion appends unit rows e_0, e_1, ... that
    raise the rank until it is n.
    """

    __slots__ = ("rows", "n", "supplied")

    def __init__(self, rows: Sequence[Sequence[int]], n: Optional[int] = None):
        """
        Validate and complete a term order matrix.

        Args:
            rows: k×n integer rows, k ≤ n (dependent rows are accepted)
            n: Number of variables; inferred from the rows when omitted

        Raises:
            TermOrderError: A column is not lexicographically positive or the
                matrix cannot be completed to rank n
        """
        supplied = [tuple(int(x) for x in r) for r in rows]
        if n is None:
            if not supplied:
                raise TermOrderError("cannot infer the number of variables from an empty matrix")
            n = len(supplied[0])
        for r in supplied:
            if len(r) != n:
                raise TermOrderError(f"row {r} has length {len(r)}, expected {n}")

        completed = list(supplied)
        rank = _rank(completed)
        for i in range(n):
            if rank == n:
                break
            candidate = completed + [unit_vector(n, i)]
            new_rank = _rank(candidate)
            if new_rank > rank:
                completed, rank = candidate, new_rank

        for j in range(n):
            column = [r[j] for r in completed]
            if lex_sign(column) <= 0:
                first = next((x for x in column if x != 0), 0)
                raise TermOrderError(
                    f"column {j + 1} is not lexicographically positive (first non-zero entry is {first})"
                )
        if rank != n:
            raise TermOrderError(f"matrix has rank {rank} after completion, expected {n}")

        self.rows: Tuple[IntegerVector, ...] = tuple(completed)
        self.n = n
        self.supplied = len(supplied)

    @classmethod
    def lex(cls, priority: Sequence[int], n: Optional[int] = None) -> "TermOrderMatrix":
        """Lexicographic order; priority lists variable indices from largest to smallest."""
        n = n if n is not None else len(priority)
        return cls([unit_vector(n, i) for i in priority], n)

    @classmethod
    def deglex(cls, priority: Sequence[int], n: Optional[int] = None) -> "TermOrderMatrix":
        n = n if n is not None else len(priority)
        return cls([(1,) * n] + [unit_vector(n, i) for i in priority], n)

    @classmethod
    def degrevlex(cls, priority: Sequence[int], n: Optional[int] = None) -> "TermOrderMatrix":
        """Degree reverse lexicographic: ties broken by the smallest power of the last variable."""
        n = n if n is not None else len(priority)
        rows: List[IntegerVector] = [(1,) * n]
        for i in reversed(priority[1:]):
            rows.append(tuple(-x for x in unit_vector(n, i)))
        return cls(rows, n)

    def with_weight(self, omega: Sequence[int]) -> "TermOrderMatrix":
        """The order ≺_ω: compare by ⟨ω,·⟩ first and break ties with this order."""
        check_length(omega, self.rows[0])
        rows: List[IntegerVector] = []
        for r in [tuple(omega)] + list(self.rows):
            # a row dependent on earlier rows never decides a comparison
            if _rank(rows + [r]) > len(rows):
                rows.append(r)
        return TermOrderMatrix(rows, self.n)

    def key(self, a: Sequence[int]) -> Tuple[int, ...]:
        """Sort key: the image M·a, compared lexicographically."""
        return tuple(dot(r, a) for r in self.rows)

    def sign(self, v: Sequence[int]) -> int:
        """Lexicographic sign of M·v."""
        check_length(v, self.rows[0])
        for r in self.rows:
            s = dot(r, v)
            if s:
                return 1 if s > 0 else -1
        return 0

    def __eq__(self, other: object) -> bool:
        return isinstance(other, TermOrderMatrix) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"TermOrderMatrix({[list(r) for r in self.rows]})"


def compare_exponents(M: TermOrderMatrix, a: Sequence[int], b: Sequence[int]) -> Ordering:
    """
    Compare two exponent vectors under a term order.

    Args:
        M: Term order matrix of rank n
        a: First vector (signed entries allowed)
        b: Second vector

    Returns:
        Ordering of x^a relative to x^b

    Raises:
        ValueError: If the lengths differ from each other or from n
    """
    check_length(a, b)
    check_length(a, M.rows[0])
    return Ordering(M.sign(sub(a, b)))
