"""
Polyhedral cones {x : ⟨e,x⟩ = 0, ⟨a,x⟩ ≥ 0} in exact arithmetic.

Every LP question is reduced to `strictly_feasible`, which maximizes an
auxiliary variable t subject to ⟨a,x⟩ ≥ t over the strict rows and t ≤ 1.
"""

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .linalg import echelon, nullspace, rank, reduce_modulo
from .simplex import lp_solve
from ..algebra.monomials import (
    IntegerVector,
    dot,
    is_zero,
    normalize_equation,
    primitive,
    primitive_rational,
    unit_vector,
)
from ..utils.logger import get_logger

logger = get_logger(__name__)

ConeKey = Tuple[Tuple[IntegerVector, ...], Tuple[IntegerVector, ...]]


def _dedupe(vectors: Iterable[IntegerVector]) -> Tuple[IntegerVector, ...]:
    seen: Dict[IntegerVector, None] = {}
    for v in vectors:
        seen.setdefault(v, None)
    return tuple(seen)


@dataclass(frozen=True)
class Cone:
    """
    A polyhedral cone in R^n.

    Vectors are stored primitive and deduplicated; equations additionally
    have a positive first non-zero entry. A cone produced by `canonicalize`
    has `canonical=True` and its `key()` identifies it exactly.
    """

    n: int
    equations: Tuple[IntegerVector, ...] = field(default_factory=tuple)
    inequalities: Tuple[IntegerVector, ...] = field(default_factory=tuple)
    canonical: bool = False

    def __post_init__(self):
        for v in tuple(self.equations) + tuple(self.inequalities):
            if len(v) != self.n:
                raise ValueError(f"dimension mismatch: vector of length {len(v)} in R^{self.n}")
        if not self.canonical:
            eqs = _dedupe(normalize_equation(tuple(v)) for v in self.equations if not is_zero(v))
            ineqs = _dedupe(primitive(tuple(v)) for v in self.inequalities if not is_zero(v))
            object.__setattr__(self, "equations", eqs)
            object.__setattr__(self, "inequalities", ineqs)

    @classmethod
    def full_space(cls, n: int) -> "Cone":
        return cls(n, (), (), canonical=True)

    def key(self) -> ConeKey:
        return (self.equations, self.inequalities)

    @property
    def dimension(self) -> int:
        return cone_dimension(self)

    def contains(self, point: Sequence) -> bool:
        """Exact membership test."""
        return all(dot(e, point) == 0 for e in self.equations) and all(
            dot(a, point) >= 0 for a in self.inequalities
        )

    def intersect(self, other: "Cone") -> "Cone":
        if other.n != self.n:
            raise ValueError(f"dimension mismatch: R^{self.n} and R^{other.n}")
        return Cone(
            self.n,
            self.equations + other.equations,
            self.inequalities + other.inequalities,
        )

    def permuted(self, pi: Sequence[int]) -> "Cone":
        """Image under the coordinate permutation x'[pi[i]] = x[i]."""

        def move(v: IntegerVector) -> IntegerVector:
            out = [0] * self.n
            for i, x in enumerate(v):
                out[pi[i]] = x
            return tuple(out)

        return Cone(
            self.n,
            tuple(move(e) for e in self.equations),
            tuple(move(a) for a in self.inequalities),
        )


def strictly_feasible(
    eqs: Sequence[IntegerVector],
    strict: Sequence[IntegerVector],
    weak: Sequence[IntegerVector] = (),
    n: Optional[int] = None,
) -> Optional[Tuple[Fraction, ...]]:
    """
    Find x with ⟨e,x⟩ = 0 for eqs, ⟨a,x⟩ > 0 for strict and ⟨b,x⟩ ≥ 0 for weak.

    Args:
        eqs: Equation normals
        strict: Rows that must be strictly positive
        weak: Rows that must be non-negative
        n: Ambient dimension, needed only when every list is empty

    Returns:
        A rational point, or None when no such point exists
    """
    vectors = list(eqs) + list(strict) + list(weak)
    if n is None:
        if not vectors:
            raise ValueError("ambient dimension is unknown for an empty system")
        n = len(vectors[0])
    for v in vectors:
        if len(v) != n:
            raise ValueError(f"dimension mismatch: vector of length {len(v)} in R^{n}")

    # variables (x_1..x_n, t); every row is written as row·(x,t) ≤ rhs
    A: List[List[int]] = []
    b: List[int] = []
    for a in strict:
        A.append([-x for x in a] + [1])
        b.append(0)
    for a in weak:
        A.append([-x for x in a] + [0])
        b.append(0)
    for e in eqs:
        A.append(list(e) + [0])
        A.append([-x for x in e] + [0])
        b.extend((0, 0))
    A.append([0] * n + [1])
    b.append(1)

    result = lp_solve(A, b, [0] * n + [1])
    if not result.is_optimal or result.objective <= 0:
        return None
    return result.point[:n]


def _reduce_system(
    n: int, eqs: Sequence[IntegerVector], ineqs: Sequence[IntegerVector]
) -> Tuple[Tuple[IntegerVector, ...], List[IntegerVector]]:
    """Echelonize the equations and reduce inequalities modulo their pivots."""
    reduced, pivots = echelon(eqs, n) if eqs else ([], ())
    eq_rows = tuple(normalize_equation(primitive_rational(r)) for r in reduced)
    out: Dict[IntegerVector, None] = {}
    for a in ineqs:
        v = primitive_rational(reduce_modulo(a, reduced, pivots)) if reduced else primitive(a)
        if not is_zero(v):
            out.setdefault(v, None)
    return eq_rows, sorted(out)


def canonicalize(C: Cone) -> Cone:
    """
    Canonical form of a cone.

    Implied equalities move to the equations, the equations are brought to
    reduced row-echelon form with primitive integer rows, and the remaining
    inequalities are reduced modulo the equations and pruned to irredundant
    facet normals.
    """
    if C.canonical:
        return C
    n = C.n
    eqs, ineqs = _reduce_system(n, C.equations, C.inequalities)

    if ineqs and strictly_feasible(eqs, ineqs, n=n) is None:
        implied = [
            a for a in ineqs
            if strictly_feasible(eqs, [a], [b for b in ineqs if b != a], n=n) is None
        ]
        eqs, ineqs = _reduce_system(
            n, list(eqs) + implied, [a for a in ineqs if a not in implied]
        )

    kept = list(ineqs)
    for a in ineqs:
        others = [b for b in kept if b != a]
        if strictly_feasible(eqs, [tuple(-x for x in a)], others, n=n) is None:
            kept.remove(a)

    return Cone(n, eqs, tuple(kept), canonical=True)


def cone_dimension(C: Cone) -> int:
    """n minus the rank of the equations of the canonical form."""
    C = canonicalize(C)
    return C.n - len(C.equations)


def relative_interior_point(C: Cone, positive: bool = False) -> Tuple[Fraction, ...]:
    """
    A point in the relative interior of C.

    Args:
        C: Cone (canonicalized on the fly)
        positive: Additionally require every coordinate to be strictly positive

    Returns:
        Rational point; the origin when C is a single point

    Raises:
        ValueError: If positive is requested and C misses the open positive orthant
    """
    C = canonicalize(C)
    if len(C.equations) == C.n and not positive:
        logger.warning("Cone is the single point {0}; returning the origin")
        return tuple(Fraction(0) for _ in range(C.n))
    strict = list(C.inequalities)
    if positive:
        strict += [unit_vector(C.n, i) for i in range(C.n)]
    point = strictly_feasible(C.equations, strict, n=C.n)
    if point is None:
        raise ValueError("cone has no strictly positive relative interior point")
    return point


def lineality_space(C: Cone) -> List[IntegerVector]:
    """Basis of the largest linear subspace contained in C."""
    C = canonicalize(C)
    return nullspace(list(C.equations) + list(C.inequalities), C.n)


def facet_of(C: Cone, a: IntegerVector) -> Cone:
    """The face of a canonical cone where the inequality a holds with equality."""
    return canonicalize(
        Cone(C.n, C.equations + (a,), tuple(b for b in C.inequalities if b != a))
    )


class FaceEnumerator:
    """
    Breadth-first face enumeration with a memo shared across cones.

    Faces are keyed by their canonical form, so enumerating the faces of many
    cones of one fan computes the facets of every common face once.
    """

    def __init__(self):
        self.faces: Dict[ConeKey, Cone] = {}
        self._facets: Dict[ConeKey, Tuple[ConeKey, ...]] = {}

    def add(self, C: Cone) -> List[Cone]:
        """Register all faces of C and return them."""
        root = canonicalize(C)
        root = self.faces.setdefault(root.key(), root)
        found: Dict[ConeKey, Cone] = {root.key(): root}
        queue = deque([root])
        while queue:
            F = queue.popleft()
            for key in self._facet_keys(F):
                if key not in found:
                    found[key] = self.faces[key]
                    queue.append(found[key])
        return list(found.values())

    def _facet_keys(self, F: Cone) -> Tuple[ConeKey, ...]:
        if F.key() not in self._facets:
            keys = []
            for a in F.inequalities:
                G = facet_of(F, a)
                self.faces.setdefault(G.key(), G)
                keys.append(G.key())
            self._facets[F.key()] = tuple(keys)
        return self._facets[F.key()]

    def count_by_dimension(self) -> Dict[int, int]:
        counts: Dict[int, int] = {}
        for F in self.faces.values():
            d = F.n - len(F.equations)
            counts[d] = counts.get(d, 0) + 1
        return counts


def faces_all(C: Cone) -> List[Cone]:
    """All non-empty faces of C, each canonical, including C itself."""
    return FaceEnumerator().add(C)


def homogeneity_space(diffs: Sequence[IntegerVector], n: Optional[int] = None) -> Tuple[List[IntegerVector], int]:
    """
    The subspace {ω : ⟨ω,d⟩ = 0 for all d}.

    Returns:
        (primitive integer basis, dimension h)
    """
    if n is None:
        if not diffs:
            raise ValueError("ambient dimension is unknown for an empty difference list")
        n = len(diffs[0])
    rows = [d for d in diffs if not is_zero(d)]
    if not rows:
        return [unit_vector(n, i) for i in range(n)], n
    basis = nullspace(rows, n)
    return basis, n - rank(rows, n)


def extreme_rays(C: Cone) -> List[IntegerVector]:
    """
    Extreme rays of C modulo its lineality space.

    Each ray is the primitive integer point of a face of dimension
    lineality + 1 that is orthogonal to the lineality space.
    """
    C = canonicalize(C)
    lineality = lineality_space(C)
    target = len(lineality) + 1
    rays = set()
    for F in faces_all(C):
        if F.n - len(F.equations) != target:
            continue
        ray = Cone(F.n, F.equations + tuple(lineality), F.inequalities)
        rays.add(primitive_rational(relative_interior_point(ray)))
    return sorted(rays)
