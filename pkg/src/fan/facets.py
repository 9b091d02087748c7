"""
Gröbner cones of marked bases and their facets.

The cone of a marked reduced basis G is cut out by ⟨u, m − e⟩ ≥ 0 for every
element with marked exponent m and non-marked exponent e. Facet normals are
found among these inequalities: an algebraic pretest discards candidates
cheaply, then an exact LP decides irredundancy.
"""

from dataclasses import dataclass
from typing import List, Optional

from ..algebra import MarkedBasis, MarkedPolynomial, Polynomial, normal_form, s_polynomial
from ..algebra.monomials import IntegerVector, is_zero, primitive, sub, unit_vector
from ..config import PRETEST_MODES, get_config
from ..exceptions import IncoherentMarkingError
from ..lp import Cone, canonicalize, strictly_feasible
from ..utils.logger import get_logger
from ..utils.metrics import get_stats_collector

logger = get_logger(__name__)


@dataclass(frozen=True)
class FacetNormal:
    """Primitive inner normal of a facet of the current Gröbner cone."""

    alpha: IntegerVector
    flippable: bool

    @property
    def opposite(self) -> IntegerVector:
        return tuple(-x for x in self.alpha)


def raw_inequalities(G: MarkedBasis) -> List[IntegerVector]:
    """Primitive, deduplicated exponent differences marked − other, sorted."""
    return sorted({primitive(d) for d in G.differences() if not is_zero(d)})


def cone_of(G: MarkedBasis) -> Cone:
    """
    The closed Gröbner cone of a marked reduced basis, canonicalized.

    Raises:
        IncoherentMarkingError: If the cone is not full-dimensional
    """
    C = canonicalize(Cone(G.n, (), tuple(raw_inequalities(G))))
    if C.equations:
        raise IncoherentMarkingError(
            f"the cone of the marked basis has dimension {G.n - len(C.equations)} < {G.n}; "
            "the marking is not induced by a term order"
        )
    return C


def restrict_initial_forms(G: MarkedBasis, alpha: IntegerVector) -> MarkedBasis:
    """
    Initial forms of G for a weight in the relative interior of the facet α.

    Keeps, in every element, the marked term and the terms whose difference
    from the marked exponent is a positive multiple of α.

    Raises:
        ValueError: If α is not the primitive direction of any exponent difference
    """
    alpha = tuple(alpha)
    if len(alpha) != G.n:
        raise ValueError(f"dimension mismatch: facet normal of length {len(alpha)} in {G.n} variables")
    if is_zero(alpha) or primitive(alpha) != alpha:
        raise ValueError(f"{alpha} is not a primitive non-zero vector")

    restricted = []
    aligned = False
    for g in G:
        keep = {g.marked: g.body.coefficient(g.marked)}
        for e in g.tail_exponents():
            if primitive(sub(g.marked, e)) == alpha:
                keep[e] = g.body.coefficient(e)
                aligned = True
        restricted.append(MarkedPolynomial(Polynomial(keep, G.n), g.marked))
    if not aligned:
        raise ValueError(f"{alpha} is not a facet normal of the cone of the basis")
    return MarkedBasis(restricted, G.n)


def _passes_pretest(G: MarkedBasis, alpha: IntegerVector, mode: str) -> bool:
    """Necessary algebraic condition for α to be a facet normal."""
    H = list(restrict_initial_forms(G, alpha))
    for i in range(len(H)):
        for j in range(i + 1, len(H)):
            if len(H[i].body) == 1 and len(H[j].body) == 1:
                continue
            s = s_polynomial(H[i], H[j])
            if s.is_zero():
                continue
            if mode == "full":
                if not normal_form(s, H).is_zero():
                    return False
            elif not any(G.in_initial_ideal(e) for e in s.exponents()):
                return False
    return True


def facet_normals(
    G: MarkedBasis,
    only_flippable: bool = False,
    pretest: Optional[str] = None,
    positive_orthant: bool = False,
) -> List[FacetNormal]:
    """
    Irredundant facet normals of cone_of(G).

    Args:
        G: Marked reduced Gröbner basis
        only_flippable: Drop facets whose relative interior misses the positive orthant
        pretest: "none", "quick" or "full" (config default)
        positive_orthant: Intersect the cone with the non-negative orthant and
            return the facets not defined by coordinate hyperplanes; these are
            exactly the flippable facets

    Returns:
        Facet normals sorted by α
    """
    pretest = pretest or get_config().fan.facet_pretest
    if pretest not in PRETEST_MODES:
        raise ValueError(f"unknown facet pretest: {pretest}")
    get_stats_collector().record_facets()

    n = G.n
    candidates = raw_inequalities(G)
    if pretest != "none":
        survivors = [a for a in candidates if _passes_pretest(G, a, pretest)]
    else:
        survivors = candidates
    logger.debug(f"Facet candidates: {len(candidates)} raw, {len(survivors)} after {pretest} pretest")

    if positive_orthant:
        units = [unit_vector(n, i) for i in range(n)]
        C = canonicalize(Cone(n, (), tuple(survivors) + tuple(units)))
        return [FacetNormal(a, True) for a in C.inequalities if a not in units]

    facets = []
    for a in survivors:
        others = [b for b in survivors if b != a]
        if strictly_feasible([], [tuple(-x for x in a)], others, n=n) is not None:
            facets.append(a)

    result = []
    for a in facets:
        others = [b for b in facets if b != a]
        positive = [unit_vector(n, i) for i in range(n)]
        flippable = strictly_feasible([a], others + positive, n=n) is not None
        if flippable or not only_flippable:
            result.append(FacetNormal(a, flippable))
    return result


def verify_basis(G: MarkedBasis) -> bool:
    """
    Check that G is a marked Gröbner basis with a coherent positive marking.

    All S-polynomials must reduce to zero and the marking must be induced
    by a strictly positive weight.
    """
    elements = list(G)
    for i in range(len(elements)):
        for j in range(i + 1, len(elements)):
            if not normal_form(s_polynomial(elements[i], elements[j]), elements).is_zero():
                return False
    strict = raw_inequalities(G) + [unit_vector(G.n, i) for i in range(G.n)]
    return strictly_feasible([], strict, n=G.n) is not None
