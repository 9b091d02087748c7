"""Flipping a marked reduced Gröbner basis across a facet of its cone."""

from typing import Optional

from ..algebra import (
    MarkedBasis,
    MarkedPolynomial,
    Polynomial,
    autoreduce,
    buchberger_with_rule,
    normal_form,
)
from ..algebra.monomials import ExponentVector, IntegerVector, dot
from ..exceptions import IncoherentMarkingError
from ..utils.logger import get_logger
from ..utils.metrics import get_stats_collector
from .facets import facet_normals, restrict_initial_forms

logger = get_logger(__name__)


def _leading_along(direction: IntegerVector):
    """Leading rule: the exponent with the largest ⟨direction,·⟩, which must be unique."""

    def leading(f: Polynomial) -> ExponentVector:
        best = max(dot(direction, e) for e in f.exponents())
        tops = [e for e in f.exponents() if dot(direction, e) == best]
        if len(tops) > 1:
            raise IncoherentMarkingError(
                f"exponents {tops[0]} and {tops[1]} tie under {direction}; "
                "the vector is not a facet normal"
            )
        return tops[0]

    return leading


def flip(
    G: MarkedBasis,
    alpha: IntegerVector,
    check_flippable: bool = True,
    step_limit: Optional[int] = None,
) -> MarkedBasis:
    """
    The marked reduced Gröbner basis on the other side of the facet α.

    Args:
        G: Marked reduced Gröbner basis
        alpha: Inner normal of a flippable facet of cone_of(G)
        check_flippable: Verify by LP that α is a flippable facet normal first;
            traversals that take α from facet_normals turn this off
        step_limit: Reduction step guard

    Returns:
        The marked reduced basis whose cone shares the facet; its inner
        normal on that facet is −α

    Raises:
        ValueError: If α is not a (flippable) facet normal
        IncoherentMarkingError: If the initial forms are not aligned with α
    """
    alpha = tuple(alpha)
    if check_flippable and alpha not in {f.alpha for f in facet_normals(G, only_flippable=True)}:
        raise ValueError(f"{alpha} is not a flippable facet normal of the cone of the basis")

    H = restrict_initial_forms(G, alpha)
    opposite = tuple(-x for x in alpha)
    H_new = buchberger_with_rule(H.bodies, _leading_along(opposite), step_limit=step_limit)

    lifted = []
    for h in H_new:
        body = h.body - normal_form(h.body, G, step_limit)
        if h.marked not in body:
            raise IncoherentMarkingError(
                f"lifting the initial form marked {h.marked} lost its marked term"
            )
        lifted.append(MarkedPolynomial(body, h.marked))

    result = autoreduce(lifted, step_limit)
    get_stats_collector().record_flip()
    logger.debug(f"Flipped across {alpha}: {len(G)} -> {len(result)} elements")
    return result
