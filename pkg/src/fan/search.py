"""
Reverse search over the Gröbner fan.

The graph of full-dimensional Gröbner cones is oriented by shooting a ray
from a strictly positive interior point σ of the current cone towards a
symbolically perturbed interior point of the sink cone (the cone of the
target order). The first facet hit is the search edge; the sink has none.
Reverse search walks these edges backwards from the sink and needs no
record of visited cones.
"""

from fractions import Fraction
from typing import Iterator, List, Optional, Sequence

from ..algebra import IdealInput, MarkedBasis, TermOrderMatrix, buchberger
from ..algebra.monomials import IntegerVector, dot, unit_vector
from ..lp import strictly_feasible
from ..utils.logger import get_logger
from ..utils.metrics import get_stats_collector
from .facets import FacetNormal, facet_normals, raw_inequalities
from .flip import flip

logger = get_logger(__name__)


def _hits_first(
    target: TermOrderMatrix,
    sigma: Sequence[Fraction],
    a: IntegerVector,
    b: IntegerVector,
) -> bool:
    """True when the shooting segment crosses ⟨a,·⟩ = 0 before ⟨b,·⟩ = 0."""
    sa, sb = dot(sigma, a), dot(sigma, b)
    v = [sb * x - sa * y for x, y in zip(a, b)]
    return target.sign(v) < 0


def search_edge(G: MarkedBasis, target: TermOrderMatrix) -> Optional[FacetNormal]:
    """
    The outgoing search edge of G towards the cone of `target`.

    Args:
        G: Marked reduced Gröbner basis
        target: Term order of full rank defining the sink

    Returns:
        The flippable facet crossed first, or None when G is the sink
    """
    get_stats_collector().record_shoot()
    inequalities = raw_inequalities(G)
    candidates = [a for a in inequalities if target.sign(a) < 0]
    if not candidates:
        return None

    strict = inequalities + [unit_vector(G.n, i) for i in range(G.n)]
    sigma = strictly_feasible([], strict, n=G.n)
    if sigma is None:
        raise ValueError("the cone of the basis has no strictly positive interior point")

    best = candidates[0]
    for a in candidates[1:]:
        if _hits_first(target, sigma, a, best):
            best = a
    return FacetNormal(best, True)


def _ingoing(G: MarkedBasis, target: TermOrderMatrix) -> List[IntegerVector]:
    return [
        f.alpha for f in facet_normals(G, only_flippable=True)
        if target.sign(f.alpha) > 0
    ]


def reverse_search(ideal: IdealInput, target: TermOrderMatrix) -> Iterator[MarkedBasis]:
    """
    Stream every marked reduced Gröbner basis of the ideal exactly once.

    The traversal is a depth-first search of the search-edge tree rooted at
    the sink buchberger(ideal, target); only the current path is stored.

    Args:
        ideal: Generators of the ideal
        target: Term order of the sink

    Yields:
        Marked reduced Gröbner bases, the sink first
    """
    sink = buchberger(ideal.generators, target)
    logger.info(f"Sink basis found with {len(sink)} elements")
    yield sink
    if sink.is_unit():
        logger.warning("The ideal is the unit ideal; its fan is a single cone")
        return

    stack = [(sink, iter(_ingoing(sink, target)))]
    while stack:
        G, edges = stack[-1]
        for alpha in edges:
            u = flip(G, alpha, check_flippable=False)
            edge = search_edge(u, target)
            if edge is not None and edge.alpha == tuple(-x for x in alpha):
                yield u
                stack.append((u, iter(_ingoing(u, target))))
                break
        else:
            stack.pop()
        logger.debug(f"Reverse search depth {len(stack)}")


def walk_to_sink(
    G: MarkedBasis, target: TermOrderMatrix, max_steps: Optional[int] = None
) -> List[MarkedBasis]:
    """
    Follow search edges from G to the sink.

    Returns:
        The visited bases, G first and the sink last

    Raises:
        RuntimeError: If max_steps flips do not reach the sink
    """
    path = [G]
    while True:
        edge = search_edge(path[-1], target)
        if edge is None:
            return path
        if max_steps is not None and len(path) > max_steps:
            raise RuntimeError(f"no sink reached after {max_steps} flips")
        path.append(flip(path[-1], edge.alpha, check_flippable=False))
