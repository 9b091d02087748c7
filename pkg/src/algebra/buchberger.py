"""Buchberger's algorithm producing marked reduced Gröbner bases."""

from typing import Callable, Iterable, List, Optional, Set, Tuple

from .division import autoreduce, normal_form, s_polynomial
from .marked import MarkedBasis, MarkedPolynomial
from .monomials import ExponentVector, add, divides, grlex_key, lcm
from .polynomial import Polynomial, initial_term
from .term_order import TermOrderMatrix
from ..config import get_config
from ..utils.logger import get_logger
from ..utils.metrics import get_stats_collector

logger = get_logger(__name__)

LeadingRule = Callable[[Polynomial], ExponentVector]


def unit_basis(n: int) -> MarkedBasis:
    """The basis {1} of the unit ideal, marked at the zero exponent."""
    zero = (0,) * n
    return MarkedBasis([MarkedPolynomial(Polynomial.constant(1, n), zero)], n)


def _chain_skips(
    pair: Tuple[int, int],
    G: List[MarkedPolynomial],
    pending: Set[Tuple[int, int]],
    m: ExponentVector,
) -> bool:
    """Buchberger's chain criterion for the pair (i, j) with lcm m."""
    i, j = pair
    for k, g in enumerate(G):
        if k in (i, j) or not divides(g.marked, m):
            continue
        if (min(i, k), max(i, k)) not in pending and (min(j, k), max(j, k)) not in pending:
            return True
    return False


def buchberger_with_rule(
    generators: Iterable[Polynomial],
    leading: LeadingRule,
    chain_criterion: Optional[bool] = None,
    step_limit: Optional[int] = None,
) -> MarkedBasis:
    """
    Buchberger's algorithm for an arbitrary rule picking leading exponents.

    Pairs are selected by the normal strategy (smallest lcm in the internal
    canonical order, ties by index); pairs with coprime marked terms are
    skipped, and the chain criterion is applied when enabled.

    Args:
        generators: Input polynomials; zero polynomials are dropped
        leading: Returns the exponent to mark for a non-zero polynomial
        chain_criterion: Apply the chain criterion (config default)
        step_limit: Reduction step guard

    Returns:
        Marked reduced Gröbner basis

    Raises:
        ValueError: If every generator is zero
    """
    polys = [f for f in generators if not f.is_zero()]
    if not polys:
        raise ValueError("the generator list is empty or all generators are zero")
    n = polys[0].n
    if chain_criterion is None:
        chain_criterion = get_config().algebra.chain_criterion

    get_stats_collector().record_buchberger()

    G: List[MarkedPolynomial] = []
    for f in polys:
        if len(f) == 1 and not any(next(f.exponents())):
            return unit_basis(n)
        G.append(MarkedPolynomial(f, leading(f)))

    pending: Set[Tuple[int, int]] = {(i, j) for j in range(len(G)) for i in range(j)}
    reductions = 0

    while pending:
        pair = min(pending, key=lambda p: (grlex_key(lcm(G[p[0]].marked, G[p[1]].marked)), p))
        pending.remove(pair)
        gi, gj = G[pair[0]], G[pair[1]]
        m = lcm(gi.marked, gj.marked)

        if m == add(gi.marked, gj.marked):
            continue
        if chain_criterion and _chain_skips(pair, G, pending, m):
            continue

        r = normal_form(s_polynomial(gi, gj), G, step_limit)
        reductions += 1
        if r.is_zero():
            continue
        if len(r) == 1 and not any(next(r.exponents())):
            logger.debug("Buchberger reached a non-zero constant; the ideal is the unit ideal")
            return unit_basis(n)

        G.append(MarkedPolynomial(r, leading(r)))
        new = len(G) - 1
        pending.update((i, new) for i in range(new))

    logger.debug(f"Buchberger finished after {reductions} S-pair reductions with {len(G)} elements")
    return autoreduce(G, step_limit)


def buchberger(
    generators: Iterable[Polynomial],
    M: TermOrderMatrix,
    chain_criterion: Optional[bool] = None,
    step_limit: Optional[int] = None,
) -> MarkedBasis:
    """
    Marked reduced Gröbner basis of the ideal generated by `generators`.

    Args:
        generators: Input polynomials, not all zero
        M: Term order whose initial terms are marked
        chain_criterion: Apply the chain criterion (config default)
        step_limit: Reduction step guard

    Returns:
        G_≺(I) with marked coefficients 1; {1} for the unit ideal
    """
    return buchberger_with_rule(
        generators,
        lambda f: initial_term(M, f).exponent,
        chain_criterion=chain_criterion,
        step_limit=step_limit,
    )
