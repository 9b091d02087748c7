"""Marked reduction: normal forms, S-polynomials and autoreduction."""

from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Union

from .marked import MarkedBasis, MarkedPolynomial
from .monomials import ExponentVector, add, divides, grlex_key, lcm, sub
from .polynomial import Polynomial
from ..config import get_config
from ..exceptions import IncoherentMarkingError

Reducers = Union[MarkedBasis, Sequence[MarkedPolynomial]]


def _step_limit(step_limit: Optional[int]) -> int:
    return step_limit if step_limit is not None else get_config().algebra.reduction_step_limit


def normal_form(f: Polynomial, G: Reducers, step_limit: Optional[int] = None) -> Polynomial:
    """
    Reduce f modulo a set of marked polynomials.

    The largest remaining term (in the internal canonical order) is examined
    first and reduced by the first element, in basis order, whose marked
    exponent divides it. For a coherent marking the result is independent of
    these choices when G is a marked Gröbner basis.

    Args:
        f: Polynomial to reduce
        G: Marked reducers, assumed coherently marked
        step_limit: Maximal number of reduction steps (config default 2^20)

    Returns:
        Remainder with no term divisible by a marked exponent of G

    Raises:
        IncoherentMarkingError: If the step limit is exceeded
    """
    reducers: List[MarkedPolynomial] = list(G)
    limit = _step_limit(step_limit)
    pending: Dict[ExponentVector, Fraction] = dict(f.items())
    remainder: Dict[ExponentVector, Fraction] = {}
    steps = 0

    while pending:
        e = max(pending, key=grlex_key)
        c = pending.pop(e)
        reducer = next((g for g in reducers if divides(g.marked, e)), None)
        if reducer is None:
            total = remainder.get(e, 0) + c
            if total:
                remainder[e] = total
            else:
                remainder.pop(e, None)
            continue

        steps += 1
        if steps > limit:
            raise IncoherentMarkingError(
                f"marked reduction exceeded {limit} steps; the marking is not coherent"
            )
        q = sub(e, reducer.marked)
        for e2, c2 in reducer.body.items():
            if e2 == reducer.marked:
                continue
            target = add(e2, q)
            value = pending.get(target, 0) - c * c2
            if value:
                pending[target] = value
            else:
                pending.pop(target, None)

    return Polynomial._raw(remainder, f.n)


def s_polynomial(g1: MarkedPolynomial, g2: MarkedPolynomial) -> Polynomial:
    """
    S-polynomial (lcm/m1)·g1 − (lcm/m2)·g2 of two marked polynomials.

    Args:
        g1: First marked polynomial (marked coefficient 1)
        g2: Second marked polynomial (marked coefficient 1)

    Returns:
        The S-polynomial; the marked terms cancel
    """
    m = lcm(g1.marked, g2.marked)
    return g1.body.shift(sub(m, g1.marked)) - g2.body.shift(sub(m, g2.marked))


def _remark(g: MarkedPolynomial, r: Polynomial) -> Optional[MarkedPolynomial]:
    """Keep the marking of g on its reduced form r, or mark a lone surviving term."""
    if r.is_zero():
        return None
    if g.marked in r:
        return MarkedPolynomial(r, g.marked)
    if len(r) == 1:
        return MarkedPolynomial(r, next(r.exponents()))
    raise IncoherentMarkingError(
        f"reducing the element marked {g.marked} removed its marked term; "
        "the marked exponents do not generate the same monomial ideal"
    )


def autoreduce(G: Iterable[MarkedPolynomial], step_limit: Optional[int] = None) -> MarkedBasis:
    """
    Inter-reduce a coherently marked set into a marked reduced basis.

    Elements whose marked exponent is divisible by another marked exponent
    are reduced by the rest and dropped when they vanish. Tails are then
    reduced and marked coefficients scaled to 1.

    Args:
        G: Marked polynomials (all in the same ring, at least one)
        step_limit: Reduction step guard forwarded to normal_form

    Returns:
        MarkedBasis satisfying the reducedness invariant

    Raises:
        IncoherentMarkingError: If reduction does not terminate or a marking is lost
    """
    current = [g for g in G if not g.body.is_zero()]
    if not current:
        raise ValueError("cannot autoreduce an empty set")
    n = current[0].n

    while True:
        current.sort(key=lambda g: grlex_key(g.marked))
        redundant = next(
            (
                i for i, g in enumerate(current)
                if any(j != i and divides(h.marked, g.marked) and (h.marked != g.marked or j < i)
                       for j, h in enumerate(current))
            ),
            None,
        )
        if redundant is None:
            break
        g = current.pop(redundant)
        replacement = _remark(g, normal_form(g.body, current, step_limit))
        if replacement is not None:
            current.append(replacement)

    reduced = []
    for g in current:
        tail = g.body - Polynomial.monomial(g.marked, g.body.coefficient(g.marked))
        tail = normal_form(tail, current, step_limit)
        body = tail + Polynomial.monomial(g.marked, g.body.coefficient(g.marked))
        reduced.append(MarkedPolynomial(body, g.marked))

    return MarkedBasis(reduced, n)
