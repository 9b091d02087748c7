"""Permutation groups acting on the variables of the ring."""

from collections import deque
from typing import Iterable, List, Optional, Sequence, Tuple

from ..algebra import IdealInput, MarkedBasis, TermOrderMatrix, buchberger, normal_form
from ..config import get_config
from ..exceptions import GroupTooLargeError, SymmetryError
from ..utils.logger import get_logger

logger = get_logger(__name__)

Permutation = Tuple[int, ...]


def check_permutation(pi: Sequence[int], n: int) -> Permutation:
    """Validate a 0-based image list of length n."""
    pi = tuple(pi)
    if len(pi) != n:
        raise SymmetryError(f"permutation {list(pi)} has length {len(pi)}, expected {n}")
    if sorted(pi) != list(range(n)):
        raise SymmetryError(f"{list(pi)} is not a bijection of {{0..{n - 1}}}")
    return pi


def compose(p: Permutation, q: Permutation) -> Permutation:
    """p ∘ q: apply q first."""
    return tuple(p[i] for i in q)


def apply_permutation(pi: Sequence[int], G: MarkedBasis) -> MarkedBasis:
    """Rename x_i to x_{pi[i]} in every element, keeping the markings."""
    check_permutation(pi, G.n)
    return G.permuted(pi)


class PermutationGroup:
    """
    A finite permutation group given by generators, expanded eagerly.

    Elements are found by closing the generators under composition, which
    suffices for finite groups.
    """

    def __init__(
        self,
        generators: Iterable[Sequence[int]],
        n: int,
        element_cap: Optional[int] = None,
    ):
        self.n = n
        self.generators: List[Permutation] = [check_permutation(g, n) for g in generators]
        cap = element_cap if element_cap is not None else get_config().fan.group_element_cap

        identity = tuple(range(n))
        seen = {identity}
        queue = deque([identity])
        while queue:
            p = queue.popleft()
            for g in self.generators:
                q = compose(g, p)
                if q not in seen:
                    seen.add(q)
                    if len(seen) > cap:
                        raise GroupTooLargeError(f"the group has more than {cap} elements")
                    queue.append(q)
        self.elements: List[Permutation] = sorted(seen)
        logger.debug(f"Expanded a group of order {len(self.elements)} from {len(self.generators)} generators")

    @classmethod
    def trivial(cls, n: int) -> "PermutationGroup":
        return cls([], n)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, pi: Sequence[int]) -> bool:
        return tuple(pi) in set(self.elements)

    def __repr__(self) -> str:
        return f"PermutationGroup(n={self.n}, order={self.order})"


def validate_symmetry(
    generators: Iterable[Sequence[int]],
    ideal: IdealInput,
    basis: Optional[MarkedBasis] = None,
) -> bool:
    """
    Check π(I) = I for every generator π.

    Each permuted generator of the ideal must reduce to zero modulo a
    Gröbner basis of I. Since π has finite order, π(I) ⊆ I already forces
    equality.
    """
    if basis is None:
        basis = buchberger(ideal.generators, TermOrderMatrix.degrevlex(list(range(ideal.n))))
    for pi in generators:
        pi = check_permutation(pi, ideal.n)
        for f in ideal.generators:
            if not normal_form(f.permuted(pi), basis).is_zero():
                logger.debug(f"Permutation {list(pi)} moves a generator out of the ideal")
                return False
    return True
