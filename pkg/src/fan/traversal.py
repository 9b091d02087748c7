"""Breadth-first traversals of the flip graph, plain and modulo symmetry."""

from collections import deque
from typing import Dict, Iterator, List, Set, Tuple

from ..algebra import IdealInput, MarkedBasis, TermOrderMatrix, buchberger
from ..algebra.monomials import IntegerVector
from ..exceptions import SymmetryError
from ..utils.logger import get_logger
from ..utils.metrics import get_stats_collector
from .facets import facet_normals
from .flip import flip
from .summary import FanSummary, summarize
from .symmetry import PermutationGroup, validate_symmetry

logger = get_logger(__name__)

Edge = Tuple[Tuple, IntegerVector]


def _neighbours(G: MarkedBasis, known: Set[Edge]) -> Iterator[Tuple[IntegerVector, MarkedBasis]]:
    """Flip G across every flippable facet not already known to lead back."""
    for facet in facet_normals(G, only_flippable=True):
        if (G.key(), facet.alpha) in known:
            continue
        H = flip(G, facet.alpha, check_flippable=False)
        known.add((H.key(), facet.opposite))
        yield facet.alpha, H


def iter_bfs(G0: MarkedBasis) -> Iterator[MarkedBasis]:
    """
    Stream the marked reduced bases reachable from G0 by flips, in BFS order.

    A visited set keyed by the canonical serialization of each basis stops
    the traversal from revisiting cones.
    """
    visited: Set[Tuple] = {G0.key()}
    known: Set[Edge] = set()
    queue = deque([G0])
    yield G0
    while queue:
        G = queue.popleft()
        for _, H in _neighbours(G, known):
            if H.key() in visited:
                continue
            visited.add(H.key())
            queue.append(H)
            yield H
    logger.info(f"Breadth-first traversal visited {len(visited)} cones")


def bfs_enumerate(G0: MarkedBasis) -> List[MarkedBasis]:
    """All marked reduced bases of the ideal of G0, in discovery order."""
    return list(iter_bfs(G0))


def orbit_representative(G: MarkedBasis, group: PermutationGroup) -> Tuple[MarkedBasis, int]:
    """
    The canonically smallest basis in the orbit of G and the orbit size.

    Returns:
        (representative, |Γ| / |stabilizer of G|)
    """
    best = G
    stabilizer = 0
    for pi in group.elements:
        image = G.permuted(pi)
        if image == G:
            stabilizer += 1
        if image < best:
            best = image
    return best, group.order // stabilizer


def iter_symmetric_bfs(
    ideal: IdealInput, group: PermutationGroup, order: TermOrderMatrix
) -> Iterator[Tuple[MarkedBasis, int]]:
    """
    Stream orbit representatives of the fan under a symmetry group.

    Raises:
        SymmetryError: If a generator of the group does not fix the ideal
    """
    if group.n != ideal.n:
        raise SymmetryError(f"group acts on {group.n} variables, the ring has {ideal.n}")
    if not validate_symmetry(group.generators, ideal):
        raise SymmetryError("the permutations do not leave the ideal invariant")

    start, size = orbit_representative(buchberger(ideal.generators, order), group)
    seen: Dict[Tuple, int] = {start.key(): size}
    queue = deque([start])
    yield start, size
    while queue:
        G = queue.popleft()
        for facet in facet_normals(G, only_flippable=True):
            rep, size = orbit_representative(flip(G, facet.alpha, check_flippable=False), group)
            if rep.key() in seen:
                continue
            seen[rep.key()] = size
            queue.append(rep)
            yield rep, size
    logger.info(f"Symmetric traversal found {len(seen)} orbits, {sum(seen.values())} cones")


def symmetric_bfs(
    ideal: IdealInput, group: PermutationGroup, order: TermOrderMatrix
) -> FanSummary:
    """Orbit representatives with orbit sizes; the sizes sum to the number of cones."""
    found = list(iter_symmetric_bfs(ideal, group, order))
    return summarize(
        [G for G, _ in found],
        orbit_sizes=[size for _, size in found],
        counters=get_stats_collector().snapshot().to_dict(),
    )


def expand_orbits(
    representatives: List[MarkedBasis], group: PermutationGroup
) -> List[MarkedBasis]:
    """All bases in the orbits of the representatives, deduplicated."""
    found: Dict[Tuple, MarkedBasis] = {}
    for G in representatives:
        for pi in group.elements:
            image = G.permuted(pi)
            found.setdefault(image.key(), image)
    return list(found.values())
