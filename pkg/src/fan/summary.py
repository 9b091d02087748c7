"""Fan-level results: f-vector, universal Gröbner basis and degree bounds."""

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from ..algebra import MarkedBasis, Polynomial
from ..lp import FaceEnumerator, homogeneity_space
from ..utils.logger import get_logger
from .facets import cone_of

logger = get_logger(__name__)


@dataclass
class FanSummary:
    """Maximal cones of a Gröbner fan together with derived data."""

    maximal_cones: List[MarkedBasis]
    n: int
    h: int
    orbit_sizes: Optional[List[int]] = None
    f_vector: Optional[List[int]] = None
    universal_basis: Optional[List[Polynomial]] = None
    counters: Dict[str, float] = field(default_factory=dict)
    min_degree: Optional[int] = None
    max_degree: Optional[int] = None
    warnings: List[str] = field(default_factory=list)

    @property
    def cone_count(self) -> int:
        """Number of maximal cones, counting whole orbits when symmetry was used."""
        if self.orbit_sizes is not None:
            return sum(self.orbit_sizes)
        return len(self.maximal_cones)


def homogeneity_dimension(G: MarkedBasis) -> int:
    return homogeneity_space(G.differences(), G.n)[1]


def f_vector(maximal: Sequence[MarkedBasis]) -> List[int]:
    """
    Number of cones of the fan in each dimension from h to n.

    Faces of all maximal cones are enumerated with one shared memo and
    deduplicated by their canonical form.
    """
    if not maximal:
        raise ValueError("the f-vector needs at least one maximal cone")
    enumerator = FaceEnumerator()
    for G in maximal:
        enumerator.add(cone_of(G))
    counts = enumerator.count_by_dimension()
    h, n = min(counts), maximal[0].n
    result = [counts.get(d, 0) for d in range(h, n + 1)]
    logger.info(f"f-vector computed over {len(enumerator.faces)} faces: {result}")
    return result


def euler_characteristic(f: Sequence[int]) -> int:
    """Alternating sum f_h − f_{h+1} + ...; equals (−1)^(n−h) for a complete fan."""
    return sum((-1) ** k * count for k, count in enumerate(f))


def universal_basis(bases: Sequence[MarkedBasis]) -> List[Polynomial]:
    """Union of all basis polynomials with markings stripped, normalized and sorted."""
    found: Dict[Tuple, Polynomial] = {}
    for G in bases:
        for g in G:
            p = g.body.normalized()
            found.setdefault(p.canonical_key(), p)
    return [found[k] for k in sorted(found)]


def basis_degree(G: MarkedBasis) -> int:
    return max(g.body.total_degree() for g in G)


def degree_bounds(bases: Sequence[MarkedBasis]) -> Tuple[int, int]:
    """Lowest and highest degree of a reduced Gröbner basis in the list."""
    if not bases:
        raise ValueError("degree bounds need at least one basis")
    degrees = [basis_degree(G) for G in bases]
    return min(degrees), max(degrees)


def summarize(
    maximal: Sequence[MarkedBasis],
    orbit_sizes: Optional[Sequence[int]] = None,
    all_cones: Optional[Sequence[MarkedBasis]] = None,
    with_f_vector: bool = False,
    with_universal: bool = False,
    counters: Optional[Dict[str, float]] = None,
) -> FanSummary:
    """
    Assemble a FanSummary.

    Args:
        maximal: Maximal cones, or orbit representatives when orbit_sizes is given
        orbit_sizes: Orbit size of each representative
        all_cones: Every maximal cone; needed for the f-vector and the
            universal basis when only representatives are listed
        with_f_vector: Compute the f-vector
        with_universal: Collect the universal Gröbner basis
        counters: Run counters to report

    Returns:
        FanSummary
    """
    maximal = list(maximal)
    everything = list(all_cones) if all_cones is not None else (maximal if orbit_sizes is None else None)
    summary = FanSummary(
        maximal_cones=maximal,
        n=maximal[0].n,
        h=homogeneity_dimension(maximal[0]),
        orbit_sizes=list(orbit_sizes) if orbit_sizes is not None else None,
        counters=dict(counters or {}),
    )
    summary.min_degree, summary.max_degree = degree_bounds(maximal)

    if with_f_vector:
        if everything is None:
            summary.warnings.append("f_vector skipped: only orbit representatives are available")
            logger.warning("f-vector skipped: only orbit representatives are available")
        else:
            summary.f_vector = f_vector(everything)
    if with_universal:
        if everything is None:
            summary.warnings.append("universal_basis skipped: only orbit representatives are available")
            logger.warning("Universal basis skipped: only orbit representatives are available")
        else:
            summary.universal_basis = universal_basis(everything)
    return summary
