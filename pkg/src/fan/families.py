"""
Benchmark ideal families and their variable symmetries.

Variables of matrix families are named `x<i><j>` (1-based row and column),
Plücker coordinates `p<i><j>`.
"""

from itertools import combinations, permutations
from typing import Dict, List, Sequence, Tuple

from ..algebra import IdealInput, Polynomial

Permutation = Tuple[int, ...]


def _variables(names: Sequence[str]) -> Dict[str, Polynomial]:
    n = len(names)
    return {name: Polynomial.variable(i, n) for i, name in enumerate(names)}


def _sign(perm: Sequence[int]) -> int:
    sign = 1
    for i, j in combinations(range(len(perm)), 2):
        if perm[i] > perm[j]:
            sign = -sign
    return sign


def _determinant(matrix: Sequence[Sequence[Polynomial]], n: int) -> Polynomial:
    size = len(matrix)
    total = Polynomial.zero(n)
    for perm in permutations(range(size)):
        term = Polynomial.constant(_sign(perm), n)
        for row, col in enumerate(perm):
            term = term * matrix[row][col]
        total = total + term
    return total


def _minors(matrix: Sequence[Sequence[Polynomial]], t: int, n: int) -> List[Polynomial]:
    found: Dict[Tuple, Polynomial] = {}
    rows, cols = len(matrix), len(matrix[0])
    for r in combinations(range(rows), t):
        for c in combinations(range(cols), t):
            det = _determinant([[matrix[i][j] for j in c] for i in r], n)
            if not det.is_zero():
                det = det.normalized()
                found.setdefault(det.canonical_key(), det)
    return list(found.values())


def cyclic(n: int) -> IdealInput:
    """The cyclic n-roots ideal in x1..xn."""
    if n < 2:
        raise ValueError("cyclic ideals need at least two variables")
    names = tuple(f"x{i}" for i in range(1, n + 1))
    x = [Polynomial.variable(i, n) for i in range(n)]
    gens = []
    for k in range(1, n):
        f = Polynomial.zero(n)
        for i in range(n):
            term = Polynomial.constant(1, n)
            for j in range(k):
                term = term * x[(i + j) % n]
            f = f + term
        gens.append(f)
    product = Polynomial.constant(1, n)
    for v in x:
        product = product * v
    gens.append(product - Polynomial.constant(1, n))
    return IdealInput(names, tuple(gens))


def determinantal(t: int, m: int, n: int) -> IdealInput:
    """The t×t minors of a generic m×n matrix."""
    if not 1 <= t <= min(m, n):
        raise ValueError(f"minor size {t} does not fit a {m}x{n} matrix")
    names = tuple(f"x{i}{j}" for i in range(1, m + 1) for j in range(1, n + 1))
    var = _variables(names)
    matrix = [[var[f"x{i}{j}"] for j in range(1, n + 1)] for i in range(1, m + 1)]
    return IdealInput(names, tuple(_minors(matrix, t, len(names))))


def symmetric_determinantal(t: int, n: int) -> IdealInput:
    """The t×t minors of a generic symmetric n×n matrix (variables x<i><j>, i ≤ j)."""
    if not 1 <= t <= n:
        raise ValueError(f"minor size {t} does not fit a {n}x{n} matrix")
    names = tuple(f"x{i}{j}" for i in range(1, n + 1) for j in range(i, n + 1))
    var = _variables(names)
    matrix = [
        [var[f"x{min(i, j)}{max(i, j)}"] for j in range(1, n + 1)]
        for i in range(1, n + 1)
    ]
    return IdealInput(names, tuple(_minors(matrix, t, len(names))))


def _pluecker_names(n: int) -> Tuple[str, ...]:
    return tuple(f"p{i}{j}" for i, j in combinations(range(1, n + 1), 2))


def grassmannian_2(n: int) -> IdealInput:
    """Plücker ideal of the Grassmannian of 2-planes in n-space (three-term relations)."""
    if n < 4:
        raise ValueError("the Plücker ideal is zero for n < 4")
    names = _pluecker_names(n)
    p = _variables(names)
    gens = []
    for i, j, k, l in combinations(range(1, n + 1), 4):
        gens.append(
            p[f"p{i}{j}"] * p[f"p{k}{l}"]
            - p[f"p{i}{k}"] * p[f"p{j}{l}"]
            + p[f"p{i}{l}"] * p[f"p{j}{k}"]
        )
    return IdealInput(names, tuple(gens))


def grassmannian_2_relabeling(n: int, reflection: bool = False) -> List[Permutation]:
    """
    Permutations of the Plücker coordinates induced by relabeling points.

    The n-cycle i -> i+1 always generates; `reflection` adds i -> n+1-i,
    giving the dihedral group.
    """
    pairs = list(combinations(range(1, n + 1), 2))
    index = {pair: k for k, pair in enumerate(pairs)}

    def induced(point_map) -> Permutation:
        return tuple(index[tuple(sorted((point_map(i), point_map(j))))] for i, j in pairs)

    generators = [induced(lambda i: i % n + 1)]
    if reflection:
        generators.append(induced(lambda i: n + 1 - i))
    return generators


def cyclic_shift(n: int) -> List[Permutation]:
    """x_i -> x_{i+1}, indices modulo n."""
    return [tuple((i + 1) % n for i in range(n))]


def determinantal_relabeling(m: int, n: int) -> List[Permutation]:
    """Row and column permutations of an m×n matrix of variables x<i><j>."""
    cells = [(i, j) for i in range(m) for j in range(n)]
    index = {cell: k for k, cell in enumerate(cells)}

    def induced(row_map, col_map) -> Permutation:
        return tuple(index[(row_map(i), col_map(j))] for i, j in cells)

    def keep(i):
        return i

    generators = []
    if m > 1:
        generators.append(induced(lambda i: (i + 1) % m, keep))
        generators.append(induced(lambda i: {0: 1, 1: 0}.get(i, i), keep))
    if n > 1:
        generators.append(induced(keep, lambda j: (j + 1) % n))
        generators.append(induced(keep, lambda j: {0: 1, 1: 0}.get(j, j)))
    return generators
