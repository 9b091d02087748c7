"""Exact simplex method over Q with Bland's anti-cycling rule.

Problems have the form  max c·x  subject to  A x ≤ b  with x free. The
solver works on a dictionary whose rows express basic variables in terms of
non-basic ones: slack s_i = b_i − A_i·x starts basic and the free variables
start non-basic. Free variables are pivoted into the basis first and never
leave it, so the dictionary has m rows and n (+1 auxiliary) columns.
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from ..utils.logger import get_logger
from ..utils.metrics import get_stats_collector

logger = get_logger(__name__)


class LPStatus(str, Enum):
    OPTIMAL = "Optimal"
    INFEASIBLE = "Infeasible"
    UNBOUNDED = "Unbounded"


@dataclass(frozen=True)
class LPResult:
    """Outcome of a linear program; point and objective are set only when optimal."""

    status: LPStatus
    point: Optional[Tuple[Fraction, ...]] = None
    objective: Optional[Fraction] = None

    @property
    def is_optimal(self) -> bool:
        return self.status is LPStatus.OPTIMAL


class SimplexSolver:
    """Dictionary simplex for max c·x s.t. Ax ≤ b, x free."""

    def __init__(self, A: Sequence[Sequence], b: Sequence, c: Sequence):
        """
        Initialize the solver.

        Args:
            A: m×n constraint matrix over Q
            b: Right-hand side of length m
            c: Objective of length n

        Raises:
            ValueError: On dimension mismatch
        """
        self.n = len(c)
        self.m = len(A)
        if len(b) != self.m:
            raise ValueError(f"dimension mismatch: A has {self.m} rows, b has {len(b)} entries")
        for i, row in enumerate(A):
            if len(row) != self.n:
                raise ValueError(f"dimension mismatch: row {i} of A has {len(row)} entries, c has {self.n}")

        self.A = [[Fraction(x) for x in row] for row in A]
        self.b = [Fraction(x) for x in b]
        self.c = [Fraction(x) for x in c]

        # variable ids: x_j -> j, slack s_i -> n + i, auxiliary -> n + m
        self.aux = self.n + self.m
        self.basic: List[int] = [self.n + i for i in range(self.m)]
        self.nonbasic: List[int] = list(range(self.n))
        self.beta: List[Fraction] = list(self.b)
        self.rows: List[List[Fraction]] = [[-x for x in row] for row in self.A]
        self.obj: List[Fraction] = [Fraction(0)] * self.n
        self.obj0 = Fraction(0)

    def _is_free(self, var: int) -> bool:
        return var < self.n

    def _pivot(self, r: int, k: int) -> None:
        """Exchange basic variable of row r with non-basic variable of column k."""
        row = self.rows[r]
        a = row[k]
        new_beta = -self.beta[r] / a
        new_row = [-x / a for x in row]
        new_row[k] = 1 / a

        for i, other in enumerate(self.rows):
            if i == r:
                continue
            f = other[k]
            if not f:
                continue
            self.beta[i] += f * new_beta
            for j, v in enumerate(new_row):
                if j == k:
                    other[j] = f * v
                elif v:
                    other[j] += f * v

        f = self.obj[k]
        if f:
            self.obj0 += f * new_beta
            for j, v in enumerate(new_row):
                if j == k:
                    self.obj[j] = f * v
                elif v:
                    self.obj[j] += f * v

        self.rows[r] = new_row
        self.beta[r] = new_beta
        self.basic[r], self.nonbasic[k] = self.nonbasic[k], self.basic[r]

    def _constrained_rows(self) -> List[int]:
        return [i for i, v in enumerate(self.basic) if not self._is_free(v)]

    def _iterate(self) -> LPStatus:
        """Bland's rule primal simplex on the current (feasible) dictionary."""
        while True:
            candidates = [
                (self.nonbasic[k], k) for k, v in enumerate(self.obj)
                if v > 0 and not self._is_free(self.nonbasic[k])
            ]
            if not candidates:
                return LPStatus.OPTIMAL
            _, k = min(candidates)

            best = None
            for i in self._constrained_rows():
                coef = self.rows[i][k]
                if coef < 0:
                    entry = (self.beta[i] / -coef, self.basic[i], i)
                    if best is None or entry < best:
                        best = entry
            if best is None:
                return LPStatus.UNBOUNDED
            self._pivot(best[2], k)

    def _enter_free_variables(self) -> None:
        for k in range(len(self.nonbasic)):
            if not self._is_free(self.nonbasic[k]):
                continue
            r = next(
                (i for i in self._constrained_rows() if self.rows[i][k] != 0),
                None,
            )
            if r is not None:
                self._pivot(r, k)

    def _phase_one(self) -> bool:
        """Reach a feasible dictionary; False when the constraints are infeasible."""
        constrained = self._constrained_rows()
        if all(self.beta[i] >= 0 for i in constrained):
            return True

        for i, row in enumerate(self.rows):
            row.append(Fraction(1) if i in constrained else Fraction(0))
        self.nonbasic.append(self.aux)
        self.obj = [Fraction(0)] * (len(self.nonbasic) - 1) + [Fraction(-1)]
        self.obj0 = Fraction(0)
        k_aux = len(self.nonbasic) - 1

        _, _, r = min((self.beta[i], self.basic[i], i) for i in constrained)
        self._pivot(r, k_aux)
        self._iterate()

        if self.obj0 < 0:
            return False

        if self.aux in self.basic:
            r = self.basic.index(self.aux)
            k = next(
                (k for k, v in sorted(enumerate(self.nonbasic), key=lambda kv: kv[1])
                 if self.rows[r][k] != 0),
                None,
            )
            if k is None:
                del self.rows[r], self.beta[r], self.basic[r]
            else:
                self._pivot(r, k)

        k_aux = self.nonbasic.index(self.aux)
        for row in self.rows:
            del row[k_aux]
        del self.nonbasic[k_aux]
        return True

    def _install_objective(self) -> None:
        self.obj = [Fraction(0)] * len(self.nonbasic)
        self.obj0 = Fraction(0)
        position = {v: k for k, v in enumerate(self.nonbasic)}
        for j, cj in enumerate(self.c):
            if not cj:
                continue
            if j in position:
                self.obj[position[j]] += cj
            else:
                r = self.basic.index(j)
                self.obj0 += cj * self.beta[r]
                for k, v in enumerate(self.rows[r]):
                    if v:
                        self.obj[k] += cj * v

    def _point(self) -> Tuple[Fraction, ...]:
        x = [Fraction(0)] * self.n
        for i, v in enumerate(self.basic):
            if self._is_free(v):
                x[v] = self.beta[i]
        return tuple(x)

    def _verify(self, x: Sequence[Fraction]) -> None:
        for i, row in enumerate(self.A):
            if sum(a * v for a, v in zip(row, x)) > self.b[i]:
                raise RuntimeError(f"simplex returned a point violating constraint {i}")

    def solve(self) -> LPResult:
        """
        Solve the linear program exactly.

        Returns:
            LPResult with status, and the optimal vertex and value when optimal
        """
        get_stats_collector().record_lp()
        self._enter_free_variables()

        if not self._phase_one():
            return LPResult(LPStatus.INFEASIBLE)

        self._install_objective()
        for k, v in enumerate(self.nonbasic):
            if self._is_free(v) and self.obj[k] != 0:
                return LPResult(LPStatus.UNBOUNDED)

        status = self._iterate()
        if status is LPStatus.UNBOUNDED:
            return LPResult(LPStatus.UNBOUNDED)

        x = self._point()
        self._verify(x)
        return LPResult(LPStatus.OPTIMAL, x, self.obj0)


def lp_solve(A: Sequence[Sequence], b: Sequence, c: Sequence, sense: str = "max") -> LPResult:
    """
    Solve max (or min) c·x subject to Ax ≤ b exactly.

    Args:
        A: m×n matrix over Q
        b: Right-hand side
        c: Objective vector
        sense: "max" or "min"

    Returns:
        LPResult
    """
    if sense not in ("max", "min"):
        raise ValueError(f"unknown sense: {sense}")
    objective = [Fraction(x) for x in c]
    if sense == "min":
        objective = [-x for x in objective]
    result = SimplexSolver(A, b, objective).solve()
    if sense == "min" and result.is_optimal:
        return LPResult(result.status, result.point, -result.objective)
    return result
