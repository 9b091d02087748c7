"""Ideal input: declared variables and generating polynomials."""

from dataclasses import dataclass, field
from typing import List, Tuple

from .polynomial import Polynomial


@dataclass(frozen=True)
class IdealInput:
    """Generators of an ideal in Q[variable_names]; zero generators are dropped."""

    variable_names: Tuple[str, ...]
    generators: Tuple[Polynomial, ...] = field(default_factory=tuple)

    def __post_init__(self):
        names = tuple(self.variable_names)
        if not names:
            raise ValueError("an ideal needs at least one variable")
        if len(set(names)) != len(names):
            raise ValueError(f"variable names are not unique: {names}")
        gens = tuple(f for f in self.generators if not f.is_zero())
        for f in gens:
            if f.n != len(names):
                raise ValueError(f"generator in {f.n} variables, ring has {len(names)}")
        if not gens:
            raise ValueError("the generator list is empty or all generators are zero")
        object.__setattr__(self, "variable_names", names)
        object.__setattr__(self, "generators", gens)

    @property
    def n(self) -> int:
        return len(self.variable_names)

    def permuted(self, pi) -> List[Polynomial]:
        return [f.permuted(pi) for f in self.generators]
