"""
Families of simplices and the partial bases the search builds them from.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import FrozenSet, Iterable, Tuple

from ..diagram import CanonicalKey, FamilyDiagram, diagram_from_vectors, minimal_code
from ..errors import RankDeficient
from ..exact import RationalMatrix, integer_rank, kernel_vector, primitive
from ..roots import GroupType, RootSystem, RootVector
from ..roots.angle import DIGIT_BY_K


@dataclass(frozen=True)
class Family:
    """One similarity class of Euclidean simplices.

    Vectors are stored in a canonical order (the one realizing the canonical
    key) with signs chosen so that the dependency is strictly positive: they
    are the outward facet normals of the compact representative.

    Args:
        target: Affine group generated by the family.
        vectors: The n+1 signed normals.
        canonical_key: Key of the family diagram.
        dependency: Primitive positive integer lambda with sum lambda_i f_i = 0.
    """

    target: GroupType
    vectors: Tuple[RootVector, ...]
    canonical_key: CanonicalKey
    dependency: Tuple[int, ...]

    def __post_init__(self):
        if len(self.vectors) != len(self.dependency):
            raise ValueError("one dependency coefficient per vector is required")
        if any(x <= 0 for x in self.dependency):
            raise ValueError("the dependency must be strictly positive")

    @classmethod
    def from_vectors(cls, target: GroupType, vectors: Iterable[RootVector]) -> "Family":
        """Normalize n+1 root vectors (any signs, any order) into a Family.

        Raises:
            RankDeficient: If some n of the vectors are dependent.
        """
        lines = sorted({v.line() for v in vectors})
        if len(lines) < 2:
            raise RankDeficient("a family needs at least two lines")
        dim = integer_rank([v.coords for v in lines])
        if dim != len(lines) - 1:
            raise RankDeficient(f"{len(lines)} lines span a space of dimension {dim}")
        digits = [
            [0 if i == j else DIGIT_BY_K[k] for j, k in enumerate(row)]
            for i, row in enumerate(diagram_from_vectors(lines).k)
        ]
        code, order = minimal_code(digits)
        ordered = [lines[i] for i in order]
        dependency = kernel_vector(RationalMatrix.from_columns([v.coords for v in ordered]))
        if any(x == 0 for x in dependency):
            raise RankDeficient("some n of the vectors are linearly dependent")
        signed = tuple(v if x > 0 else -v for v, x in zip(ordered, dependency))
        lam, _ = primitive([abs(x) for x in dependency])
        return cls(target, signed, CanonicalKey(len(lines), code), lam)

    @property
    def rank(self) -> int:
        return len(self.vectors) - 1

    @cached_property
    def lines(self) -> FrozenSet[Tuple[int, ...]]:
        return frozenset(v.line().coords for v in self.vectors)

    @cached_property
    def diagram(self) -> FamilyDiagram:
        return diagram_from_vectors(self.vectors)

    @property
    def scale(self) -> int:
        return self.vectors[0].scale

    def lambda_fractions(self) -> Tuple[Fraction, ...]:
        return tuple(Fraction(x) for x in self.dependency)


@dataclass(frozen=True)
class CandidateBasis:
    """A partial set of independent root lines, kept as sorted line indices."""

    ambient: RootSystem
    chosen: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "chosen", tuple(sorted(self.chosen)))
        if len(set(self.chosen)) != len(self.chosen):
            raise ValueError("a candidate basis lists a line twice")

    @property
    def vectors(self) -> Tuple[RootVector, ...]:
        table = self.ambient.line_table
        return tuple(RootVector(table.vectors[i], self.ambient.scale) for i in self.chosen)

    @property
    def is_complete(self) -> bool:
        return len(self.chosen) == self.ambient.rank

    def __len__(self) -> int:
        return len(self.chosen)
