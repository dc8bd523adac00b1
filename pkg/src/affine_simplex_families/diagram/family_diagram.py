"""
Family diagrams and generalized Coxeter diagrams.

Both are complete graphs on the facets of a simplex. A family diagram records
only the angle class k of each pair of normal lines (k = 2 pairs are drawn as
no edge); a generalized Coxeter diagram also records the numerator m of the
dihedral angle pi*m/k, which depends on the signs of the outward normals.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Tuple

from ..roots import PROPORTIONAL, AngleClass, RootVector, angle_class, vector_angle_class


@dataclass(frozen=True)
class FamilyDiagram:
    """Angle classes of a family, k per unordered pair; 0 on the diagonal."""

    size: int
    k: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        k = tuple(tuple(int(x) for x in row) for row in self.k)
        if len(k) != self.size or any(len(row) != self.size for row in k):
            raise ValueError(f"angle matrix is not {self.size}x{self.size}")
        for i in range(self.size):
            if k[i][i] != 0:
                raise ValueError("family diagrams are loop-free")
            for j in range(i + 1, self.size):
                if k[i][j] != k[j][i]:
                    raise ValueError(f"angle matrix is not symmetric at ({i}, {j})")
                if k[i][j] not in (2, 3, 4, 6):
                    raise ValueError(f"k={k[i][j]} is not an angle class")
        object.__setattr__(self, "k", k)

    @classmethod
    def from_edges(cls, size: int, edges: Iterable[Tuple[int, int, int]]) -> "FamilyDiagram":
        """Build from (i, j, k) triples; absent pairs get k = 2."""
        matrix = [[0 if i == j else 2 for j in range(size)] for i in range(size)]
        for i, j, k in edges:
            matrix[i][j] = matrix[j][i] = k
        return cls(size, tuple(tuple(row) for row in matrix))

    @property
    def edges(self) -> Tuple[Tuple[int, int, int], ...]:
        """(i, j, k) for every pair with k >= 3, i < j."""
        return tuple(
            (i, j, self.k[i][j])
            for i in range(self.size)
            for j in range(i + 1, self.size)
            if self.k[i][j] > 2
        )

    def permuted(self, order: Sequence[int]) -> "FamilyDiagram":
        """Diagram whose node p is node order[p] of this one."""
        return FamilyDiagram(
            self.size, tuple(tuple(self.k[a][b] for b in order) for a in order)
        )

    def degree(self, node: int) -> int:
        return sum(1 for j in range(self.size) if j != node and self.k[node][j] > 2)


@dataclass(frozen=True)
class GenCoxeterDiagram:
    """Dihedral angle class pi*m/k of every pair of facets; None on the diagonal."""

    size: int
    angles: Tuple[Tuple[Optional[AngleClass], ...], ...]

    def __post_init__(self):
        if len(self.angles) != self.size or any(len(row) != self.size for row in self.angles):
            raise ValueError(f"angle grid is not {self.size}x{self.size}")
        for i in range(self.size):
            if self.angles[i][i] is not None:
                raise ValueError("generalized Coxeter diagrams are loop-free")
            for j in range(i + 1, self.size):
                if self.angles[i][j] != self.angles[j][i]:
                    raise ValueError(f"angle grid is not symmetric at ({i}, {j})")

    @property
    def edges(self) -> Tuple[Tuple[int, int, AngleClass], ...]:
        """(i, j, angle) for every pair with k >= 3, i < j."""
        result = []
        for i in range(self.size):
            for j in range(i + 1, self.size):
                angle = self.angles[i][j]
                if angle is not None and angle.k > 2:
                    result.append((i, j, angle))
        return tuple(result)

    @property
    def is_coxeter(self) -> bool:
        """True when every dihedral angle is pi/k."""
        return all(angle.m == 1 for _, _, angle in self.edges)

    def family_diagram(self) -> FamilyDiagram:
        return FamilyDiagram(
            self.size,
            tuple(
                tuple(0 if a is None else a.k for a in row) for row in self.angles
            ),
        )


def diagram_from_vectors(vectors: Sequence[RootVector]) -> FamilyDiagram:
    """Family diagram of a list of pairwise non-proportional root vectors."""
    size = len(vectors)
    matrix = [[0] * size for _ in range(size)]
    for i in range(size):
        for j in range(i + 1, size):
            cls = angle_class(vectors[i], vectors[j])
            if cls is PROPORTIONAL:
                raise ValueError(f"vectors {i} and {j} span the same line")
            matrix[i][j] = matrix[j][i] = cls.k
    return FamilyDiagram(size, tuple(tuple(row) for row in matrix))


def family_diagram(f) -> FamilyDiagram:
    """Family diagram of a Family (anything with a vectors attribute)."""
    return diagram_from_vectors(f.vectors)


def gen_coxeter_from_normals(normals: Sequence[Sequence[Fraction]]) -> GenCoxeterDiagram:
    """Generalized Coxeter diagram from the outward facet normals of a simplex.

    The dihedral angle between facets i and j is pi minus the angle between
    their outward normals.

    Raises:
        NonCrystallographicAngle: If some dihedral angle is not pi*m/k with
            k in {2, 3, 4, 6}.
    """
    size = len(normals)
    grid = [[None] * size for _ in range(size)]
    for i in range(size):
        for j in range(i + 1, size):
            cls = vector_angle_class(normals[i], normals[j])
            if cls is PROPORTIONAL:
                raise ValueError(f"facets {i} and {j} are parallel")
            grid[i][j] = grid[j][i] = cls.as_dihedral()
    return GenCoxeterDiagram(size, tuple(tuple(row) for row in grid))


def gen_coxeter_diagram(s) -> GenCoxeterDiagram:
    """Generalized Coxeter diagram of a Simplex (anything with outward_normals)."""
    return gen_coxeter_from_normals(s.outward_normals)
