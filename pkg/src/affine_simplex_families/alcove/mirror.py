"""
Mirrors and simplices in exact rational coordinates.

A simplex is stored as n+1 facet mirrors with outward signs and is realized
inside the linear span V of its normals; when the ambient space is larger
(the A_n and G2 models) vertices are pinned to V by extra equations.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Sequence, Tuple

from ..errors import RankDeficient, UnboundedCell, ZeroMirror
from ..exact import RationalMatrix, determinant, kernel_vector, nullspace, primitive, rank, solve
from ..roots.angle import dot

Point = Tuple[Fraction, ...]


@dataclass(frozen=True, order=True)
class Mirror:
    """Hyperplane (normal, x) = offset, with a primitive integer normal.

    The normal has content 1 and a positive first nonzero coordinate, so
    every hyperplane has exactly one representation.
    """

    normal: Tuple[int, ...]
    offset: Fraction

    @classmethod
    def through(cls, normal: Sequence, offset) -> Tuple["Mirror", int]:
        """Normalize (normal, x) = offset.

        Returns:
            The mirror and +1 or -1: the sign relating the given normal to the
            stored one.
        """
        if not any(Fraction(x) for x in normal):
            raise ZeroMirror("a mirror needs a nonzero normal")
        coords, factor = primitive(normal)
        sign = 1 if factor > 0 else -1
        return cls(coords, Fraction(offset) / factor), sign

    def value(self, point: Sequence[Fraction]) -> Fraction:
        """(normal, point) - offset."""
        return dot(self.normal, point) - self.offset

    def reflect_point(self, point: Sequence[Fraction]) -> Point:
        coefficient = 2 * self.value(point) / sum(x * x for x in self.normal)
        return tuple(Fraction(p) - coefficient * a for p, a in zip(point, self.normal))

    def reflect(self, other: "Mirror") -> "Mirror":
        """Image of another mirror under the reflection in this one."""
        norm = sum(x * x for x in self.normal)
        cross = sum(a * b for a, b in zip(self.normal, other.normal))
        coefficient = Fraction(2 * cross, norm)
        image = [a - coefficient * f for a, f in zip(other.normal, self.normal)]
        mirror, _ = Mirror.through(image, other.offset - coefficient * self.offset)
        return mirror


@dataclass(frozen=True)
class Simplex:
    """Compact simplex {x in V : (s_i * normal_i, x) <= s_i * offset_i}.

    Args:
        facets: The n+1 facet mirrors.
        signs: s_i = +1 or -1 so that s_i * normal_i points outward.
        vertices: vertices[i] is the vertex opposite facet i.
    """

    facets: Tuple[Mirror, ...]
    signs: Tuple[int, ...]
    vertices: Tuple[Point, ...]

    @classmethod
    def from_facets(cls, normals: Sequence[Sequence], offsets: Sequence) -> "Simplex":
        """Simplex {x in V : (normals[i], x) <= offsets[i]}, V the span of the normals.

        Raises:
            RankDeficient: If some n of the normals are dependent.
            UnboundedCell: If the inequalities do not cut out a bounded simplex.
        """
        if len(normals) != len(offsets) or len(normals) < 2:
            raise ValueError("need n+1 >= 2 normals, one offset each")
        normals = [tuple(Fraction(x) for x in n) for n in normals]
        offsets = [Fraction(c) for c in offsets]
        size = len(normals)
        matrix = RationalMatrix.from_columns(normals)
        dependency = kernel_vector(matrix)
        if any(x == 0 for x in dependency):
            raise RankDeficient("some n of the normals are linearly dependent")
        if len({x > 0 for x in dependency}) != 1:
            raise UnboundedCell("the normals do not positively span their space")
        complement = nullspace(RationalMatrix.from_rows(normals))
        vertices = []
        for i in range(size):
            rows = [normals[j] for j in range(size) if j != i] + list(complement)
            rhs = [offsets[j] for j in range(size) if j != i] + [Fraction(0)] * len(complement)
            vertex = solve(RationalMatrix.from_rows(rows), rhs)
            if dot(normals[i], vertex) >= offsets[i]:
                raise UnboundedCell("the inequalities define an empty or unbounded cell")
            vertices.append(vertex)
        facets, signs = [], []
        for n, c in zip(normals, offsets):
            mirror, sign = Mirror.through(n, c)
            facets.append(mirror)
            signs.append(sign)
        return cls(tuple(facets), tuple(signs), tuple(vertices))

    @classmethod
    def from_family(cls, f) -> "Simplex":
        """Compact representative of a family: outward normals f_i, offsets 1."""
        return cls.from_facets([v.coords for v in f.vectors], [1] * len(f.vectors))

    @property
    def dimension(self) -> int:
        return len(self.facets) - 1

    @property
    def ambient_dim(self) -> int:
        return len(self.facets[0].normal)

    @cached_property
    def outward_normals(self) -> Tuple[Tuple[int, ...], ...]:
        return tuple(tuple(s * x for x in m.normal) for m, s in zip(self.facets, self.signs))

    @cached_property
    def barycenter(self) -> Point:
        count = len(self.vertices)
        return tuple(sum(column, Fraction(0)) / count for column in zip(*self.vertices))

    @cached_property
    def radius_sq(self) -> Fraction:
        """Squared distance from the barycenter to the farthest vertex."""
        center = self.barycenter
        return max(sum((a - b) ** 2 for a, b in zip(v, center)) for v in self.vertices)

    def contains(self, point: Sequence[Fraction], strict: bool = True) -> bool:
        for m, s in zip(self.facets, self.signs):
            value = s * m.value(point)
            if value > 0 or (strict and value == 0):
                return False
        return True

    def edge_gram_determinant(self) -> Fraction:
        """det of the Gram matrix of the edges v_i - v_0: (n! * volume)^2."""
        origin = self.vertices[0]
        edges = [tuple(a - b for a, b in zip(v, origin)) for v in self.vertices[1:]]
        gram = RationalMatrix.from_rows([[dot(e, f) for f in edges] for e in edges])
        return determinant(gram)

    def span_rank(self) -> int:
        return rank(RationalMatrix.from_rows(self.outward_normals))
