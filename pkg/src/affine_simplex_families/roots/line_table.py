"""
Indexed root lines with precomputed Gram, angle and reflection tables.

The search and the closure computations work on line indices rather than
vectors; this table is the bridge. Two flavours exist:
- from_root_system: the lines of a root system, each kept as its
  sign-canonical root vector;
- from_normals: the closure of arbitrary rational normals under reflection,
  each line kept as its primitive integer vector (used by the alcove oracle).
"""

import logging
from fractions import Fraction
from typing import Callable, Dict, List, Sequence, Tuple

from ..errors import BudgetExceeded
from ..exact import primitive
from .angle import PROPORTIONAL, classify_angle

logger = logging.getLogger(__name__)

Coords = Tuple[int, ...]
Normalizer = Callable[[Sequence[Fraction]], Tuple[Coords, Fraction]]


def _sign_normalize(vector: Sequence[Fraction]) -> Tuple[Coords, Fraction]:
    if any(x.denominator != 1 for x in vector):
        raise ValueError(f"root image {vector} is not integral")
    ints = tuple(int(x) for x in vector)
    lead = next(x for x in ints if x)
    if lead > 0:
        return ints, Fraction(1)
    return tuple(-x for x in ints), Fraction(-1)


def _reflect(mirror: Coords, mirror_norm: int, v: Coords) -> List[Fraction]:
    coefficient = Fraction(2 * sum(a * b for a, b in zip(mirror, v)), mirror_norm)
    return [x - coefficient * a for x, a in zip(v, mirror)]


class LineTable:
    """Lines of a reflection-closed set of directions.

    Attributes:
        vectors: Representative integer vector of each line, in index order.
        index: Map from representative coordinates to line index.
        gram: Integer dot products of the representatives.
        norms: gram diagonal.
        reflection: reflection[i][j] is the index of the image of line j under
            the reflection in line i.
        reflection_factor: Image of vectors[j] equals reflection_factor[i][j]
            times vectors[reflection[i][j]].
        digits: Angle-class digit (k=2,3,4,6 -> 0,1,2,3) between two lines; -1 on
            the diagonal.
    """

    def __init__(self, vectors: Sequence[Coords], normalizer: Normalizer):
        self.vectors: Tuple[Coords, ...] = tuple(tuple(v) for v in vectors)
        self.index: Dict[Coords, int] = {v: i for i, v in enumerate(self.vectors)}
        size = len(self.vectors)
        self.gram: Tuple[Tuple[int, ...], ...] = tuple(
            tuple(sum(a * b for a, b in zip(u, v)) for v in self.vectors) for u in self.vectors
        )
        self.norms: Tuple[int, ...] = tuple(self.gram[i][i] for i in range(size))
        reflection: List[List[int]] = []
        factors: List[List[Fraction]] = []
        for i, mirror in enumerate(self.vectors):
            row: List[int] = []
            row_factors: List[Fraction] = []
            for j, v in enumerate(self.vectors):
                if self.gram[i][j] == 0:
                    row.append(j)
                    row_factors.append(Fraction(1))
                    continue
                coords, factor = normalizer(_reflect(mirror, self.norms[i], v))
                row.append(self.index[coords])
                row_factors.append(factor)
            reflection.append(row)
            factors.append(row_factors)
        self.reflection: Tuple[Tuple[int, ...], ...] = tuple(tuple(r) for r in reflection)
        self.reflection_factor: Tuple[Tuple[Fraction, ...], ...] = tuple(
            tuple(r) for r in factors
        )
        digits = []
        for i in range(size):
            row_digits = []
            for j in range(size):
                if i == j:
                    row_digits.append(-1)
                    continue
                cls = classify_angle(
                    Fraction(self.gram[i][j]), Fraction(self.norms[i]), Fraction(self.norms[j])
                )
                if cls is PROPORTIONAL:
                    raise ValueError(f"lines {i} and {j} are proportional")
                row_digits.append(cls.digit)
            digits.append(tuple(row_digits))
        self.digits: Tuple[Tuple[int, ...], ...] = tuple(digits)

    def __len__(self) -> int:
        return len(self.vectors)

    @classmethod
    def from_root_system(cls, root_system) -> "LineTable":
        return cls([line.coords for line in root_system.lines], _sign_normalize)

    @classmethod
    def from_normals(cls, normals: Sequence[Sequence], budget: int = 512) -> "LineTable":
        """Close rational normals under mutual reflection, one primitive vector per line.

        Raises:
            BudgetExceeded: If more than budget lines appear (the generated
                linear group is infinite or too large).
        """

        def normalize(vector: Sequence[Fraction]) -> Tuple[Coords, Fraction]:
            return primitive(vector)

        found: Dict[Coords, None] = {}
        queue: List[Coords] = []
        for n in normals:
            line, _ = primitive(n)
            if line not in found:
                found[line] = None
                queue.append(line)
        while queue:
            current = queue.pop()
            current_norm = sum(x * x for x in current)
            for other in list(found):
                other_norm = sum(x * x for x in other)
                for image in (
                    _reflect(other, other_norm, current),
                    _reflect(current, current_norm, other),
                ):
                    line, _ = primitive(image)
                    if line not in found:
                        found[line] = None
                        queue.append(line)
                        if len(found) > budget:
                            raise BudgetExceeded(
                                f"more than {budget} mirror directions; "
                                "the generated group is not a finite reflection group"
                            )
        logger.debug("Closed %d normals to %d directions", len(normals), len(found))
        return cls(sorted(found), normalize)

    def closure(self, members) -> frozenset:
        """Indices of the smallest reflection-closed set of lines containing members."""
        closed = set(members)
        queue = list(closed)
        total = len(self.vectors)
        while queue and len(closed) < total:
            i = queue.pop()
            row_i = self.reflection[i]
            for j in list(closed):
                for k in (row_i[j], self.reflection[j][i]):
                    if k not in closed:
                        closed.add(k)
                        queue.append(k)
        return frozenset(closed)

    def generates_all(self, members) -> bool:
        return len(self.closure(members)) == len(self.vectors)
