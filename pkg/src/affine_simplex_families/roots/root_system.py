"""
Finite crystallographic root systems in exact integer coordinates.

Coordinate models:
- A_n: h_i - h_j in R^(n+1).
- B_n: +-h_i (short) and +-h_i +- h_j (long) in R^n.
- C_n: +-2h_i (long) and +-h_i +- h_j (short) in R^n.
- D_n: +-h_i +- h_j in R^n.
- G2: the sum-zero plane of R^3, short h_i - h_j and long +-(2h_i - h_j - h_k).
- F4, E6, E7, E8: Bourbaki coordinates stored doubled (scale 2).

Every system is produced by closing its simple roots under reflection, and the
root count is checked against the closed form for the type.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import TYPE_CHECKING, Dict, List, Sequence, Tuple

from ..errors import DimensionMismatch, UnsupportedType, ZeroMirror
from ..exact import RationalMatrix, integer_rank, solve
from ..reference_data import get_simple_roots_table
from .angle import AngleResult, classify_angle
from .group_type import GroupType

if TYPE_CHECKING:
    from .line_table import LineTable

logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class RootVector:
    """Integer coordinate vector with a global scale tag.

    The vector represented is coords / scale.

    Args:
        coords: Integer coordinates in the ambient space.
        scale: 1, or 2 for the doubled F4/E-series coordinates.
    """

    coords: Tuple[int, ...]
    scale: int = 1

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(int(x) for x in self.coords))
        if self.scale < 1:
            raise ValueError(f"scale must be positive, got {self.scale}")

    def __neg__(self) -> "RootVector":
        return RootVector(tuple(-x for x in self.coords), self.scale)

    def __len__(self) -> int:
        return len(self.coords)

    @property
    def is_zero(self) -> bool:
        return not any(self.coords)

    def raw_dot(self, other: "RootVector") -> int:
        """Dot product of the stored integer coordinates."""
        return sum(a * b for a, b in zip(self.coords, other.coords))

    def line(self) -> "RootVector":
        """Sign-canonical representative of the line {+-v}: first nonzero coordinate positive."""
        for x in self.coords:
            if x:
                return self if x > 0 else -self
        return self

    @property
    def true_coords(self) -> Tuple[Fraction, ...]:
        return tuple(Fraction(x, self.scale) for x in self.coords)

    def __str__(self) -> str:
        body = ",".join(str(x) for x in self.coords)
        return f"({body})" if self.scale == 1 else f"({body})/{self.scale}"


def _check_compatible(u: RootVector, v: RootVector) -> None:
    if len(u.coords) != len(v.coords) or u.scale != v.scale:
        raise DimensionMismatch(
            f"vectors in R^{len(u.coords)} (scale {u.scale}) "
            f"and R^{len(v.coords)} (scale {v.scale})"
        )


def inner(u: RootVector, v: RootVector) -> Fraction:
    """Standard inner product, honouring the scale tag."""
    _check_compatible(u, v)
    return Fraction(u.raw_dot(v), u.scale * u.scale)


def reflect(mirror_root: RootVector, v: RootVector) -> RootVector:
    """Reflect v in the hyperplane orthogonal to mirror_root.

    Raises:
        ZeroMirror: If mirror_root is zero.
        DimensionMismatch: If the vectors live in different spaces.
        ValueError: If the image leaves the integer lattice of stored coordinates.
    """
    if mirror_root.is_zero:
        raise ZeroMirror("cannot reflect in the zero vector")
    _check_compatible(mirror_root, v)
    coefficient = Fraction(2 * mirror_root.raw_dot(v), mirror_root.raw_dot(mirror_root))
    image = [Fraction(x) - coefficient * a for x, a in zip(v.coords, mirror_root.coords)]
    if any(x.denominator != 1 for x in image):
        raise ValueError(f"reflection of {v} in {mirror_root} is not integral")
    return RootVector(tuple(int(x) for x in image), v.scale)


def angle_class(u: RootVector, v: RootVector) -> AngleResult:
    """Angle class of two root vectors; PROPORTIONAL for parallel vectors."""
    _check_compatible(u, v)
    return classify_angle(Fraction(u.raw_dot(v)), Fraction(u.raw_dot(u)), Fraction(v.raw_dot(v)))


@dataclass(frozen=True)
class RootSystem:
    """A finite crystallographic root system.

    Args:
        type: Finite group type.
        ambient_dim: Dimension of the coordinate space.
        roots: All roots, sorted by coordinates.
        simple_roots: Ordered simple roots.
    """

    type: GroupType
    ambient_dim: int
    roots: Tuple[RootVector, ...]
    simple_roots: Tuple[RootVector, ...]

    @property
    def rank(self) -> int:
        return self.type.rank

    @property
    def scale(self) -> int:
        return self.simple_roots[0].scale

    @cached_property
    def root_set(self) -> frozenset:
        return frozenset(self.roots)

    @cached_property
    def lines(self) -> Tuple[RootVector, ...]:
        """One sign-canonical vector per root line, in coordinate order."""
        return tuple(sorted({r.line() for r in self.roots}))

    @cached_property
    def line_table(self) -> "LineTable":
        from .line_table import LineTable

        return LineTable.from_root_system(self)

    def __contains__(self, v: RootVector) -> bool:
        return v in self.root_set

    def simple_coefficients(self, root: RootVector) -> Tuple[Fraction, ...]:
        """Coordinates of a root in the basis of simple roots."""
        gram = RationalMatrix.from_rows(
            [[a.raw_dot(b) for b in self.simple_roots] for a in self.simple_roots]
        )
        return solve(gram, [a.raw_dot(root) for a in self.simple_roots])

    def highest_root(self) -> RootVector:
        """The root of maximal height (sum of simple coefficients)."""
        return max(self.roots, key=lambda r: (sum(self.simple_coefficients(r)), r.coords))


def expected_root_count(t: GroupType) -> int:
    """Closed-form number of roots of a finite type."""
    n = t.rank
    if t.series == "A":
        return n * (n + 1)
    if t.series in "BC":
        return 2 * n * n
    if t.series == "D":
        return 2 * n * (n - 1)
    return {"E6": 72, "E7": 126, "E8": 240, "F4": 48, "G2": 12}[f"{t.series}{n}"]


def _unit(dim: int, index: int, value: int = 1) -> List[int]:
    v = [0] * dim
    v[index] = value
    return v


def simple_roots_for(t: GroupType) -> Tuple[RootVector, ...]:
    """Ordered simple roots of a finite type in its coordinate model."""
    n = t.rank
    if t.series in "ABCD":
        dim = n + 1 if t.series == "A" else n
        chain = n if t.series == "A" else n - 1
        roots = []
        for i in range(chain):
            v = _unit(dim, i)
            v[i + 1] = -1
            roots.append(v)
        if t.series == "B":
            roots.append(_unit(dim, n - 1))
        elif t.series == "C":
            roots.append(_unit(dim, n - 1, 2))
        elif t.series == "D":
            v = _unit(dim, n - 2)
            v[n - 1] = 1
            roots.append(v)
        return tuple(RootVector(tuple(v)) for v in roots)
    table = get_simple_roots_table()
    rows = table.get(t.label)
    if not rows:
        raise UnsupportedType(f"no reference simple roots for {t.label}")
    return tuple(RootVector(coords, scale) for scale, coords in rows)


def close_under_reflection(generators: Sequence[RootVector]) -> List[RootVector]:
    """Smallest set containing generators and their negatives, closed under reflection."""
    found: Dict[RootVector, None] = {}
    queue: List[RootVector] = []
    for g in generators:
        for v in (g, -g):
            if v not in found:
                found[v] = None
                queue.append(v)
    while queue:
        current = queue.pop()
        for mirror in list(found):
            for image in (reflect(mirror, current), reflect(current, mirror)):
                if image not in found:
                    found[image] = None
                    queue.append(image)
    return sorted(found)


@lru_cache(maxsize=None)
def build_root_system(t: GroupType) -> RootSystem:
    """Build the full root system of a finite type.

    Raises:
        UnsupportedType: For affine labels or types without a coordinate model.
    """
    if not isinstance(t, GroupType):
        raise UnsupportedType(f"expected a GroupType, got {t!r}")
    if t.affine:
        raise UnsupportedType(f"{t.label} is affine; root systems are built for finite types")
    simple = simple_roots_for(t)
    if integer_rank([r.coords for r in simple]) != t.rank:
        raise UnsupportedType(f"reference simple roots of {t.label} are dependent")
    roots = close_under_reflection(simple)
    expected = expected_root_count(t)
    if len(roots) != expected:
        raise UnsupportedType(f"{t.label} closed to {len(roots)} roots, expected {expected}")
    logger.debug("Built %s: %d roots in R^%d", t.label, len(roots), len(simple[0]))
    return RootSystem(t, len(simple[0].coords), tuple(roots), simple)
