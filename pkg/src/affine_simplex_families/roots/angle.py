"""
Angle classes between vectors.

A crystallographic angle is pi*m/k with k in {2, 3, 4, 6}. Cosines are never
formed: the squared cosine (u, v)^2 / ((u, u)(v, v)) is compared against the
four admissible values c/4, c in {0, 1, 2, 3}, in exact arithmetic.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence, Union

from ..errors import NonCrystallographicAngle

# 4 * cos^2 -> k
_K_BY_SQUARED_COSINE = {0: 2, 1: 3, 2: 4, 3: 6}
DIGIT_BY_K = {2: 0, 3: 1, 4: 2, 6: 3}
K_BY_DIGIT = {digit: k for k, digit in DIGIT_BY_K.items()}


@dataclass(frozen=True)
class AngleClass:
    """Angle pi*m/k between two vectors or two facets.

    Args:
        k: Denominator, one of 2, 3, 4, 6.
        obtuse: True when the angle is pi*(k-1)/k rather than pi/k.
        m: Numerator for generalized Coxeter diagrams (1 or k-1 here).
    """

    k: int
    obtuse: bool = False
    m: int = 1

    def __post_init__(self):
        if self.k not in DIGIT_BY_K:
            raise NonCrystallographicAngle(f"k={self.k} is not crystallographic")
        if self.k == 2 and (self.m != 1 or self.obtuse):
            raise ValueError("a right angle has m=1 and is not obtuse")
        if not 0 < self.m < self.k or gcd(self.m, self.k) != 1:
            raise ValueError(f"m={self.m} is not coprime to and below k={self.k}")

    @property
    def digit(self) -> int:
        """Digit used in canonical keys: k=2,3,4,6 -> 0,1,2,3."""
        return DIGIT_BY_K[self.k]

    def as_dihedral(self) -> "AngleClass":
        """Dihedral angle between two facets whose outward normals make this angle.

        The dihedral angle is pi minus the angle between outward normals, so an
        obtuse normal angle pi*(k-1)/k gives the Coxeter angle pi/k (m=1) and an
        acute one gives pi*(k-1)/k.
        """
        if self.k == 2 or self.obtuse:
            return AngleClass(self.k, obtuse=False, m=1)
        return AngleClass(self.k, obtuse=True, m=self.k - 1)


class _Proportional:
    """Marker returned for parallel or antiparallel vectors."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "PROPORTIONAL"


PROPORTIONAL = _Proportional()

AngleResult = Union[AngleClass, _Proportional]


def classify_angle(dot: Fraction, uu: Fraction, vv: Fraction) -> AngleResult:
    """Angle class from the inner product and the two squared lengths.

    Raises:
        NonCrystallographicAngle: If 4*cos^2 is not an integer in 0..4.
    """
    if uu <= 0 or vv <= 0:
        raise ValueError("angle with a zero vector is undefined")
    scaled = Fraction(4 * dot * dot) / (uu * vv)
    if scaled.denominator != 1 or not 0 <= scaled <= 4:
        raise NonCrystallographicAngle(f"4cos^2 = {scaled} is not one of 0, 1, 2, 3, 4")
    c = int(scaled)
    if c == 4:
        return PROPORTIONAL
    k = _K_BY_SQUARED_COSINE[c]
    return AngleClass(k, obtuse=(k != 2 and dot < 0))


def dot(u: Sequence, v: Sequence) -> Fraction:
    return sum((Fraction(a) * b for a, b in zip(u, v)), Fraction(0))


def vector_angle_class(u: Sequence, v: Sequence) -> AngleResult:
    """Angle class between two plain coordinate vectors."""
    if len(u) != len(v):
        raise ValueError(f"vectors of length {len(u)} and {len(v)}")
    return classify_angle(dot(u, v), dot(u, u), dot(v, v))
