"""
Identify the affine group generated by a simplex from its mirror arrangement.

The facets are closed under mutual reflection inside a ball around the
simplex; the cell of the resulting arrangement around a generic interior
point is the fundamental alcove, whose Coxeter diagram names the group.
"""

import logging
from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import isqrt
from typing import Dict, List, Optional, Sequence, Tuple

from ..diagram import CanonicalKey, FamilyDiagram, canonical_key, gen_coxeter_diagram
from ..errors import BudgetExceeded, NoSpecialVertex, UnboundedCell, UnknownType
from ..reference_data import get_affine_diagram_table
from ..roots import GroupType, LineTable
from ..roots.angle import dot
from ..settings import AlcoveSettings
from .mirror import Mirror, Point, Simplex

logger = logging.getLogger(__name__)

_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)


@dataclass
class MirrorArrangement:
    """Mirrors grouped by direction, offsets sorted.

    Attributes:
        directions: Reflection-closed table of primitive mirror normals.
        offsets: offsets[k] lists the offsets c of mirrors (directions[k], x) = c.
        center: Centre of the bounding ball.
        radius_sq: Squared radius of the bounding ball.
    """

    directions: LineTable
    offsets: Dict[int, List[Fraction]]
    center: Point
    radius_sq: Fraction

    def __len__(self) -> int:
        return sum(len(v) for v in self.offsets.values())

    def mirrors(self) -> List[Mirror]:
        return sorted(
            Mirror(self.directions.vectors[k], c)
            for k, values in self.offsets.items()
            for c in values
        )

    def __contains__(self, mirror: Mirror) -> bool:
        k = self.directions.index.get(mirror.normal)
        if k is None:
            return False
        values = self.offsets.get(k, [])
        i = bisect_left(values, mirror.offset)
        return i < len(values) and values[i] == mirror.offset

    def separating_count(self, p: Sequence[Fraction], q: Sequence[Fraction]) -> int:
        """Number of mirrors strictly between p and q (neither point on a mirror)."""
        count = 0
        for k, values in self.offsets.items():
            a = self.directions.vectors[k]
            lo, hi = sorted((dot(a, p), dot(a, q)))
            count += bisect_left(values, hi) - bisect_right(values, lo)
        return count

    def on_mirror(self, point: Sequence[Fraction]) -> bool:
        for k, values in self.offsets.items():
            t = dot(self.directions.vectors[k], point)
            i = bisect_left(values, t)
            if i < len(values) and values[i] == t:
                return True
        return False


def _inside_ball(direction: Sequence[int], norm: int, offset: Fraction, center, radius_sq) -> bool:
    distance = dot(direction, center) - offset
    return distance * distance <= radius_sq * norm


def mirror_closure(s: Simplex, settings: Optional[AlcoveSettings] = None) -> MirrorArrangement:
    """Mirrors generated by the facets of s, restricted to a ball around s.

    The ball is centred at the barycenter with radius ball_factor times the
    distance to the farthest vertex.

    Raises:
        BudgetExceeded: If the directions or the mirrors exceed the settings'
            budgets (the group is not discrete).
    """
    settings = settings or AlcoveSettings()
    directions = LineTable.from_normals(
        [m.normal for m in s.facets], budget=settings.max_directions
    )
    center = s.barycenter
    radius_sq = settings.ball_factor * settings.ball_factor * s.radius_sq
    norms = directions.norms
    found: Dict[Tuple[int, Fraction], None] = {}
    queue: List[Tuple[int, Fraction]] = []
    for m in s.facets:
        item = (directions.index[m.normal], m.offset)
        if item not in found:
            found[item] = None
            queue.append(item)

    def image(mirror: Tuple[int, Fraction], other: Tuple[int, Fraction]) -> Tuple[int, Fraction]:
        i, d = mirror
        j, c = other
        coefficient = Fraction(2 * directions.gram[i][j], norms[i])
        factor = directions.reflection_factor[i][j]
        return directions.reflection[i][j], (c - coefficient * d) / factor

    while queue:
        current = queue.pop()
        for other in list(found):
            for new in (image(other, current), image(current, other)):
                if new in found:
                    continue
                k, c = new
                if not _inside_ball(directions.vectors[k], norms[k], c, center, radius_sq):
                    continue
                found[new] = None
                queue.append(new)
                if len(found) > settings.max_mirrors:
                    raise BudgetExceeded(
                        f"more than {settings.max_mirrors} mirrors near the simplex; "
                        "the generated group is not discrete"
                    )
    offsets: Dict[int, List[Fraction]] = {}
    for k, c in found:
        offsets.setdefault(k, []).append(c)
    for values in offsets.values():
        values.sort()
    logger.debug(
        "Closed %d facets to %d mirrors in %d directions", len(s.facets), len(found), len(offsets)
    )
    return MirrorArrangement(directions, offsets, center, radius_sq)


def seed_point(s: Simplex, arrangement: MirrorArrangement) -> Point:
    """A deterministic point strictly inside s and on no mirror."""
    center = s.barycenter
    size = len(s.vertices)
    for shift in range(len(_PRIMES) - size + 1):
        weights = [Fraction(1, p) for p in _PRIMES[shift : shift + size]]
        direction = [
            sum((w * (v[axis] - center[axis]) for w, v in zip(weights, s.vertices)), Fraction(0))
            for axis in range(len(center))
        ]
        delta = Fraction(1, 4)
        for _ in range(40):
            point = tuple(c + delta * d for c, d in zip(center, direction))
            if s.contains(point) and not arrangement.on_mirror(point):
                return point
            delta /= 2
    raise UnboundedCell("no generic interior point found")


def fundamental_alcove(arrangement: MirrorArrangement, seed: Sequence[Fraction]) -> Simplex:
    """The cell of the arrangement containing seed, as a simplex.

    A nearest mirror in some direction is a wall of the cell exactly when the
    reflection of seed in it is separated from seed by that mirror alone.

    Raises:
        UnboundedCell: If the walls found do not bound a simplex.
    """
    if arrangement.on_mirror(seed):
        raise ValueError("the seed lies on a mirror")
    normals: List[Tuple[int, ...]] = []
    offsets: List[Fraction] = []
    for k in sorted(arrangement.offsets):
        values = arrangement.offsets[k]
        a = arrangement.directions.vectors[k]
        t = dot(a, seed)
        i = bisect_left(values, t)
        candidates = []
        if i > 0:
            candidates.append((tuple(-x for x in a), -values[i - 1], values[i - 1]))
        if i < len(values):
            candidates.append((a, values[i], values[i]))
        for normal, bound, c in candidates:
            reflected = Mirror(a, c).reflect_point(seed)
            if arrangement.separating_count(seed, reflected) == 1:
                normals.append(normal)
                offsets.append(bound)
    if not normals:
        raise UnboundedCell("the seed cell has no walls")
    try:
        alcove = Simplex.from_facets(normals, offsets)
    except (UnboundedCell, ValueError) as e:
        raise UnboundedCell(f"the seed cell with {len(normals)} walls is not a simplex: {e}") from e
    if not alcove.contains(seed):
        raise UnboundedCell("the seed is not inside the computed cell")
    logger.debug("Alcove with %d walls", len(normals))
    return alcove


@lru_cache(maxsize=None)
def _affine_keys() -> Dict[CanonicalKey, GroupType]:
    table = {}
    for label, entry in get_affine_diagram_table().items():
        diagram = FamilyDiagram.from_edges(entry["nodes"], [tuple(e) for e in entry["edges"]])
        table[canonical_key(diagram)] = GroupType.parse(label)
    return table


def lookup_coxeter_diagram(diagram: FamilyDiagram) -> GroupType:
    """Affine type with the given Coxeter diagram.

    Raises:
        UnknownType: If the diagram is not in the reference table.
    """
    key = canonical_key(diagram)
    found = _affine_keys().get(key)
    if found is None:
        raise UnknownType(f"no affine Coxeter diagram with key {key}")
    return found


@dataclass(frozen=True)
class Identification:
    """Result of running the oracle on one simplex."""

    group: GroupType
    alcove: Simplex
    arrangement: MirrorArrangement
    seed: Point


def identify(s: Simplex, settings: Optional[AlcoveSettings] = None) -> Identification:
    """Closure, alcove and diagram lookup in one pass."""
    gen_coxeter_diagram(s)
    arrangement = mirror_closure(s, settings)
    seed = seed_point(s, arrangement)
    alcove = fundamental_alcove(arrangement, seed)
    diagram = gen_coxeter_diagram(alcove)
    if not diagram.is_coxeter:
        raise UnboundedCell("the seed cell has a dihedral angle other than pi/k")
    group = lookup_coxeter_diagram(diagram.family_diagram())
    logger.info("Identified simplex as %s (%d mirrors)", group.label, len(arrangement))
    return Identification(group, alcove, arrangement, seed)


def identify_group(s: Simplex, settings: Optional[AlcoveSettings] = None) -> GroupType:
    """Affine Weyl group generated by reflections in the facets of s."""
    return identify(s, settings).group


def special_vertex(s: Simplex) -> int:
    """Index of a vertex whose n facets generate the full finite Weyl group.

    Raises:
        NoSpecialVertex: If no vertex qualifies.
    """
    table = LineTable.from_normals([m.normal for m in s.facets])
    lines = [table.index[m.normal] for m in s.facets]
    for vertex in range(len(s.vertices)):
        through = [line for i, line in enumerate(lines) if i != vertex]
        if table.generates_all(through):
            return vertex
    raise NoSpecialVertex("no vertex of the simplex is special")


def parallel_interior_mirrors(s: Simplex, arrangement: MirrorArrangement) -> List[Mirror]:
    """Mirrors crossing the interior of s that are parallel to one of its facets."""
    facet_directions = {arrangement.directions.index[m.normal] for m in s.facets}
    result = []
    for k in sorted(facet_directions):
        a = arrangement.directions.vectors[k]
        values = [dot(a, v) for v in s.vertices]
        lo, hi = min(values), max(values)
        for c in arrangement.offsets.get(k, []):
            if lo < c < hi:
                result.append(Mirror(a, c))
    return result


def alcove_index(s: Simplex, alcove: Simplex) -> int:
    """Number of alcoves in s: the ratio of the two volumes.

    Raises:
        ValueError: If the ratio is not a positive integer.
    """
    ratio = s.edge_gram_determinant() / alcove.edge_gram_determinant()
    if ratio.denominator != 1:
        raise ValueError(f"volume ratio squared {ratio} is not an integer")
    value = ratio.numerator
    root = isqrt(value) if value > 0 else 0
    if root > 0 and root * root == value:
        return root
    raise ValueError(f"volume ratio squared {value} is not a perfect square")
