"""
Root-subsystem closure and the generation test for Weyl groups.

A set of root lines generates W exactly when the smallest reflection-closed
set of lines containing it is the whole root system. Closure is a work-queue
fixpoint over line indices; the Weyl group itself is never enumerated.
"""

from dataclasses import dataclass
from typing import FrozenSet, Iterable, List, Tuple

from ..errors import UnknownType
from ..exact import integer_rank
from ..roots import GroupType, RootSystem, RootVector, expected_root_count


@dataclass(frozen=True)
class RootSet:
    """A set of root lines inside one root system.

    Args:
        ambient: The root system the lines belong to.
        members: Indices into ambient.line_table.
    """

    ambient: RootSystem
    members: FrozenSet[int]

    def __post_init__(self):
        object.__setattr__(self, "members", frozenset(self.members))
        size = len(self.ambient.line_table)
        if any(not 0 <= i < size for i in self.members):
            raise ValueError("line index outside the ambient root system")

    @classmethod
    def of(cls, ambient: RootSystem, vectors: Iterable[RootVector]) -> "RootSet":
        """Build from root vectors; each is replaced by its line.

        Raises:
            ValueError: If a vector is not a root of the ambient system.
        """
        table = ambient.line_table
        members = set()
        for v in vectors:
            if v not in ambient:
                raise ValueError(f"{v} is not a root of {ambient.type.label}")
            members.add(table.index[v.line().coords])
        return cls(ambient, frozenset(members))

    @property
    def vectors(self) -> Tuple[RootVector, ...]:
        table = self.ambient.line_table
        return tuple(RootVector(table.vectors[i], self.ambient.scale) for i in sorted(self.members))

    @property
    def root_count(self) -> int:
        return 2 * len(self.members)

    def __len__(self) -> int:
        return len(self.members)


def subsystem_closure(s: RootSet) -> RootSet:
    """Least reflection-closed set of lines containing s."""
    if not s.members:
        raise ValueError("closure of an empty root set")
    return RootSet(s.ambient, s.ambient.line_table.closure(s.members))


def generates_full(s: RootSet) -> bool:
    """True iff reflections in s generate the Weyl group of the ambient system."""
    if not s.members:
        raise ValueError("generation test on an empty root set")
    return s.ambient.line_table.generates_all(s.members)


def _components(s: RootSet) -> List[List[int]]:
    gram = s.ambient.line_table.gram
    remaining = set(s.members)
    components = []
    while remaining:
        start = min(remaining)
        remaining.discard(start)
        component, queue = [start], [start]
        while queue:
            i = queue.pop()
            for j in sorted(remaining):
                if gram[i][j]:
                    remaining.discard(j)
                    component.append(j)
                    queue.append(j)
        components.append(sorted(component))
    return components


def _label_component(ambient: RootSystem, component: List[int]) -> GroupType:
    table = ambient.line_table
    rank = integer_rank([table.vectors[i] for i in component])
    roots = 2 * len(component)
    norms = sorted({table.norms[i] for i in component})
    in_bcd = ambient.type.series in "BCD"

    if len(norms) == 1:
        if rank == 1:
            return GroupType("A", 1)
        if rank == 3 and roots == 12:
            return GroupType("D" if in_bcd else "A", 3)
        if roots == rank * (rank + 1):
            return GroupType("A", rank)
        if rank >= 4 and roots == 2 * rank * (rank - 1):
            return GroupType("D", rank)
        if rank in (6, 7, 8) and roots == expected_root_count(GroupType("E", rank)):
            return GroupType("E", rank)
    elif len(norms) == 2:
        short = 2 * sum(1 for i in component if table.norms[i] == norms[0])
        long = roots - short
        ratio = norms[1] // norms[0] if norms[1] % norms[0] == 0 else 0
        if ratio == 3 and rank == 2 and roots == 12:
            return GroupType("G", 2)
        if ratio == 2:
            if rank == 2 and short == 4 and long == 4:
                return GroupType("C" if ambient.type.series == "C" else "B", 2)
            if short == 2 * rank and long == 2 * rank * (rank - 1):
                return GroupType("B", rank)
            if long == 2 * rank and short == 2 * rank * (rank - 1):
                return GroupType("C", rank)
            if rank == 4 and short == 24 and long == 24:
                return GroupType("F", 4)
    raise UnknownType(
        f"component with rank {rank}, {roots} roots and squared lengths {norms} "
        f"matches no crystallographic type"
    )


def subsystem_type(s: RootSet) -> Tuple[GroupType, ...]:
    """Decompose a reflection-closed root set into labelled indecomposable components.

    Returns:
        The component types as a sorted tuple (a multiset).

    Raises:
        UnknownType: If a component matches no crystallographic type.
    """
    return tuple(sorted(_label_component(s.ambient, c) for c in _components(s)))
