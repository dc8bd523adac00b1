"""
Invariants used to merge partial bases during the search.

Two partial bases with different keys are never W-equivalent. Bases with equal
keys are assumed equivalent and only the smallest is kept; the exhaustive
mode of the pipeline exists to check that assumption.
"""

from collections import Counter
from typing import Sequence, Tuple

from ..diagram import minimal_code
from ..gen import RootSet, subsystem_closure, subsystem_type
from ..roots import RootSystem

Profile = Tuple[Tuple[Tuple[int, ...], int], ...]
PartialKey = Tuple[Tuple[int, ...], Tuple[int, ...], Profile, Tuple[str, ...]]


def gram_code(rs: RootSystem, members: Sequence[int]) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """Canonical unsigned Gram form: node colours are the squared lengths."""
    table = rs.line_table
    members = list(members)
    values = [[table.digits[a][b] if a != b else 0 for b in members] for a in members]
    colors = [table.norms[a] for a in members]
    code, _ = minimal_code(values, colors)
    return tuple(sorted(colors)), code


def line_profile(rs: RootSystem, members: Sequence[int]) -> Profile:
    """Multiset, over all lines x, of (norm of x, sorted |(x, s)| for s in members).

    Returned as sorted (entry, multiplicity) pairs.
    """
    table = rs.line_table
    profile = []
    for x in range(len(table)):
        row = table.gram[x]
        profile.append((table.norms[x],) + tuple(sorted(abs(row[s]) for s in members)))
    return tuple(sorted(Counter(profile).items()))


def partial_key(rs: RootSystem, members: Sequence[int]) -> PartialKey:
    colors, code = gram_code(rs, members)
    closure = subsystem_closure(RootSet(rs, frozenset(members)))
    labels = tuple(t.label for t in subsystem_type(closure))
    return colors, code, line_profile(rs, members), labels
