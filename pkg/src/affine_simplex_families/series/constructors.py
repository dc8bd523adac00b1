"""
Closed-form counts and direct constructions for the classical series.

Families of A~n, B~n, C~n and D~n are determined by their Gamma graphs:
- A~n: the (n+1)-cycle.
- B~n: a cycle with N edges (2 <= N <= n), a path tail, one marked node at the
  end of the tail (on the cycle when N = n).
- C~n: a path with both ends marked.
- D~n: two cycles with N1 and N2 edges, 2 <= N1 <= N2 <= n, N1 + N2 <= n + 1;
  they share a node when N1 + N2 = n + 1 and are joined by a path otherwise.
A cycle gives independent vectors only with an odd number of '+' edges; the
constructions use exactly one, placed on the edge chosen by red_edges.
"""

from typing import List, Sequence, Tuple

from ..diagram import GammaGraph
from ..enumeration import Family
from ..errors import UnsupportedType
from ..roots import GroupType, RootVector

_EXCEPTIONAL_COUNTS = {"E6": 17, "E7": 142, "E8": 1736, "F4": 11, "G2": 2}


def count_families(t: GroupType) -> int:
    """Number of simplex families generating the affine group t.

    Raises:
        UnsupportedType: For finite or non-enumerable labels.
    """
    t = t.check_enumerable().canonical()
    n = t.rank
    if t.series in "AC":
        return 1
    if t.series == "B":
        return n - 1
    if t.series == "D":
        return n * (n - 2) // 4 if n % 2 == 0 else (n - 1) ** 2 // 4
    return _EXCEPTIONAL_COUNTS[f"{t.series}{n}"]


def b_parameters(n: int) -> List[int]:
    return list(range(2, n + 1))


def d_parameters(n: int) -> List[Tuple[int, int]]:
    return [
        (n1, n2)
        for n1 in range(2, n + 1)
        for n2 in range(n1, n + 1)
        if n1 + n2 <= n + 1
    ]


def _cycle_edges(nodes: Sequence[int], red: int) -> List[Tuple[int, int, str]]:
    pairs = [(nodes[i], nodes[i + 1]) for i in range(len(nodes) - 1)]
    pairs.append((nodes[0], nodes[-1]))
    red = red % len(pairs)
    return [(min(a, b), max(a, b), "+" if i == red else "-") for i, (a, b) in enumerate(pairs)]


def _path_edges(start: int, stop: int) -> List[Tuple[int, int, str]]:
    return [(i, i + 1, "-") for i in range(start, stop)]


def gamma_a(n: int) -> GammaGraph:
    edges = _path_edges(0, n) + [(0, n, "-")]
    return GammaGraph("A", n + 1, tuple(edges))


def gamma_b(n: int, cycle_length: int) -> GammaGraph:
    """Gamma of the B~n family whose cycle has cycle_length edges."""
    if not 2 <= cycle_length <= n:
        raise ValueError(f"cycle length {cycle_length} is outside [2, {n}]")
    nodes = list(range(cycle_length))
    edges = _cycle_edges(nodes, len(nodes) - 1) + _path_edges(cycle_length - 1, n - 1)
    return GammaGraph("B", n, tuple(edges), frozenset({n - 1}))


def gamma_c(n: int) -> GammaGraph:
    return GammaGraph("B", n, tuple(_path_edges(0, n - 1)), frozenset({0, n - 1}))


def gamma_d(n: int, n1: int, n2: int, red_edges: Tuple[int, int] = (0, 0)) -> GammaGraph:
    """Gamma of the D~n family with cycles of n1 and n2 edges."""
    if (n1, n2) not in d_parameters(n):
        raise ValueError(f"({n1}, {n2}) is not an admissible cycle pair for D{n}~")
    first = list(range(n1))
    second = list(range(n - n2, n))
    edges = _cycle_edges(first, red_edges[0])
    if n1 + n2 < n + 1:
        edges += _path_edges(n1 - 1, n - n2)
    edges += _cycle_edges(second, red_edges[1])
    return GammaGraph("D", n, tuple(edges))


def vectors_from_gamma(g: GammaGraph) -> List[RootVector]:
    """One root per Gamma edge and mark: h_i -+ h_j, or h_i."""
    vectors = []
    for i, j, sign in g.edges:
        coords = [0] * g.node_count
        coords[i] = 1
        coords[j] = 1 if sign == "+" else -1
        vectors.append(RootVector(tuple(coords)))
    for node in sorted(g.marks):
        coords = [0] * g.node_count
        coords[node] = 1
        vectors.append(RootVector(tuple(coords)))
    return vectors


def construct_b_family(n: int, cycle_length: int) -> Family:
    vectors = vectors_from_gamma(gamma_b(n, cycle_length))
    return Family.from_vectors(GroupType("B", n, True), vectors)


def construct_d_family(
    n: int, n1: int, n2: int, red_edges: Tuple[int, int] = (0, 0)
) -> Family:
    return Family.from_vectors(
        GroupType("D", n, True), vectors_from_gamma(gamma_d(n, n1, n2, red_edges))
    )


def construct_series_families(t: GroupType) -> List[Family]:
    """Families of a classical affine group built from their Gamma graphs, sorted by key.

    Raises:
        UnsupportedType: For exceptional or non-enumerable targets.
    """
    t = t.check_enumerable().canonical()
    n = t.rank
    if t.series == "A":
        families = [Family.from_vectors(t, vectors_from_gamma(gamma_a(n)))]
    elif t.series == "B":
        families = [construct_b_family(n, length) for length in b_parameters(n)]
    elif t.series == "C":
        families = [Family.from_vectors(t, vectors_from_gamma(gamma_c(n)))]
    elif t.series == "D":
        families = [construct_d_family(n, n1, n2) for n1, n2 in d_parameters(n)]
    else:
        raise UnsupportedType(f"{t.label} has no closed-form construction")
    return sorted(families, key=lambda f: f.canonical_key)
