"""
The auxiliary graph Gamma(P) of a family over a classical coordinate model.

Nodes are the basis vectors h_i. A vector +-(h_i - h_j) gives a '-' edge, a
vector +-(h_i + h_j) a '+' edge, and +-h_i (or +-2h_i) marks node i. Both
edges between the same pair may be present.
"""

from dataclasses import dataclass
from typing import FrozenSet, List, Sequence, Tuple

from ..errors import NotSeriesModel
from ..roots import RootVector
from .family_diagram import FamilyDiagram

Edge = Tuple[int, int, str]

_MODELS = {"A": "A", "B": "B", "C": "B", "D": "D"}


@dataclass(frozen=True)
class GammaGraph:
    """Multigraph on the coordinate indices with optional marked nodes.

    Args:
        model: "A", "B" (also used for C~ families) or "D".
        node_count: Ambient dimension.
        edges: (i, j, sign) with i < j and sign in {"+", "-"}, in input order.
        marks: Marked nodes (B model only).
    """

    model: str
    node_count: int
    edges: Tuple[Edge, ...]
    marks: FrozenSet[int] = frozenset()

    def __post_init__(self):
        if self.model not in ("A", "B", "D"):
            raise NotSeriesModel(f"unknown Gamma model {self.model!r}")
        if self.marks and self.model != "B":
            raise NotSeriesModel("only the B model has marked nodes")
        if len(set(self.edges)) != len(self.edges):
            raise ValueError("an edge occurs twice with the same sign")
        for i, j, sign in self.edges:
            if not 0 <= i < j < self.node_count or sign not in "+-":
                raise ValueError(f"bad Gamma edge {(i, j, sign)}")

    @property
    def marked_count(self) -> int:
        return len(self.marks)

    def degree(self, node: int) -> int:
        return sum((i == node) + (j == node) for i, j, _ in self.edges)

    def components(self) -> List[FrozenSet[int]]:
        """Connected components of the nodes touched by an edge or a mark."""
        parent = {}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for node in self.marks:
            parent.setdefault(node, node)
        for i, j, _ in self.edges:
            parent.setdefault(i, i)
            parent.setdefault(j, j)
            parent[find(i)] = find(j)
        groups = {}
        for node in parent:
            groups.setdefault(find(node), set()).add(node)
        return sorted((frozenset(g) for g in groups.values()), key=min)

    @property
    def cycle_rank(self) -> int:
        """Number of independent cycles: edges - nodes + components."""
        touched = {i for i, _, _ in self.edges} | {j for _, j, _ in self.edges}
        parts = len([c for c in self.components() if c & touched])
        return len(self.edges) - len(touched) + parts

    def is_connected(self) -> bool:
        return len(self.components()) == 1 and len(self.components()[0]) == self.node_count


def _classify(v: RootVector, model: str) -> Tuple[str, Tuple[int, ...]]:
    support = [(i, x) for i, x in enumerate(v.coords) if x]
    if len(support) == 2:
        (i, a), (j, b) = support
        if abs(a) == abs(b) == 1:
            sign = "+" if a == b else "-"
            if model == "A" and sign == "+":
                raise NotSeriesModel(f"{v} is not an A-model root")
            return sign, (i, j)
    if len(support) == 1 and model == "B" and abs(support[0][1]) in (1, 2):
        return "mark", (support[0][0],)
    raise NotSeriesModel(f"{v} is not a root of the {model} coordinate model")


def gamma_graph(f) -> GammaGraph:
    """Gamma graph of a family over the A, B/C or D model.

    Raises:
        NotSeriesModel: For exceptional targets or vectors outside the model.
    """
    model = _MODELS.get(f.target.series)
    if model is None:
        raise NotSeriesModel(f"{f.target.label} has no classical coordinate model")
    vectors: Sequence[RootVector] = f.vectors
    if any(v.scale != 1 for v in vectors):
        raise NotSeriesModel("classical models use scale 1")
    dim = len(vectors[0].coords)
    edges: List[Edge] = []
    marks = set()
    for v in vectors:
        kind, nodes = _classify(v, model)
        if kind == "mark":
            marks.add(nodes[0])
        else:
            edges.append((nodes[0], nodes[1], kind))
    return GammaGraph(model, dim, tuple(edges), frozenset(marks))


def family_diagram_from_gamma(g: GammaGraph) -> FamilyDiagram:
    """Rebuild the family diagram from Gamma alone.

    Edges of Gamma become diagram nodes, adjacent (k = 3) when they share
    exactly one endpoint; each marked node becomes a diagram node joined by a
    k = 4 edge to every edge incident to it. Nodes are listed edges first,
    then marks in increasing order.
    """
    edge_nodes = [frozenset((i, j)) for i, j, _ in g.edges]
    marks = sorted(g.marks)
    size = len(edge_nodes) + len(marks)
    triples = []
    for a in range(len(edge_nodes)):
        for b in range(a + 1, len(edge_nodes)):
            if len(edge_nodes[a] & edge_nodes[b]) == 1:
                triples.append((a, b, 3))
        for offset, mark in enumerate(marks):
            if mark in edge_nodes[a]:
                triples.append((a, len(edge_nodes) + offset, 4))
    return FamilyDiagram.from_edges(size, triples)
