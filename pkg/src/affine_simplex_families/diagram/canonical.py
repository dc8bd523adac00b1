"""
Canonical keys and p-codes of labelled complete graphs.

A key is the lexicographically smallest row-major upper triangle of a
symmetric label matrix over all orderings of its nodes. The minimum is found
by an ordered-partition search: once rows 0..t-1 are fixed, the remaining
positions fall into cells of nodes that are indistinguishable by those rows,
position t must come from the first cell, and the cheapest row for a chosen
node sorts each cell by its labels to that node. Siblings whose row is not
minimal are dropped, whole branches are cut against the best code found so
far, and only one node per twin class is ever tried.
"""

from dataclasses import dataclass
from typing import TYPE_CHECKING, List, Optional, Sequence, Tuple

from ..errors import NotF4, NotSimplyLaced
from ..roots import GroupType, RootVector, angle_class, build_root_system
from ..roots.angle import DIGIT_BY_K, K_BY_DIGIT

if TYPE_CHECKING:
    from .family_diagram import FamilyDiagram

Matrix = Sequence[Sequence[int]]
Cell = Tuple[int, ...]


def _twin_classes(values: Matrix, colors: Sequence[int]) -> List[int]:
    """Representative (smallest index) of each node's twin class.

    x and y are twins when they carry the same colour and the same label to
    every third node; swapping them is then an automorphism.
    """
    size = len(values)
    rep = list(range(size))
    for x in range(size):
        if rep[x] != x:
            continue
        for y in range(x + 1, size):
            if rep[y] != y or colors[x] != colors[y]:
                continue
            if all(values[x][z] == values[y][z] for z in range(size) if z not in (x, y)):
                rep[y] = x
    return rep


def _refine(values: Matrix, node: int, cells: Sequence[Cell]) -> Tuple[Tuple[int, ...], List[Cell]]:
    """Row of node over the ordered cells, and the cells split by that row."""
    row: List[int] = []
    refined: List[Cell] = []
    for cell in cells:
        ordered = sorted(cell, key=lambda x: values[node][x])
        start = 0
        for i in range(1, len(ordered) + 1):
            if i == len(ordered) or values[node][ordered[i]] != values[node][ordered[start]]:
                refined.append(tuple(ordered[start:i]))
                start = i
        row.extend(values[node][x] for x in ordered)
    return tuple(row), refined


def minimal_code(
    values: Matrix, colors: Optional[Sequence[int]] = None
) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """Lexicographically minimal upper triangle of a symmetric matrix.

    Args:
        values: Symmetric integer matrix; the diagonal is ignored.
        colors: Optional node colours. Orderings are then restricted to list
            nodes by ascending colour, which makes the result a canonical form
            of the coloured matrix.

    Returns:
        (code, order): the flattened upper triangle and one ordering of the
        nodes realizing it.
    """
    size = len(values)
    if size == 0:
        return (), ()
    colors = list(colors) if colors is not None else [0] * size
    if len(colors) != size:
        raise ValueError("one colour per node is required")
    twin = _twin_classes(values, colors)
    first_cells: List[Cell] = []
    for c in sorted(set(colors)):
        first_cells.append(tuple(x for x in range(size) if colors[x] == c))

    best: List[Optional[Tuple[Tuple[int, ...], Tuple[int, ...]]]] = [None]

    def search(prefix: Tuple[int, ...], code: Tuple[int, ...], cells: List[Cell]) -> None:
        if not cells:
            if best[0] is None or code < best[0][0]:
                best[0] = (code, prefix)
            return
        if best[0] is not None and code > best[0][0][: len(code)]:
            return
        head, rest = cells[0], cells[1:]
        seen = set()
        options = []
        for node in head:
            if twin[node] in seen:
                continue
            seen.add(twin[node])
            remaining = [tuple(x for x in head if x != node)] if len(head) > 1 else []
            row, refined = _refine(values, node, remaining + rest)
            options.append((row, node, refined))
        lowest = min(row for row, _, _ in options)
        for row, node, refined in options:
            if row == lowest:
                search(prefix + (node,), code + row, refined)

    search((), (), first_cells)
    assert best[0] is not None
    return best[0]


@dataclass(frozen=True, order=True)
class CanonicalKey:
    """Minimal upper triangle of the angle-class digit matrix.

    Digits are 0, 1, 2, 3 for k = 2, 3, 4, 6. Keys of different sizes compare
    by size first.
    """

    size: int
    digits: Tuple[int, ...]

    def __post_init__(self):
        if len(self.digits) != self.size * (self.size - 1) // 2:
            raise ValueError(f"{len(self.digits)} digits do not fill a {self.size}-node triangle")

    @property
    def text(self) -> str:
        return "".join(str(d) for d in self.digits)

    def __str__(self) -> str:
        return self.text

    @classmethod
    def parse(cls, text: str) -> "CanonicalKey":
        """Inverse of text; the node count is recovered from the length."""
        text = text.strip()
        if not text.isdigit():
            raise ValueError(f"canonical key {text!r} is not a digit string")
        size = 1
        while size * (size - 1) // 2 < len(text):
            size += 1
        return cls(size, tuple(int(c) for c in text))

    def angle_matrix(self) -> Tuple[Tuple[int, ...], ...]:
        """k values of the key's own node ordering; 0 on the diagonal."""
        matrix = [[0] * self.size for _ in range(self.size)]
        position = 0
        for i in range(self.size):
            for j in range(i + 1, self.size):
                matrix[i][j] = matrix[j][i] = K_BY_DIGIT[self.digits[position]]
                position += 1
        return tuple(tuple(row) for row in matrix)


def canonical_key(d: "FamilyDiagram") -> CanonicalKey:
    """Permutation-invariant key of a family diagram."""
    digits = [
        [DIGIT_BY_K[k] if i != j else 0 for j, k in enumerate(row)] for i, row in enumerate(d.k)
    ]
    code, _ = minimal_code(digits)
    return CanonicalKey(d.size, code)


def p_code_from_matrix(values: Matrix, base: int) -> int:
    """Minimal upper-triangle code of a matrix, read as a base-`base` integer."""
    code, _ = minimal_code(values)
    result = 0
    for digit in code:
        if not 0 <= digit < base:
            raise ValueError(f"digit {digit} is outside base {base}")
        result = result * base + digit
    return result


def _vectors(f) -> Sequence[RootVector]:
    return f.vectors if hasattr(f, "vectors") else f


def p_code_e_series(f) -> int:
    """Binary code of the doubled unsigned Gram matrix of a simply-laced family.

    Off-diagonal entries g_ij = 2|cos(f_i, f_j)| are 0 or 1; p is the smallest
    binary number their upper triangle spells over all orderings.

    Raises:
        NotSimplyLaced: If the vectors have two lengths or an angle class other
            than k = 2, 3.
    """
    vectors = list(_vectors(f))
    if len({v.raw_dot(v) for v in vectors}) != 1:
        raise NotSimplyLaced("the family mixes root lengths")
    size = len(vectors)
    g = [[0] * size for _ in range(size)]
    for i in range(size):
        for j in range(i + 1, size):
            k = angle_class(vectors[i], vectors[j]).k
            if k not in (2, 3):
                raise NotSimplyLaced(f"vectors {i} and {j} have angle class k={k}")
            g[i][j] = g[j][i] = 0 if k == 2 else 1
    return p_code_from_matrix(g, 2)


_F4_DIGIT = {2: 0, 3: 1, 4: 2}


def p_code_f4(f) -> int:
    """Base-3 code of a five-vector family over F4.

    Digits are 0, 1, 2 for angle classes k = 2, 3, 4.

    Raises:
        NotF4: If the family is not five vectors of the F4 root system.
    """
    target = getattr(f, "target", None)
    if target is not None and (target.series, target.rank) != ("F", 4):
        raise NotF4(f"family targets {target.label}")
    vectors = list(_vectors(f))
    if len(vectors) != 5:
        raise NotF4(f"F4 families have 5 vectors, got {len(vectors)}")
    f4 = build_root_system(GroupType("F", 4))
    if any(v not in f4 for v in vectors):
        raise NotF4("a vector is not an F4 root")
    g = [[0] * 5 for _ in range(5)]
    for i in range(5):
        for j in range(i + 1, 5):
            g[i][j] = g[j][i] = _F4_DIGIT[angle_class(vectors[i], vectors[j]).k]
    return p_code_from_matrix(g, 3)
