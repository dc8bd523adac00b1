"""
Exact rational linear algebra.

Small dense matrices over the rationals (fractions.Fraction on top of Python's
arbitrary-precision integers). Everything here is a pure function of its
inputs; no floating point is used anywhere.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, List, Optional, Sequence, Tuple

from ..errors import NoKernel, RankDeficient

RationalScalar = Fraction
Vector = Tuple[Fraction, ...]


@dataclass(frozen=True)
class RationalMatrix:
    """Immutable rectangular matrix of rationals.

    Args:
        rows: Row tuples; every entry is converted to Fraction.

    Raises:
        ValueError: If the matrix is empty or ragged.
    """

    rows: Tuple[Vector, ...]

    def __post_init__(self):
        rows = tuple(tuple(Fraction(x) for x in row) for row in self.rows)
        if not rows or not rows[0]:
            raise ValueError("matrix must have at least one row and one column")
        width = len(rows[0])
        if any(len(row) != width for row in rows):
            raise ValueError("matrix rows must all have the same length")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence]) -> "RationalMatrix":
        return cls(tuple(tuple(row) for row in rows))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence]) -> "RationalMatrix":
        """Build the matrix whose j-th column is columns[j]."""
        return cls(tuple(zip(*columns)))

    @property
    def n_rows(self) -> int:
        return len(self.rows)

    @property
    def n_cols(self) -> int:
        return len(self.rows[0])

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix(tuple(zip(*self.rows)))

    def apply(self, vector: Sequence) -> Vector:
        """Return the matrix-vector product."""
        if len(vector) != self.n_cols:
            raise ValueError(f"vector of length {len(vector)} does not match {self.n_cols} columns")
        return tuple(sum((a * b for a, b in zip(row, vector)), Fraction(0)) for row in self.rows)


def _row_echelon(rows: Sequence[Sequence[Fraction]]) -> Tuple[List[List[Fraction]], List[int]]:
    """Reduced row echelon form by Gauss-Jordan elimination.

    Returns:
        The nonzero reduced rows and their pivot columns.
    """
    m = [list(row) for row in rows]
    n_rows = len(m)
    n_cols = len(m[0]) if m else 0
    pivots: List[int] = []
    piv_r = 0
    for piv_c in range(n_cols):
        if piv_r == n_rows:
            break
        for i_row in range(piv_r, n_rows):
            if m[i_row][piv_c] != 0:
                break
        else:
            continue
        m[piv_r], m[i_row] = m[i_row], m[piv_r]
        fp = m[piv_r][piv_c]
        m[piv_r] = [x / fp for x in m[piv_r]]
        for r in range(n_rows):
            fr = m[r][piv_c]
            if r == piv_r or fr == 0:
                continue
            m[r] = [a - fr * b for a, b in zip(m[r], m[piv_r])]
        pivots.append(piv_c)
        piv_r += 1
    return m[:piv_r], pivots


def rank(m: RationalMatrix) -> int:
    """Exact rank over the rationals."""
    _, pivots = _row_echelon(m.rows)
    return len(pivots)


def nullspace(m: RationalMatrix) -> List[Vector]:
    """Basis of {x : m x = 0}, one vector per free column."""
    reduced, pivots = _row_echelon(m.rows)
    free = [c for c in range(m.n_cols) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * m.n_cols
        x[f] = Fraction(1)
        for row, p in zip(reduced, pivots):
            x[p] = -row[f]
        basis.append(tuple(x))
    return basis


def kernel_vector(m: RationalMatrix) -> Vector:
    """The single linear dependency among the columns of m.

    The result is normalized so that its first nonzero entry is +1.

    Raises:
        NoKernel: If the columns are linearly independent.
        RankDeficient: If the kernel has dimension greater than one.
    """
    basis = nullspace(m)
    if not basis:
        raise NoKernel(f"{m.n_rows}x{m.n_cols} matrix has full column rank")
    if len(basis) > 1:
        raise RankDeficient(
            f"{m.n_rows}x{m.n_cols} matrix has rank {m.n_cols - len(basis)}, "
            f"kernel of dimension {len(basis)}"
        )
    vector = basis[0]
    lead = next(x for x in vector if x != 0)
    return tuple(x / lead for x in vector)


def solve(m: RationalMatrix, b: Sequence) -> Vector:
    """Solve m x = b for square nonsingular m.

    Raises:
        RankDeficient: If m is not square or is singular.
    """
    if m.n_rows != m.n_cols:
        raise RankDeficient(f"cannot solve a non-square {m.n_rows}x{m.n_cols} system")
    augmented = [list(row) + [Fraction(v)] for row, v in zip(m.rows, b)]
    reduced, pivots = _row_echelon(augmented)
    if pivots != list(range(m.n_cols)):
        raise RankDeficient("singular system")
    return tuple(row[-1] for row in reduced)


def inverse(m: RationalMatrix) -> RationalMatrix:
    """Inverse of a square nonsingular matrix."""
    size = m.n_rows
    if size != m.n_cols:
        raise RankDeficient(f"cannot invert a non-square {m.n_rows}x{m.n_cols} matrix")
    augmented = [
        list(row) + [Fraction(int(i == j)) for j in range(size)] for i, row in enumerate(m.rows)
    ]
    reduced, pivots = _row_echelon(augmented)
    if pivots != list(range(size)):
        raise RankDeficient("singular matrix")
    return RationalMatrix(tuple(tuple(row[size:]) for row in reduced))


def determinant(m: RationalMatrix) -> Fraction:
    """Determinant by elimination with row swaps."""
    if m.n_rows != m.n_cols:
        raise ValueError("determinant needs a square matrix")
    a = [list(row) for row in m.rows]
    size = len(a)
    det = Fraction(1)
    for c in range(size):
        pivot = next((r for r in range(c, size) if a[r][c] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            a[c], a[pivot] = a[pivot], a[c]
            det = -det
        det *= a[c][c]
        for r in range(c + 1, size):
            factor = a[r][c] / a[c][c]
            if factor:
                a[r] = [x - factor * y for x, y in zip(a[r], a[c])]
    return det


def primitive(vector: Sequence) -> Tuple[Tuple[int, ...], Fraction]:
    """Scale a nonzero rational vector to a primitive integer vector.

    The result has content 1 and a positive first nonzero coordinate.

    Returns:
        (primitive, factor) with vector == factor * primitive.
    """
    fractions = [Fraction(x) for x in vector]
    denominator = 1
    for x in fractions:
        denominator = denominator * x.denominator // gcd(denominator, x.denominator)
    ints = [int(x * denominator) for x in fractions]
    content = 0
    for x in ints:
        content = gcd(content, x)
    if content == 0:
        raise ValueError("zero vector has no primitive form")
    lead = next(x for x in ints if x != 0)
    if lead < 0:
        content = -content
    result = tuple(x // content for x in ints)
    return result, Fraction(content, denominator)


def integer_rank(vectors: Sequence[Sequence[int]]) -> int:
    """Rank of a list of integer vectors, fraction-free."""
    echelon = IntegerEchelon()
    count = 0
    for v in vectors:
        extended = echelon.extended(v)
        if extended is not None:
            echelon = extended
            count += 1
    return count


class IntegerEchelon:
    """Incremental fraction-free echelon basis of integer vectors.

    Used by the search to test independence one line at a time. Instances are
    immutable; extended() returns a new basis or None when the vector is
    dependent on the current rows.
    """

    __slots__ = ("rows",)

    def __init__(self, rows: Tuple[Tuple[int, Tuple[int, ...]], ...] = ()):
        self.rows = rows

    def reduce(self, vector: Sequence[int]) -> Tuple[int, ...]:
        v = list(vector)
        for pivot, row in self.rows:
            if v[pivot]:
                a, b = row[pivot], v[pivot]
                v = [a * x - b * y for x, y in zip(v, row)]
        content = 0
        for x in v:
            content = gcd(content, x)
        if content > 1:
            v = [x // content for x in v]
        return tuple(v)

    def extended(self, vector: Sequence[int]) -> Optional["IntegerEchelon"]:
        reduced = self.reduce(vector)
        for pivot, x in enumerate(reduced):
            if x:
                return IntegerEchelon(self.rows + ((pivot, reduced),))
        return None

    def __len__(self) -> int:
        return len(self.rows)
