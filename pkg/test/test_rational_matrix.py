"""
Tests for exact rational linear algebra
"""

from fractions import Fraction

import pytest

from affine_simplex_families.errors import NoKernel, RankDeficient
from affine_simplex_families.exact import (
    IntegerEchelon,
    RationalMatrix,
    determinant,
    integer_rank,
    inverse,
    kernel_vector,
    nullspace,
    primitive,
    rank,
    solve,
)


class TestRationalMatrix:
    """Test matrix construction and products."""

    def test_entries_become_fractions(self):
        m = RationalMatrix.from_rows([[1, 2], ["1/2", 3]])
        assert m.rows[1][0] == Fraction(1, 2)
        assert isinstance(m.rows[0][0], Fraction)

    def test_from_columns_transposes(self):
        m = RationalMatrix.from_columns([[1, 2, 3], [4, 5, 6]])
        assert m.n_rows == 3
        assert m.n_cols == 2
        assert m.rows[2] == (3, 6)
        assert m.transpose().rows == ((1, 2, 3), (4, 5, 6))

    def test_apply(self):
        m = RationalMatrix.from_rows([[1, 2], [3, 4]])
        assert m.apply([1, Fraction(1, 2)]) == (2, 5)

    def test_apply_length_mismatch(self):
        m = RationalMatrix.from_rows([[1, 2], [3, 4]])
        with pytest.raises(ValueError):
            m.apply([1, 2, 3])

    def test_ragged_rows_rejected(self):
        with pytest.raises(ValueError, match="same length"):
            RationalMatrix.from_rows([[1, 2], [3]])

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            RationalMatrix.from_rows([])


class TestRankAndKernel:
    """Test rank, nullspace and the single dependency."""

    def test_rank(self):
        assert rank(RationalMatrix.from_rows([[1, 2, 3], [2, 4, 6], [0, 1, 1]])) == 2
        assert rank(RationalMatrix.from_rows([[0, 0], [0, 0]])) == 0

    def test_nullspace_vectors_are_annihilated(self):
        m = RationalMatrix.from_rows([[1, 1, 0, 0], [0, 1, 1, 0]])
        basis = nullspace(m)
        assert len(basis) == 2
        for v in basis:
            assert m.apply(v) == (0, 0)

    def test_kernel_vector_of_a2_affine(self):
        # simple roots of A2 plus the lowest root, as columns
        columns = [[1, -1, 0], [0, 1, -1], [-1, 0, 1]]
        assert kernel_vector(RationalMatrix.from_columns(columns)) == (1, 1, 1)

    def test_kernel_vector_leading_entry_positive(self):
        columns = [[-1, 0], [0, 1], [2, -2]]
        v = kernel_vector(RationalMatrix.from_columns(columns))
        assert v[0] == 1
        assert v == (1, Fraction(-1), Fraction(1, 2))

    def test_kernel_vector_independent_columns(self):
        with pytest.raises(NoKernel):
            kernel_vector(RationalMatrix.from_columns([[1, 0], [0, 1]]))

    def test_kernel_vector_two_dimensional_kernel(self):
        with pytest.raises(RankDeficient):
            kernel_vector(RationalMatrix.from_columns([[1, 0], [2, 0], [3, 0]]))


class TestSolveInverseDeterminant:
    """Test square-system helpers."""

    def test_solve(self):
        m = RationalMatrix.from_rows([[2, 1], [1, 3]])
        assert solve(m, [3, 5]) == (Fraction(4, 5), Fraction(7, 5))

    def test_solve_singular(self):
        with pytest.raises(RankDeficient):
            solve(RationalMatrix.from_rows([[1, 2], [2, 4]]), [1, 2])

    def test_solve_non_square(self):
        with pytest.raises(RankDeficient):
            solve(RationalMatrix.from_rows([[1, 2, 3]]), [1])

    def test_inverse(self):
        m = RationalMatrix.from_rows([[2, -1], [-1, 2]])
        inv = inverse(m)
        assert inv.rows == ((Fraction(2, 3), Fraction(1, 3)), (Fraction(1, 3), Fraction(2, 3)))

    def test_inverse_singular(self):
        with pytest.raises(RankDeficient):
            inverse(RationalMatrix.from_rows([[1, 1], [1, 1]]))

    def test_determinant_of_cartan_matrices(self):
        a3 = RationalMatrix.from_rows([[2, -1, 0], [-1, 2, -1], [0, -1, 2]])
        assert determinant(a3) == 4
        g2 = RationalMatrix.from_rows([[2, -1], [-3, 2]])
        assert determinant(g2) == 1

    def test_determinant_with_row_swap(self):
        assert determinant(RationalMatrix.from_rows([[0, 1], [1, 0]])) == -1
        assert determinant(RationalMatrix.from_rows([[0, 1], [0, 1]])) == 0


class TestPrimitive:
    """Test primitive integer normalization."""

    def test_rational_vector(self):
        vector, factor = primitive([Fraction(-1, 2), Fraction(1, 3), 0])
        assert vector == (3, -2, 0)
        assert factor == Fraction(-1, 6)

    def test_leading_sign_positive(self):
        vector, factor = primitive([0, -4, 6])
        assert vector == (0, 2, -3)
        assert factor == -2

    def test_zero_vector(self):
        with pytest.raises(ValueError):
            primitive([0, 0])


class TestIntegerEchelon:
    """Test the incremental fraction-free basis."""

    def test_extended_rejects_dependent_vector(self):
        echelon = IntegerEchelon().extended((1, -1, 0))
        echelon = echelon.extended((0, 1, -1))
        assert len(echelon) == 2
        assert echelon.extended((1, 0, -1)) is None
        assert echelon.extended((1, 1, 1)) is not None

    def test_instances_are_not_mutated(self):
        base = IntegerEchelon().extended((2, 0))
        base.extended((0, 3))
        assert len(base) == 1

    def test_integer_rank(self):
        assert integer_rank([(1, 1, 0), (2, 2, 0), (0, 0, 5), (1, 1, 5)]) == 2
        assert integer_rank([]) == 0
