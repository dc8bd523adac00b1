"""
Tests for root systems, angle classes and group labels
"""

from fractions import Fraction

import pytest

from affine_simplex_families.errors import (
    DimensionMismatch,
    NonCrystallographicAngle,
    UnsupportedType,
    ZeroMirror,
)
from affine_simplex_families.reference_data import get_simple_roots_table
from affine_simplex_families.roots import (
    PROPORTIONAL,
    AngleClass,
    GroupType,
    LineTable,
    RootVector,
    angle_class,
    build_root_system,
    classify_angle,
    expected_root_count,
    inner,
    reflect,
    simple_roots_for,
    vector_angle_class,
)


class TestGroupType:
    """Test parsing and validation of group labels."""

    def test_parse_affine_label(self):
        t = GroupType.parse("e8~")
        assert t == GroupType("E", 8, True)
        assert t.label == "E8~"
        assert str(t.finite()) == "E8"

    def test_parse_rejects_garbage(self):
        with pytest.raises(UnsupportedType):
            GroupType.parse("X3")

    @pytest.mark.parametrize("series,rank", [("E", 5), ("F", 3), ("G", 3), ("B", 1), ("D", 2)])
    def test_invalid_combinations(self, series, rank):
        with pytest.raises(UnsupportedType):
            GroupType(series, rank)

    def test_b2_affine_canonicalizes_to_c2(self):
        assert GroupType.parse("B2~").canonical() == GroupType("C", 2, True)
        assert GroupType.parse("B3~").canonical() == GroupType("B", 3, True)

    @pytest.mark.parametrize("label", ["E8", "A1~", "D3~"])
    def test_check_enumerable_rejects(self, label):
        with pytest.raises(UnsupportedType):
            GroupType.parse(label).check_enumerable()

    def test_check_enumerable_returns_self(self):
        t = GroupType.parse("D4~")
        assert t.check_enumerable() is t


class TestAngleClass:
    """Test exact angle classification."""

    @pytest.mark.parametrize(
        "u,v,k,obtuse",
        [
            ((1, 0), (0, 1), 2, False),
            ((1, -1, 0), (0, 1, -1), 3, True),
            ((1, -1, 0), (1, 0, -1), 3, False),
            ((1, -1), (0, 1), 4, True),
            ((1, -1, 0), (-2, 1, 1), 6, True),
        ],
    )
    def test_classification(self, u, v, k, obtuse):
        cls = vector_angle_class(u, v)
        assert cls.k == k
        assert cls.obtuse is obtuse

    def test_proportional(self):
        assert vector_angle_class((1, 2), (-2, -4)) is PROPORTIONAL

    def test_non_crystallographic(self):
        with pytest.raises(NonCrystallographicAngle):
            classify_angle(Fraction(1), Fraction(1), Fraction(5))

    def test_zero_vector(self):
        with pytest.raises(ValueError):
            classify_angle(Fraction(0), Fraction(0), Fraction(1))

    def test_digits(self):
        assert [AngleClass(k).digit for k in (2, 3, 4, 6)] == [0, 1, 2, 3]

    def test_dihedral_of_obtuse_normals_is_coxeter(self):
        dihedral = AngleClass(3, obtuse=True).as_dihedral()
        assert (dihedral.k, dihedral.m) == (3, 1)

    def test_dihedral_of_acute_normals(self):
        dihedral = AngleClass(6).as_dihedral()
        assert (dihedral.k, dihedral.m) == (6, 5)

    def test_invalid_k(self):
        with pytest.raises(NonCrystallographicAngle):
            AngleClass(5)


class TestRootVector:
    """Test inner products and reflections of scaled vectors."""

    def test_inner_honours_scale(self):
        v = RootVector((1, 1, 1, 1), 2)
        assert inner(v, v) == 1

    def test_reflect(self):
        image = reflect(RootVector((1, -1, 0)), RootVector((0, 1, -1)))
        assert image == RootVector((1, 0, -1))

    def test_reflect_in_zero(self):
        with pytest.raises(ZeroMirror):
            reflect(RootVector((0, 0)), RootVector((1, 0)))

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            inner(RootVector((1, 0)), RootVector((1, 0, 0)))
        with pytest.raises(DimensionMismatch):
            angle_class(RootVector((1, 0)), RootVector((1, 0), 2))

    def test_line_is_sign_canonical(self):
        assert RootVector((0, -1, 1)).line() == RootVector((0, 1, -1))
        assert str(RootVector((1, -1), 2)) == "(1,-1)/2"


class TestBuildRootSystem:
    """Test construction of the finite root systems."""

    @pytest.mark.parametrize(
        "label", ["A1", "A4", "B2", "B4", "C3", "D4", "D5", "G2", "F4", "E6", "E7"]
    )
    def test_root_counts(self, label):
        t = GroupType.parse(label)
        rs = build_root_system(t)
        assert len(rs.roots) == expected_root_count(t)
        assert len(rs.lines) == len(rs.roots) // 2

    def test_e8_has_240_roots(self):
        rs = build_root_system(GroupType("E", 8))
        assert len(rs.roots) == 240
        assert rs.scale == 2
        assert rs.ambient_dim == 8

    def test_ambient_dimensions(self):
        assert build_root_system(GroupType("A", 3)).ambient_dim == 4
        assert build_root_system(GroupType("C", 3)).ambient_dim == 3
        assert build_root_system(GroupType("G", 2)).ambient_dim == 3

    def test_affine_label_rejected(self):
        with pytest.raises(UnsupportedType):
            build_root_system(GroupType("A", 2, True))

    @pytest.mark.parametrize(
        "label,highest",
        [("A2", (1, 0, -1)), ("B2", (1, 1)), ("G2", (-1, -1, 2)), ("C3", (2, 0, 0))],
    )
    def test_highest_root(self, label, highest):
        assert build_root_system(GroupType.parse(label)).highest_root().coords == highest

    def test_simple_coefficients(self):
        rs = build_root_system(GroupType("B", 2))
        assert rs.simple_coefficients(RootVector((1, 1))) == (1, 2)

    def test_cached(self):
        t = GroupType("D", 4)
        assert build_root_system(t) is build_root_system(t)


class TestLineTable:
    """Test the indexed line tables."""

    def test_b2_table(self):
        table = build_root_system(GroupType("B", 2)).line_table
        assert len(table) == 4
        assert sorted(table.norms) == [1, 1, 2, 2]
        for i in range(4):
            assert table.digits[i][i] == -1
            assert table.reflection[i][i] == i

    def test_reflection_is_an_involution(self):
        table = build_root_system(GroupType("A", 3)).line_table
        for i in range(len(table)):
            for j in range(len(table)):
                assert table.reflection[i][table.reflection[i][j]] == j

    def test_generates_all(self):
        rs = build_root_system(GroupType("A", 2))
        table = rs.line_table
        simple = [table.index[r.line().coords] for r in rs.simple_roots]
        assert table.generates_all(simple)
        assert table.closure(simple[:1]) == frozenset(simple[:1])

    def test_from_normals_closes_g2(self):
        table = LineTable.from_normals([(1, -1, 0), (-2, 1, 1)])
        assert len(table) == 6

    def test_from_normals_budget(self):
        from affine_simplex_families.errors import BudgetExceeded

        # two mirrors at pi/5 generate a non-crystallographic group
        with pytest.raises((BudgetExceeded, NonCrystallographicAngle)):
            LineTable.from_normals([(1, 0), (1, 1), (1, 2)], budget=16)


class TestSimpleRoots:
    """Test the fixed simple-root ordering of every type."""

    @pytest.mark.parametrize(
        "label,expected",
        [
            ("A3", ((1, -1, 0, 0), (0, 1, -1, 0), (0, 0, 1, -1))),
            ("B3", ((1, -1, 0), (0, 1, -1), (0, 0, 1))),
            ("C3", ((1, -1, 0), (0, 1, -1), (0, 0, 2))),
            ("D4", ((1, -1, 0, 0), (0, 1, -1, 0), (0, 0, 1, -1), (0, 0, 1, 1))),
        ],
    )
    def test_classical_convention(self, label, expected):
        roots = simple_roots_for(GroupType.parse(label))
        assert tuple(v.coords for v in roots) == expected
        assert all(v.scale == 1 for v in roots)

    @pytest.mark.parametrize("label", ["G2", "F4", "E6", "E7", "E8"])
    def test_exceptional_roots_come_from_reference_file(self, label):
        rows = get_simple_roots_table()[label]
        roots = simple_roots_for(GroupType.parse(label))
        assert len(rows) == GroupType.parse(label).rank
        assert [(v.scale, v.coords) for v in roots] == rows

    def test_e6_and_e7_extend_to_e8(self):
        table = get_simple_roots_table()
        assert table["E6"] == table["E8"][:6]
        assert table["E7"] == table["E8"][:7]
