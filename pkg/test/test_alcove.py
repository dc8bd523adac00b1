"""
Tests for mirrors, simplices and the alcove oracle
"""

from fractions import Fraction

import pytest

from affine_simplex_families.alcove import (
    Mirror,
    Simplex,
    alcove_index,
    fundamental_alcove,
    identify,
    identify_group,
    lookup_coxeter_diagram,
    mirror_closure,
    parallel_interior_mirrors,
    seed_point,
    special_vertex,
)
from affine_simplex_families.diagram import FamilyDiagram, gen_coxeter_diagram
from affine_simplex_families.enumeration import (
    compact_representative,
    coxeter_family,
    enumerate_families,
)
from affine_simplex_families.errors import (
    BudgetExceeded,
    NonCrystallographicAngle,
    RankDeficient,
    UnboundedCell,
    UnknownType,
    ZeroMirror,
)
from affine_simplex_families.roots import GroupType
from affine_simplex_families.settings import AlcoveSettings

A2_ALCOVE = ([(-1, 1, 0), (0, -1, 1), (1, 0, -1)], [0, 0, 1])
RANK_3_TARGETS = ["A2~", "A3~", "B3~", "C2~", "C3~", "G2~"]
RANK_4_TARGETS = RANK_3_TARGETS + [
    "A4~",
    "B4~",
    "C4~",
    "D4~",
    pytest.param("F4~", marks=pytest.mark.slow),
]


def _group(label):
    return GroupType.parse(label)


class TestMirror:
    """Test hyperplane normalization and reflections."""

    def test_through_normalizes(self):
        mirror, sign = Mirror.through((2, -2, 0), 2)
        assert mirror == Mirror((1, -1, 0), Fraction(1))
        assert sign == 1

    def test_through_flips_sign(self):
        mirror, sign = Mirror.through((-1, 1, 0), 1)
        assert mirror == Mirror((1, -1, 0), Fraction(-1))
        assert sign == -1

    def test_zero_normal(self):
        with pytest.raises(ZeroMirror):
            Mirror.through((0, 0), 1)

    def test_reflect_point(self):
        mirror, _ = Mirror.through((1, 0), 1)
        assert mirror.reflect_point((Fraction(3), Fraction(5))) == (-1, 5)

    def test_reflect_mirror(self):
        a, _ = Mirror.through((1, 0), 1)
        b, _ = Mirror.through((1, 1), 0)
        image = b.reflect(a)
        assert image == Mirror((0, 1), Fraction(-1))


class TestSimplex:
    """Test realization of simplices from facet inequalities."""

    def test_a2_alcove_vertices(self):
        s = Simplex.from_facets(*A2_ALCOVE)
        assert s.dimension == 2
        assert s.ambient_dim == 3
        assert s.vertices[0] == (Fraction(2, 3), Fraction(-1, 3), Fraction(-1, 3))
        for v in s.vertices:
            assert sum(v) == 0
        assert s.contains(s.barycenter)
        assert not s.contains(s.vertices[0])
        assert s.contains(s.vertices[0], strict=False)

    def test_outward_normals_keep_orientation(self):
        s = Simplex.from_facets(*A2_ALCOVE)
        assert s.outward_normals == ((-1, 1, 0), (0, -1, 1), (1, 0, -1))
        assert s.span_rank() == 2

    def test_dependent_normals(self):
        with pytest.raises(RankDeficient):
            Simplex.from_facets([(1, 0, 0), (2, 0, 0), (0, -1, 0)], [1, 1, 1])

    def test_normals_not_positively_spanning(self):
        with pytest.raises(UnboundedCell):
            Simplex.from_facets([(1, 0), (0, 1), (1, 1)], [1, 1, 1])

    def test_empty_cell(self):
        with pytest.raises(UnboundedCell):
            Simplex.from_facets([(1, 0), (0, 1), (-1, -1)], [0, 0, -1])

    def test_from_family(self):
        s = Simplex.from_family(coxeter_family(_group("C2~")))
        assert len(s.facets) == 3
        assert gen_coxeter_diagram(s).is_coxeter


class TestMirrorClosure:
    """Test the bounded mirror closure."""

    def test_contains_facets(self):
        s = Simplex.from_facets(*A2_ALCOVE)
        arrangement = mirror_closure(s)
        for m in s.facets:
            assert m in arrangement
        assert len(arrangement.directions) == 3
        assert len(arrangement) > 3

    def test_non_discrete_group(self):
        # a right triangle with a pi/5 corner
        with pytest.raises((BudgetExceeded, NonCrystallographicAngle)):
            s = Simplex.from_facets([(0, -1), (-1, 2), (2, 1)], [0, 0, 3])
            mirror_closure(s, AlcoveSettings(max_directions=32))

    def test_mirror_budget(self):
        s = Simplex.from_facets(*A2_ALCOVE)
        with pytest.raises(BudgetExceeded):
            mirror_closure(s, AlcoveSettings(ball_factor=Fraction(50), max_mirrors=20))

    def test_seed_is_generic(self):
        s = Simplex.from_facets(*A2_ALCOVE)
        arrangement = mirror_closure(s)
        seed = seed_point(s, arrangement)
        assert s.contains(seed)
        assert not arrangement.on_mirror(seed)

    def test_alcove_of_an_alcove_is_itself(self):
        s = Simplex.from_facets(*A2_ALCOVE)
        arrangement = mirror_closure(s)
        alcove = fundamental_alcove(arrangement, seed_point(s, arrangement))
        assert set(alcove.vertices) == set(s.vertices)


class TestIdentify:
    """Test identification of the generated affine group."""

    def test_lookup_table(self):
        d = FamilyDiagram.from_edges(3, [(0, 1, 6), (1, 2, 3)])
        assert lookup_coxeter_diagram(d) == _group("G2~")

    def test_lookup_unknown(self):
        with pytest.raises(UnknownType):
            lookup_coxeter_diagram(FamilyDiagram.from_edges(3, [(0, 1, 6), (1, 2, 6)]))

    def test_a2_alcove(self):
        assert identify_group(Simplex.from_facets(*A2_ALCOVE)) == _group("A2~")


class TestAlcoveIndex:
    """Test alcove counting and special vertices."""

    def test_coxeter_simplex_has_index_one(self):
        s = compact_representative(coxeter_family(_group("G2~")))
        found = identify(s)
        assert alcove_index(s, found.alcove) == 1
        assert parallel_interior_mirrors(s, found.arrangement) == []

    def test_non_coxeter_family_is_subdivided(self):
        families = enumerate_families(_group("G2~"))
        coxeter_key = coxeter_family(_group("G2~")).canonical_key
        (other,) = [f for f in families if f.canonical_key != coxeter_key]
        s = compact_representative(other)
        assert not gen_coxeter_diagram(s).is_coxeter
        assert alcove_index(s, identify(s).alcove) > 1

    def test_special_vertex(self):
        s = compact_representative(coxeter_family(_group("B3~")))
        vertex = special_vertex(s)
        assert 0 <= vertex < len(s.vertices)


class TestEnumeratedFamilies:
    """Test the oracle on every enumerated family of small rank."""

    @pytest.mark.parametrize("label", RANK_4_TARGETS)
    def test_identifies_as_target(self, label, families_of):
        for f in families_of(label):
            s = compact_representative(f)
            found = identify(s)
            assert found.group == _group(label)
            assert alcove_index(s, found.alcove) >= 1

    @pytest.mark.parametrize("label", RANK_4_TARGETS)
    def test_special_vertex_exists(self, label, families_of):
        for f in families_of(label):
            s = compact_representative(f)
            assert 0 <= special_vertex(s) < len(s.vertices)

    @pytest.mark.parametrize("label", RANK_3_TARGETS)
    def test_no_interior_mirror_parallel_to_a_facet(self, label, families_of):
        for f in families_of(label):
            s = compact_representative(f)
            assert parallel_interior_mirrors(s, identify(s).arrangement) == []
