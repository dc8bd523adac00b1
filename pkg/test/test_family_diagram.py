"""
Tests for family diagrams, generalized Coxeter diagrams and DOT output
"""

import tempfile
from pathlib import Path
from unittest.mock import Mock

import pytest

from affine_simplex_families.diagram import (
    FamilyDiagram,
    diagram_from_vectors,
    family_diagram,
    family_diagram_dot,
    gen_coxeter_dot,
    gen_coxeter_from_normals,
    write_dot,
)
from affine_simplex_families.errors import NonCrystallographicAngle
from affine_simplex_families.roots import RootVector

# outward normals of the A2~ alcove: -a1, -a2 and the highest root
A2_ALCOVE_NORMALS = [(-1, 1, 0), (0, -1, 1), (1, 0, -1)]


class TestFamilyDiagram:
    """Test FamilyDiagram validation and helpers."""

    def test_from_edges_fills_right_angles(self):
        d = FamilyDiagram.from_edges(3, [(0, 1, 4)])
        assert d.k[0][2] == 2
        assert d.k[1][0] == 4
        assert d.edges == ((0, 1, 4),)

    def test_rejects_asymmetric(self):
        with pytest.raises(ValueError, match="symmetric"):
            FamilyDiagram(2, ((0, 3), (4, 0)))

    def test_rejects_bad_class(self):
        with pytest.raises(ValueError):
            FamilyDiagram(2, ((0, 5), (5, 0)))

    def test_rejects_loops(self):
        with pytest.raises(ValueError):
            FamilyDiagram(2, ((2, 3), (3, 0)))

    def test_permuted_and_degree(self):
        d = FamilyDiagram.from_edges(3, [(0, 1, 3), (0, 2, 6)])
        assert d.degree(0) == 2
        assert d.degree(1) == 1
        p = d.permuted((2, 0, 1))
        assert p.k[0][1] == 6
        assert p.degree(1) == 2

    def test_diagram_from_vectors(self):
        d = diagram_from_vectors([RootVector((1, -1)), RootVector((0, 1)), RootVector((1, 1))])
        assert d.edges == ((0, 1, 4), (1, 2, 4))

    def test_proportional_vectors_rejected(self):
        with pytest.raises(ValueError, match="same line"):
            diagram_from_vectors([RootVector((1, -1)), RootVector((-1, 1))])

    def test_family_diagram_reads_vectors(self):
        f = Mock(vectors=[RootVector((1, -1, 0)), RootVector((0, 1, -1))])
        assert family_diagram(f).edges == ((0, 1, 3),)


class TestGenCoxeterDiagram:
    """Test dihedral angles computed from outward normals."""

    def test_alcove_is_coxeter(self):
        d = gen_coxeter_from_normals(A2_ALCOVE_NORMALS)
        assert d.is_coxeter
        assert [(i, j, a.k, a.m) for i, j, a in d.edges] == [
            (0, 1, 3, 1),
            (0, 2, 3, 1),
            (1, 2, 3, 1),
        ]
        assert d.family_diagram().edges == ((0, 1, 3), (0, 2, 3), (1, 2, 3))

    def test_flipped_normal_gives_obtuse_dihedral(self):
        normals = [(-1, 1, 0), (0, -1, 1), (-1, 0, 1)]
        d = gen_coxeter_from_normals(normals)
        assert not d.is_coxeter
        assert {a.m for _, _, a in d.edges} == {1, 2}

    def test_parallel_facets(self):
        with pytest.raises(ValueError, match="parallel"):
            gen_coxeter_from_normals([(1, 0), (2, 0)])

    def test_non_crystallographic(self):
        with pytest.raises(NonCrystallographicAngle):
            gen_coxeter_from_normals([(1, 0), (1, 2)])


class TestDotOutput:
    """Test DOT text generation."""

    def test_family_dot(self):
        text = family_diagram_dot(FamilyDiagram.from_edges(3, [(0, 1, 4)]), "C2~")
        assert text.startswith('graph "C2~" {')
        assert "n0 -- n1 [k=4];" in text
        assert "n2;" in text

    def test_coxeter_dot_carries_numerator(self):
        text = gen_coxeter_dot(gen_coxeter_from_normals(A2_ALCOVE_NORMALS))
        assert text.count("m=1") == 3

    def test_write_dot(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = write_dot("graph g {}\n", Path(tmp) / "g.dot")
            assert path.read_text(encoding="utf-8") == "graph g {}\n"
