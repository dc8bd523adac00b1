"""
Tests for closed-form counts and Gamma constructions of the classical series
"""

import pytest

from affine_simplex_families.diagram import gamma_graph
from affine_simplex_families.enumeration import disambiguate_bc
from affine_simplex_families.errors import UnsupportedType
from affine_simplex_families.roots import GroupType
from affine_simplex_families.series import (
    b_parameters,
    construct_b_family,
    construct_d_family,
    construct_series_families,
    count_families,
    d_parameters,
    gamma_a,
    gamma_b,
    gamma_c,
    gamma_d,
    vectors_from_gamma,
)


def _group(label):
    return GroupType.parse(label)


def _series_labels(max_rank, slow_rank):
    labels = []
    for series, low in (("A", 2), ("B", 3), ("C", 2), ("D", 4)):
        for n in range(low, max_rank + 1):
            label = f"{series}{n}~"
            labels.append(pytest.param(label, marks=pytest.mark.slow) if n >= slow_rank else label)
    return labels


class TestCountFamilies:
    """Test the closed-form counts."""

    @pytest.mark.parametrize(
        "label,expected",
        [
            ("A2~", 1),
            ("A9~", 1),
            ("B3~", 2),
            ("B8~", 7),
            ("C2~", 1),
            ("B2~", 1),
            ("C7~", 1),
            ("D4~", 2),
            ("D5~", 4),
            ("D6~", 6),
            ("D7~", 9),
            ("D8~", 12),
            ("E6~", 17),
            ("E7~", 142),
            ("E8~", 1736),
            ("F4~", 11),
            ("G2~", 2),
        ],
    )
    def test_counts(self, label, expected):
        assert count_families(_group(label)) == expected

    @pytest.mark.parametrize("label", ["A1~", "D3~", "E6"])
    def test_rejects_non_targets(self, label):
        with pytest.raises(UnsupportedType):
            count_families(_group(label))

    def test_parameter_lists_match_counts(self):
        for n in range(3, 10):
            assert len(b_parameters(n)) == count_families(GroupType("B", n, True))
        for n in range(4, 12):
            assert len(d_parameters(n)) == count_families(GroupType("D", n, True))


class TestGammaConstructions:
    """Test the Gamma graphs the constructions start from."""

    def test_gamma_a_is_a_cycle(self):
        g = gamma_a(4)
        assert g.node_count == 5
        assert len(g.edges) == 5
        assert g.cycle_rank == 1
        assert all(d == 2 for d in map(g.degree, range(5)))

    def test_gamma_b_has_one_mark_and_one_plus_edge(self):
        g = gamma_b(5, 3)
        assert g.marks == frozenset({4})
        assert sum(1 for _, _, sign in g.edges if sign == "+") == 1
        assert g.cycle_rank == 1
        assert g.is_connected()

    def test_gamma_b_double_edge(self):
        g = gamma_b(3, 2)
        assert (0, 1, "+") in g.edges
        assert (0, 1, "-") in g.edges

    def test_gamma_b_bad_length(self):
        with pytest.raises(ValueError):
            gamma_b(4, 5)

    def test_gamma_c_is_a_path_with_two_marks(self):
        g = gamma_c(4)
        assert g.marks == frozenset({0, 3})
        assert g.cycle_rank == 0

    def test_gamma_d_joins_two_cycles(self):
        g = gamma_d(7, 2, 3)
        assert g.cycle_rank == 2
        assert g.is_connected()
        assert len(g.edges) == 8

    def test_gamma_d_touching_cycles(self):
        g = gamma_d(5, 3, 3)
        assert g.degree(2) == 4
        assert len(g.edges) == 6

    def test_gamma_d_rejects_bad_pair(self):
        with pytest.raises(ValueError):
            gamma_d(5, 3, 4)

    def test_vectors_round_trip_through_gamma(self):
        g = gamma_b(4, 2)
        f = construct_b_family(4, 2)
        assert len(vectors_from_gamma(g)) == 5
        rebuilt = gamma_graph(f)
        assert rebuilt.marked_count == 1
        assert rebuilt.cycle_rank == 1


class TestConstructSeriesFamilies:
    """Test the constructed families."""

    @pytest.mark.parametrize("label", ["A5~", "B6~", "C5~", "D6~", "D7~"])
    def test_count_and_distinct_keys(self, label):
        families = construct_series_families(_group(label))
        keys = [f.canonical_key for f in families]
        assert len(families) == count_families(_group(label))
        assert len(set(keys)) == len(keys)

    def test_b_families_are_b(self):
        for length in b_parameters(5):
            assert disambiguate_bc(construct_b_family(5, length)) == _group("B5~")

    def test_c_family_is_c(self):
        (family,) = construct_series_families(_group("C4~"))
        assert disambiguate_bc(family) == _group("C4~")

    @pytest.mark.parametrize("n", range(4, 9))
    def test_red_edge_choice_gives_same_family(self, n):
        for n1, n2 in d_parameters(n):
            reference = construct_d_family(n, n1, n2).canonical_key
            for a in range(n1):
                for b in range(n2):
                    assert construct_d_family(n, n1, n2, (a, b)).canonical_key == reference

    @pytest.mark.parametrize("label", _series_labels(6, slow_rank=6))
    def test_matches_enumeration(self, label, families_of):
        constructed = {f.canonical_key for f in construct_series_families(_group(label))}
        enumerated = {f.canonical_key for f in families_of(label)}
        assert constructed == enumerated

    def test_exceptional_has_no_construction(self):
        with pytest.raises(UnsupportedType):
            construct_series_families(_group("F4~"))
