import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kpacking import (
    FAMILIES,
    FamilyParameterError,
    FamilySpec,
    antiweb,
    circulant_matrix,
    clique_cycle_family,
    complement,
    complete,
    cycle,
    enumerate_connected_graphs,
    is_chordal,
    is_connected,
    is_isomorphic,
    pyramid,
    three_sun,
    universal_nodes,
    web,
    wheel,
)


class TestBasicFamilies:
    def test_complete(self):
        assert complete(1).edge_count() == 0
        assert complete(5).edge_count() == 10
        assert complete(5).degree_sequence() == (4,) * 5

    def test_cycle(self):
        g = cycle(5)
        assert g.edges() == ((1, 2), (1, 5), (2, 3), (3, 4), (4, 5))
        assert cycle(3) == complete(3)
        with pytest.raises(FamilyParameterError):
            cycle(2)

    def test_wheel_hub_is_last_label(self):
        g = wheel(7)
        assert universal_nodes(g) == (7,)
        assert g.degree_sequence() == (3, 3, 3, 3, 3, 3, 6)
        with pytest.raises(FamilyParameterError):
            wheel(3)


class TestWebs:
    def test_web_edges_by_circular_distance(self):
        g = web(6, 2)
        assert g.has_edge(1, 2)
        assert g.has_edge(1, 3)
        assert not g.has_edge(1, 4)  # distance 3
        assert g.degree_sequence() == (4,) * 6

    def test_web_degenerates_to_complete(self):
        # distance bound >= floor(n/2) makes every pair adjacent
        assert web(5, 2) == complete(5)
        assert web(4, 2) == complete(4)

    def test_web_with_unit_distance_is_cycle(self):
        assert web(6, 1) == cycle(6)

    def test_antiweb(self):
        assert antiweb(7, 2) == complement(web(7, 2))
        assert antiweb(5, 1).edge_count() == 5  # complement of C5 is C5

    def test_parameter_validation(self):
        with pytest.raises(FamilyParameterError):
            web(1, 1)
        with pytest.raises(FamilyParameterError):
            web(5, 0)


class TestPyramids:
    def test_outer_edges_added_lexicographically(self):
        outer = ((4, 5), (4, 6), (5, 6))
        for j in (1, 2, 3):
            g = pyramid(j)
            assert g.n == 6
            present = [e for e in outer if g.has_edge(*e)]
            assert present == list(outer[:j])

    def test_one_more_edge_than_the_sun(self):
        assert pyramid(1).edge_count() == three_sun().edge_count() + 1

    def test_octahedron_case(self):
        assert is_isomorphic(pyramid(3), web(6, 2))

    def test_parameter_range(self):
        with pytest.raises(FamilyParameterError):
            pyramid(0)
        with pytest.raises(FamilyParameterError):
            pyramid(4)


class TestThreeSun:
    def test_shape(self):
        g = three_sun()
        assert g.n == 6
        assert g.degree_sequence() == (2, 2, 2, 4, 4, 4)
        assert is_chordal(g)
        # outer nodes 4, 5, 6 are pairwise non-adjacent
        assert not g.has_edge(4, 5)
        assert not g.has_edge(5, 6)
        assert not g.has_edge(4, 6)


class TestCirculantMatrix:
    def test_row_structure(self):
        m = circulant_matrix(5, 2)
        # row i marks the two successors of i, wrapping modulo 5
        assert m.to_lists() == [
            [0, 1, 1, 0, 0],
            [0, 0, 1, 1, 0],
            [0, 0, 0, 1, 1],
            [1, 0, 0, 0, 1],
            [1, 1, 0, 0, 0],
        ]

    def test_full_band(self):
        m = circulant_matrix(4, 3)
        assert all(sum(row) == 3 for row in m.to_lists())
        assert not m.has_zero_column()

    def test_parameter_range(self):
        with pytest.raises(FamilyParameterError):
            circulant_matrix(4, 4)
        with pytest.raises(FamilyParameterError):
            circulant_matrix(4, 0)


class TestCliqueCycleFamily:
    def test_smallest_member_is_the_sun(self):
        assert is_isomorphic(clique_cycle_family(1), three_sun())

    def test_structure(self):
        g = clique_cycle_family(2)
        assert g.n == 10
        evens = [v for v in g.nodes() if v % 2 == 0]
        for i, u in enumerate(evens):
            for v in evens[i + 1 :]:
                assert g.has_edge(u, v)
        assert g.neighbours(1) == (2, 10)
        assert g.neighbours(3) == (2, 4)

    def test_chordal_for_small_parameters(self):
        assert is_chordal(clique_cycle_family(1))
        assert is_chordal(clique_cycle_family(2))

    def test_parameter_range(self):
        with pytest.raises(FamilyParameterError):
            clique_cycle_family(0)


class TestCensus:
    def test_counts(self):
        expected = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853}
        for n, count in expected.items():
            assert sum(1 for _ in enumerate_connected_graphs(n)) == count

    def test_all_connected(self):
        for n in range(1, 7):
            for g in enumerate_connected_graphs(n):
                assert g.n == n
                assert is_connected(g)

    def test_pairwise_non_isomorphic_small(self):
        for n in range(1, 6):
            found = list(enumerate_connected_graphs(n))
            for i, g in enumerate(found):
                for h in found[i + 1 :]:
                    assert not is_isomorphic(g, h)

    def test_range_validation(self):
        with pytest.raises(FamilyParameterError):
            list(enumerate_connected_graphs(0))
        with pytest.raises(FamilyParameterError):
            list(enumerate_connected_graphs(9))


class TestFamilySpec:
    def test_build_graph(self):
        spec = FamilySpec("wheel", (5,))
        assert spec.build() == wheel(5)

    def test_build_matrix(self):
        spec = FamilySpec("circulant", (5, 2))
        assert spec.build() == circulant_matrix(5, 2)

    def test_unknown_family(self):
        with pytest.raises(FamilyParameterError):
            FamilySpec("moebius", (5,)).build()

    def test_wrong_arity(self):
        with pytest.raises(FamilyParameterError):
            FamilySpec("cycle", (4, 2)).build()

    @given(st.sampled_from(sorted(FAMILIES)))
    @settings(max_examples=20)
    def test_registry_arities_are_consistent(self, name):
        builder, arity, kind = FAMILIES[name]
        assert kind in ("graph", "matrix")
        assert arity >= 0
