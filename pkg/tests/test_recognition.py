import pytest
from hypothesis import given, settings

from kpacking import (
    BinaryMatrix,
    ZeroColumnError,
    clique_graph,
    closed_neighbourhood_matrix,
    complete,
    cycle,
    enumerate_connected_graphs,
    find_undominated_obstruction,
    is_extended_clique_node_by_cliques,
    is_extended_clique_node_by_pattern,
    is_isomorphic,
    is_totally_balanced,
    maximal_cliques,
    recheck_certificate,
    three_sun,
    web,
    wheel,
)
from kpacking.errors import CapExceededError

from strategies import binary_matrices, connected_graphs


def both_verdicts(m):
    a = is_extended_clique_node_by_cliques(m)
    b = is_extended_clique_node_by_pattern(m)
    assert a.verdict == b.verdict
    return a.verdict


class TestCliqueGraph:
    def test_square_neighbourhoods_give_complete_graph(self):
        gq = clique_graph(closed_neighbourhood_matrix(cycle(4)))
        assert gq == complete(4)

    def test_five_cycle(self):
        gq = clique_graph(closed_neighbourhood_matrix(cycle(5)))
        assert is_isomorphic(gq, complete(5))

    def test_six_cycle(self):
        gq = clique_graph(closed_neighbourhood_matrix(cycle(6)))
        assert is_isomorphic(gq, web(6, 2))

    def test_rectangular_matrix(self):
        m = BinaryMatrix.from_rows([[1, 1, 0], [0, 1, 1]])
        gq = clique_graph(m)
        assert gq.edges() == ((1, 2), (2, 3))

    def test_zero_column_rejected(self):
        with pytest.raises(ZeroColumnError):
            clique_graph(BinaryMatrix.from_rows([[1, 0], [1, 0]]))


class TestExactRecognizers:
    def test_identity_matrix_accepted(self):
        m = BinaryMatrix.from_rows([[1, 0], [0, 1]])
        assert both_verdicts(m) is True

    def test_interval_style_matrix_accepted(self):
        m = BinaryMatrix.from_rows([[1, 1, 0], [0, 1, 1], [0, 0, 1]])
        assert both_verdicts(m) is True

    def test_cycle_neighbourhoods_rejected(self):
        for n in (4, 5, 6):
            assert both_verdicts(closed_neighbourhood_matrix(cycle(n))) is False

    def test_sun_neighbourhoods_rejected(self):
        assert both_verdicts(closed_neighbourhood_matrix(three_sun())) is False

    def test_positive_certificate_is_a_cover(self):
        m = closed_neighbourhood_matrix(wheel(6))
        cert = is_extended_clique_node_by_cliques(m)
        assert cert.verdict is True
        supports = {m.row_support(i) for i in range(1, m.rows + 1)}
        gq = clique_graph(m)
        for clique in maximal_cliques(gq):
            assert clique in supports

    def test_negative_clique_certificate(self):
        m = closed_neighbourhood_matrix(web(6, 2))
        cert = is_extended_clique_node_by_cliques(m)
        assert cert.verdict is False
        assert cert.uncovered_clique == (1, 2, 3, 4, 5, 6)

    def test_negative_pattern_certificate(self):
        m = closed_neighbourhood_matrix(web(6, 2))
        cert = is_extended_clique_node_by_pattern(m)
        assert cert.verdict is False
        assert cert.pattern_rows == (1, 2, 3)
        assert cert.pattern_zeros == (4, 5, 6)
        assert cert.pattern_columns == (1, 2, 3, 4, 5, 6)
        # the zero positions really carry the claimed 0/1 pattern
        r1, r2, r3 = cert.pattern_rows
        z1, z2, z3 = cert.pattern_zeros
        assert m.entry(r1, z1) == 0 and m.entry(r2, z1) == 1 and m.entry(r3, z1) == 1
        assert m.entry(r1, z2) == 1 and m.entry(r2, z2) == 0 and m.entry(r3, z2) == 1
        assert m.entry(r1, z3) == 1 and m.entry(r2, z3) == 1 and m.entry(r3, z3) == 0

    def test_input_validation(self):
        with pytest.raises(ValueError):
            is_extended_clique_node_by_cliques(BinaryMatrix.from_rows([[1, 1, 0]]))
        with pytest.raises(ZeroColumnError):
            is_extended_clique_node_by_pattern(BinaryMatrix.from_rows([[1, 0], [1, 0]]))

    @given(connected_graphs(max_nodes=6))
    @settings(max_examples=150, deadline=None)
    def test_methods_agree_on_neighbourhood_matrices(self, g):
        both_verdicts(closed_neighbourhood_matrix(g))

    def test_methods_agree_exhaustively_to_five_nodes(self):
        for n in range(1, 6):
            for g in enumerate_connected_graphs(n):
                both_verdicts(closed_neighbourhood_matrix(g))


class TestStructuralScreen:
    def test_cycles_are_their_own_obstruction(self):
        for n, kind in ((4, "cycle4"), (5, "cycle5"), (6, "cycle6")):
            cert = find_undominated_obstruction(cycle(n))
            assert cert.verdict is False
            assert cert.obstruction_kind == kind
            assert cert.obstruction_nodes == tuple(range(1, n + 1))

    def test_sun_obstruction(self):
        cert = find_undominated_obstruction(three_sun())
        assert cert.verdict is False
        assert cert.obstruction_kind == "sun"
        assert cert.obstruction_nodes == (1, 2, 3, 4, 5, 6)

    def test_wheel_rim_is_dominated_by_the_hub(self):
        cert = find_undominated_obstruction(wheel(5))
        assert cert.verdict is True
        assert cert.dominated == (("cycle4", (1, 2, 3, 4), 5),)

    def test_long_cycles_escape_the_screen(self):
        # an induced 7-cycle is not one of the screened shapes
        cert = find_undominated_obstruction(cycle(7))
        assert cert.verdict is True
        assert cert.dominated == ()

    def test_screen_diverges_from_exact_methods(self):
        # smallest disagreement: the octahedron passes the screen but both
        # exact recognizers reject its neighbourhood matrix
        g = web(6, 2)
        assert find_undominated_obstruction(g).verdict is True
        assert both_verdicts(closed_neighbourhood_matrix(g)) is False


class TestTotallyBalanced:
    def test_examples(self):
        assert is_totally_balanced(BinaryMatrix.from_rows([[1, 1, 0], [0, 1, 1]]))
        assert is_totally_balanced(closed_neighbourhood_matrix(complete(4)))
        assert not is_totally_balanced(closed_neighbourhood_matrix(cycle(4)))

    def test_column_cap(self):
        rows = [[1] * 17]
        with pytest.raises(CapExceededError):
            is_totally_balanced(BinaryMatrix.from_rows(rows))

    @given(binary_matrices(max_rows=4, max_cols=4))
    @settings(max_examples=100)
    def test_totally_balanced_implies_accepted(self, m):
        # balanced inputs are always extended clique-node matrices;
        # square ones with full diagonal support the recognizers directly
        if m.is_square() and all(m.entry(i, i) == 1 for i in range(1, m.rows + 1)):
            if is_totally_balanced(m):
                assert both_verdicts(m) is True


class TestCertificateRecheck:
    def test_round_trip_negative(self):
        m = closed_neighbourhood_matrix(web(6, 2))
        for cert in (
            is_extended_clique_node_by_cliques(m),
            is_extended_clique_node_by_pattern(m),
        ):
            assert recheck_certificate(cert.to_payload(), matrix=m)

    def test_round_trip_structural(self):
        g = three_sun()
        cert = find_undominated_obstruction(g)
        assert recheck_certificate(cert.to_payload(), graph=g)

    def test_tampered_witness_rejected(self):
        m = closed_neighbourhood_matrix(web(6, 2))
        payload = is_extended_clique_node_by_pattern(m).to_payload()
        payload["pattern_zeros"] = [1, 2, 3]
        assert not recheck_certificate(payload, matrix=m)

    def test_wrong_input_rejected(self):
        m = closed_neighbourhood_matrix(web(6, 2))
        payload = is_extended_clique_node_by_cliques(m).to_payload()
        other = closed_neighbourhood_matrix(complete(6))
        assert not recheck_certificate(payload, matrix=other)
