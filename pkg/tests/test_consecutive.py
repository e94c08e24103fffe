import pytest

from cyclespectrum import (
    ContradictionError,
    Graph,
    GraphError,
    HypothesisError,
    complete,
    complete_bipartite,
    construct_consecutive_cycles,
    cycle_spectrum,
    find_bridging_index,
    is_good_triple,
    is_nice,
    petersen,
    validate_cycle,
    verify_kcycles,
)
from cyclespectrum.consecutive import (
    ROUTE_BICONNECTED,
    ROUTE_DOUBLE_CONTACT,
    ROUTE_ENDBLOCK,
    ROUTE_TRIANGLE,
)
from conftest import (
    cycle_blowup_pairs,
    planted_biconnected_remainder,
    planted_degree_five,
    planted_endblock_remainder,
)


class TestVerify:
    def test_petersen_out_of_range_k3(self):
        rep = verify_kcycles(petersen(), 3)
        assert not rep.in_range and not rep.applicable
        assert rep.holds is False  # the spectrum note: no three consecutive
        assert not rep.alarm
        assert "outside the proved range" in rep.note

    def test_petersen_k4_hypotheses_fail(self):
        rep = verify_kcycles(petersen(), 4)
        assert rep.hypotheses["min_degree"] is False
        assert not rep.applicable and not rep.alarm

    def test_bipartite_hypothesis_fails(self):
        rep = verify_kcycles(complete_bipartite(4, 4), 4)
        assert rep.hypotheses["nonbipartite"] is False
        assert rep.hypotheses["three_connected"] is True
        assert not rep.applicable

    def test_positive_small(self):
        rep = verify_kcycles(complete(6), 4)
        assert rep.applicable and rep.holds and not rep.alarm
        assert tuple(len(c) for c in rep.witnesses) == (3, 4, 5, 6)

    def test_witnesses_validate(self):
        rep = verify_kcycles(complete(7), 5)
        for cyc in rep.witnesses:
            validate_cycle(complete(7), cyc)

    def test_bad_k(self):
        with pytest.raises(GraphError):
            verify_kcycles(petersen(), 0)


class TestConstructFallbackRoutes:
    def test_triangle_route(self):
        cert = construct_consecutive_cycles(complete(6), 4)
        assert cert.route == ROUTE_TRIANGLE
        assert cert.lengths == (3, 4, 5, 6)
        for cyc in cert.cycles:
            validate_cycle(complete(6), cyc)

    def test_double_contact_route(self):
        g = cycle_blowup_pairs()
        cert = construct_consecutive_cycles(g, 4)
        assert cert.route == ROUTE_DOUBLE_CONTACT
        assert cert.provenance["double_contact_vertex"] == 5
        assert len(cert.lengths) == 4
        assert set(cert.lengths) <= set(cycle_spectrum(g).lengths)

    def test_scope_gate(self):
        with pytest.raises(GraphError):
            construct_consecutive_cycles(complete(8), 6)

    def test_hypothesis_gate(self):
        with pytest.raises(HypothesisError):
            construct_consecutive_cycles(petersen(), 4)  # min degree 3 < 4
        with pytest.raises(HypothesisError):
            construct_consecutive_cycles(complete_bipartite(4, 4), 4)
        with pytest.raises(HypothesisError):
            construct_consecutive_cycles(complete(5), 4)  # order below k+2


class TestConstructiveBiconnected:
    def test_k4_certificate(self):
        g = planted_biconnected_remainder()
        cert = construct_consecutive_cycles(g, 4)
        assert cert.route == ROUTE_BICONNECTED
        assert cert.lengths == (6, 7, 8, 9)
        for cyc in cert.cycles:
            validate_cycle(g, cyc)
        # the pair of arc paths has consecutive lengths s+2, s+3
        q1, q2 = cert.provenance["q1"], cert.provenance["q2"]
        s = (len(cert.provenance["odd_cycle"]) - 1) // 2
        assert len(q1) - 1 == s + 2 and len(q2) - 1 == s + 3
        # the remainder family is a nice pair
        assert cert.provenance["family_kind"] == "nice"
        assert is_nice([tuple(p) for p in cert.provenance["family"]])
        # assembled pool holds 2k-4 cycles
        assert len(cert.provenance["pool_lengths"]) == 2 * 4 - 4

    def test_k4_lengths_in_spectrum(self):
        g = planted_biconnected_remainder()
        cert = construct_consecutive_cycles(g, 4)
        assert set(cert.lengths) <= set(cycle_spectrum(g).lengths)

    def test_k5_certificate(self):
        g = planted_degree_five()
        cert = construct_consecutive_cycles(g, 5)
        assert cert.route == ROUTE_BICONNECTED
        assert len(cert.lengths) == 5
        assert cert.provenance["family_kind"] == "good"
        fam = [tuple(p) for p in cert.provenance["family"]]
        assert is_good_triple(*fam)
        assert len(cert.provenance["pool_lengths"]) == 2 * 5 - 4
        for cyc in cert.cycles:
            validate_cycle(g, cyc)

    def test_json_shape(self):
        cert = construct_consecutive_cycles(planted_biconnected_remainder(), 4)
        d = cert.to_json_dict()
        assert d["schema"] == "1"
        assert d["route"] == ROUTE_BICONNECTED
        assert d["lengths"] == list(range(d["lengths"][0], d["lengths"][0] + 4))


class TestConstructiveEndblock:
    def test_k4_certificate(self):
        g = planted_endblock_remainder()
        cert = construct_consecutive_cycles(g, 4)
        assert cert.route == ROUTE_ENDBLOCK
        assert cert.provenance["bridging_index"] == 0
        assert len(cert.lengths) == 4
        for cyc in cert.cycles:
            validate_cycle(g, cyc)
        # arc paths have lengths s+2 and s+3; pool carries 2k-4 cycles
        q1, q2 = cert.provenance["q1"], cert.provenance["q2"]
        s = (len(cert.provenance["odd_cycle"]) - 1) // 2
        assert len(q1) - 1 == s + 2 and len(q2) - 1 == s + 3
        assert len(cert.provenance["pool_lengths"]) == 2 * 4 - 4
        # connector runs from the far attachment to the cut vertex
        t = cert.provenance["t_path"]
        assert t[0] == 19 and t[-1] == 5

    def test_hypotheses_of_planted_instance(self):
        from cyclespectrum import connectivity_at_least, is_bipartite, is_triangle_free

        g = planted_endblock_remainder()
        assert g.min_degree() >= 4
        assert is_triangle_free(g)
        assert not is_bipartite(g).bipartite
        assert connectivity_at_least(g, 3).holds


class TestRouteAgreement:
    def test_constructive_success_implies_verifier_positive(self):
        for g, k in (
            (planted_biconnected_remainder(), 4),
            (planted_endblock_remainder(), 4),
            (planted_degree_five(), 5),
        ):
            cert = construct_consecutive_cycles(g, k)
            assert cert.route in (ROUTE_BICONNECTED, ROUTE_ENDBLOCK)
            report = verify_kcycles(g, k)
            assert report.applicable and report.holds


class TestBridgingIndex:
    def make(self, d1_contact: int, g2_contact: int):
        # 5-cycle 0..4, d1 = {5, 6} with cut 6, g2 = {6, 7}
        edges = [(i, (i + 1) % 5) for i in range(5)]
        edges += [(5, 6), (6, 7)]
        edges += [(d1_contact, 5), (g2_contact, 7)]
        return Graph.from_edges(8, edges)

    def test_least_index_zero(self):
        g = self.make(0, 2)
        cyc = tuple(range(5))
        assert find_bridging_index(g, cyc, {5, 6}, 6, {6, 7}) == 0

    def test_unique_index_matches_scan(self):
        g = self.make(3, 0)
        cyc = tuple(range(5))
        got = find_bridging_index(g, cyc, {5, 6}, 6, {6, 7})
        brute = [
            i
            for i in range(5)
            if (g.adj[cyc[i]] & (1 << 5)) and (g.adj[cyc[(i + 2) % 5]] & 0b11000000)
        ]
        assert got == brute[0] == 3

    def test_bad_setup_rejected(self):
        g = self.make(0, 2)
        cyc = tuple(range(5))
        with pytest.raises(GraphError):
            find_bridging_index(g, cyc, {6}, 6, {6, 7})  # first side empty
        with pytest.raises(GraphError):
            find_bridging_index(g, cyc, {5, 6}, 6, {7})  # cut missing from g2
        with pytest.raises(GraphError):
            find_bridging_index(g, cyc, {5}, 5, {6, 7})  # not a partition

    def test_even_cycle_rejected(self):
        edges = [(i, (i + 1) % 6) for i in range(6)] + [(6, 7), (0, 6)]
        g = Graph.from_edges(8, edges)
        with pytest.raises(GraphError):
            find_bridging_index(g, tuple(range(6)), {6, 7}, 7, {7})

    def test_no_index_contradiction(self):
        # d1 attached but g2 side never reachable from the +s position
        edges = [(i, (i + 1) % 5) for i in range(5)]
        edges += [(5, 6), (6, 7), (0, 5)]
        g = Graph.from_edges(8, edges)
        with pytest.raises(ContradictionError):
            find_bridging_index(g, tuple(range(5)), {5, 6}, 6, {6, 7})
