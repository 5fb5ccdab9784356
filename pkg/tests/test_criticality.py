import itertools

import pytest

from taucrit.criticality import (PreconditionError, check_observation2, extract_tau_critical,
                                 is_tau_critical, is_vertex_critical, is_witness)
from taucrit.hypercore import (Hypergraph, all_hypergraphs, complement, isolated_vertices, members,
                               spanned_subhypergraph)
from taucrit.solvers import brute_oracle_tau, brute_oracle_omega, enumerate_min_transversals

from conftest import cycle, matching, random_hypergraph


class TestTauCritical:
    @pytest.mark.parametrize("r, t", [(2, 3), (3, 2), (4, 1)])
    def test_disjoint_edges(self, r, t):
        rep = is_tau_critical(matching(t, r))
        assert rep.is_tau_critical and rep.tau == t

    def test_path_is_not(self, path3):
        # brute force: tau(P3) = 1 and tau(P3 - {0,1}) = 1
        assert brute_oracle_tau(path3) == 1
        rep = is_tau_critical(path3)
        assert not rep.is_tau_critical
        assert rep.per_edge[(0, 1)] == 1
        assert (0, 1) in rep.non_dropping_edges()

    def test_k4(self, k4):
        rep = is_tau_critical(k4)
        assert rep.tau == brute_oracle_tau(k4) == 3
        assert rep.is_tau_critical and set(rep.per_edge.values()) == {2}

    def test_isolated_vertex_blocks(self):
        rep = is_tau_critical(Hypergraph.from_edges(2, 3, [(0, 1)]))
        assert not rep.is_tau_critical and members(rep.isolated) == [2]

    def test_report_invariant(self, rng):
        for _ in range(40):
            h = random_hypergraph(rng, 2, rng.randint(1, 7))
            rep = is_tau_critical(h)
            expect = rep.isolated == 0 and all(v == rep.tau - 1 for v in rep.per_edge.values())
            assert rep.is_tau_critical == expect


class TestVertexCritical:
    def test_two_disjoint_edges(self):
        assert is_vertex_critical(matching(2)).is_vertex_critical

    def test_isolated_vertex(self):
        rep = is_vertex_critical(Hypergraph.from_edges(2, 3, [(0, 1)]))
        assert not rep.is_vertex_critical
        assert not rep.per_vertex[2].in_some_minimum

    def test_five_cycle(self, c5):
        covered = 0
        for t in enumerate_min_transversals(c5):
            covered |= t
        assert covered == c5.vertex_mask
        assert is_vertex_critical(c5).is_vertex_critical

    def test_delete_vertex_criterion_matches_enumeration(self, rng):
        for _ in range(60):
            h = random_hypergraph(rng, rng.choice([2, 3]), rng.randint(1, 8))
            mins = enumerate_min_transversals(h)
            rep = is_vertex_critical(h)
            for v in range(h.n):
                assert rep.per_vertex[v].in_some_minimum == any(t >> v & 1 for t in mins)
                assert rep.per_vertex[v].avoided_by_some_minimum == any(not t >> v & 1 for t in mins)


class TestObservation2:
    def test_two_disjoint_edges(self):
        rep = check_observation2(matching(2))
        st = rep.per_vertex[0]
        assert members(st.containing) == [0, 2] and members(st.avoiding) == [1, 2]

    @pytest.mark.parametrize("h", [Hypergraph.complete(2, 4), cycle(5)])
    def test_both_exist(self, h):
        tau = brute_oracle_tau(h)
        rep = check_observation2(h)
        for v, st in rep.per_vertex.items():
            assert st.in_some_minimum and st.avoided_by_some_minimum
            assert st.containing >> v & 1 and not st.avoiding >> v & 1
            for t in (st.containing, st.avoiding):
                assert t.bit_count() == tau and all(e & t for e in h.edges)

    def test_rejects_non_critical(self, path3):
        with pytest.raises(PreconditionError) as err:
            check_observation2(path3)
        assert err.value.clause == "not tau-critical"


class TestExtraction:
    def test_fixed_point(self, c5):
        out, rep = extract_tau_critical(c5)
        assert out == c5 and rep.extraction_order == []

    def test_path(self, path3):
        out, rep = extract_tau_critical(path3)
        assert out.m == 1 and out.n == 2
        assert rep.tau == 1 and rep.is_tau_critical
        assert brute_oracle_tau(out) == 1

    def test_k4_with_pendant(self):
        h = Hypergraph.from_edges(2, 5, list(itertools.combinations(range(4), 2)) + [(0, 4)])
        out, rep = extract_tau_critical(h)
        assert rep.tau == 3
        again = is_tau_critical(out)
        assert again.is_tau_critical and again.tau == 3

    def test_requires_edges(self):
        with pytest.raises(PreconditionError):
            extract_tau_critical(Hypergraph(2, 3))

    def test_output_always_critical(self, rng):
        for _ in range(40):
            h = random_hypergraph(rng, rng.choice([2, 3]), rng.randint(3, 8), 0.5)
            if not h.edges:
                continue
            out, rep = extract_tau_critical(h)
            assert rep.is_tau_critical and rep.tau == brute_oracle_tau(h)

    def test_vertex_critical_extraction_spans(self, rng):
        hits = 0
        for _ in range(150):
            h = random_hypergraph(rng, rng.choice([2, 3]), rng.randint(2, 8))
            if not h.edges or isolated_vertices(h):
                continue
            if is_vertex_critical(h).is_vertex_critical:
                hits += 1
                out, rep = extract_tau_critical(h)
                assert out.n == h.n and rep.spanned == h.vertex_mask
        assert hits > 10


def critical_partials_span(h):
    """Do all tau-critical partial hypergraphs with the same tau span V?"""
    tau = brute_oracle_tau(h)
    for k in range(1, h.m + 1):
        for sub in itertools.combinations(h.edges, k):
            part, _ = spanned_subhypergraph(h, sub)
            rep = is_tau_critical(part)
            if rep.is_tau_critical and rep.tau == tau and part.n != h.n:
                return False
    return True


@pytest.mark.parametrize("r, n", [(2, 4), (2, 5), (3, 5)])
def test_vertex_critical_characterization(r, n):
    # both directions on every isomorphism class without isolated vertices
    for h in all_hypergraphs(r, n):
        if not h.edges or isolated_vertices(h) or h.m > 8:
            continue
        assert is_vertex_critical(h).is_vertex_critical == critical_partials_span(h)


class TestWitness:
    def test_four_cycle(self):
        c4 = cycle(4)
        assert c4 == complement(matching(2).relabel([0, 2, 1, 3]))
        rep = is_witness(c4)
        assert rep.k == brute_oracle_omega(c4) == 2
        assert sorted(rep.cliques) == sorted(c4.edges)
        assert rep.is_witness and rep.intersection == 0 and rep.covers

    def test_k4(self, k4):
        rep = is_witness(k4)
        assert not rep.is_witness and rep.intersection == k4.vertex_mask

    def test_bowtie_on_2k_minus_1(self):
        bowtie = Hypergraph.from_edges(2, 5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])
        rep = is_witness(bowtie)
        assert rep.k == 3 and members(rep.intersection) == [2]
        assert not rep.is_witness

    def test_graph_witnesses_have_n_at_least_2k(self, rng):
        for _ in range(300):
            h = random_hypergraph(rng, 2, rng.randint(1, 8))
            rep = is_witness(h)
            if rep.is_witness:
                assert h.n >= 2 * rep.k

    def test_tau_critical_implies_vertex_critical(self):
        for n in range(2, 7):
            for h in all_hypergraphs(2, n):
                if is_tau_critical(h).is_tau_critical:
                    assert is_vertex_critical(h).is_vertex_critical
