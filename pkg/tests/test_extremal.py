from fractions import Fraction
from math import comb

import pytest

from taucrit.criticality import is_tau_critical, is_witness
from taucrit.extremal import (CertificateStore, ExtremalCertificate, InfeasibleSearch,
                              SearchIncomplete, bounds, edge_bound, is_admissible,
                              lower_bound_gap_report, make_certificate, parse_certificate,
                              search_v_max, verify_certificate)
from taucrit.hypercore import (all_hypergraphs, canonical_form, complement,
                               delete_edge, isolated_vertices)
from taucrit.solvers import brute_oracle_tau

from conftest import labeled_graphs, matching


@pytest.fixture(scope="module")
def records():
    return {(r, t): search_v_max(r, t) for r, t in [(2, 1), (2, 2), (2, 3), (2, 4), (3, 1), (3, 2)]}


class TestBounds:
    def test_r3_t2(self):
        b = bounds(3, 2)
        assert (b.lower_gylt, b.conjecture3, b.tuza_upper3, b.gylt_upper3, b.sp_upper3, b.upper_gylt) == \
            (6, 6, 6, 10, 38, 10)

    def test_r3_t4(self):
        b = bounds(3, 4)
        assert b.conjecture3 == 15 and b.tuza_upper3 == 17

    def test_r2_t3(self):
        assert bounds(2, 3).lower_gylt == 6

    def test_tuza_stays_rational(self):
        b = bounds(3, 3)
        assert b.tuza_upper3 == Fraction(43, 4)
        assert isinstance(b.tuza_upper3, Fraction)

    def test_r4_t4(self):
        b = bounds(4, 4)
        assert (b.lower_gylt, b.upper_gylt) == (26, 124)
        assert b.conjecture3 is None

    def test_lower_below_upper(self):
        for r in range(2, 7):
            for t in range(1, 11):
                b = bounds(r, t)
                assert b.lower_gylt <= b.upper_gylt

    def test_r3_lower_is_conjecture_value(self):
        for t in range(1, 101):
            assert comb(t + 1, 2) + (t + 1) == comb(t + 2, 2) == bounds(3, t).lower_gylt

    def test_rejects_bad_parameters(self):
        with pytest.raises(ValueError):
            bounds(1, 3)


class TestSearch:
    def test_t1_single_edge(self, records):
        rec = records[(2, 1)]
        assert rec.best_n == 2 and rec.exhaustive
        assert rec.certificate.hypergraph == matching(1)

    def test_t2_against_all_small_graphs(self, records):
        best = 0
        for n in range(1, 6):
            for g in labeled_graphs(n):
                if isolated_vertices(g) or not g.edges:
                    continue
                rep = is_tau_critical(g)
                if rep.is_tau_critical and rep.tau == 2:
                    best = max(best, n)
        assert best == 4
        rec = records[(2, 2)]
        assert rec.best_n == 4
        assert canonical_form(rec.certificate.hypergraph) == canonical_form(matching(2))

    def test_r3_t2(self, records):
        rec = records[(3, 2)]
        assert rec.best_n == 6 and rec.exhaustive
        assert max(rec.critical_by_order()) == 6

    @pytest.mark.parametrize("r, n_max, t", [(2, 6, 3), (3, 6, 2)])
    def test_finds_every_critical_class(self, records, r, n_max, t):
        found = {canonical_form(h) for h in records[(r, t)].critical}
        brute = set()
        for n in range(1, n_max + 1):
            for g in all_hypergraphs(r, n):
                if not isolated_vertices(g) and g.edges:
                    rep = is_tau_critical(g)
                    if rep.is_tau_critical and rep.tau == t:
                        brute.add(canonical_form(g))
        assert found == brute

    def test_known_graph_counts(self, records):
        # tau-critical graphs with tau = 1..4
        assert [len(records[(2, t)].critical) for t in range(1, 5)] == [1, 2, 4, 8]

    def test_certificates_verify_and_dualize(self, records):
        for rec in records.values():
            for h in rec.critical:
                assert verify_certificate(make_certificate(h)).accepted
                w = is_witness(complement(h))
                assert w.is_witness and w.k == h.n - rec.t

    def test_monotone_in_t(self, records):
        for r in (2, 3):
            ts = sorted(t for rr, t in records if rr == r)
            for a, b in zip(ts, ts[1:]):
                assert records[(r, b)].best_n >= records[(r, a)].best_n + 1

    def test_admissible_bound(self, records):
        for (r, t), rec in records.items():
            assert max(rec.classes_by_edges) <= edge_bound(r, t)

    def test_seed_invariance(self, records):
        for seed in (1, 2):
            rec = search_v_max(2, 4, seed=seed)
            base = records[(2, 4)]
            assert rec.best_n == base.best_n
            assert rec.certificate.code == base.certificate.code
            assert rec.classes_by_edges == base.classes_by_edges

    def test_workers_agree(self, records):
        rec = search_v_max(3, 2, workers=2)
        base = records[(3, 2)]
        assert (rec.best_n, rec.certificate.code, rec.nodes, rec.isomorph_rejections) == \
            (base.best_n, base.certificate.code, base.nodes, base.isomorph_rejections)

    def test_infeasible_exhaustive(self):
        with pytest.raises(InfeasibleSearch):
            search_v_max(3, 3)
        with pytest.raises(InfeasibleSearch):
            search_v_max(4, 2)

    def test_budget_exhaustion_is_explicit(self):
        with pytest.raises(SearchIncomplete) as err:
            search_v_max(2, 4, budget=100)
        assert not err.value.record.exhaustive

    def test_budgeted_mode(self):
        rec = search_v_max(3, 2, mode="budgeted", budget=10 ** 5)
        assert not rec.exhaustive and rec.best_n == 6 and rec.space_exhausted
        small = search_v_max(3, 3, mode="budgeted", budget=50)
        assert small.nodes <= 50 and not small.space_exhausted

    def test_admissibility_is_hereditary_on_critical(self, records):
        for h in records[(2, 4)].critical:
            assert is_admissible(h, 4)
            for e in h.edges:
                assert is_admissible(delete_edge(h, e), 4)

    def test_unknown_mode(self):
        with pytest.raises(ValueError):
            search_v_max(2, 2, mode="random")


class TestCertificates:
    def test_matching_accepted(self):
        assert verify_certificate(make_certificate(matching(2))).accepted

    def test_edge_deletion_rejected(self):
        c = make_certificate(matching(2))
        bad = ExtremalCertificate(delete_edge(c.hypergraph, c.hypergraph.edges[0]), c.r, c.t, c.n,
                                  c.transcript, c.code)
        rep = verify_certificate(bad)
        assert not rep.accepted and rep.failing_clause == "tau"

    def test_five_cycle_feasible_not_extremal(self, c5):
        c = make_certificate(c5)
        assert (c.t, c.n) == (3, 5) and brute_oracle_tau(c5) == 3
        assert verify_certificate(c).accepted
        assert c.n < search_v_max(2, 3).best_n

    def test_text_round_trip(self, k4):
        c = make_certificate(k4)
        text = c.to_text()
        assert "claim r=2 t=3 n=4" in text and "edge 0,1 tau_drop 1" in text
        assert parse_certificate(text) == c

    def test_transcript_divergence(self, c5):
        c = make_certificate(c5)
        bad = ExtremalCertificate(c.hypergraph, c.r, c.t, c.n, ((c.transcript[0][0], 0),) + c.transcript[1:], c.code)
        assert verify_certificate(bad).failing_clause == "transcript"

    def test_non_critical_rejected(self, path3):
        c = make_certificate(path3)
        rep = verify_certificate(c)
        assert not rep.accepted and rep.failing_clause == "critical"

    def test_store(self, tmp_path, c5):
        store = CertificateStore(tmp_path / "certs")
        assert store.add(make_certificate(c5))
        assert not store.add(make_certificate(c5.relabel([1, 0, 2, 3, 4])))
        assert store.add(make_certificate(matching(3)))
        assert store.best_order(2, 3) == 6
        assert len(store.certificates(2, 3)) == 2


class TestGapReport:
    def test_graphs_confirmed(self, records):
        for t in range(1, 5):
            rep = lower_bound_gap_report(2, t, records=[records[(2, t)]])
            assert rep.status == "confirmed" and rep.best_known == 2 * t

    def test_r3_t2_confirmed(self, records):
        rep = lower_bound_gap_report(3, 2, records=[records[(3, 2)]])
        assert rep.status == "confirmed" and rep.best_known == 6

    def test_r3_t2_confirmed_by_bounds_alone(self):
        rep = lower_bound_gap_report(3, 2)
        assert rep.status == "confirmed" and "tuza" in rep.basis

    def test_r4_t4_open(self):
        rep = lower_bound_gap_report(4, 4)
        assert rep.status == "open" and rep.table.lower_gylt == 26 and rep.table.upper_gylt == 124

    def test_below_r_excess_not_a_refutation(self):
        rec = search_v_max(4, 2, mode="budgeted", budget=10 ** 5)
        rep = lower_bound_gap_report(4, 2, records=[rec])
        assert rec.best_n == 9 and rep.status == "exceeded"

    def test_store_feeds_report(self, tmp_path):
        store = CertificateStore(tmp_path)
        store.add(make_certificate(matching(3, r=3)))
        rep = lower_bound_gap_report(3, 3, store=store)
        assert rep.best_known == 9 and rep.status == "open"
