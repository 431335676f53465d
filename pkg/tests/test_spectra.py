import math

import pytest

from conftest import catalog_sample, random_hgraph
from cyclograph import catalog, gram, spectra
from cyclograph.graph import HGraph, single_edge, single_vertex
from cyclograph.poly import IntPoly
from cyclograph.ring import EISENSTEIN, GAUSSIAN, RATIONAL, QuadInt


class TestIsCyclotomic:
    def test_examples(self):
        assert spectra.is_cyclotomic(catalog.sporadic("S_14"), cross_check=True)
        assert not spectra.is_cyclotomic(catalog.excluded("XA_1"), cross_check=True)

    def test_star_k15(self):
        star = HGraph.from_edges(RATIONAL, 6, [(0, i, 1) for i in range(1, 6)])
        assert star.charpoly() == IntPoly((0, 0, 0, 0, -5, 0, 1))  # x^4 (x^2-5)
        assert not spectra.is_cyclotomic(star, cross_check=True)

    def test_witness_structure(self):
        v = spectra.is_cyclotomic(catalog.sporadic("S_2"), cross_check=True)
        assert (v.mult_minus2, v.mult_plus2, v.interior_count) == (1, 1, 0)
        assert v.resolvent_factors is not None
        obj = v.to_json_obj()
        assert obj["witness"]["mult_at_minus2"] == 1

    def test_three_oracles_agree_on_suite_sample(self, rng):
        graphs = catalog_sample()
        graphs += [random_hgraph(rng, max_norm=4) for _ in range(60)]
        for g in graphs:
            sturm = spectra.is_cyclotomic(g, cross_check=True).is_cyclotomic
            assert sturm == spectra.is_cyclotomic_fast(g)
            assert sturm == gram.is_cyclotomic_psd(g)

    def test_degree_gate(self, rng):
        # Lemma-style adversarial graphs: one vertex pushed past degree 4
        cases = [
            single_vertex(RATIONAL, 3),
            single_vertex(RATIONAL, 2).attach_vertex(0, {0: 1}),
            single_edge(QuadInt(2, 0, RATIONAL)).attach_vertex(0, {0: 1}),
            HGraph.from_edges(RATIONAL, 6, [(0, i, 1) for i in range(1, 6)]),
            single_edge(QuadInt(1, 1, GAUSSIAN)).attach_vertex(
                0, {0: QuadInt(2, 0, GAUSSIAN)}),
        ]
        for g in cases:
            assert max(g.degrees()) > 4
            assert not spectra.is_cyclotomic(g, cross_check=True)
            assert not spectra.is_cyclotomic_fast(g)

    def test_monotone_under_deletion(self, rng):
        for _ in range(15):
            m = catalog.make_T(4, "omega")
            size = rng.randint(1, 7)
            sub = m.induced_subgraph(rng.sample(range(m.n), size))
            assert spectra.is_cyclotomic_fast(sub)


class TestIsMaximal:
    def test_examples(self):
        assert spectra.is_maximal(catalog.make_T(3, "plain"))
        assert spectra.is_maximal(catalog.sporadic("S_1"))
        assert not spectra.is_maximal(catalog.make_P(1, 1))

    def test_errors(self):
        from cyclograph.graph import disjoint_union
        e = single_edge(QuadInt(1, 0, RATIONAL))
        with pytest.raises(ValueError):
            spectra.is_maximal(disjoint_union(e, e))
        with pytest.raises(ValueError):
            spectra.is_maximal(single_vertex(RATIONAL, 3))

    def test_4I_catalog_graphs_are_maximal_with_pm2_spectrum(self):
        from cyclograph.poly import root_multiplicity_at
        for g in [catalog.sporadic("S_5"), catalog.make_C(2),
                  catalog.make_C_charged(2, False), catalog.sporadic("S_4t")]:
            assert g.square_is_4I()
            assert spectra.is_maximal(g)
            chi = g.charpoly()
            a = root_multiplicity_at(chi, 2)
            b = root_multiplicity_at(chi, -2)
            assert a + b == g.n


class TestMahler:
    def test_cyclotomic_is_exactly_one(self):
        for g in [catalog.sporadic("S_16"), catalog.make_T(3, "omega"),
                  catalog.make_C_odd(2)]:
            assert spectra.mahler(g) == 1.0

    def test_charge_3_vertex(self):
        g = single_vertex(RATIONAL, 3)
        assert spectra.mahler(g, 1e-9) == pytest.approx((3 + math.sqrt(5)) / 2,
                                                        abs=1e-9)

    def test_empty_graph(self):
        assert spectra.mahler(HGraph(RATIONAL, [0, 0, 0], {})) == 1.0

    def test_bad_tol(self):
        with pytest.raises(ValueError):
            spectra.mahler(single_vertex(RATIONAL, 0), tol=-1)


class TestAttachmentEnumeration:
    def test_respects_degree_budget(self, rng):
        g = catalog.make_P(1, 1).promote(GAUSSIAN)
        weights, charges = spectra.full_attachment_sets(GAUSSIAN)
        seen = 0
        for charge, incident in spectra.attachment_candidates(g, weights, charges):
            seen += 1
            h = g.attach_vertex(charge, incident)
            assert h.degree(h.n - 1) <= 4
            assert incident
        assert seen > 0

    def test_full_sets(self):
        weights, charges = spectra.full_attachment_sets(EISENSTEIN)
        assert len(weights) == 18 and charges == (-2, -1, 0, 1, 2)
