from fractions import Fraction

import pytest

from conftest import random_hgraph
from cyclograph import catalog, gram
from cyclograph.gram import (QF, GramVector, NotCyclotomicError,
                             gram_decompose, verify_hollow_identities,
                             verify_lemma41)
from cyclograph.graph import single_vertex
from cyclograph.poly import root_multiplicity_at
from cyclograph.ring import GAUSSIAN, RATIONAL


class TestDecomposition:
    def test_S2_rank_one(self):
        dec = gram_decompose(catalog.sporadic("S_2"))
        assert dec.rank == 1
        assert dec.reassembles_exactly()

    def test_squared_lengths_by_charge(self):
        dec = gram_decompose(catalog.sporadic("S_4"))
        for v, c in enumerate(dec.graph.charges):
            assert dec.gram_vectors[v].inner(dec.gram_vectors[v]) == 2 + c

    def test_charge_minus_one_length(self):
        dec = gram_decompose(single_vertex(RATIONAL, -1))
        assert dec.gram_vectors[0].inner(dec.gram_vectors[0]) == 1

    def test_rejects_non_cyclotomic(self):
        with pytest.raises(NotCyclotomicError):
            gram_decompose(catalog.excluded("XA_1"))

    def test_reassembles_on_catalog(self):
        for name in ["S_5", "S_7", "S_8t", "S_10", "S_14"]:
            dec = gram_decompose(catalog.sporadic(name))
            assert dec.reassembles_exactly()
        dec = gram_decompose(catalog.make_T(4, "i"))
        assert dec.reassembles_exactly()

    def test_inner_products_match_adjacency(self):
        g = catalog.sporadic("S_4t")
        dec = gram_decompose(g)
        for u in range(g.n):
            for v in range(g.n):
                e = g.entry(u, v)
                ip = dec.gram_vectors[u].inner(dec.gram_vectors[v])
                shift = 2 if u == v else 0
                assert ip == QF(e.a + shift, e.b, g.ring)

    def test_rank_equals_n_minus_mult_minus2(self, rng):
        for _ in range(12):
            m = catalog.make_T(4, "plain")
            sub = m.induced_subgraph(rng.sample(range(8), rng.randint(1, 8)))
            dec = gram_decompose(sub)
            chi = sub.charpoly()
            assert dec.rank == sub.n - root_multiplicity_at(chi, -2)

    def test_visibly_maximal_rank_half_n(self):
        for g in [catalog.make_T(3, "plain"), catalog.sporadic("S_16"),
                  catalog.sporadic("S_8d")]:
            if sum(g.charges) == 0:
                assert gram_decompose(g).rank == g.n // 2


class TestLemma41:
    def toy(self):
        metric = tuple(Fraction(1) for _ in range(8))
        vec = lambda cs: GramVector([QF(c, 0, RATIONAL) for c in cs], metric)
        xs = [vec([1 if i // 2 == j else 0 for i in range(8)])
              for j in range(4)]
        v = vec([Fraction(1, 2)] * 8)
        return xs, v, vec

    def test_toy_model_true(self):
        xs, v, _ = self.toy()
        assert verify_lemma41(xs, v) is True

    def test_perturbed_false(self):
        xs, _, vec = self.toy()
        bumped = vec([Fraction(1, 2)] * 7 + [Fraction(3, 2)])
        assert verify_lemma41(xs, bumped) is False
        with pytest.raises(ValueError):
            verify_lemma41(xs, bumped, strict=True)

    def test_from_T8_gram_vectors(self):
        t8 = catalog.make_T(4, "plain")
        dec = gram_decompose(t8)
        for v in range(3):
            nbrs = t8.neighbors(v)
            xs = [dec.gram_vectors[u] for u in nbrs]
            assert verify_lemma41(xs, dec.gram_vectors[v], strict=True)


class TestHollowIdentities:
    @pytest.mark.parametrize("l,r", [(0, 2), (1, 1), (2, 0), (1, 2), (3, 2)])
    def test_p_lr(self, l, r):
        assert verify_hollow_identities("P_lr", l=l, r=r)

    @pytest.mark.parametrize("r", [2, 3, 4])
    def test_p_odd(self, r):
        assert verify_hollow_identities("P_odd", r=r)

    @pytest.mark.parametrize("r", [3, 4, 5])
    def test_p_charged(self, r):
        assert verify_hollow_identities("P_charged", r=r)

    def test_range_errors(self):
        with pytest.raises(ValueError):
            verify_hollow_identities("P_lr", l=0, r=1)
        with pytest.raises(ValueError):
            verify_hollow_identities("P_charged", r=2)
        with pytest.raises(ValueError):
            verify_hollow_identities("nope", r=3)


def test_psd_oracle(rng):
    for _ in range(40):
        g = random_hgraph(rng, max_norm=4)
        assert gram.is_cyclotomic_psd(g) == (
            gram.hermitian_psd(g, +1) and gram.hermitian_psd(g, -1))
