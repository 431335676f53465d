import json
import random
from fractions import Fraction

import pytest

from conftest import random_hgraph
from cyclograph import catalog
from cyclograph.graph import (HGraph, HermitianBookkeepingError,
                              disjoint_union, single_edge, single_vertex)
from cyclograph.poly import IntPoly, count_real_roots_in
from cyclograph.ring import EISENSTEIN, GAUSSIAN, RATIONAL, QuadInt


def naive_charpoly(g):
    """Independent oracle: det(xI - A) evaluated at n+1 integer points by
    exact field elimination, then Lagrange-interpolated."""
    n, ring = g.n, g.ring
    p_, q_ = ring._tau_sq

    def fmul(x, y):
        cross = x[1] * y[1]
        return (x[0] * y[0] + p_ * cross, x[0] * y[1] + x[1] * y[0] + q_ * cross)

    def finv(x):
        a, b = x
        if ring is EISENSTEIN:
            ca, cb = a + b, -b
            nrm = a * a + a * b + b * b
        else:
            ca, cb = a, -b
            nrm = a * a + b * b
        return (Fraction(ca) / nrm, Fraction(cb) / nrm)

    def det_at(x0):
        m = [[(Fraction(x0 if i == j else 0) - pa, Fraction(-pb))
              for j, (pa, pb) in enumerate(row)]
             for i, row in enumerate(g.matrix_pairs())]
        det = (Fraction(1), Fraction(0))
        for col in range(n):
            piv = next((r for r in range(col, n) if m[r][col] != (0, 0)), None)
            if piv is None:
                return (Fraction(0), Fraction(0))
            if piv != col:
                m[col], m[piv] = m[piv], m[col]
                det = (-det[0], -det[1])
            det = fmul(det, m[col][col])
            inv = finv(m[col][col])
            for r in range(col + 1, n):
                if m[r][col] != (0, 0):
                    f = fmul(m[r][col], inv)
                    for c in range(col, n):
                        prod = fmul(f, m[col][c])
                        m[r][c] = (m[r][c][0] - prod[0], m[r][c][1] - prod[1])
        return det

    xs = list(range(n + 1))
    ys = []
    for x in xs:
        d = det_at(x)
        assert d[1] == 0, "determinant left the rationals"
        ys.append(d[0])
    coeffs = [Fraction(0)] * (n + 1)
    for i, xi in enumerate(xs):
        num = [Fraction(1)]
        den = Fraction(1)
        for j, xj in enumerate(xs):
            if i == j:
                continue
            num = [(num[k - 1] if k else 0) - xj * (num[k] if k < len(num) else 0)
                   for k in range(len(num) + 1)]
            den *= xi - xj
        for k in range(len(num)):
            coeffs[k] += ys[i] * num[k] / den
    return IntPoly([int(c) for c in coeffs])


class TestConstruction:
    def test_duplicate_edges_rejected(self):
        with pytest.raises(ValueError):
            HGraph.from_edges(RATIONAL, 2, [(0, 1, 1), (1, 0, 1)])

    def test_bad_vertices(self):
        with pytest.raises(ValueError):
            HGraph(RATIONAL, [0, 0], {(0, 2): QuadInt(1, 0, RATIONAL)})
        with pytest.raises(ValueError):
            single_vertex(RATIONAL).induced_subgraph([0, 0])

    def test_zero_weights_dropped(self):
        g = HGraph(RATIONAL, [0, 0], {(0, 1): QuadInt(0, 0, RATIONAL)})
        assert not g.weights


class TestDegree:
    def test_charge_2_vertex(self):
        assert catalog.sporadic("S_1").degree(0) == 4

    def test_T6_all_degree_4(self):
        t6 = catalog.make_T(3, "plain")
        assert all(t6.degree(v) == 4 for v in range(6))

    def test_unit_edge_endpoint(self):
        assert single_edge(QuadInt(1, 0, RATIONAL)).degree(0) == 1

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            single_vertex(RATIONAL).degree(3)


class TestCharpoly:
    def test_examples(self):
        assert catalog.sporadic("S_2").charpoly() == IntPoly((-4, 0, 1))
        assert catalog.sporadic("S_1").charpoly() == IntPoly((-2, 1))
        tri = HGraph.from_edges(RATIONAL, 3, [(0, 1, 1), (1, 2, 1), (0, 2, 1)])
        assert tri.charpoly() == IntPoly((-2, -3, 0, 1))

    def test_monic_degree_and_trace(self, rng):
        for _ in range(20):
            g = random_hgraph(rng)
            chi = g.charpoly()
            assert chi.degree == g.n and chi.is_monic()
            if g.n >= 1:
                assert chi.coeffs[g.n - 1] == -sum(g.charges)

    def test_against_interpolated_determinant(self, rng):
        for _ in range(30):
            g = random_hgraph(rng, n=rng.randint(1, 6))
            assert g.charpoly() == naive_charpoly(g)

    def test_disjoint_union_multiplies(self, rng):
        a = random_hgraph(rng, n=3)
        b = random_hgraph(rng, ring=a.ring, n=4)
        assert disjoint_union(a, b).charpoly() == a.charpoly() * b.charpoly()

    def test_T6_charpoly_is_pm2_powers(self):
        chi = catalog.make_T(3, "plain").charpoly()
        expect = IntPoly((1,))
        for _ in range(3):
            expect = expect * IntPoly((-2, 1)) * IntPoly((2, 1))
        assert chi == expect  # (x-2)^3 (x+2)^3


def test_interlacing_property(rng):
    """Cauchy interlacing via exact root counts at rational thresholds."""
    maxes = [catalog.make_T(4, "i"), catalog.sporadic("S_8"),
             catalog.make_C(3), catalog.sporadic("S_12")]
    for _ in range(25):
        m = rng.choice(maxes)
        size = rng.randint(2, m.n)
        subset = rng.sample(range(m.n), size)
        g = m.induced_subgraph(subset)
        v = rng.randrange(g.n)
        h = g.induced_subgraph([u for u in range(g.n) if u != v])
        chi_g, chi_h = g.charpoly(), h.charpoly()
        for t in (Fraction(-3), Fraction(-1, 2), Fraction(0),
                  Fraction(3, 4), Fraction(2), Fraction(7, 2)):
            cg = count_real_roots_in(chi_g, -10, t, closed=True)
            ch = count_real_roots_in(chi_h, -10, t, closed=True)
            assert cg - 1 <= ch <= cg


class TestSquareIs4I:
    def test_catalog_maximals(self):
        assert catalog.sporadic("S_2").square_is_4I()
        assert catalog.make_T(5, "i").square_is_4I()
        assert catalog.make_C_odd(3).square_is_4I()

    def test_unit_edge_fails(self):
        assert not single_edge(QuadInt(1, 0, RATIONAL)).square_is_4I()


class TestSubgraphsAndAttachment:
    def test_full_subset_identity(self, rng):
        g = random_hgraph(rng, n=5)
        assert g.induced_subgraph(range(5)) == g

    def test_attach_examples(self):
        e = single_vertex(GAUSSIAN).attach_vertex(0, {0: QuadInt(1, 1, GAUSSIAN)})
        assert e.n == 2 and e.entry(0, 1) == QuadInt(1, 1, GAUSSIAN)
        d = single_vertex(RATIONAL).attach_vertex(0, {})
        assert d.n == 2 and not d.is_connected()
        c = catalog.sporadic("S_1").attach_vertex(1, {0: QuadInt(1, 0, RATIONAL)})
        assert c.charges == (2, 1)

    def test_attach_rejects_zero_weight(self):
        with pytest.raises(ValueError):
            single_vertex(RATIONAL).attach_vertex(0, {0: 0})


class TestConnectivity:
    def test_examples(self):
        assert catalog.sporadic("S_2").is_connected()
        two = disjoint_union(single_edge(QuadInt(1, 0, RATIONAL)),
                             single_edge(QuadInt(1, 0, RATIONAL)))
        assert not two.is_connected()
        assert single_vertex(RATIONAL).is_connected()


class TestFileFormat:
    def test_round_trip(self, rng):
        for _ in range(10):
            g = random_hgraph(rng)
            assert HGraph.from_json(g.to_json()) == g

    def test_schema(self):
        obj = catalog.sporadic("S_4").to_json_obj()
        assert obj["ring"] == "Zi"
        assert all(u < v for u, v, _ in obj["edges"])

    def test_duplicate_edge_rejected(self):
        obj = {"ring": "Z", "n": 2, "charges": [0, 0],
               "edges": [[0, 1, [1, 0]], [0, 1, [1, 0]]]}
        with pytest.raises(ValueError):
            HGraph.from_json_obj(obj)

    def test_reversed_edge_rejected(self):
        obj = {"ring": "Z", "n": 2, "charges": [0, 0],
               "edges": [[1, 0, [1, 0]]]}
        with pytest.raises(ValueError):
            HGraph.from_json_obj(obj)

    def test_dot_export(self):
        dot = catalog.sporadic("S_4t").to_dot("S4t")
        assert dot.startswith('graph "S4t"')
        assert "penwidth=2" in dot  # the 1+i edge carries two arrowheads
