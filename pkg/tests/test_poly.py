import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from cyclograph.poly import (IntPoly, cauchy_bound, count_real_roots,
                             count_real_roots_in, cyclotomic_poly,
                             cyclotomic_product_factor, euler_phi,
                             format_poly, isolate_real_roots, mahler_measure,
                             palindromic_compress, parse_poly,
                             real_rooted_nonneg, refine_root, resolvent,
                             squarefree_decomposition, taylor_shift)

X = IntPoly((0, 1))


def poly_from_roots(roots):
    p = IntPoly((1,))
    for r in roots:
        p = p * IntPoly((-r, 1))
    return p


class TestCyclotomic:
    def test_small(self):
        assert cyclotomic_poly(1) == IntPoly((-1, 1))
        assert cyclotomic_poly(2) == IntPoly((1, 1))
        assert cyclotomic_poly(4) == IntPoly((1, 0, 1))

    def test_phi_12_by_independent_division(self):
        # divide x^12 - 1 by Phi_1 Phi_2 Phi_3 Phi_4 Phi_6 computed directly
        x12 = IntPoly((-1,) + (0,) * 11 + (1,))
        div = IntPoly((1,))
        for d in (1, 2, 3, 4, 6):
            div = div * cyclotomic_poly(d)
        from cyclograph.poly import try_divide_exact
        assert try_divide_exact(x12, div) == IntPoly((1, 0, -1, 0, 1))
        assert cyclotomic_poly(12) == IntPoly((1, 0, -1, 0, 1))

    def test_degree_is_phi(self):
        for k in range(1, 40):
            assert cyclotomic_poly(k).degree == euler_phi(k)

    def test_product_of_all_divisors(self):
        for k in (6, 8, 12, 15):
            prod = IntPoly((1,))
            for d in range(1, k + 1):
                if k % d == 0:
                    prod = prod * cyclotomic_poly(d)
            assert prod == IntPoly((-1,) + (0,) * (k - 1) + (1,))


class TestResolvent:
    def test_examples(self):
        assert resolvent(IntPoly((0, 1))) == IntPoly((1, 0, 1))        # z^2+1
        assert resolvent(IntPoly((-4, 0, 1))) == IntPoly((1, 0, -2, 0, 1))
        assert resolvent(IntPoly((-2, 1))) == IntPoly((1, -2, 1))      # (z-1)^2

    def test_requires_monic(self):
        with pytest.raises(ValueError):
            resolvent(IntPoly((1, 2)))

    def test_always_palindromic(self, rng):
        for _ in range(25):
            n = rng.randint(1, 8)
            chi = IntPoly([rng.randint(-4, 4) for _ in range(n)] + [1])
            r = resolvent(chi)
            assert r.is_palindromic()
            assert r.degree == 2 * n

    def test_compress_inverts(self, rng):
        for _ in range(25):
            n = rng.randint(1, 8)
            chi = IntPoly([rng.randint(-4, 4) for _ in range(n)] + [1])
            assert palindromic_compress(resolvent(chi)) == chi


class TestRootCounting:
    def test_examples(self):
        assert count_real_roots_in(IntPoly((-2, 0, 1)), -2, 2) == 2
        assert count_real_roots_in(IntPoly((4, -4, 1)), -2, 2, closed=True) == 2
        assert count_real_roots_in(IntPoly((4, -4, 1)), -2, 2, closed=False) == 0
        assert count_real_roots_in(IntPoly((-5, 0, 1)), -2, 2) == 0

    def test_multiplicity_aware(self):
        p = poly_from_roots([1, 1, 1, -2, 3])
        assert count_real_roots_in(p, -2, 2, closed=True) == 4
        assert count_real_roots_in(p, -2, 2, closed=False) == 3
        assert count_real_roots(p) == 5

    def test_random_integer_root_products(self, rng):
        for _ in range(30):
            roots = [rng.randint(-5, 5) for _ in range(rng.randint(1, 6))]
            p = poly_from_roots(roots)
            lo, hi = -3, Fraction(7, 2)
            expect = sum(1 for r in roots if lo < r < hi)
            expect_closed = sum(1 for r in roots if lo <= r <= hi)
            assert count_real_roots_in(p, lo, hi, closed=False) == expect
            assert count_real_roots_in(p, lo, hi, closed=True) == expect_closed

    def test_cauchy_bound_contains_all_roots(self, rng):
        for _ in range(20):
            roots = [rng.randint(-9, 9) for _ in range(rng.randint(1, 5))]
            p = poly_from_roots(roots)
            b = cauchy_bound(p)
            assert count_real_roots_in(p, -b, b) == len(roots)

    def test_isolation(self):
        p = poly_from_roots([0, 2, -2]) * IntPoly((-2, 0, 1))  # adds +-sqrt2
        spots = isolate_real_roots(p)
        assert len(spots) == 5
        mids = sorted(float((lo + hi) / 2) for lo, hi, _ in spots)
        assert mids[0] == pytest.approx(-2, abs=.51)
        # refine sqrt(2) tightly
        for lo, hi, mult in spots:
            if lo != hi and lo > 1 and hi < 2:
                rlo, rhi = refine_root(IntPoly((-2, 0, 1)), lo, hi, Fraction(1, 10**12))
                assert float(rlo) == pytest.approx(2 ** 0.5, abs=1e-11)


class TestSquarefree:
    def test_structure(self, rng):
        for _ in range(20):
            f1 = poly_from_roots([rng.randint(-3, 3)])
            f2 = IntPoly((rng.randint(1, 3), 0, 1))  # no real roots, coprime
            p = f1 * f1 * f2
            dec = squarefree_decomposition(p)
            assert [m for _, m in dec] == [1, 2]
            assert dict((m, f) for f, m in dec)[2] == f1.primitive()
            re = IntPoly((1,))
            for f, m in dec:
                for _ in range(m):
                    re = re * f
            # reassembles up to content sign
            assert re.primitive() == p.primitive()


class TestFactorization:
    def test_examples(self):
        p = IntPoly((-1, 1)) * IntPoly((-1, 1)) * IntPoly((1, 1))
        f = cyclotomic_product_factor(p)
        assert f.factors == [(1, 2), (2, 1)] and f.leftover.degree == 0
        f2 = cyclotomic_product_factor(resolvent(IntPoly((-4, 0, 1))))
        assert f2.factors == [(1, 2), (2, 2)]
        f3 = cyclotomic_product_factor(IntPoly((-1, -1, 1)))
        assert f3.factors == [] and f3.leftover == IntPoly((-1, -1, 1))

    def test_reassembly_round_trip(self, rng):
        for _ in range(20):
            p = IntPoly((1,))
            for _ in range(rng.randint(1, 4)):
                p = p * cyclotomic_poly(rng.randint(1, 12))
            if rng.random() < 0.5:
                p = p * IntPoly((-3, 1))
            f = cyclotomic_product_factor(p)
            assert f.reassemble() == p


class TestMahler:
    def test_cyclotomic_products_exactly_one(self, rng):
        for _ in range(15):
            p = IntPoly((1,))
            for _ in range(rng.randint(1, 4)):
                p = p * cyclotomic_poly(rng.randint(1, 10))
            assert mahler_measure(p) == 1.0

    def test_linear(self):
        assert mahler_measure(IntPoly((-3, 1))) == pytest.approx(3.0, abs=1e-9)

    def test_lehmer(self):
        lehmer = parse_poly("z^10+z^9-z^7-z^6-z^5-z^4-z^3+z+1")
        assert mahler_measure(lehmer, 1e-9) == pytest.approx(1.176280818, abs=1e-9)

    def test_golden_ratio_resolvent(self):
        # roots of z^2 - 3z + 1: (3 +- sqrt5)/2 -> M = (3+sqrt5)/2
        p = resolvent(IntPoly((-3, 1)))
        assert mahler_measure(p) == pytest.approx((3 + 5 ** 0.5) / 2, abs=1e-9)

    def test_rejects_bad_inputs(self):
        with pytest.raises(ValueError):
            mahler_measure(IntPoly((-3, 1)), tol=0)
        with pytest.raises(ValueError):
            mahler_measure(IntPoly(()))


class TestShift:
    @given(st.lists(st.integers(min_value=-9, max_value=9), min_size=1,
                    max_size=7), st.integers(min_value=-4, max_value=4))
    def test_taylor_shift_matches_evaluation(self, coeffs, c):
        p = IntPoly(coeffs + [1])
        q = taylor_shift(p, c)
        for x in range(-3, 4):
            assert q.eval_int(x) == p.eval_int(x + c)

    def test_real_rooted_nonneg(self):
        assert real_rooted_nonneg(poly_from_roots([0, 1, 5]))
        assert not real_rooted_nonneg(poly_from_roots([-1, 2]))


def test_format_and_parse():
    p = IntPoly((-2, -3, 0, 1))
    assert format_poly(p) == "x^3 - 3x - 2"
    assert parse_poly("x^3-3x-2") == p
    assert parse_poly("2*z^2 + 1") == IntPoly((1, 0, 2))
    with pytest.raises(ValueError):
        parse_poly("x^^2")
