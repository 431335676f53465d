import pytest
from hypothesis import given, strategies as st

from cyclograph.ring import (EISENSTEIN, GAUSSIAN, RATIONAL, QuadInt,
                             RingMismatch, elements_of_norm_at_most,
                             format_element, one, orbit_representative,
                             parse_element, ring_by_tag, tau, unit_orbit,
                             units)

RINGS = [RATIONAL, GAUSSIAN, EISENSTEIN]
coords = st.integers(min_value=-30, max_value=30)


def elem(ring, a, b=0):
    return QuadInt(a, b, ring)


class TestBasics:
    def test_addition_examples(self):
        i = tau(GAUSSIAN)
        assert (one(GAUSSIAN) + i) + (one(GAUSSIAN) - i) == elem(GAUSSIAN, 2)
        w = tau(EISENSTEIN)
        assert (one(EISENSTEIN) + w) + (-one(EISENSTEIN) - w) == elem(EISENSTEIN, 0)
        assert elem(RATIONAL, 2) + elem(RATIONAL, 3) == elem(RATIONAL, 5)

    def test_multiplication_defining_relations(self):
        i = tau(GAUSSIAN)
        assert i * i == elem(GAUSSIAN, -1)
        w = tau(EISENSTEIN)
        assert w * w == elem(EISENSTEIN, -1, 1)  # omega^2 = omega - 1
        assert (one(GAUSSIAN) + i) * (one(GAUSSIAN) - i) == elem(GAUSSIAN, 2)

    def test_conjugation(self):
        assert (one(GAUSSIAN) + tau(GAUSSIAN)).conj() == elem(GAUSSIAN, 1, -1)
        w = tau(EISENSTEIN)
        assert w.conj() == elem(EISENSTEIN, 1, -1)      # conj(omega) = 1 - omega
        assert w + w.conj() == elem(EISENSTEIN, 1)
        assert elem(RATIONAL, 5).conj() == elem(RATIONAL, 5)

    def test_norms(self):
        assert elem(GAUSSIAN, 1, 1).norm() == 2
        assert elem(EISENSTEIN, 1, 1).norm() == 3
        assert elem(RATIONAL, 2).norm() == 4

    def test_rational_forces_b_zero(self):
        with pytest.raises(ValueError):
            QuadInt(1, 1, RATIONAL)

    def test_ring_mismatch(self):
        with pytest.raises(RingMismatch):
            tau(GAUSSIAN) + tau(EISENSTEIN)

    def test_rational_embeds(self):
        assert elem(RATIONAL, 3).promote(GAUSSIAN) == elem(GAUSSIAN, 3)
        x = tau(GAUSSIAN) + elem(RATIONAL, 3)
        assert x == elem(GAUSSIAN, 3, 1)


class TestUnits:
    def test_unit_counts(self):
        assert len(units(RATIONAL)) == 2
        assert len(units(GAUSSIAN)) == 4
        assert len(units(EISENSTEIN)) == 6

    def test_all_units_have_norm_one(self):
        for ring in RINGS:
            assert all(u.norm() == 1 for u in units(ring))

    @pytest.mark.parametrize("ring", RINGS)
    def test_unit_orbits_have_full_size(self, ring, rng):
        for _ in range(20):
            x = QuadInt(rng.randint(-5, 5),
                        0 if ring is RATIONAL else rng.randint(-5, 5), ring)
            if not x:
                continue
            orbit = unit_orbit(x)
            assert len(set(orbit)) == len(units(ring))

    def test_orbit_representative_idempotent(self, rng):
        for ring in RINGS:
            for x in elements_of_norm_at_most(ring, 4):
                r = orbit_representative(x)
                assert orbit_representative(r) == r
                assert r in unit_orbit(x)


class TestNormBoundedElements:
    def test_gaussian_norm_4(self):
        got = elements_of_norm_at_most(GAUSSIAN, 4)
        assert len(got) == 12
        names = {format_element(x) for x in got}
        assert names == {"1", "-1", "i", "-i", "1+i", "1-i", "-1+i", "-1-i",
                         "2", "-2", "2i", "-2i"}

    def test_eisenstein_norm_4_brute_force(self):
        # independent oracle: scan a big coordinate box
        expect = set()
        for a in range(-4, 5):
            for b in range(-4, 5):
                if (a or b) and a * a + a * b + b * b <= 4:
                    expect.add((a, b))
        got = {x.pair() for x in elements_of_norm_at_most(EISENSTEIN, 4)}
        assert got == expect
        assert len(got) == 18  # 6 units + 6 assoc(1+w) + 6 assoc(2)

    def test_rational(self):
        got = {x.a for x in elements_of_norm_at_most(RATIONAL, 4)}
        assert got == {1, -1, 2, -2}


@given(a=coords, b=coords, c=coords, d=coords,
       ring_idx=st.integers(min_value=0, max_value=2))
def test_norm_multiplicative(a, b, c, d, ring_idx):
    ring = RINGS[ring_idx]
    if ring is RATIONAL:
        b = d = 0
    x, y = QuadInt(a, b, ring), QuadInt(c, d, ring)
    assert (x * y).norm() == x.norm() * y.norm()


@given(a=coords, b=coords, c=coords, d=coords,
       ring_idx=st.integers(min_value=0, max_value=2))
def test_conj_is_ring_homomorphism(a, b, c, d, ring_idx):
    ring = RINGS[ring_idx]
    if ring is RATIONAL:
        b = d = 0
    x, y = QuadInt(a, b, ring), QuadInt(c, d, ring)
    assert (x + y).conj() == x.conj() + y.conj()
    assert (x * y).conj() == x.conj() * y.conj()
    assert x.conj().conj() == x
    assert (x * x.conj()) == QuadInt(x.norm(), 0, ring)


def test_parse_format_round_trip():
    for ring in RINGS:
        for x in elements_of_norm_at_most(ring, 4):
            assert parse_element(format_element(x), ring) == x
    assert parse_element("1+i", GAUSSIAN) == QuadInt(1, 1, GAUSSIAN)
    assert parse_element("-w", EISENSTEIN) == QuadInt(0, -1, EISENSTEIN)
    assert parse_element("2", RATIONAL) == QuadInt(2, 0, RATIONAL)


def test_ring_by_tag():
    assert ring_by_tag("Zi") is GAUSSIAN
    assert ring_by_tag("Eisenstein") is EISENSTEIN
    with pytest.raises(ValueError):
        ring_by_tag("Zq")
