"""Cyclotomicity, maximality and Mahler measure of matrix graphs.

Two independent cyclotomicity oracles are maintained: a Sturm root count
of the characteristic polynomial on [-2, 2] and the Kronecker-style test
that the resolvent factors completely into cyclotomic polynomials.  A
third exact oracle (PSD elimination of 2I -+ A, module gram) backs the
search loops where throughput matters; the test suite pins all three to
each other.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import gram
from .graph import HGraph
from .poly import (count_real_roots_in, cyclotomic_product_factor,
                   mahler_measure, real_rooted_nonneg, reflect, resolvent,
                   root_multiplicity_at, taylor_shift)
from .ring import QuadInt, elements_of_norm_at_most, orbit_representative


class OracleDisagreement(AssertionError):
    """The Sturm and resolvent-factorization verdicts differ."""


@dataclass
class CycloVerdict:
    is_cyclotomic: bool
    mult_minus2: int
    mult_plus2: int
    interior_count: int
    degree: int
    resolvent_factors: list | None = None  # (k, multiplicity), when cross-checked

    def __bool__(self):
        return self.is_cyclotomic

    def to_json_obj(self) -> dict:
        obj = {
            "is_cyclotomic": self.is_cyclotomic,
            "witness": {
                "mult_at_minus2": self.mult_minus2,
                "mult_at_plus2": self.mult_plus2,
                "interior_count": self.interior_count,
                "degree": self.degree,
            },
        }
        if self.resolvent_factors is not None:
            obj["witness"]["resolvent_factors"] = [
                list(t) for t in self.resolvent_factors]
        return obj


def is_cyclotomic(g: HGraph, cross_check: bool = False) -> CycloVerdict:
    """All eigenvalues in [-2, 2], decided by exact Sturm counts.

    With cross_check=True the resolvent of the characteristic polynomial
    is also factored into cyclotomics and the two verdicts are required to
    agree (OracleDisagreement otherwise).
    """
    chi = g.charpoly()
    n = g.n
    m_lo = root_multiplicity_at(chi, -2)
    m_hi = root_multiplicity_at(chi, 2)
    interior = count_real_roots_in(chi, -2, 2, closed=False) if n else 0
    verdict = (m_lo + m_hi + interior) == n
    factors = None
    if cross_check:
        fact = cyclotomic_product_factor(resolvent(chi))
        if fact.is_cyclotomic_product() != verdict:
            raise OracleDisagreement(
                f"Sturm says {verdict} but resolvent leftover is "
                f"{fact.leftover}")
        factors = fact.factors
    return CycloVerdict(verdict, m_lo, m_hi, interior, n, factors)


def is_cyclotomic_fast(g: HGraph) -> bool:
    """Exact coefficient-sign oracle, preferred inside enumeration loops.

    The characteristic polynomial is real-rooted, so all roots lie in
    [-2, 2] iff chi(x - 2) has only nonnegative roots and (-1)^n chi(2 - x)
    does too, both readable off alternating coefficient signs.  Integer
    arithmetic only; equivalent to the PSD elimination in module gram.
    """
    chi = g._cache.get("chi")
    if chi is None:
        # cheap necessary condition first: every degree is at most 4
        if any(d > 4 for d in g.degrees()):
            return False
        chi = g.charpoly()
        g._cache["chi"] = chi
    # chi(x - 2) has roots lambda + 2, all >= 0 iff lambda >= -2
    if not real_rooted_nonneg(taylor_shift(chi, -2)):
        return False
    # (-1)^n chi(2 - x) has roots 2 - lambda, all >= 0 iff lambda <= 2
    upper = taylor_shift(reflect(chi), -2)
    if chi.degree % 2:
        upper = -upper
    return real_rooted_nonneg(upper)


def attachment_candidates(g: HGraph, weight_set, charge_set,
                          degree_cap: int = 4, normalize_first: bool = True):
    """All ways of attaching one vertex within the degree budget.

    Yields (charge, incident) pairs with at least one incident edge, where
    incident maps existing vertices to nonzero weights.  When
    normalize_first is set, the lowest-vertex weight is restricted to its
    unit-orbit representative, which loses nothing up to switching
    equivalence at the new vertex.
    """
    degs = g.degrees()
    weights = sorted(weight_set, key=lambda w: (w.norm(), w.a, w.b))
    reps = {w for w in weights if w == orbit_representative(w)}
    eligible = [v for v in range(g.n) if degree_cap - degs[v] >= 1]
    charges = sorted(set(int(c) for c in charge_set))

    def emit(incident, budget_used):
        for c in charges:
            if c * c + budget_used <= degree_cap:
                yield (c, dict(incident))

    def rec(idx, incident, budget_used):
        for k in range(idx, len(eligible)):
            v = eligible[k]
            room_v = degree_cap - degs[v]
            for w in weights:
                nw = w.norm()
                if nw > room_v or budget_used + nw > degree_cap:
                    continue
                if normalize_first and not incident and w not in reps:
                    continue
                incident[v] = w
                yield from emit(incident, budget_used + nw)
                yield from rec(k + 1, incident, budget_used + nw)
                del incident[v]

    yield from rec(0, {}, 0)


def full_attachment_sets(ring):
    """The ring-complete attachment alphabet implied by the degree bound."""
    return elements_of_norm_at_most(ring, 4), (-2, -1, 0, 1, 2)


def is_maximal(g: HGraph) -> bool:
    """No one-vertex extension stays connected and cyclotomic.

    Requires a connected cyclotomic input.  When every vertex already has
    degree 4 (in particular whenever A^2 = 4I), any new edge would push an
    existing vertex past degree 4, so the graph is maximal outright.
    """
    if not g.is_connected():
        raise ValueError("maximality is defined for connected graphs")
    if not is_cyclotomic_fast(g):
        raise ValueError("maximality is defined for cyclotomic graphs")
    degs = g.degrees()
    if all(d >= 4 for d in degs):
        return True
    weights, charges = full_attachment_sets(g.ring)
    for charge, incident in attachment_candidates(g, weights, charges):
        h = g.attach_vertex(charge, incident)
        if is_cyclotomic_fast(h):
            return False
    return True


def mahler(g: HGraph, tol: float = 1e-9) -> float:
    """Mahler measure of the resolvent z^n chi(z + 1/z); 1.0 when cyclotomic."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    if g.n == 0:
        return 1.0
    return mahler_measure(resolvent(g.charpoly()), tol)
