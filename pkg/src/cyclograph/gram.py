"""Exact PSD certification of A + 2I and Gram-vector identities.

All arithmetic happens in the fraction field Q(tau) of the graph's ring,
represented by pairs of Fractions; no floating point anywhere.  Gram
vectors live in a rational quadratic space: coordinates are field elements
and the inner product carries the diagonal pivot weights, so
inner(vec_u, vec_v) == (A + 2I)_{uv} exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .graph import HGraph
from .ring import QuadInt, RingId


class QF:
    """Element a + b*tau of the fraction field of a quadratic ring."""

    __slots__ = ("a", "b", "ring")

    def __init__(self, a, b, ring: RingId):
        self.a = Fraction(a)
        self.b = Fraction(b)
        self.ring = ring

    @staticmethod
    def from_quadint(x: QuadInt) -> "QF":
        return QF(x.a, x.b, x.ring)

    def __repr__(self):
        return f"QF({self.a}, {self.b}, {self.ring.tag})"

    def __eq__(self, other):
        if isinstance(other, int):
            return self.b == 0 and self.a == other
        return (isinstance(other, QF) and self.a == other.a
                and self.b == other.b and self.ring == other.ring)

    def __hash__(self):
        return hash((self.a, self.b, self.ring.tag))

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def __add__(self, other):
        return QF(self.a + other.a, self.b + other.b, self.ring)

    def __sub__(self, other):
        return QF(self.a - other.a, self.b - other.b, self.ring)

    def __neg__(self):
        return QF(-self.a, -self.b, self.ring)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return QF(self.a * other, self.b * other, self.ring)
        p, q = self.ring._tau_sq
        cross = self.b * other.b
        return QF(self.a * other.a + p * cross,
                  self.a * other.b + self.b * other.a + q * cross,
                  self.ring)

    __rmul__ = __mul__

    def conj(self) -> "QF":
        if self.ring.tag == "Eisenstein":
            return QF(self.a + self.b, -self.b, self.ring)
        return QF(self.a, -self.b, self.ring)

    def norm(self) -> Fraction:
        return (self.a * self.a + self.ring._norm_cross * self.a * self.b
                + self.b * self.b)

    def inverse(self) -> "QF":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero field element")
        c = self.conj()
        return QF(c.a / n, c.b / n, self.ring)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return QF(self.a / other, self.b / other, self.ring)
        return self * other.inverse()


def _field_matrix(g: HGraph, diag_shift: int, sign: int):
    """sign * A + diag_shift * I as a list of lists of QF."""
    ring = g.ring
    n = g.n
    m = [[QF(0, 0, ring) for _ in range(n)] for _ in range(n)]
    for v, c in enumerate(g.charges):
        m[v][v] = QF(sign * c + diag_shift, 0, ring)
    for (u, v), w in g.weights.items():
        m[u][v] = QF(sign * w.a, sign * w.b, ring)
        wc = w.conj()
        m[v][u] = QF(sign * wc.a, sign * wc.b, ring)
    return m


def hermitian_psd(g: HGraph, sign: int, diag_shift: int = 2) -> bool:
    """Exact test of sign*A + shift*I >= 0 by pivoted elimination."""
    n = g.n
    m = _field_matrix(g, diag_shift, sign)
    active = list(range(n))
    while active:
        piv, best = None, None
        for v in active:
            d = m[v][v]
            if d.b != 0:
                raise ArithmeticError("non-real diagonal in Hermitian matrix")
            if best is None or d.a > best:
                best, piv = d.a, v
        if best < 0:
            return False
        if best == 0:
            return all(m[u][v].is_zero() for u in active for v in active)
        active.remove(piv)
        inv = Fraction(1) / best
        prow = m[piv]
        for u in active:
            f = m[u][piv] * inv
            if f.is_zero():
                continue
            mu = m[u]
            for v in active:
                mu[v] = mu[v] - f * prow[v]
    return True


class GramVector:
    """Coordinates over Q(tau) with a diagonal rational metric."""

    __slots__ = ("coords", "metric")

    def __init__(self, coords, metric):
        self.coords = tuple(coords)
        self.metric = metric  # tuple of positive Fractions, shared

    def inner(self, other: "GramVector") -> QF:
        """<self, other>: linear in self, conjugate-linear in other."""
        ring = self.coords[0].ring if self.coords else other.coords[0].ring
        acc = QF(0, 0, ring)
        for d, x, y in zip(self.metric, self.coords, other.coords):
            acc = acc + (x * y.conj()) * d
        return acc

    def __add__(self, other):
        return GramVector([x + y for x, y in zip(self.coords, other.coords)],
                          self.metric)

    def __sub__(self, other):
        return GramVector([x - y for x, y in zip(self.coords, other.coords)],
                          self.metric)

    def __neg__(self):
        return GramVector([-x for x in self.coords], self.metric)

    def scale(self, s) -> "GramVector":
        return GramVector([x * s if isinstance(s, (int, Fraction)) else s * x
                           for x in self.coords], self.metric)

    def is_zero(self) -> bool:
        return all(x.is_zero() for x in self.coords)

    def __eq__(self, other):
        return (isinstance(other, GramVector)
                and self.metric == other.metric
                and self.coords == other.coords)

    def __repr__(self):
        return f"GramVector({self.coords!r})"


@dataclass
class GramDecomposition:
    graph: HGraph
    rank: int
    pivot_order: list        # vertex handled at each elimination step
    pivots: list             # positive Fractions, one per rank step
    lower: list              # lower[v][k]: QF, L factor entries
    gram_vectors: list       # one GramVector per vertex

    def reassembles_exactly(self) -> bool:
        """Check sum_k pivot_k * L[u][k] * conj(L[v][k]) == (A + 2I)_{uv}."""
        g = self.graph
        m = _field_matrix(g, 2, 1)
        for u in range(g.n):
            for v in range(g.n):
                acc = QF(0, 0, g.ring)
                for k in range(self.rank):
                    acc = acc + (self.lower[u][k] * self.lower[v][k].conj()) \
                        * self.pivots[k]
                if acc != m[u][v]:
                    return False
        return True


class NotCyclotomicError(ValueError):
    pass


def gram_decompose(g: HGraph) -> GramDecomposition:
    """Pivoted exact LDL* of A + 2I with Gram vectors recovered.

    Raises NotCyclotomicError unless all eigenvalues lie in [-2, 2]
    (checked exactly up front; a negative pivot would signal the same
    condition for the lower bound only).
    """
    if not (hermitian_psd(g, +1) and hermitian_psd(g, -1)):
        raise NotCyclotomicError("input graph is not cyclotomic")
    ring = g.ring
    n = g.n
    m = _field_matrix(g, 2, 1)
    lower = [[] for _ in range(n)]
    pivots = []
    pivot_order = []
    active = list(range(n))
    while active:
        piv, best = None, None
        for v in active:
            if best is None or m[v][v].a > best:
                best, piv = m[v][v].a, v
        if best < 0:
            raise NotCyclotomicError("negative pivot: A + 2I not PSD")
        if best == 0:
            break
        pivot_order.append(piv)
        pivots.append(best)
        active.remove(piv)
        inv = Fraction(1) / best
        col = {u: m[u][piv] * inv for u in active}
        for u in range(n):
            if u == piv:
                lower[u].append(QF(1, 0, ring))
            elif u in col:
                lower[u].append(col[u])
            else:
                # already eliminated or unreached rows keep recorded zeros
                lower[u].append(QF(0, 0, ring))
        prow = {v: m[piv][v] for v in active}
        for u in active:
            f = col[u]
            if f.is_zero():
                continue
            for v in active:
                m[u][v] = m[u][v] - f * prow[v]
    rank = len(pivots)
    # remaining active block must vanish for PSD input
    for u in active:
        for v in active:
            if not m[u][v].is_zero():
                raise NotCyclotomicError("A + 2I failed PSD elimination")
    metric = tuple(pivots)
    vectors = [GramVector([lower[u][k] for k in range(rank)], metric)
               for u in range(n)]
    return GramDecomposition(g, rank, pivot_order, pivots, lower, vectors)


def is_cyclotomic_psd(g: HGraph) -> bool:
    """Third cyclotomicity oracle: 2I - A >= 0 and 2I + A >= 0 exactly."""
    return hermitian_psd(g, -1) and hermitian_psd(g, +1)


# -- the rank-constraint lemma and the hollow-vertex identities -----------


def verify_lemma41(xs, v: GramVector, strict: bool = False) -> bool:
    """Check 2v == sum <v, x_j> x_j for four orthogonal length^2-2 vectors.

    With strict=True a violated hypothesis raises ValueError; otherwise it
    simply yields False.
    """
    def fail(msg):
        if strict:
            raise ValueError(msg)
        return False

    if len(xs) != 4:
        return fail("need exactly four vectors")
    for i in range(4):
        if xs[i].inner(xs[i]) != 2:
            return fail("pairwise orthogonal vectors must have length^2 2")
        for j in range(i + 1, 4):
            if not xs[i].inner(xs[j]).is_zero():
                return fail("vectors are not pairwise orthogonal")
    if v.inner(v) != 2:
        return fail("v must have length^2 2")
    lams = [v.inner(x) for x in xs]
    for lam in lams:
        if lam.norm() != 1:
            return fail("|<v, x_j>| must equal 1")
    rhs = xs[0].scale(lams[0])
    for lam, x in zip(lams[1:], xs[1:]):
        rhs = rhs + x.scale(lam)
    return (v.scale(2) - rhs).is_zero()


def verify_hollow_identities(family: str, **params) -> bool:
    """Exactly verify the hollow-vertex Gram identities of a path anchor.

    family is one of ``P_lr`` (params l, r), ``P_odd`` (param r) or
    ``P_charged`` (param r).  The corresponding primed supergraph is
    decomposed exactly and each stated linear identity among its Gram
    vectors is checked for equality.
    """
    from . import catalog

    if family == "P_lr":
        l, r = params["l"], params["r"]
        if l + r < 2:
            raise ValueError("need l + r >= 2")
        gp = catalog.make_P_primed(l, r)
        dec = gram_decompose(gp)
        vec = dec.gram_vectors
        top = lambda j: vec[catalog.p_lr_primed_index(l, r, j, primed=False)]
        bot = lambda j: vec[catalog.p_lr_primed_index(l, r, j, primed=True)]
        ring = gp.ring
        ok = True
        for t in range(1, l + 1):
            rhs = top(-t)
            for j in range(1, t):
                rhs = rhs + top(-j).scale(2 * (-1) ** (t + j))
            rhs = rhs + (top(0) + bot(0)).scale((-1) ** t)
            ok = ok and (bot(-t) - rhs).is_zero()
        for t in range(1, r + 1):
            rhs = -top(t)
            for j in range(1, t):
                rhs = rhs - top(j).scale(2 * (-1) ** (t + j))
            rhs = rhs - (top(0) - bot(0)).scale((-1) ** t)
            ok = ok and (bot(t) - rhs).is_zero()
        return ok

    if family == "P_odd":
        r = params["r"]
        if r < 2:
            raise ValueError("need r >= 2")
        gp = catalog.make_P_odd_primed(r)
        dec = gram_decompose(gp)
        vec = dec.gram_vectors
        # vertex order: v_0, v_1..v_r, v'_1..v'_r
        v0 = vec[0]
        top = lambda j: vec[j]
        bot = lambda j: vec[r + j]
        cap = QF.from_quadint(catalog.p_odd_cap_weight())
        ok = True
        for t in range(1, r + 1):
            rhs = -top(t)
            for j in range(1, t):
                rhs = rhs - top(j).scale(2 * (-1) ** (t + j))
            rhs = rhs - v0.scale(cap * ((-1) ** t))
            ok = ok and (bot(t) - rhs).is_zero()
        return ok

    if family == "P_charged":
        r = params["r"]
        if r < 3:
            raise ValueError("need r >= 3")
        gp = catalog.make_P_charged_primed(r)
        dec = gram_decompose(gp)
        vec = dec.gram_vectors
        # vertex order: v_1..v_r, v'_1..v'_r
        top = lambda j: vec[j - 1]
        bot = lambda j: vec[r + j - 1]
        ok = True
        for t in range(1, r + 1):
            rhs = -top(t)
            for j in range(1, t):
                rhs = rhs - top(j).scale(2 * (-1) ** (t + j))
            ok = ok and (bot(t) - rhs).is_zero()
        return ok

    raise ValueError(f"unknown anchor family {family!r}")
