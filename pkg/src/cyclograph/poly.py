"""Integer polynomial arithmetic with exact real-root counting.

Polynomials are dense integer coefficient tuples, lowest degree first.
Real-root counting uses Sturm chains with exact sign evaluation at rational
points, so no floating point enters any count.  Mahler measures are
evaluated from isolated real roots refined by bisection; accepted inputs
are polynomials whose non-real roots lie on the unit circle (real-rooted
polynomials, and palindromic ones whose z + 1/z compression is
real-rooted), which covers characteristic polynomials of Hermitian
matrices and their z^n*chi(z + 1/z) resolvents.
"""

from __future__ import annotations

import re
import threading
from dataclasses import dataclass
from fractions import Fraction
from math import gcd


class IntPoly:
    """Dense integer polynomial; ``coeffs[k]`` is the coefficient of x^k."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(int(c) for c in cs)

    # -- structure ------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __eq__(self, other):
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"IntPoly({list(self.coeffs)})"

    def __str__(self):
        return format_poly(self)

    # -- arithmetic -----------------------------------------------------

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] += c
        return IntPoly(out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return IntPoly([-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPoly([other * c for c in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly(())
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return IntPoly(out)

    __rmul__ = __mul__

    def shift(self, k: int) -> "IntPoly":
        """Multiply by x^k."""
        if self.is_zero():
            return self
        return IntPoly((0,) * k + self.coeffs)

    def derivative(self) -> "IntPoly":
        return IntPoly([k * c for k, c in enumerate(self.coeffs)][1:])

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = gcd(g, abs(c))
        return g

    def primitive(self) -> "IntPoly":
        """Primitive part with positive leading coefficient."""
        if self.is_zero():
            return self
        g = self.content()
        if self.leading() < 0:
            g = -g
        return IntPoly([c // g for c in self.coeffs])

    def eval_int(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_fraction(self, x) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def sign_at(self, x: Fraction) -> int:
        """Exact sign at a rational point (integer arithmetic only)."""
        if self.is_zero():
            return 0
        num, den = x.numerator, x.denominator
        acc = 0
        d = self.degree
        for k in range(d, -1, -1):
            acc = acc * num + self.coeffs[k] * den ** (d - k)
        return (acc > 0) - (acc < 0)

    def is_palindromic(self) -> bool:
        return bool(self.coeffs) and self.coeffs == tuple(reversed(self.coeffs))


X = IntPoly((0, 1))
ONE = IntPoly((1,))


def divmod_exact(a: IntPoly, b: IntPoly):
    """Quotient and remainder of a by a monic b (stays in Z[x])."""
    if not b.is_monic():
        raise ValueError("divmod_exact requires a monic divisor")
    rem = list(a.coeffs)
    db = b.degree
    quo = [0] * max(0, len(rem) - db)
    for k in range(len(rem) - db - 1, -1, -1):
        q = rem[k + db]
        if q:
            quo[k] = q
            for j, c in enumerate(b.coeffs):
                rem[k + j] -= q * c
    return IntPoly(quo), IntPoly(rem[:db])


def try_divide_exact(a: IntPoly, b: IntPoly):
    """a / b over Z[x] if the division by monic b is exact, else None."""
    q, r = divmod_exact(a, b)
    return q if r.is_zero() else None


def _div_exact_q(a: IntPoly, b: IntPoly) -> IntPoly:
    """a / b over Q[x], asserted exact, returned as primitive over Z."""
    ra = [Fraction(c) for c in a.coeffs]
    rb = b.coeffs
    lb = Fraction(rb[-1])
    db = b.degree
    quo = [Fraction(0)] * max(0, len(ra) - db)
    for k in range(len(ra) - db - 1, -1, -1):
        q = ra[k + db] / lb
        quo[k] = q
        if q:
            for j, c in enumerate(rb):
                ra[k + j] -= q * c
    if any(ra[:db]):
        raise ArithmeticError("division was not exact")
    den = 1
    for c in quo:
        den = den * c.denominator // gcd(den, c.denominator)
    return IntPoly([int(c * den) for c in quo]).primitive()


def _rem_positive_multiple(a: IntPoly, b: IntPoly) -> IntPoly:
    """A positive rational multiple of rem(a, b), primitive over Z."""
    ra = [Fraction(c) for c in a.coeffs]
    rb = b.coeffs
    lb = Fraction(rb[-1])
    db = b.degree
    for k in range(len(ra) - db - 1, -1, -1):
        q = ra[k + db] / lb
        if q:
            for j, c in enumerate(rb):
                ra[k + j] -= q * c
    if not any(ra[:db]):
        return IntPoly(())
    den = 1
    for c in ra[:db]:
        den = den * c.denominator // gcd(den, c.denominator)
    out = IntPoly([int(c * den) for c in ra[:db]])
    g = out.content()
    return IntPoly([c // g for c in out.coeffs])


def poly_gcd(a: IntPoly, b: IntPoly) -> IntPoly:
    """Primitive gcd over Z[x] with positive leading coefficient."""
    a, b = a.primitive(), b.primitive()
    if a.is_zero():
        return b
    while not b.is_zero():
        if b.degree == 0:
            return ONE
        a, b = b, _rem_positive_multiple(a, b)
    return a.primitive()


def squarefree_decomposition(p: IntPoly) -> list[tuple[IntPoly, int]]:
    """[(f, m)] with the f primitive, square-free, pairwise coprime and
    p ~ prod f^m up to a constant.  Sorted by multiplicity."""
    if p.is_zero():
        raise ValueError("zero polynomial")
    p = p.primitive()
    if p.degree == 0:
        return []
    # flats[k] = product of distinct irreducible factors of multiplicity > k
    flats = []
    while p.degree > 0:
        g = poly_gcd(p, p.derivative())
        flats.append(_div_exact_q(p, g))
        p = g
    flats.append(ONE)
    out = []
    for i in range(len(flats) - 1):
        f = _div_exact_q(flats[i], flats[i + 1])
        if f.degree > 0:
            out.append((f, i + 1))
    return out


# -- Sturm machinery ----------------------------------------------------


def sturm_chain(p: IntPoly) -> list[IntPoly]:
    """Sturm chain of a square-free polynomial, primitive entries."""
    chain = [p.primitive()]
    d = p.derivative().primitive()
    if not d.is_zero():
        chain.append(d)
        while chain[-1].degree > 0:
            r = _rem_positive_multiple(chain[-2], chain[-1])
            if r.is_zero():
                break
            chain.append(-r)
    return chain


def _variations(chain, x: Fraction) -> int:
    signs = [q.sign_at(x) for q in chain]
    signs = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a * b < 0)


def _sturm_count_halfopen(chain, lo: Fraction, hi: Fraction) -> int:
    """Distinct real roots in (lo, hi] for a square-free chain."""
    return _variations(chain, lo) - _variations(chain, hi)


def root_multiplicity_at(p: IntPoly, x: Fraction) -> int:
    """Multiplicity of the rational point x as a root of p."""
    x = Fraction(x)
    m = 0
    lin = IntPoly((-x.numerator, x.denominator))
    while p.degree > 0 and p.sign_at(x) == 0:
        p = _div_exact_q(p, lin)
        m += 1
    return m


def deflate_at(p: IntPoly, x: Fraction) -> tuple[IntPoly, int]:
    """Remove all (x - root) factors at a rational point; (quotient, mult).

    The quotient is only used for root location, so it is returned
    primitive."""
    x = Fraction(x)
    m = root_multiplicity_at(p, x)
    lin = IntPoly((-x.numerator, x.denominator))
    for _ in range(m):
        p = _div_exact_q(p, lin)
    return p, m


def count_real_roots_in(p: IntPoly, lo, hi, closed: bool = True) -> int:
    """Real roots of p in the interval, counted WITH multiplicity.

    ``closed`` includes roots exactly at the rational endpoints; endpoint
    roots are deflated by exact division before the Sturm count on the
    open interior.
    """
    if p.is_zero():
        raise ValueError("zero polynomial has no well-defined root count")
    lo, hi = Fraction(lo), Fraction(hi)
    if not lo < hi:
        raise ValueError("need lo < hi")
    q, m_lo = deflate_at(p, lo)
    q, m_hi = deflate_at(q, hi)
    total = (m_lo + m_hi) if closed else 0
    if q.degree > 0:
        for factor, mult in squarefree_decomposition(q):
            chain = sturm_chain(factor)
            # factor has no root at hi, so (lo, hi] == (lo, hi)
            total += mult * _sturm_count_halfopen(chain, lo, hi)
    return total


def taylor_shift(p: IntPoly, c: int) -> IntPoly:
    """p(x + c), by repeated synthetic division (exact, O(n^2))."""
    coeffs = list(p.coeffs)
    n = len(coeffs)
    for i in range(n - 1):
        for k in range(n - 2, i - 1, -1):
            coeffs[k] += c * coeffs[k + 1]
    return IntPoly(coeffs)


def reflect(p: IntPoly) -> IntPoly:
    """p(-x)."""
    return IntPoly([(-1) ** k * c for k, c in enumerate(p.coeffs)])


def real_rooted_nonneg(p: IntPoly) -> bool:
    """For a real-rooted monic p: are all roots >= 0?

    Equivalent to the coefficients alternating as (-1)^(n-k) c_k >= 0,
    which is exact and requires no root isolation.
    """
    n = p.degree
    return all((-1) ** (n - k) * c >= 0 for k, c in enumerate(p.coeffs))


def cauchy_bound(p: IntPoly) -> Fraction:
    """A rational B with every real root of p inside (-B, B)."""
    lead = abs(p.leading())
    m = max((abs(c) for c in p.coeffs[:-1]), default=0)
    return Fraction(m, lead) + 2


def count_real_roots(p: IntPoly) -> int:
    """Total number of real roots, with multiplicity."""
    b = cauchy_bound(p)
    return count_real_roots_in(p, -b, b, closed=True)


def isolate_real_roots(p: IntPoly) -> list[tuple[Fraction, Fraction, int]]:
    """Disjoint rational intervals each isolating one distinct real root.

    Returns (lo, hi, multiplicity) sorted by position; exact rational roots
    come back as degenerate intervals with lo == hi, otherwise the open
    interval (lo, hi) holds exactly one root and p changes sign on it.
    """
    out = []
    for factor, mult in squarefree_decomposition(p):
        chain = sturm_chain(factor)
        b = cauchy_bound(factor)
        stack = [(-b, b)]
        while stack:
            lo, hi = stack.pop()
            cnt = _sturm_count_halfopen(chain, lo, hi)
            if cnt == 0:
                continue
            if cnt == 1 and factor.sign_at(lo) * factor.sign_at(hi) < 0:
                out.append((lo, hi, mult))
                continue
            mid = (lo + hi) / 2
            if factor.sign_at(mid) == 0:
                out.append((mid, mid, mult))
                eps = Fraction(1, 2)
                while _sturm_count_halfopen(chain, mid - eps, mid + eps) > 1:
                    eps /= 2
                stack.append((lo, mid - eps))
                stack.append((mid + eps, hi))
            else:
                stack.append((lo, mid))
                stack.append((mid, hi))
    out.sort(key=lambda t: (t[0], t[1]))
    return out


def refine_root(p: IntPoly, lo: Fraction, hi: Fraction, width) -> tuple:
    """Shrink a sign-changing bracket below the requested width."""
    if lo == hi:
        return lo, hi
    width = Fraction(width)
    slo = p.sign_at(lo)
    while hi - lo > width:
        mid = (lo + hi) / 2
        sm = p.sign_at(mid)
        if sm == 0:
            return mid, mid
        if sm == slo:
            lo = mid
        else:
            hi = mid
    return lo, hi


# -- cyclotomic polynomials ----------------------------------------------

_cyclo_cache: dict[int, IntPoly] = {}
_cyclo_lock = threading.Lock()


def euler_phi(k: int) -> int:
    result = n = k
    p = 2
    while p * p <= n:
        if n % p == 0:
            while n % p == 0:
                n //= p
            result -= result // p
        p += 1
    if n > 1:
        result -= result // n
    return result


def cyclotomic_poly(k: int) -> IntPoly:
    """The k-th cyclotomic polynomial Phi_k, by exact trial division."""
    if k < 1:
        raise ValueError("k must be >= 1")
    with _cyclo_lock:
        got = _cyclo_cache.get(k)
    if got is not None:
        return got
    p = IntPoly((-1,) + (0,) * (k - 1) + (1,))  # x^k - 1
    for d in range(1, k):
        if k % d == 0:
            q = try_divide_exact(p, cyclotomic_poly(d))
            if q is None:
                raise ArithmeticError("cyclotomic division failed")
            p = q
    with _cyclo_lock:
        _cyclo_cache[k] = p
    return p


@dataclass
class CycloFactorization:
    factors: list  # [(k, multiplicity)]
    leftover: IntPoly

    def reassemble(self) -> IntPoly:
        p = self.leftover
        for k, mult in self.factors:
            phi = cyclotomic_poly(k)
            for _ in range(mult):
                p = p * phi
        return p

    def is_cyclotomic_product(self) -> bool:
        return self.leftover.degree == 0


def _cyclo_indices_up_to_degree(d: int) -> list[int]:
    # euler_phi(k) >= sqrt(k/2), so k <= 2 d^2 + 1 exhausts all phi(k) <= d
    return [k for k in range(1, 2 * d * d + 2) if euler_phi(k) <= d]


def cyclotomic_product_factor(p: IntPoly) -> CycloFactorization:
    """Divide out every Phi_k to full multiplicity; leftover keeps the rest."""
    if p.is_zero():
        raise ValueError("zero polynomial")
    factors = []
    left = p
    for k in _cyclo_indices_up_to_degree(p.degree):
        if euler_phi(k) > left.degree:
            continue
        phi = cyclotomic_poly(k)
        mult = 0
        while True:
            q = try_divide_exact(left, phi)
            if q is None:
                break
            left = q
            mult += 1
        if mult:
            factors.append((k, mult))
    return CycloFactorization(factors, left)


# -- the resolvent transform z^n chi(z + 1/z) ----------------------------


def resolvent(chi: IntPoly) -> IntPoly:
    """z^n * chi(z + 1/z) for monic chi of degree n, expanded over Z.

    Always palindromic of degree 2n; eigenvalues in [-2, 2] become
    unit-circle root pairs.
    """
    if not chi.is_monic():
        raise ValueError("resolvent requires a monic polynomial")
    n = chi.degree
    acc = IntPoly(())
    zsq1 = IntPoly((1, 0, 1))  # z^2 + 1
    power = ONE
    for k, c in enumerate(chi.coeffs):
        if c:
            acc = acc + (c * power).shift(n - k)
        power = power * zsq1
    return acc


def palindromic_compress(p: IntPoly):
    """Write palindromic p of even degree 2m as z^m * Q(z + 1/z).

    Returns Q (integer coefficients), or None when p is not palindromic of
    even degree.  Inverse of ``resolvent`` for monic inputs.
    """
    if not p.is_palindromic() or p.degree % 2 != 0:
        return None
    m = p.degree // 2
    # T_j = z^j + z^-j as a polynomial in x = z + 1/z
    t_prev, t_cur = IntPoly((2,)), X
    q = IntPoly((p.coeffs[m],))
    for j in range(1, m + 1):
        q = q + p.coeffs[m + j] * t_cur
        t_prev, t_cur = t_cur, X * t_cur - t_prev
    return q


# -- Mahler measure -------------------------------------------------------


def mahler_measure(p: IntPoly, tol: float = 1e-9) -> float:
    """Mahler measure of an integer polynomial, within tol.

    Exact 1.0 is returned whenever cyclotomic trial division leaves a
    constant.  Otherwise the measure comes from isolated real roots;
    palindromic inputs are first compressed through x = z + 1/z.  Inputs
    with non-real roots off the unit circle are rejected.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    if p.is_zero():
        raise ValueError("zero polynomial")
    k = 0
    while p.coeffs[k] == 0:
        k += 1
    if k:
        p = IntPoly(p.coeffs[k:])
    lead = abs(p.leading())
    left = cyclotomic_product_factor(p).leftover
    if left.degree == 0:
        return float(lead)
    if count_real_roots(left) == left.degree:
        return lead * _real_root_product(left, tol, lambda r: max(1.0, abs(r)))
    q = palindromic_compress(left)
    if q is not None and count_real_roots(q) == q.degree:
        # a real root mu of q lifts to the pair z + 1/z = mu
        def lift(mu: float) -> float:
            mu = abs(mu)
            if mu <= 2.0:
                return 1.0
            return mu / 2 + (mu * mu / 4 - 1) ** 0.5
        return lead * _real_root_product(q, tol, lift)
    raise ValueError(
        "Mahler measure supported only for polynomials whose non-real "
        "roots lie on the unit circle"
    )


def _real_root_product(p: IntPoly, tol: float, per_root) -> float:
    width = Fraction(min(tol, Fraction(1, 10))) / (16 * (p.degree + 1))
    result = 1.0
    for factor, mult in squarefree_decomposition(p):
        chain_bound = cauchy_bound(factor)
        w = width / max(1, int(chain_bound))
        for lo, hi, _ in isolate_real_roots(factor):
            rlo, rhi = refine_root(factor, lo, hi, w)
            result *= per_root(float((rlo + rhi) / 2)) ** mult
    return result


# -- text forms -----------------------------------------------------------


def format_poly(p: IntPoly, var: str = "x") -> str:
    if p.is_zero():
        return "0"
    parts = []
    for k in range(p.degree, -1, -1):
        c = p.coeffs[k]
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            term = str(mag)
        elif k == 1:
            term = var if mag == 1 else f"{mag}{var}"
        else:
            term = f"{var}^{k}" if mag == 1 else f"{mag}{var}^{k}"
        if not parts:
            parts.append(term if c > 0 else f"-{term}")
        else:
            parts.append(f" + {term}" if c > 0 else f" - {term}")
    return "".join(parts)


_TERM_RE = re.compile(
    r"(?P<sign>[+-])?\s*(?:(?P<coeff>\d+)\s*\*?\s*)?"
    r"(?:(?P<var>[a-zA-Z])\s*(?:\^\s*(?P<exp>\d+))?)?"
)


def parse_poly(text: str) -> IntPoly:
    """Parse strings like ``z^10+z^9-z^7-z^6-z^5-z^4-z^3+z+1``."""
    s = text.replace(" ", "").replace("**", "^")
    if not s:
        raise ValueError("empty polynomial")
    coeffs: dict[int, int] = {}
    pos = 0
    while pos < len(s):
        m = _TERM_RE.match(s, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse polynomial at ...{s[pos:]!r}")
        sign = -1 if m.group("sign") == "-" else 1
        coeff = int(m.group("coeff")) if m.group("coeff") else 1
        if m.group("var"):
            exp = int(m.group("exp")) if m.group("exp") else 1
        else:
            if m.group("coeff") is None:
                raise ValueError(f"cannot parse polynomial at ...{s[pos:]!r}")
            exp = 0
        coeffs[exp] = coeffs.get(exp, 0) + sign * coeff
        pos = m.end()
    out = [0] * (max(coeffs) + 1)
    for k, c in coeffs.items():
        out[k] = c
    return IntPoly(out)
