"""Exact arithmetic in Z, Z[i] and Z[omega].

Elements are written on the basis {1, tau} where tau = i for the Gaussian
integers (i^2 = -1) and tau = omega = 1/2 + sqrt(-3)/2 for the Eisenstein
integers.  omega is a primitive 6th root of unity, so omega^2 = omega - 1.
The rational integers are the degenerate case tau-coefficient = 0.

All values are immutable and all operations are pure.
"""

from __future__ import annotations

from fractions import Fraction


class RingId:
    """One of the three supported rings.  Use the module constants."""

    __slots__ = ("tag", "_tau_sq", "_norm_cross")

    def __init__(self, tag: str, tau_sq: tuple[int, int], norm_cross: int):
        self.tag = tag
        # tau^2 = tau_sq[0] + tau_sq[1] * tau
        self._tau_sq = tau_sq
        # norm(a + b tau) = a^2 + norm_cross * a*b + b^2  (b = 0 if Rational)
        self._norm_cross = norm_cross

    def __repr__(self):
        return f"RingId({self.tag})"

    def __eq__(self, other):
        return isinstance(other, RingId) and other.tag == self.tag

    def __hash__(self):
        return hash(self.tag)


RATIONAL = RingId("Rational", (0, 0), 0)
GAUSSIAN = RingId("Gaussian", (-1, 0), 0)
EISENSTEIN = RingId("Eisenstein", (-1, 1), 1)

_RINGS = {r.tag: r for r in (RATIONAL, GAUSSIAN, EISENSTEIN)}
_FILE_TAGS = {"Z": RATIONAL, "Zi": GAUSSIAN, "Zw": EISENSTEIN}
_FILE_TAGS_INV = {RATIONAL.tag: "Z", GAUSSIAN.tag: "Zi", EISENSTEIN.tag: "Zw"}


def ring_by_tag(tag: str) -> RingId:
    """Look up a ring by its long tag or its graph-file tag (Z/Zi/Zw)."""
    if tag in _RINGS:
        return _RINGS[tag]
    if tag in _FILE_TAGS:
        return _FILE_TAGS[tag]
    raise ValueError(f"unknown ring tag {tag!r}")


def file_tag(ring: RingId) -> str:
    return _FILE_TAGS_INV[ring.tag]


class RingMismatch(ValueError):
    pass


class QuadInt:
    """A quadratic integer a + b*tau with exact (arbitrary precision) coords."""

    __slots__ = ("a", "b", "ring")

    def __init__(self, a: int, b: int, ring: RingId):
        if ring is RATIONAL and b != 0:
            raise ValueError("Rational ring forces b = 0")
        self.a = a
        self.b = b
        self.ring = ring

    # -- basic protocol -------------------------------------------------

    def __repr__(self):
        return f"QuadInt({self.a}, {self.b}, {self.ring.tag})"

    def __str__(self):
        return format_element(self)

    def __eq__(self, other):
        if isinstance(other, int):
            return self.b == 0 and self.a == other
        return (
            isinstance(other, QuadInt)
            and self.a == other.a
            and self.b == other.b
            and self.ring == other.ring
        )

    def __hash__(self):
        return hash((self.a, self.b, self.ring.tag))

    def __bool__(self):
        return self.a != 0 or self.b != 0

    def _coerce(self, other) -> "QuadInt":
        if isinstance(other, QuadInt):
            if other.ring != self.ring:
                # rational integers embed into either ring
                if other.ring is RATIONAL:
                    return QuadInt(other.a, 0, self.ring)
                if self.ring is RATIONAL:
                    raise RingMismatch("cannot mix rings without promotion")
                raise RingMismatch(
                    f"ring mismatch: {self.ring.tag} vs {other.ring.tag}"
                )
            return other
        if isinstance(other, int):
            return QuadInt(other, 0, self.ring)
        return NotImplemented

    # -- arithmetic -----------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return QuadInt(self.a + o.a, self.b + o.b, self.ring)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return QuadInt(self.a - o.a, self.b - o.b, self.ring)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return QuadInt(-self.a, -self.b, self.ring)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        p, q = self.ring._tau_sq
        cross = self.b * o.b
        return QuadInt(
            self.a * o.a + p * cross,
            self.a * o.b + self.b * o.a + q * cross,
            self.ring,
        )

    __rmul__ = __mul__

    # -- ring structure ---------------------------------------------------

    def conj(self) -> "QuadInt":
        """Galois conjugate; complex conjugation on both rings."""
        if self.ring is EISENSTEIN:
            # conj(omega) = 1 - omega
            return QuadInt(self.a + self.b, -self.b, self.ring)
        return QuadInt(self.a, -self.b, self.ring)

    def norm(self) -> int:
        return self.a * self.a + self.ring._norm_cross * self.a * self.b + self.b * self.b

    def is_unit(self) -> bool:
        return self.norm() == 1

    def promote(self, ring: RingId) -> "QuadInt":
        """Embed into a larger ring (only Rational -> Gaussian/Eisenstein)."""
        if self.ring == ring:
            return self
        if self.ring is RATIONAL:
            return QuadInt(self.a, 0, ring)
        raise RingMismatch(f"cannot promote {self.ring.tag} into {ring.tag}")

    def pair(self) -> tuple[int, int]:
        return (self.a, self.b)


def zero(ring: RingId) -> QuadInt:
    return QuadInt(0, 0, ring)


def one(ring: RingId) -> QuadInt:
    return QuadInt(1, 0, ring)


def tau(ring: RingId) -> QuadInt:
    if ring is RATIONAL:
        raise ValueError("Rational ring has no tau generator")
    return QuadInt(0, 1, ring)


def units(ring: RingId) -> list[QuadInt]:
    """All norm-1 elements, in a fixed deterministic order."""
    if ring is RATIONAL:
        coords = [(1, 0), (-1, 0)]
    elif ring is GAUSSIAN:
        coords = [(1, 0), (-1, 0), (0, 1), (0, -1)]
    else:
        # +-1, +-omega, +-(omega - 1); omega - 1 = -conj(omega)
        coords = [(1, 0), (-1, 0), (0, 1), (0, -1), (-1, 1), (1, -1)]
    return [QuadInt(a, b, ring) for a, b in coords]


def elements_of_norm_at_most(ring: RingId, bound: int) -> list[QuadInt]:
    """All nonzero x with norm(x) <= bound, sorted by (norm, a, b)."""
    if bound < 0:
        raise ValueError("bound must be >= 0")
    out = []
    if ring is RATIONAL:
        m = int(bound ** 0.5)
        while (m + 1) * (m + 1) <= bound:
            m += 1
        for a in range(-m, m + 1):
            if a != 0 and a * a <= bound:
                out.append(QuadInt(a, 0, ring))
    else:
        # |a|, |b| <= bound suffices for both positive definite norm forms
        m = int(2 * bound ** 0.5) + 2
        for a in range(-m, m + 1):
            for b in range(-m, m + 1):
                if a == 0 and b == 0:
                    continue
                x = QuadInt(a, b, ring)
                if x.norm() <= bound:
                    out.append(x)
    out.sort(key=lambda x: (x.norm(), x.a, x.b))
    return out


def unit_orbit(x: QuadInt) -> list[QuadInt]:
    return [u * x for u in units(x.ring)]


def orbit_representative(x: QuadInt) -> QuadInt:
    """Canonical member of {u*x : u unit}: smallest (norm, a, b)."""
    return min(unit_orbit(x), key=lambda y: (y.norm(), y.a, y.b))


# -- parsing and formatting ---------------------------------------------

_TAU_NAMES = {GAUSSIAN.tag: "i", EISENSTEIN.tag: "w", RATIONAL.tag: None}


def format_element(x: QuadInt) -> str:
    """Human readable form, e.g. ``1+i``, ``-w``, ``2``."""
    t = _TAU_NAMES[x.ring.tag]
    if x.b == 0:
        return str(x.a)
    if x.b > 0:
        bs = t if x.b == 1 else f"{x.b}{t}"
        return bs if x.a == 0 else f"{x.a}+{bs}"
    bs = f"-{t}" if x.b == -1 else f"{x.b}{t}"
    return bs if x.a == 0 else f"{x.a}{bs}"


def parse_element(text: str, ring: RingId) -> QuadInt:
    """Parse ``a+b*i`` style strings ('i', 'w' or 'omega' for tau)."""
    s = text.strip().replace(" ", "").replace("*", "").replace("omega", "w")
    if ring is GAUSSIAN:
        s = s.replace("i", "t")
    elif ring is EISENSTEIN:
        s = s.replace("w", "t")
    a = b = 0
    token = ""
    for ch in s + "$":
        if ch in "+-$" and token not in ("", "+", "-"):
            if token.endswith("t"):
                head = token[:-1]
                if head in ("", "+"):
                    b += 1
                elif head == "-":
                    b -= 1
                else:
                    b += int(head)
            else:
                a += int(token)
            token = "" if ch == "$" else ch
        else:
            token += ch
    if token not in ("", "$"):
        raise ValueError(f"cannot parse ring element {text!r}")
    return QuadInt(a, b, ring)
