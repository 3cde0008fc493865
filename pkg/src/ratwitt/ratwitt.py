"""Rational Witt vectors ``W_rat(A)``: series ``P/Q`` with ``P(0) = Q(0) = 1``.

Normal form
    Over an integral domain the fraction is reduced in ``K[T]`` (``K`` the
    fraction field) and normalised to ``P(0) = Q(0) = 1``.  When ``A`` is
    completely integrally closed (flag ``strong_fatou``) the reduced
    coefficients lie in ``A`` again and are stored as such.  Otherwise
    (``MonSub``) the given ``A[T]`` presentation is stored and the reduced
    ``K[T]`` form is kept alongside.  Over rings with zero divisors the
    presentation is stored as given.

Equality is cross-multiplication ``P1 Q2 = P2 Q1`` in ``A[T]``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .rings import polyring as P
from .rings.base import Ring, RingError, require_same_ring
from .rings.integers import ZZ, LocalizedIntegers
from .rings.parse import parse_fraction
from .wittseries import (
    WittSeries,
    frobenius,
    witt_mul,
)

_HASH_TERMS = 8


def _in_ring(R: Ring, c) -> bool:
    contains = getattr(R, "contains", None)
    return contains(c) if contains else True


@dataclass(frozen=True, eq=False)
class RatWitt:
    ring: Ring
    P: tuple
    Q: tuple
    # reduced representative over the fraction field (domains only)
    reduced: tuple | None = field(default=None, compare=False)

    # -- construction ---------------------------------------------------------

    @classmethod
    def make(cls, ring: Ring, p, q) -> "RatWitt":
        p, q = P.trim(ring, p), P.trim(ring, q)
        if not q or not p:
            raise RingError("P and Q must be non-zero")
        if not ring.is_one(q[0]):
            u = ring.inv(q[0])
            p, q = P.scale(ring, p, u), P.scale(ring, q, u)
        if not ring.is_one(p[0]):
            raise RingError("need P(0) = Q(0) = 1")
        for c in p + q:
            if not _in_ring(ring, c):
                raise RingError(f"coefficient {ring.format(c)} is not in {ring}")
        if not ring.is_domain:
            return cls(ring, p, q)
        K = ring.fraction_field()
        kp = tuple(ring.to_fraction(c) for c in p)
        kq = tuple(ring.to_fraction(c) for c in q)
        g = P.gcd(K, kp, kq)
        if len(g) > 1:
            kp, kq = P.divexact(K, kp, g), P.divexact(K, kq, g)
        c = K.inv(kq[0])
        kp, kq = P.scale(K, kp, c), P.scale(K, kq, c)
        if ring.is_field:
            return cls(ring, kp, kq, (kp, kq))
        if ring.strong_fatou:
            ap = tuple(ring.from_fraction(c) for c in kp)
            aq = tuple(ring.from_fraction(c) for c in kq)
            if any(c is None for c in ap + aq):
                raise AssertionError("reduced form left A over a strong Fatou domain")
            return cls(ring, ap, aq, (kp, kq))
        return cls(ring, p, q, (kp, kq))

    @classmethod
    def poly(cls, ring: Ring, p) -> "RatWitt":
        return cls.make(ring, p, (ring.one,))

    @classmethod
    def parse(cls, ring: Ring, text: str) -> "RatWitt":
        p, q = parse_fraction(ring, text)
        return cls.make(ring, p, q)

    @classmethod
    def teichmuller(cls, ring: Ring, a) -> "RatWitt":
        return cls.poly(ring, (ring.one, ring.neg(a)))

    @classmethod
    def zero(cls, ring: Ring) -> "RatWitt":
        return cls.poly(ring, (ring.one,))

    @classmethod
    def one(cls, ring: Ring) -> "RatWitt":
        return cls.teichmuller(ring, ring.one)

    # -- basic data -------------------------------------------------------------

    @property
    def is_reduced(self) -> bool:
        return self.reduced is not None

    def reduced_form(self):
        """Coprime ``(P, Q)`` over the fraction field; ``None`` off domains."""
        return self.reduced

    @property
    def bound(self) -> int:
        """``max(1 + deg P, deg Q)`` of the reduced form (of the stored form off domains)."""
        p, q = self.reduced if self.reduced is not None else (self.P, self.Q)
        return max(len(p), len(q) - 1)

    def series(self, N: int) -> list:
        """``[1, a_1, ..., a_N]``."""
        return P.mul_trunc(self.ring, self.P, P.inv_series(self.ring, self.Q, N + 1), N + 1)

    def to_series(self, N: int) -> WittSeries:
        return WittSeries.from_list(self.ring, self.series(N))

    def is_zero(self) -> bool:
        return self == RatWitt.zero(self.ring)

    def format(self) -> str:
        R = self.ring
        num = P.format_poly(R, self.P)
        if self.Q == (R.one,):
            return num
        den = P.format_poly(R, self.Q)
        if len([c for c in self.P if not R.is_zero(c)]) > 1:
            num = f"({num})"
        return f"{num}/({den})"

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"RatWitt({self.ring}, {self.format()})"

    def __eq__(self, other):
        if not isinstance(other, RatWitt) or self.ring != other.ring:
            return NotImplemented
        R = self.ring
        return P.mul(R, self.P, other.Q) == P.mul(R, other.P, self.Q)

    def __hash__(self):
        return hash((self.ring, tuple(self.series(_HASH_TERMS))))

    def __add__(self, other):
        return rw_add(self, other)

    def __neg__(self):
        return rw_neg(self)

    def __sub__(self, other):
        return rw_add(self, rw_neg(other))

    def __mul__(self, other):
        return rw_mul(self, other)


# -- ring operations -------------------------------------------------------------


def rw_add(f: RatWitt, g: RatWitt) -> RatWitt:
    R = require_same_ring(f.ring, g.ring)
    return RatWitt.make(R, P.mul(R, f.P, g.P), P.mul(R, f.Q, g.Q))


def rw_neg(f: RatWitt) -> RatWitt:
    return RatWitt.make(f.ring, f.Q, f.P)


def rw_sub(f: RatWitt, g: RatWitt) -> RatWitt:
    return rw_add(f, rw_neg(g))


def rw_scale(f: RatWitt, b) -> RatWitt:
    """``[b] * f = f(bT)``."""
    R = f.ring
    return RatWitt.make(R, P.scale_variable(R, f.P, b), P.scale_variable(R, f.Q, b))


def _require_domain(R: Ring, what: str):
    if not R.is_domain:
        raise RingError(f"{what} over {R} is not provided (not a domain); use truncated series")


def _from_field_result(R: Ring, h: RatWitt) -> RatWitt:
    """Bring a result computed over ``K`` back to ``R``."""
    if R.is_field:
        return h
    ap = [R.from_fraction(c) for c in h.P]
    aq = [R.from_fraction(c) for c in h.Q]
    if any(c is None for c in ap + aq):
        raise RingError(f"result has no presentation over {R} found from its reduced form")
    return RatWitt.make(R, tuple(ap), tuple(aq))


def _series_over_K(f: RatWitt, N: int) -> WittSeries:
    R = f.ring
    K = R.fraction_field()
    if R.is_field:
        return f.to_series(N)
    kp, kq = f.reduced
    return WittSeries.from_fraction(K, kp, kq, N)


def _reconstruct_checked(s: WittSeries, r: int, check: WittSeries) -> RatWitt:
    from .hankel import kronecker_reconstruct

    h = kronecker_reconstruct(s.ring, s.full(), r)
    if h.to_series(check.prec) != check:
        raise AssertionError("reconstruction inconsistency")
    return h


def product_bound(f: RatWitt, g: RatWitt) -> int:
    """Bound of ``f * g`` read off the degrees of the reduced forms.

    Over an algebraic closure ``f = sum [alpha_i] - sum [beta_j]`` with
    ``deg P`` alphas and ``deg Q`` betas, and ``[a][b] = [ab]``, so the
    product has at most ``pp' + qq'`` numerator and ``pq' + qp'``
    denominator factors.  This can exceed ``n + m``.
    """
    (fp, fq), (gp, gq) = f.reduced, g.reduced
    p, q, p2, q2 = len(fp) - 1, len(fq) - 1, len(gp) - 1, len(gq) - 1
    return max(1 + p * p2 + q * q2, p * q2 + q * p2)


def rw_mul(f: RatWitt, g: RatWitt) -> RatWitt:
    """Witt product via series expansion and Kronecker reconstruction.

    With ``r = product_bound(f, g)`` both factors are expanded to ``2r``
    terms, multiplied, reconstructed with bound ``r`` and re-checked
    against ``2r + 2`` terms.
    """
    R = require_same_ring(f.ring, g.ring)
    _require_domain(R, "rw_mul")
    r = product_bound(f, g)
    sf, sg = _series_over_K(f, 2 * r + 2), _series_over_K(g, 2 * r + 2)
    prod = witt_mul(sf, sg)
    h = _reconstruct_checked(prod.truncate(2 * r), r, prod)
    return _from_field_result(R, h)


def rw_frobenius(f: RatWitt, N: int) -> RatWitt:
    R = f.ring
    _require_domain(R, "rw_frobenius")
    if N == 1:
        return f
    r = f.bound
    s = frobenius(_series_over_K(f, N * (2 * r + 2)), N)
    h = _reconstruct_checked(s.truncate(2 * r), r, s)
    return _from_field_result(R, h)


def rw_verschiebung(f: RatWitt, N: int) -> RatWitt:
    """``f(T^N)``; exact over any ring."""
    if N < 1:
        raise ValueError("N must be a positive integer")
    R = f.ring
    return RatWitt.make(R, P.substitute_power(R, f.P, N), P.substitute_power(R, f.Q, N))


def from_series(ring: Ring, coeffs, r: int) -> RatWitt:
    """Alias of :func:`ratwitt.hankel.kronecker_reconstruct`."""
    from .hankel import kronecker_reconstruct

    return kronecker_reconstruct(ring, coeffs, r)


def change_ring(f: RatWitt, S: Ring, phi) -> RatWitt:
    """Image of ``f`` under a ring map ``phi: A -> S``."""
    return RatWitt.make(S, tuple(phi(c) for c in f.P), tuple(phi(c) for c in f.Q))


# -- localisation ZZ -> ZZ[1/m] ---------------------------------------------------


def localize(f: RatWitt, m: int) -> RatWitt:
    """Image of ``f`` in ``W_rat(ZZ[1/m])``: coefficients are reinterpreted."""
    if f.ring != ZZ:
        raise RingError("localize is provided for A = ZZ")
    Am = LocalizedIntegers(m)
    return change_ring(f, Am, Fraction)


def _m_exponent(c: Fraction, m: int, i: int) -> int:
    """Least ``k`` with ``m^(k i) c`` integral."""
    k = 0
    while (c * m ** (k * i)).denominator != 1:
        k += 1
    return k


def localize_preimage(ft: RatWitt, m: int):
    """Return ``(f, k)`` with ``f`` over ZZ and ``[m^k] * ft`` equal to the image of ``f``.

    ``k`` is the least exponent with ``m^(k i) c_i`` integral for every
    coefficient ``c_i`` of ``T^i`` in ``P`` and ``Q``; then
    ``[m^k] * ft = P(m^k T) / Q(m^k T)`` has integer coefficients.
    """
    Am = ft.ring
    if not isinstance(Am, LocalizedIntegers) or Am.m != m:
        raise RingError(f"expected an element over ZZ[1/{m}]")
    k = 0
    for poly in (ft.P, ft.Q):
        for i, c in enumerate(poly):
            if i:
                k = max(k, _m_exponent(Fraction(c), m, i))
    scaled = rw_scale(ft, Fraction(m**k))
    p = tuple(int(c) for c in scaled.P)
    q = tuple(int(c) for c in scaled.Q)
    for c in scaled.P + scaled.Q:
        if Fraction(c).denominator != 1:
            raise AssertionError("clearing denominators failed")
    return RatWitt.make(ZZ, p, q), k
