"""The reduced monoid algebra ``Z(A) / Z(0)`` and the map ``omega`` into ``W_rat(A)``.

A formal sum ``sum n_a (a)`` maps to ``prod (1 - aT)^{n_a}``; the class of
``(0)`` is zero because ``1 - 0T = 1`` is the Witt zero.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .ratwitt import RatWitt
from .rings import polyring as P
from .rings.base import Ring, RingError, require_same_ring
from .rings.finite_field import GF, embedding
from .rings.parse import parse_formal_sum


@dataclass(frozen=True)
class FormalSum:
    ring: Ring
    terms: tuple  # ((element, multiplicity), ...) sorted by element literal

    @classmethod
    def make(cls, ring: Ring, mapping) -> "FormalSum":
        acc: dict = {}
        items = mapping.items() if isinstance(mapping, dict) else mapping
        for a, n in items:
            if ring.is_zero(a) or not n:
                continue
            acc[a] = acc.get(a, 0) + n
        terms = sorted(((a, n) for a, n in acc.items() if n), key=lambda t: (ring.format(t[0]), repr(t[0])))
        return cls(ring, tuple(terms))

    @classmethod
    def generator(cls, ring: Ring, a, n: int = 1) -> "FormalSum":
        return cls.make(ring, {a: n})

    @classmethod
    def parse(cls, ring: Ring, text: str) -> "FormalSum":
        return cls.make(ring, parse_formal_sum(ring, text))

    def as_dict(self) -> dict:
        return dict(self.terms)

    def support(self) -> list:
        return [a for a, _ in self.terms]

    def is_zero(self) -> bool:
        return not self.terms

    def format(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for a, n in self.terms:
            body = f"({self.ring.format(a)})"
            mag = abs(n)
            term = body if mag == 1 else f"{mag}*{body}"
            if out:
                out.append(f" - {term}" if n < 0 else f" + {term}")
            else:
                out.append(f"-{term}" if n < 0 else term)
        return "".join(out)

    def __str__(self):
        return self.format()

    def __add__(self, other):
        return fs_add(self, other)

    def __neg__(self):
        return fs_neg(self)

    def __sub__(self, other):
        return fs_add(self, fs_neg(other))

    def __mul__(self, other):
        return fs_mul(self, other)


def fs_add(u: FormalSum, v: FormalSum) -> FormalSum:
    R = require_same_ring(u.ring, v.ring)
    return FormalSum.make(R, list(u.terms) + list(v.terms))


def fs_neg(u: FormalSum) -> FormalSum:
    return FormalSum(u.ring, tuple((a, -n) for a, n in u.terms))


def fs_mul(u: FormalSum, v: FormalSum) -> FormalSum:
    """Bilinear extension of ``(a)(b) = (ab)``; products equal to 0 drop out."""
    R = require_same_ring(u.ring, v.ring)
    return FormalSum.make(R, [(R.mul(a, b), n * m) for a, n in u.terms for b, m in v.terms])


def omega(u: FormalSum) -> RatWitt:
    """``sum n_a (a) -> prod (1 - aT)^{n_a}``; negative multiplicities go to ``Q``."""
    R = u.ring
    p, q = (R.one,), (R.one,)
    for a, n in u.terms:
        lin = (R.one, R.neg(a))
        if n > 0:
            p = P.mul(R, p, P.power(R, lin, n))
        else:
            q = P.mul(R, q, P.power(R, lin, -n))
    return RatWitt.make(R, p, q)


def kernel_witnesses(ring: Ring) -> list:
    """Non-zero formal sums with Witt-zero image, built from the ring's certificates.

    A nilpotent ``a`` with ``a^2 = 0`` gives ``2(a) - (2a)``; a pair
    ``a b = 0`` of distinct non-zero elements gives ``(a+b) - (a) - (b)``.
    Each candidate is checked before it is returned.
    """
    R = ring
    cands = []
    a = R.nilpotent()
    if a is not None:
        cands.append(FormalSum.make(R, [(a, 2), (R.mul_int(a, 2), -1)]))
    pair = R.zero_divisor_pair()
    if pair is not None and pair[0] != pair[1]:
        x, y = pair
        cands.append(FormalSum.make(R, [(R.add(x, y), 1), (x, -1), (y, -1)]))
    out = []
    for u in cands:
        if not u.is_zero() and omega(u).is_zero() and u not in out:
            out.append(u)
    return out


# -- splitting over finite fields ---------------------------------------------------------


def _roots_with_multiplicity(L: Ring, f: tuple) -> list:
    """Roots of ``f`` in the finite field ``L`` with multiplicity (by repeated division)."""
    roots = []
    f = P.trim(L, f)
    for z in L.elements():
        while len(f) > 1 and L.is_zero(P.evaluate(L, f, z)):
            f = P.divmod_poly(L, f, (L.neg(z), L.one))[0]
            roots.append(z)
    return roots


def _field_order(K: Ring) -> int:
    return K.order


def split_over(f: RatWitt, L: Ring, embed=None) -> FormalSum | None:
    """``sum (alpha_i) - sum (beta_j)`` over ``L`` with ``omega`` equal to ``f``, or ``None``.

    ``P = prod (1 - alpha_i T)``, so the ``alpha_i`` are the roots of the
    reversed polynomial ``P*`` (the inverses of the roots of ``P``).
    """
    K = f.ring
    embed = embed or embedding(K, L)
    terms: dict = {}
    for poly, sign in ((f.P, 1), (f.Q, -1)):
        rev = tuple(embed(c) for c in reversed(poly))
        rts = _roots_with_multiplicity(L, rev)
        if len(rts) != len(poly) - 1:
            return None
        for z in rts:
            terms[z] = terms.get(z, 0) + sign
    return FormalSum.make(L, terms)


def split_preimage(f: RatWitt):
    """Least ``k`` with ``P*, Q*`` split over ``GF(q^k)``, and the preimage there.

    Returns ``(k, L, u)`` with ``omega(u)`` equal to the base change of ``f``.
    """
    K = f.ring
    if not K.is_field or not K.is_finite():
        raise RingError("split_preimage needs a finite base field")
    q = _field_order(K)
    for k in itertools.count(1):
        L = K if k == 1 else GF(q**k)
        u = split_over(f, L)
        if u is not None:
            return k, L, u


def frobenius_action(u: FormalSum, q: int) -> FormalSum:
    """``(a) -> (a^q)``, the generator of ``Gal(L/GF(q))`` acting on formal sums."""
    L = u.ring
    return FormalSum.make(L, [(L.pow(a, q), n) for a, n in u.terms])
