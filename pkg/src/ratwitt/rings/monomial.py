"""The monomial subring ``k + x*k[x,y]`` of ``k[x,y]``.

This domain is not completely integrally closed: ``y`` lies outside it while
``x * y**n`` lies inside for every ``n``, so ``y`` is quasi-integral but not
integral.  It is the shipped witness for non-cic behaviour.
"""

from __future__ import annotations

from .base import Ring, RingError
from .fraction import FractionField
from .polyring import PolyRing


def bivariate(k: Ring) -> PolyRing:
    """``k[x][y]``, the bivariate polynomial ring used as ambient ring."""
    return PolyRing(PolyRing(k, "x"), "y")


def monomial_subring_member(p, k: Ring) -> bool:
    """True iff every non-constant monomial of ``p`` is divisible by ``x``.

    ``p`` is an element of ``k[x][y]``: a tuple (in ``y``) of tuples (in ``x``).
    Only the ``y^j`` parts with ``j >= 1`` can fail, through a constant term.
    """
    return all(not c or k.is_zero(c[0]) for c in p[1:])


class MonomialSubring(Ring):
    """``A = k + x*k[x,y]``; elements are ``k[x][y]`` tuples satisfying membership."""

    is_domain = True
    is_field = False
    strong_fatou = False

    def __init__(self, k: Ring):
        if not k.is_field:
            raise RingError("MonSub needs a base field")
        self.k = k
        self.ambient = bivariate(k)
        self.descriptor = f"MonSub({k.descriptor})"
        self.characteristic = k.characteristic
        self.torsion_free = k.torsion_free
        self.zero = self.ambient.zero
        self.one = self.ambient.one
        self._frac = FractionField(self.ambient)

    def contains(self, p) -> bool:
        return monomial_subring_member(p, self.k)

    def _check(self, p):
        if not self.contains(p):
            raise RingError(f"{self.ambient.format(p)} is not in {self}")
        return p

    def add(self, a, b):
        return self.ambient.add(a, b)

    def sub(self, a, b):
        return self.ambient.sub(a, b)

    def neg(self, a):
        return self.ambient.neg(a)

    def mul(self, a, b):
        return self.ambient.mul(a, b)

    def mul_int(self, a, n):
        return self.ambient.mul_int(a, n)

    def from_int(self, n):
        return self.ambient.from_int(n)

    def linear_combination(self, coeffs, elems):
        return self.ambient.linear_combination(coeffs, elems)

    def inv(self, a):
        return self.ambient.inv(a)

    def divexact(self, a, b):
        return self._check(self.ambient.divexact(a, b))

    def fraction_field(self):
        return self._frac

    def to_fraction(self, a):
        return (a, self.ambient.one)

    def from_fraction(self, x):
        p = self.ambient.from_fraction(x)
        if p is None or not self.contains(p):
            return None
        return p

    def format(self, a):
        return self.ambient.format(a)

    def variables(self):
        return self.ambient.variables()

    def parse(self, text):
        from .parse import parse_element

        return self._check(parse_element(self.ambient, text))

    def random_element(self, rng, size=2):
        from .polyring import trim

        kx = self.ambient.base
        coeffs = [kx.random_element(rng, size)]
        for _ in range(rng.randint(0, size)):
            c = kx.random_element(rng, size)
            coeffs.append(trim(self.k, (self.k.zero,) + tuple(c[1:])) if c else c)
        return trim(kx, coeffs)
