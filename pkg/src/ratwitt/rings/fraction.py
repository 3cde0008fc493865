"""Fields of fractions of GCD domains."""

from __future__ import annotations

from .base import Ring, RingError


class FractionField(Ring):
    """``Quot(base)`` for a domain with gcd.

    Elements are pairs ``(num, den)``, gcd-reduced, with ``den`` in
    unit-normal form, so each element has a single representation.
    """

    is_domain = True
    is_field = True
    strong_fatou = True

    def __init__(self, base: Ring):
        if not base.is_domain:
            raise RingError(f"fractions over {base} rejected: not a certified integral domain")
        self.base = base
        self.descriptor = f"Frac({base.descriptor})"
        self.characteristic = base.characteristic
        self.torsion_free = base.torsion_free
        self.zero = (base.zero, base.one)
        self.one = (base.one, base.one)

    def make(self, num, den):
        B = self.base
        if B.is_zero(den):
            raise ZeroDivisionError("zero denominator")
        if B.is_zero(num):
            return self.zero
        g = B.gcd(num, den)
        if not B.is_one(g):
            num, den = B.divexact(num, g), B.divexact(den, g)
        u, den = B.unit_normal(den)
        if not B.is_one(u):
            num = B.mul(num, B.inv(u))
        return (num, den)

    def add(self, a, b):
        B = self.base
        if a[1] == b[1]:
            return self.make(B.add(a[0], b[0]), a[1])
        return self.make(B.add(B.mul(a[0], b[1]), B.mul(b[0], a[1])), B.mul(a[1], b[1]))

    def neg(self, a):
        return (self.base.neg(a[0]), a[1])

    def mul(self, a, b):
        B = self.base
        return self.make(B.mul(a[0], b[0]), B.mul(a[1], b[1]))

    def from_int(self, n):
        return self.make(self.base.from_int(n), self.base.one)

    def mul_int(self, a, n):
        return self.make(self.base.mul_int(a[0], n), a[1])

    def inv(self, a):
        if self.is_zero(a):
            raise ZeroDivisionError("division by zero")
        return self.make(a[1], a[0])

    def embed(self, b):
        return (b, self.base.one)

    def format(self, a):
        num = self.base.format(a[0])
        if self.base.is_one(a[1]):
            return num
        den = self.base.format(a[1])
        if not num.lstrip("-").replace("^", "").replace("*", "").isalnum():
            num = f"({num})"
        if not den.replace("^", "").isalnum():
            den = f"({den})"
        return f"{num}/{den}"

    def variables(self):
        return {name: self.embed(v) for name, v in self.base.variables().items()}

    def random_element(self, rng, size=3):
        den = self.base.random_element(rng, size)
        while self.base.is_zero(den):
            den = self.base.random_element(rng, size)
        return self.make(self.base.random_element(rng, size), den)
