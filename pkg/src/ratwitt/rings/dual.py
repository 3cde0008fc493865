"""Dual numbers ``B[e]/(e^2)``."""

from __future__ import annotations

from .base import NotDivisibleError, Ring, RingError


class DualNumbers(Ring):
    """Elements ``a + b*e`` stored as pairs ``(a, b)`` with ``e*e = 0``."""

    is_domain = False
    is_field = False

    def __init__(self, base: Ring):
        if "e" in base.variables():
            raise RingError("base ring already uses the name e")
        self.base = base
        self.descriptor = f"Dual({base.descriptor})"
        self.characteristic = base.characteristic
        self.torsion_free = base.torsion_free
        self.zero = (base.zero, base.zero)
        self.one = (base.one, base.zero)
        self.eps = (base.zero, base.one)

    def add(self, a, b):
        B = self.base
        return (B.add(a[0], b[0]), B.add(a[1], b[1]))

    def sub(self, a, b):
        B = self.base
        return (B.sub(a[0], b[0]), B.sub(a[1], b[1]))

    def neg(self, a):
        B = self.base
        return (B.neg(a[0]), B.neg(a[1]))

    def mul(self, a, b):
        B = self.base
        return (B.mul(a[0], b[0]), B.add(B.mul(a[0], b[1]), B.mul(a[1], b[0])))

    def mul_int(self, a, n):
        B = self.base
        return (B.mul_int(a[0], n), B.mul_int(a[1], n))

    def from_int(self, n):
        return (self.base.from_int(n), self.base.zero)

    def linear_combination(self, coeffs, elems):
        B = self.base
        return (
            B.linear_combination(coeffs, [e[0] for e in elems]),
            B.linear_combination(coeffs, [e[1] for e in elems]),
        )

    def inv(self, a):
        B = self.base
        u = B.inv(a[0])
        return (u, B.neg(B.mul(a[1], B.mul(u, u))))

    def divexact(self, a, b):
        B = self.base
        if not B.is_unit(b[0]):
            if B.is_zero(b[1]) and not B.is_zero(b[0]):
                # (a0 + a1 e) / c for a constant c, componentwise
                return (B.divexact(a[0], b[0]), B.divexact(a[1], b[0]))
            raise NotDivisibleError(f"{self.format(b)} is not a unit in {self}")
        return self.mul(a, self.inv(b))

    def torsion_free_lift(self):
        # S[e]/(e^2) maps onto B[e]/(e^2) when S maps onto B
        base = self.base.torsion_free_lift()
        if base is None:
            return None
        S0, lift, red = base
        return DualNumbers(S0), lambda a: (lift(a[0]), lift(a[1])), lambda a: (red(a[0]), red(a[1]))

    def reduce(self, a):
        """The quotient map to the base ring, ``a + b*e -> a``."""
        return a[0]

    def lift(self, a):
        return (a, self.base.zero)

    def format(self, a):
        B = self.base
        x, y = a
        if B.is_zero(y):
            return B.format(x)
        ys = B.format(y)
        body = ys[1:] if ys.startswith("-") else ys
        if "+" in body or "-" in body:
            eterm = f"({ys})*e"
        elif ys == "1":
            eterm = "e"
        elif ys == "-1":
            eterm = "-e"
        else:
            eterm = f"{ys}*e"
        if B.is_zero(x):
            return eterm
        xs = B.format(x)
        return f"{xs}{eterm}" if eterm.startswith("-") else f"{xs}+{eterm}"

    def variables(self):
        vs = {name: self.lift(v) for name, v in self.base.variables().items()}
        vs["e"] = self.eps
        return vs

    def is_finite(self):
        return self.base.is_finite()

    def elements(self):
        base = list(self.base.elements())
        for x in base:
            for y in base:
                yield (x, y)

    def random_element(self, rng, size=5):
        return (self.base.random_element(rng, size), self.base.random_element(rng, size))

    def nilpotent(self):
        return self.eps

    def zero_divisor_pair(self):
        return (self.eps, self.eps)
