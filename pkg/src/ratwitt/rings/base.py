"""Abstract ring descriptor.

A :class:`Ring` is a descriptor object that owns the arithmetic of its
elements.  Elements themselves are plain immutable Python values (ints,
fractions, tuples) in a canonical normal form, so ``==`` and ``hash`` on
elements agree with ring equality.
"""

from __future__ import annotations

import random
from typing import Any, Iterable, Iterator, Sequence


class RingError(ValueError):
    """Raised for invalid ring constructions or unsupported operations."""


class NotDivisibleError(ArithmeticError):
    """Raised when an exact division has a non-zero remainder."""


class Ring:
    """Base class for exact commutative unital rings.

    Subclasses set the capability flags below and implement ``add``, ``neg``,
    ``mul``, ``from_int`` and ``format``.
    """

    descriptor: str = "?"
    is_domain: bool = False
    is_field: bool = False
    torsion_free: bool = False
    # completely integrally closed (equivalently strong Fatou) domain
    strong_fatou: bool = False
    characteristic: int = 0

    zero: Any
    one: Any

    # -- core arithmetic -------------------------------------------------

    def add(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def from_int(self, n: int):
        raise NotImplementedError

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def is_zero(self, a) -> bool:
        return a == self.zero

    def is_one(self, a) -> bool:
        return a == self.one

    def mul_int(self, a, n: int):
        return self.mul(self.from_int(n), a)

    def pow(self, a, k: int):
        if k < 0:
            return self.pow(self.inv(a), -k)
        result = self.one
        base = a
        while k:
            if k & 1:
                result = self.mul(result, base)
            k >>= 1
            if k:
                base = self.mul(base, base)
        return result

    def sum(self, elems: Iterable):
        total = self.zero
        for e in elems:
            total = self.add(total, e)
        return total

    def prod(self, elems: Iterable):
        total = self.one
        for e in elems:
            total = self.mul(total, e)
        return total

    def linear_combination(self, coeffs: Sequence[int], elems: Sequence):
        """Return ``sum(c * e)`` for integer coefficients ``c``."""
        total = self.zero
        for c, e in zip(coeffs, elems):
            if c:
                total = self.add(total, self.mul_int(e, c))
        return total

    # -- units and division ---------------------------------------------

    def is_unit(self, a) -> bool:
        try:
            self.inv(a)
        except (ZeroDivisionError, NotDivisibleError, RingError):
            return False
        return True

    def inv(self, a):
        raise ZeroDivisionError(f"{self.format(a)} is not a unit in {self}")

    def divexact(self, a, b):
        """Exact quotient ``a / b``; raises :class:`NotDivisibleError`."""
        if self.is_field:
            if self.is_zero(b):
                raise ZeroDivisionError("division by zero")
            return self.mul(a, self.inv(b))
        raise NotDivisibleError(f"exact division not available in {self}")

    def div(self, a, b):
        return self.divexact(a, b)

    def unit_normal(self, a):
        """Return ``(u, b)`` with ``a = u * b``, ``u`` a unit and ``b`` canonical."""
        if self.is_field:
            if self.is_zero(a):
                return self.one, a
            return a, self.one
        return self.one, a

    def gcd(self, a, b):
        if self.is_field:
            return self.zero if self.is_zero(a) and self.is_zero(b) else self.one
        raise RingError(f"gcd not available in {self}")

    # -- fraction field ---------------------------------------------------

    def fraction_field(self) -> "Ring":
        if self.is_field:
            return self
        raise RingError(f"{self} is not a certified integral domain")

    def to_fraction(self, a):
        """Image of ``a`` in :meth:`fraction_field`."""
        if self.is_field:
            return a
        raise NotImplementedError

    def from_fraction(self, x):
        """Preimage of a fraction-field element, or ``None`` if it is not in the ring."""
        if self.is_field:
            return x
        raise NotImplementedError

    # -- text I/O ---------------------------------------------------------

    def format(self, a) -> str:
        raise NotImplementedError

    def variables(self) -> dict:
        """Named generators available to element literals."""
        return {}

    def parse(self, text: str):
        from .parse import parse_element

        return parse_element(self, text)

    # -- enumeration and sampling ------------------------------------------

    def is_finite(self) -> bool:
        return False

    def elements(self) -> Iterator:
        raise RingError(f"{self} is infinite")

    def random_element(self, rng: random.Random, size: int = 5):
        raise NotImplementedError

    # -- certificates used by the monoid module -----------------------------

    def zero_divisor_pair(self):
        """A pair ``(a, b)`` of non-zero elements with ``a*b = 0``, or ``None``."""
        return None

    def torsion_free_lift(self):
        """``(S, lift, reduce)`` with ``S`` torsion free and ``reduce: S -> self`` a
        surjective ring map, or ``None``.  Used to evaluate integral universal
        formulas through ghost components."""
        return None

    def nilpotent(self):
        """A non-zero element ``a`` with ``a*a = 0``, or ``None``."""
        return None

    # -- descriptor identity ---------------------------------------------------

    def __eq__(self, other):
        return isinstance(other, Ring) and self.descriptor == other.descriptor

    def __hash__(self):
        return hash(self.descriptor)

    def __repr__(self):
        return self.descriptor

    __str__ = __repr__


def require_same_ring(*rings: Ring) -> Ring:
    first = rings[0]
    for r in rings[1:]:
        if r != first:
            raise RingError(f"ring mismatch: {first} vs {r}")
    return first
