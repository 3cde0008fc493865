"""The rings ZZ, QQ and ZZ/n."""

from __future__ import annotations

import math
from fractions import Fraction
from functools import reduce

from .base import NotDivisibleError, Ring, RingError


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def factor_prime_power(q: int) -> tuple[int, int]:
    """Return ``(p, k)`` with ``q = p**k``; raises if ``q`` is not a prime power."""
    if q < 2:
        raise RingError(f"{q} is not a prime power")
    p = next(d for d in range(2, q + 1) if q % d == 0)
    k = 0
    while q % p == 0:
        q //= p
        k += 1
    if q != 1:
        raise RingError("field order must be a prime power")
    return p, k


class Integers(Ring):
    descriptor = "ZZ"
    is_domain = True
    torsion_free = True
    strong_fatou = True
    zero = 0
    one = 1

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def mul_int(self, a, n):
        return a * n

    def from_int(self, n):
        return int(n)

    def pow(self, a, k):
        if k < 0:
            return self.pow(self.inv(a), -k)
        return a**k

    def linear_combination(self, coeffs, elems):
        return sum(c * e for c, e in zip(coeffs, elems))

    def inv(self, a):
        if a in (1, -1):
            return a
        raise ZeroDivisionError(f"{a} is not a unit in ZZ")

    def divexact(self, a, b):
        if b == 0:
            raise ZeroDivisionError("division by zero")
        q, r = divmod(a, b)
        if r:
            raise NotDivisibleError(f"{a} is not divisible by {b}")
        return q

    def unit_normal(self, a):
        return (-1, -a) if a < 0 else (1, a)

    def gcd(self, a, b):
        return math.gcd(a, b)

    def fraction_field(self):
        return QQ

    def to_fraction(self, a):
        return Fraction(a)

    def from_fraction(self, x):
        x = Fraction(x)
        return x.numerator if x.denominator == 1 else None

    def format(self, a):
        return str(a)

    def random_element(self, rng, size=5):
        return rng.randint(-size, size)


class Rationals(Ring):
    descriptor = "QQ"
    is_domain = True
    is_field = True
    torsion_free = True
    strong_fatou = True
    zero = Fraction(0)
    one = Fraction(1)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def mul_int(self, a, n):
        return a * n

    def from_int(self, n):
        return Fraction(n)

    def linear_combination(self, coeffs, elems):
        # one common denominator keeps the inner loop in integers
        den = reduce(lambda x, y: x * y // math.gcd(x, y), (e.denominator for e in elems), 1)
        num = sum(c * e.numerator * (den // e.denominator) for c, e in zip(coeffs, elems))
        return Fraction(num, den)

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("division by zero")
        return 1 / Fraction(a)

    def divexact(self, a, b):
        if b == 0:
            raise ZeroDivisionError("division by zero")
        return Fraction(a) / b

    def format(self, a):
        return str(a)

    def random_element(self, rng, size=5):
        return Fraction(rng.randint(-size, size), rng.randint(1, size))


class LocalizedIntegers(Rationals):
    """``ZZ[1/m]``: rationals whose denominator divides a power of ``m``."""

    def __init__(self, m: int):
        if m < 2:
            raise RingError("ZZ[1/m] needs m >= 2")
        self.m = m
        self.descriptor = f"ZZ[1/{m}]"
        self.is_field = False
        self._primes = [p for p in range(2, m + 1) if m % p == 0 and is_prime(p)]

    def contains(self, x) -> bool:
        d = Fraction(x).denominator
        for p in self._primes:
            while d % p == 0:
                d //= p
        return d == 1

    def _check(self, x):
        if not self.contains(x):
            raise NotDivisibleError(f"{x} is not in {self}")
        return x

    def inv(self, a):
        if a == 0 or not self.contains(1 / Fraction(a)):
            raise ZeroDivisionError(f"{a} is not a unit in {self}")
        return 1 / Fraction(a)

    def divexact(self, a, b):
        if b == 0:
            raise ZeroDivisionError("division by zero")
        return self._check(Fraction(a) / b)

    def unit_normal(self, a):
        if a == 0:
            return self.one, a
        # units are +-m^k up to the primes of m; normalise to the part prime to m
        num, den = Fraction(a).numerator, Fraction(a).denominator
        core = abs(num)
        for p in self._primes:
            while core % p == 0:
                core //= p
        return Fraction(a) / core, Fraction(core)

    def gcd(self, a, b):
        g = math.gcd(Fraction(a).numerator, Fraction(b).numerator)
        return self.unit_normal(Fraction(g))[1] if g else Fraction(0)

    def fraction_field(self):
        return QQ

    def to_fraction(self, a):
        return Fraction(a)

    def from_fraction(self, x):
        return Fraction(x) if self.contains(x) else None

    def parse(self, text):
        from .parse import parse_element

        return self._check(parse_element(QQ, text))

    def random_element(self, rng, size=5):
        return Fraction(rng.randint(-size, size), self.m ** rng.randint(0, 2))


class IntegersMod(Ring):
    """ZZ/n with elements the integers ``0 <= k < n``."""

    def __init__(self, n: int):
        if n < 2:
            raise RingError("ZZ/n requires n >= 2 (the zero ring is rejected)")
        self.n = n
        self.descriptor = f"Zmod/{n}"
        self.characteristic = n
        self.is_field = self.is_domain = is_prime(n)
        self.strong_fatou = self.is_field
        self.zero = 0
        self.one = 1

    def add(self, a, b):
        return (a + b) % self.n

    def sub(self, a, b):
        return (a - b) % self.n

    def neg(self, a):
        return -a % self.n

    def mul(self, a, b):
        return a * b % self.n

    def mul_int(self, a, k):
        return a * k % self.n

    def from_int(self, k):
        return int(k) % self.n

    def pow(self, a, k):
        if k < 0:
            return self.pow(self.inv(a), -k)
        return pow(a, k, self.n)

    def torsion_free_lift(self):
        return ZZ, int, self.from_int

    def linear_combination(self, coeffs, elems):
        return sum(c * e for c, e in zip(coeffs, elems)) % self.n

    def inv(self, a):
        if math.gcd(a, self.n) != 1:
            raise ZeroDivisionError(f"{a} is not a unit in {self}")
        return pow(a, -1, self.n)

    def divexact(self, a, b):
        if self.is_field:
            return self.mul(a, self.inv(b))
        g = math.gcd(b, self.n)
        if a % g:
            raise NotDivisibleError(f"{a} is not divisible by {b} in {self}")
        # any solution will do for a non-domain; pick the least one
        m = self.n // g
        return (a // g) * pow(b // g, -1, m) % m if m > 1 else 0

    def format(self, a):
        return str(a)

    def is_finite(self):
        return True

    def elements(self):
        return iter(range(self.n))

    def random_element(self, rng, size=5):
        return rng.randrange(self.n)

    def zero_divisor_pair(self):
        if self.is_domain:
            return None
        d = next(d for d in range(2, self.n) if self.n % d == 0)
        return d, self.n // d

    def nilpotent(self):
        for a in range(1, self.n):
            if a * a % self.n == 0:
                return a
        return None


class PrimeField(IntegersMod):
    """GF(p) = ZZ/p, written ``GF/p``."""

    def __init__(self, p: int):
        if not is_prime(p):
            raise RingError(f"GF/{p}: {p} is not prime")
        super().__init__(p)
        self.p = p
        self.degree = 1
        self.order = p
        self.descriptor = f"GF/{p}"

    def frobenius(self, a, times: int = 1):
        return a


ZZ = Integers()
QQ = Rationals()
