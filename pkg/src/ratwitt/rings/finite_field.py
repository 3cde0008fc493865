"""Finite fields GF(p^k) = GF(p)[x]/(modulus)."""

from __future__ import annotations

import itertools

from . import polyring as P
from .base import NotDivisibleError, Ring, RingError
from .integers import ZZ, PrimeField, factor_prime_power

# Conway polynomials C_{p,k}, coefficients lowest degree first.
CONWAY = {
    (2, 1): (1, 1),
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (3, 1): (1, 1),
    (3, 2): (2, 2, 1),
    (3, 3): (1, 2, 0, 1),
    (3, 4): (2, 0, 0, 2, 1),
    (5, 1): (3, 1),
    (5, 2): (2, 4, 1),
    (5, 3): (3, 3, 0, 1),
    (5, 4): (2, 4, 4, 0, 1),
    (7, 1): (4, 1),
    (7, 2): (3, 6, 1),
    (7, 3): (4, 0, 6, 1),
    (7, 4): (3, 4, 5, 0, 1),
}


def is_irreducible(Fp: PrimeField, f: tuple) -> bool:
    """Irreducibility over GF(p) by trial division (small degrees only)."""
    n = len(f) - 1
    if n < 1:
        return False
    for d in range(1, n // 2 + 1):
        for tail in itertools.product(range(Fp.p), repeat=d):
            g = tuple(tail) + (1,)
            if not P.divmod_poly(Fp, f, g)[1]:
                return False
    return True


def least_irreducible(Fp: PrimeField, k: int) -> tuple:
    """Lexicographically least monic irreducible polynomial of degree ``k``."""
    for tail in itertools.product(range(Fp.p), repeat=k):
        f = tuple(reversed(tail)) + (1,)
        if f[0] and is_irreducible(Fp, f):
            return f
    raise RingError(f"no irreducible polynomial of degree {k} over GF({Fp.p})")


class IntegralOrder(Ring):
    """``ZZ[x]/(m)`` for a monic integer ``m`` of degree ``k``: a free ZZ-module of rank ``k``.

    Only what the ghost route needs is provided; division is by integers.
    """

    torsion_free = True

    def __init__(self, modulus):
        self.modulus = tuple(int(c) for c in modulus)
        self.k = k = len(self.modulus) - 1
        self.descriptor = f"ZZ[x]/({P.format_poly(ZZ, self.modulus, 'x')})"
        self.zero = (0,) * k
        self.one = (1,) + (0,) * (k - 1)

    def _reduce(self, c):
        k, m = self.k, self.modulus
        for i in range(len(c) - 1, k - 1, -1):
            t = c[i]
            if t:
                for j in range(k + 1):
                    c[i - k + j] -= t * m[j]
        return tuple(c[:k]) + (0,) * (k - len(c))

    def add(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def neg(self, a):
        return tuple(-x for x in a)

    def mul(self, a, b):
        c = [0] * (2 * self.k - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    c[i + j] += x * y
        return self._reduce(c)

    def mul_int(self, a, n):
        return tuple(x * n for x in a)

    def from_int(self, n):
        return (int(n),) + (0,) * (self.k - 1)

    def linear_combination(self, coeffs, elems):
        return tuple(sum(c * e[i] for c, e in zip(coeffs, elems)) for i in range(self.k))

    def is_unit(self, a):
        # conservative: only +-1 are recognised
        return a in (self.one, self.neg(self.one))

    def inv(self, a):
        if not self.is_unit(a):
            raise ZeroDivisionError(f"{self.format(a)} is not a recognised unit")
        return a

    def format(self, a):
        return P.format_poly(ZZ, P.trim(ZZ, a), "x")

    def divexact(self, a, b):
        if any(b[1:]) or not b[0]:
            raise NotDivisibleError("IntegralOrder only divides by non-zero integers")
        n = b[0]
        if any(x % n for x in a):
            raise NotDivisibleError(f"not divisible by {n}")
        return tuple(x // n for x in a)


class FiniteField(Ring):
    """GF(p^k) with elements stored as coefficient tuples of length ``k``.

    ``modulus`` is a monic irreducible polynomial over GF(p), lowest degree
    first; when omitted the shipped Conway polynomial is used.
    """

    is_domain = True
    is_field = True
    strong_fatou = True

    def __init__(self, p: int, k: int, modulus=None):
        self.prime_field = Fp = PrimeField(p)
        if modulus is None:
            modulus = CONWAY.get((p, k)) or least_irreducible(Fp, k)
        modulus = P.trim(Fp, [c % p for c in modulus])
        if len(modulus) != k + 1 or modulus[-1] != 1:
            raise RingError("modulus must be monic of degree k")
        if not is_irreducible(Fp, modulus):
            raise RingError(f"modulus {P.format_poly(Fp, modulus, 'x')} is reducible over GF({p})")
        self.p = p
        self.degree = k
        self.order = p**k
        self.modulus = modulus
        self.characteristic = p
        self.zero = (0,) * k
        self.one = (1,) + (0,) * (k - 1)
        default = CONWAY.get((p, k)) == modulus
        q = self.order
        self.descriptor = f"GF/{q}" if default else f"GF/{q}={P.format_poly(Fp, modulus, 'x')}"
        self._mul_cache: dict = {}

    def _reduce(self, coeffs):
        p, k, m = self.p, self.degree, self.modulus
        c = [x % p for x in coeffs]
        for i in range(len(c) - 1, k - 1, -1):
            t = c[i]
            if t:
                for j in range(k + 1):
                    c[i - k + j] = (c[i - k + j] - t * m[j]) % p
        c = c[:k] + [0] * (k - len(c))
        return tuple(c)

    def add(self, a, b):
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def sub(self, a, b):
        p = self.p
        return tuple((x - y) % p for x, y in zip(a, b))

    def neg(self, a):
        p = self.p
        return tuple(-x % p for x in a)

    def mul(self, a, b):
        key = (a, b)
        r = self._mul_cache.get(key)
        if r is None:
            k = self.degree
            c = [0] * (2 * k - 1)
            for i, x in enumerate(a):
                if x:
                    for j, y in enumerate(b):
                        c[i + j] += x * y
            r = self._reduce(c)
            if len(self._mul_cache) < 1 << 18:
                self._mul_cache[key] = r
        return r

    def mul_int(self, a, n):
        p = self.p
        return tuple(x * n % p for x in a)

    def from_int(self, n):
        return (n % self.p,) + (0,) * (self.degree - 1)

    def torsion_free_lift(self):
        S = IntegralOrder(self.modulus)
        return S, tuple, self._reduce

    def linear_combination(self, coeffs, elems):
        p = self.p
        return tuple(
            sum(c * e[i] for c, e in zip(coeffs, elems)) % p for i in range(self.degree)
        )

    def inv(self, a):
        if a == self.zero:
            raise ZeroDivisionError("division by zero")
        return self.pow(a, self.order - 2)

    def frobenius(self, a, times: int = 1):
        """``a -> a**(p**times)``."""
        return self.pow(a, self.p ** (times % self.degree)) if times % self.degree else a

    def from_prime(self, c: int):
        return self.from_int(c)

    def in_prime_field(self, a) -> bool:
        return all(x == 0 for x in a[1:])

    def format(self, a):
        return P.format_poly(self.prime_field, P.trim(self.prime_field, a), "x")

    def variables(self):
        return {"x": self._reduce([0, 1])}

    def is_finite(self):
        return True

    def elements(self):
        for t in itertools.product(range(self.p), repeat=self.degree):
            yield tuple(reversed(t))

    def random_element(self, rng, size=5):
        return tuple(rng.randrange(self.p) for _ in range(self.degree))

    def multiplicative_order(self, a) -> int:
        if a == self.zero:
            raise ZeroDivisionError("zero has no multiplicative order")
        n, x = 1, a
        while x != self.one:
            x = self.mul(x, a)
            n += 1
        return n


def GF(q: int, modulus=None) -> Ring:
    """Finite field of order ``q``; prime order gives :class:`PrimeField`."""
    p, k = factor_prime_power(q)
    if k == 1 and modulus is None:
        return PrimeField(p)
    return FiniteField(p, k, modulus)


def embedding(K: Ring, L: Ring):
    """A field embedding ``K -> L`` between finite fields of the same characteristic.

    For Conway-defined fields the generator of ``K`` is sent to
    ``gen_L ** ((|L|-1)/(|K|-1))``, the compatible choice; otherwise the
    first root of ``K``'s modulus in ``L`` is used.
    """
    if K.characteristic != L.characteristic:
        raise RingError("fields of different characteristic")
    kdeg = getattr(K, "degree", 1)
    ldeg = getattr(L, "degree", 1)
    if ldeg % kdeg:
        raise RingError(f"{K} does not embed in {L}")
    if isinstance(K, PrimeField):
        return L.from_int
    image = None
    if CONWAY.get((K.p, kdeg)) == K.modulus and CONWAY.get((L.p, ldeg)) == getattr(L, "modulus", None):
        cand = L.pow(L.variables()["x"], (L.order - 1) // (K.order - 1))
        if P.evaluate(L, tuple(L.from_int(c) for c in K.modulus), cand) == L.zero:
            image = cand
    if image is None:
        for z in L.elements():
            if P.evaluate(L, tuple(L.from_int(c) for c in K.modulus), z) == L.zero:
                image = z
                break
    if image is None:
        raise RingError(f"no root of the modulus of {K} in {L}")
    powers = [L.one]
    for _ in range(1, kdeg):
        powers.append(L.mul(powers[-1], image))

    def embed(a):
        return L.sum(L.mul_int(pw, c) for pw, c in zip(powers, a))

    return embed
