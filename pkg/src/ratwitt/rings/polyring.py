"""Dense univariate polynomials over a :class:`Ring`.

Polynomials are tuples of base-ring elements, lowest degree first, with no
trailing zeros; the zero polynomial is ``()``.  The module-level functions
take the coefficient ring as first argument; :class:`PolyRing` packages them
as a ring in its own right so that polynomial rings can be nested
(``k[x][y]``) and used as matrix entries.
"""

from __future__ import annotations

import random
from typing import Sequence

from .base import NotDivisibleError, Ring, RingError

#: degree of the zero polynomial
DEG_ZERO = float("-inf")

Poly = tuple


def trim(R: Ring, coeffs: Sequence) -> Poly:
    coeffs = list(coeffs)
    while coeffs and R.is_zero(coeffs[-1]):
        coeffs.pop()
    return tuple(coeffs)


def degree(f: Poly):
    return len(f) - 1 if f else DEG_ZERO


def leading(R: Ring, f: Poly):
    return f[-1] if f else R.zero


def coeff(R: Ring, f: Poly, i: int):
    return f[i] if 0 <= i < len(f) else R.zero


def const(R: Ring, c) -> Poly:
    return trim(R, (c,))


def monomial(R: Ring, c, d: int) -> Poly:
    if R.is_zero(c):
        return ()
    return (R.zero,) * d + (c,)


def add(R: Ring, f: Poly, g: Poly) -> Poly:
    if len(f) < len(g):
        f, g = g, f
    out = list(f)
    for i, c in enumerate(g):
        out[i] = R.add(out[i], c)
    return trim(R, out)


def neg(R: Ring, f: Poly) -> Poly:
    return tuple(R.neg(c) for c in f)


def sub(R: Ring, f: Poly, g: Poly) -> Poly:
    return add(R, f, neg(R, g))


def scale(R: Ring, f: Poly, c) -> Poly:
    return trim(R, [R.mul(c, a) for a in f])


def mul(R: Ring, f: Poly, g: Poly) -> Poly:
    if not f or not g:
        return ()
    out = [R.zero] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if R.is_zero(a):
            continue
        for j, b in enumerate(g):
            out[i + j] = R.add(out[i + j], R.mul(a, b))
    return trim(R, out)


def mul_trunc(R: Ring, f: Sequence, g: Sequence, n: int) -> list:
    """Coefficients ``0..n-1`` of ``f*g`` as a list of length ``n``."""
    out = [R.zero] * n
    for i, a in enumerate(f[:n]):
        if R.is_zero(a):
            continue
        for j, b in enumerate(g[: n - i]):
            out[i + j] = R.add(out[i + j], R.mul(a, b))
    return out


def inv_series(R: Ring, f: Sequence, n: int) -> list:
    """First ``n`` coefficients of ``1/f``; ``f[0]`` must be a unit."""
    c0 = R.inv(f[0])
    out = [R.zero] * n
    if n == 0:
        return out
    out[0] = c0
    for k in range(1, n):
        acc = R.zero
        for i in range(1, min(k, len(f) - 1) + 1):
            acc = R.add(acc, R.mul(f[i], out[k - i]))
        out[k] = R.neg(R.mul(c0, acc))
    return out


def power(R: Ring, f: Poly, k: int) -> Poly:
    result: Poly = const(R, R.one)
    base = f
    while k:
        if k & 1:
            result = mul(R, result, base)
        k >>= 1
        if k:
            base = mul(R, base, base)
    return result


def evaluate(R: Ring, f: Poly, x):
    acc = R.zero
    for c in reversed(f):
        acc = R.add(R.mul(acc, x), c)
    return acc


def scale_variable(R: Ring, f: Poly, c) -> Poly:
    """``f(c*T)``."""
    out = []
    cp = R.one
    for a in f:
        out.append(R.mul(a, cp))
        cp = R.mul(cp, c)
    return trim(R, out)


def substitute_power(R: Ring, f: Poly, n: int) -> Poly:
    """``f(T**n)``."""
    if not f:
        return ()
    out = [R.zero] * (n * (len(f) - 1) + 1)
    for i, a in enumerate(f):
        out[n * i] = a
    return tuple(out)


def reverse(R: Ring, f: Poly) -> Poly:
    """``T**deg(f) * f(1/T)``."""
    return trim(R, reversed(f))


def derivative(R: Ring, f: Poly) -> Poly:
    return trim(R, [R.mul_int(a, i) for i, a in enumerate(f)][1:])


def map_coeffs(R: Ring, f: Poly, fn) -> Poly:
    return trim(R, [fn(a) for a in f])


def divmod_poly(R: Ring, f: Poly, g: Poly) -> tuple[Poly, Poly]:
    """Division with remainder; the leading coefficient of ``g`` must be a unit."""
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    lc_inv = R.inv(g[-1])
    r = list(f)
    dg = len(g) - 1
    q = [R.zero] * max(len(f) - dg, 0)
    for k in range(len(f) - 1 - dg, -1, -1):
        c = R.mul(r[k + dg], lc_inv)
        q[k] = c
        if R.is_zero(c):
            continue
        for i, b in enumerate(g):
            r[k + i] = R.sub(r[k + i], R.mul(c, b))
    return trim(R, q), trim(R, r[:dg])


def divexact(R: Ring, f: Poly, g: Poly) -> Poly:
    """Exact quotient over a domain; raises :class:`NotDivisibleError`."""
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    if not f:
        return ()
    r = list(f)
    dg = len(g) - 1
    if len(f) - 1 < dg:
        raise NotDivisibleError("degree too small for exact division")
    q = [R.zero] * (len(f) - dg)
    for k in range(len(f) - 1 - dg, -1, -1):
        top = r[k + dg]
        if R.is_zero(top):
            continue
        c = R.divexact(top, g[-1])
        q[k] = c
        for i, b in enumerate(g):
            r[k + i] = R.sub(r[k + i], R.mul(c, b))
    if any(not R.is_zero(c) for c in r[:dg]):
        raise NotDivisibleError("polynomial remainder is non-zero")
    return trim(R, q)


def monic(R: Ring, f: Poly) -> Poly:
    if not f:
        return f
    return scale(R, f, R.inv(f[-1]))


def content(R: Ring, f: Poly):
    g = R.zero
    for c in f:
        g = R.gcd(g, c)
    return g


def primitive_part(R: Ring, f: Poly) -> Poly:
    if not f:
        return f
    c = content(R, f)
    u, _ = R.unit_normal(f[-1])
    c = R.mul(c, u)
    return tuple(R.divexact(a, c) for a in f)


def pseudo_remainder(R: Ring, f: Poly, g: Poly) -> Poly:
    dg = len(g) - 1
    r = f
    lc = g[-1]
    while r and len(r) - 1 >= dg:
        shift = len(r) - 1 - dg
        r = sub(R, scale(R, r, lc), mul(R, monomial(R, r[-1], shift), g))
    return r


def gcd(R: Ring, f: Poly, g: Poly) -> Poly:
    """Greatest common divisor, unit-normalised (monic over a field).

    Over a field this is the Euclidean algorithm; over a GCD domain the
    primitive remainder sequence is used.
    """
    if R.is_field:
        while g:
            f, g = g, divmod_poly(R, f, g)[1]
        return monic(R, f)
    if not R.is_domain:
        raise RingError(f"polynomial gcd needs a domain, got {R}")
    if not f:
        return _unit_normal_poly(R, g)
    if not g:
        return _unit_normal_poly(R, f)
    c = R.gcd(content(R, f), content(R, g))
    a, b = primitive_part(R, f), primitive_part(R, g)
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = pseudo_remainder(R, a, b)
        a, b = b, (primitive_part(R, r) if r else r)
    return _unit_normal_poly(R, scale(R, a, c))


def poly_gcd(R: Ring, f: Poly, g: Poly) -> Poly:
    """Monic gcd over a field; ``poly_gcd(f, 0) = monic(f)``."""
    if not R.is_field:
        raise RingError(f"poly_gcd needs a field, got {R}")
    return gcd(R, f, g)


def _unit_normal_poly(R: Ring, f: Poly) -> Poly:
    if not f:
        return f
    u, _ = R.unit_normal(f[-1])
    return scale(R, f, R.inv(u))


def resultant(R: Ring, f: Poly, g: Poly):
    """Resultant via the Sylvester matrix with the rows of ``f`` first.

    With this convention ``Res(f, g) = lc(f)**deg(g) * prod(g(a))`` over the
    roots ``a`` of ``f``; in particular ``Res(T - a, g) = g(a)``.
    """
    from ..linalg import det

    if not f or not g:
        raise RingError("resultant of a zero polynomial")
    m, n = len(f) - 1, len(g) - 1
    size = m + n
    if size == 0:
        return R.one
    rows = []
    for i in range(n):
        row = [R.zero] * size
        for j, c in enumerate(reversed(f)):
            row[i + j] = c
        rows.append(row)
    for i in range(m):
        row = [R.zero] * size
        for j, c in enumerate(reversed(g)):
            row[i + j] = c
        rows.append(row)
    return det(R, rows)


def format_poly(R: Ring, f: Poly, var: str = "T") -> str:
    """Canonical text, e.g. ``1-5*T+6*T^2`` or ``1+(x+1)*T``."""
    if not f:
        return "0"
    parts = []
    for i, c in enumerate(f):
        if R.is_zero(c):
            continue
        s = R.format(c)
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        simple = _is_simple(s)
        if not mono:
            term = s if simple or not parts else f"({s})"
        elif s == "1":
            term = mono
        elif s == "-1":
            term = "-" + mono
        elif simple:
            term = f"{s}*{mono}"
        else:
            term = f"({s})*{mono}"
        if parts and not term.startswith("-"):
            term = "+" + term
        parts.append(term)
    return "".join(parts)


def _is_simple(s: str) -> bool:
    body = s[1:] if s.startswith("-") else s
    return "+" not in body and "-" not in body


class PolyRing(Ring):
    """The polynomial ring ``base[var]``."""

    def __init__(self, base: Ring, var: str = "T"):
        if var in base.variables():
            raise RingError(f"variable {var} already used by {base}")
        self.base = base
        self.var = var
        self.descriptor = f"Poly({base.descriptor},{var})"
        self.is_domain = base.is_domain
        self.torsion_free = base.torsion_free
        self.characteristic = base.characteristic
        # A[x] is Krull (hence cic) whenever A is a Krull domain; all shipped
        # strong-Fatou bases are fields or Krull domains.
        self.strong_fatou = base.is_domain and base.strong_fatou
        self.zero = ()
        self.one = (base.one,)

    def add(self, a, b):
        return add(self.base, a, b)

    def sub(self, a, b):
        return sub(self.base, a, b)

    def neg(self, a):
        return neg(self.base, a)

    def mul(self, a, b):
        return mul(self.base, a, b)

    def from_int(self, n):
        return const(self.base, self.base.from_int(n))

    def mul_int(self, a, n):
        return trim(self.base, [self.base.mul_int(c, n) for c in a])

    def linear_combination(self, coeffs, elems):
        width = max((len(e) for e in elems), default=0)
        B = self.base
        out = []
        for i in range(width):
            cs, es = [], []
            for c, e in zip(coeffs, elems):
                if c and i < len(e):
                    cs.append(c)
                    es.append(e[i])
            out.append(B.linear_combination(cs, es) if cs else B.zero)
        return trim(B, out)

    def inv(self, a):
        if len(a) == 1:
            return (self.base.inv(a[0]),)
        raise ZeroDivisionError(f"{self.format(a)} is not a unit in {self}")

    def divexact(self, a, b):
        return divexact(self.base, a, b)

    def unit_normal(self, a):
        if not a:
            return self.one, a
        u, _ = self.base.unit_normal(a[-1])
        return (u,), scale(self.base, a, self.base.inv(u))

    def gcd(self, a, b):
        return gcd(self.base, a, b)

    def fraction_field(self):
        if not self.is_domain:
            raise RingError(f"{self} is not a certified integral domain")
        from .fraction import FractionField

        return FractionField(self)

    def to_fraction(self, a):
        return (a, self.one)

    def from_fraction(self, x):
        num, den = x
        if den == self.one:
            return num
        try:
            return divexact(self.base, num, den)
        except NotDivisibleError:
            return None

    def format(self, a):
        return format_poly(self.base, a, self.var)

    def variables(self):
        vs = {name: (v,) for name, v in self.base.variables().items()}
        vs[self.var] = (self.base.zero, self.base.one)
        return vs

    def random_element(self, rng: random.Random, size=3):
        d = rng.randint(0, size)
        return trim(self.base, [self.base.random_element(rng) for _ in range(d + 1)])
