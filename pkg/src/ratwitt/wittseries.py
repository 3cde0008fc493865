"""Truncated big Witt vectors ``W(A) = 1 + T A[[T]]``.

Witt addition is multiplication of power series, so the Witt zero is the
series ``1`` and the Witt negative is the multiplicative inverse.  The Witt
product is defined by ``(1 - aT) * (1 - bT) = 1 - abT`` on Teichmueller
elements and is evaluated over an arbitrary ring through universal integer
polynomials (:class:`UniversalMulTable`).

Ghost components follow the convention ``-T f'/f = sum w_n T^n``, so the
ghost vector of ``1 - aT`` is ``(a, a^2, a^3, ...)``.

Precision: a :class:`WittSeries` of precision ``N`` knows ``a_1..a_N``.
``witt_add``/``witt_mul`` return the minimum of the input precisions,
``frobenius(f, N)`` returns ``prec // N`` and ``verschiebung(f, N)``
returns ``N * prec``.
"""

from __future__ import annotations

import math
import threading
from fractions import Fraction
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .linalg import det_expand
from .rings import polyring as P
from .rings.base import NotDivisibleError, Ring, RingError, require_same_ring
from .rings.integers import ZZ, Rationals


class PrecisionError(RingError):
    """Raised when an operation needs more known coefficients than supplied."""


@dataclass(frozen=True)
class WittSeries:
    ring: Ring
    coeffs: tuple  # a_1 .. a_N

    def __post_init__(self):
        if len(self.coeffs) < 1:
            raise PrecisionError("a WittSeries needs precision N >= 1")

    @property
    def prec(self) -> int:
        return len(self.coeffs)

    def coefficient(self, n: int):
        if n == 0:
            return self.ring.one
        if n > self.prec:
            raise PrecisionError(f"coefficient {n} beyond precision {self.prec}")
        return self.coeffs[n - 1]

    def full(self) -> list:
        """``[1, a_1, ..., a_N]``."""
        return [self.ring.one, *self.coeffs]

    def truncate(self, N: int) -> "WittSeries":
        if N > self.prec:
            raise PrecisionError(f"cannot raise precision {self.prec} to {N}")
        return WittSeries(self.ring, self.coeffs[:N])

    @classmethod
    def from_list(cls, ring: Ring, full: Sequence) -> "WittSeries":
        """From ``[1, a_1, ..., a_N]``."""
        if not ring.is_one(full[0]):
            raise RingError("constant term must be 1")
        return cls(ring, tuple(full[1:]))

    @classmethod
    def from_fraction(cls, ring: Ring, p, q, N: int) -> "WittSeries":
        """Expansion of ``p/q`` with ``p(0) = q(0) = 1`` to precision ``N``."""
        s = P.mul_trunc(ring, p, P.inv_series(ring, q, N + 1), N + 1)
        return cls.from_list(ring, s)

    @classmethod
    def from_poly(cls, ring: Ring, p, N: int) -> "WittSeries":
        return cls.from_fraction(ring, p, P.const(ring, ring.one), N)

    def format(self) -> str:
        poly = P.trim(self.ring, self.full())
        return f"{P.format_poly(self.ring, poly)} ; prec={self.prec}"

    def __str__(self):
        return self.format()

    # operator sugar
    def __add__(self, other):
        return witt_add(self, other)

    def __neg__(self):
        return witt_neg(self)

    def __sub__(self, other):
        return witt_add(self, witt_neg(other))

    def __mul__(self, other):
        return witt_mul(self, other)


def witt_zero(ring: Ring, N: int) -> WittSeries:
    return WittSeries(ring, (ring.zero,) * N)


def witt_one(ring: Ring, N: int) -> WittSeries:
    """The unit ``1 - T``."""
    return teichmuller(ring, ring.one, N)


def teichmuller(ring: Ring, a, N: int) -> WittSeries:
    """``[a] = 1 - aT``."""
    return WittSeries(ring, (ring.neg(a),) + (ring.zero,) * (N - 1))


def _common(f: WittSeries, g: WittSeries):
    R = require_same_ring(f.ring, g.ring)
    N = min(f.prec, g.prec)
    return R, N


def witt_add(f: WittSeries, g: WittSeries) -> WittSeries:
    R, N = _common(f, g)
    return WittSeries.from_list(R, P.mul_trunc(R, f.full()[: N + 1], g.full()[: N + 1], N + 1))


def witt_neg(f: WittSeries) -> WittSeries:
    R = f.ring
    return WittSeries.from_list(R, P.inv_series(R, f.full(), f.prec + 1))


def witt_sub(f: WittSeries, g: WittSeries) -> WittSeries:
    return witt_add(f, witt_neg(g))


def witt_sum(f: WittSeries, k: int) -> WittSeries:
    """The ``k``-fold Witt sum ``f + ... + f`` (``k >= 0``), i.e. ``f**k``."""
    R = f.ring
    out = [R.one] + [R.zero] * f.prec
    base = f.full()
    while k:
        if k & 1:
            out = P.mul_trunc(R, out, base, f.prec + 1)
        k >>= 1
        if k:
            base = P.mul_trunc(R, base, base, f.prec + 1)
    return WittSeries.from_list(R, out)


# -- universal multiplication ---------------------------------------------


def partitions(n: int) -> list[tuple]:
    """Partitions of ``n`` as non-increasing tuples, in reverse lexicographic order."""
    out = []

    def rec(rem, maxpart, prefix):
        if rem == 0:
            out.append(tuple(prefix))
            return
        for k in range(min(rem, maxpart), 0, -1):
            prefix.append(k)
            rec(rem - k, k, prefix)
            prefix.pop()

    rec(n, n, [])
    return out


def _insert(lam: tuple, i: int) -> tuple:
    return tuple(sorted(lam + (i,), reverse=True))


def _poly_mul(p: dict, q: dict) -> dict:
    out: dict = {}
    for m1, c1 in p.items():
        for m2, c2 in q.items():
            m = tuple(sorted(m1 + m2, reverse=True))
            out[m] = out.get(m, 0) + c1 * c2
    return {m: c for m, c in out.items() if c}


def _z(nu: tuple) -> int:
    z = 1
    for i in set(nu):
        m = nu.count(i)
        z *= i**m * math.factorial(m)
    return z


class UniversalMulTable:
    """Integer polynomials ``h_n(X, Y)`` with ``(f * g)_n = h_n(a(f), a(g))``.

    Each ``h_n`` is bihomogeneous of weight ``n`` in both sets of variables,
    so it is stored as an integer matrix ``M_n`` indexed by pairs of
    partitions ``(lam, mu)`` of ``n``: ``h_n = sum M_n[lam][mu] X^lam Y^mu``
    with ``X^lam = prod X_{lam_i}``.

    The matrix comes from ghost arithmetic over QQ:
    ``h_n = sum_nu (-1)^len(nu) / z_nu * w_nu(X) w_nu(Y)``, where ``w_k`` is
    the k-th ghost polynomial.  Entries are checked to be integers when a new
    degree is added.  The table grows lazily; extension holds a lock, and
    since the entries are deterministic a duplicated computation would agree.
    """

    def __init__(self):
        self._lock = threading.Lock()
        self._ghost: list[dict] = [{}]  # ghost polynomials w_k as {partition: int}
        self._parts: list[list[tuple]] = [[()]]
        self._rows: list[list] = [[]]  # sparse rows of M_n
        self._dense: list = [None]

    @property
    def precision(self) -> int:
        return len(self._rows) - 1

    def partitions(self, n: int) -> list[tuple]:
        self.ensure(n)
        return self._parts[n]

    def matrix(self, n: int):
        """``M_n`` as a numpy object array of Python ints."""
        self.ensure(n)
        return self._dense[n]

    def ghost_polynomial(self, k: int) -> dict:
        self.ensure(k)
        return self._ghost[k]

    def ensure(self, N: int):
        if N <= self.precision:
            return
        with self._lock:
            while self.precision < N:
                self._extend()

    def _extend(self):
        n = self.precision + 1
        # Newton: w_n = -n a_n - sum_{i<n} a_i w_{n-i}
        w = {(n,): -n}
        for i in range(1, n):
            for lam, c in self._ghost[n - i].items():
                m = _insert(lam, i)
                w[m] = w.get(m, 0) - c
        self._ghost.append({m: c for m, c in w.items() if c})
        parts = partitions(n)
        index = {lam: j for j, lam in enumerate(parts)}
        size = len(parts)
        W = np.zeros((size, size), dtype=object)
        D = np.zeros(size, dtype=object)
        fact = math.factorial(n)
        cache: dict = {}

        def ghost_product(nu):
            if nu not in cache:
                head = self._ghost[nu[0]]
                cache[nu] = head if len(nu) == 1 else _poly_mul(head, ghost_product(nu[1:]))
            return cache[nu]

        for r, nu in enumerate(parts):
            for lam, c in ghost_product(nu).items():
                W[r, index[lam]] = c
            D[r] = (-1) ** len(nu) * (fact // _z(nu))
        M = (W.T * D) @ W
        rows = []
        for i in range(size):
            cols, coeffs = [], []
            for j in range(size):
                q, rem = divmod(int(M[i, j]), fact)
                if rem:
                    raise AssertionError(f"non-integral universal coefficient at n={n}")
                M[i, j] = q
                if q:
                    cols.append(j)
                    coeffs.append(q)
            rows.append((cols, coeffs))
        self._parts.append(parts)
        self._dense.append(M)
        self._rows.append(rows)

    def monomials(self, R: Ring, a: Sequence, N: int) -> list[list]:
        """``X^lam`` evaluated at ``a = (a_1..a_N)`` for every partition of every ``n <= N``."""
        self.ensure(N)
        vals: dict = {(): R.one}
        out = [[R.one]]
        for n in range(1, N + 1):
            row = []
            for lam in self._parts[n]:
                v = vals.get(lam)
                if v is None:
                    v = R.mul(a[lam[0] - 1], vals[lam[1:]])
                    vals[lam] = v
                row.append(v)
            out.append(row)
        return out

    def evaluate(self, R: Ring, a: Sequence, b: Sequence, N: int) -> list:
        """Coefficients ``h_1..h_N`` of the Witt product."""
        am = self.monomials(R, a, N)
        bm = self.monomials(R, b, N)
        out = []
        for n in range(1, N + 1):
            xs, ys = am[n], bm[n]
            terms = []
            for i, (cols, coeffs) in enumerate(self._rows[n]):
                x = xs[i]
                if not cols or R.is_zero(x):
                    continue
                inner = R.linear_combination(coeffs, [ys[j] for j in cols])
                if not R.is_zero(inner):
                    terms.append(R.mul(x, inner))
            out.append(R.sum(terms))
        return out


MUL_TABLE = UniversalMulTable()


def _clear_denominators(coeffs):
    d = math.lcm(*(Fraction(c).denominator for c in coeffs)) if coeffs else 1
    return tuple(int(Fraction(c) * d**i) for i, c in enumerate(coeffs, 1)), d


def witt_mul(f: WittSeries, g: WittSeries, method: str = "auto") -> WittSeries:
    """Witt product; valid over any commutative ring.

    ``method="table"`` evaluates the universal polynomials.  ``"ghost"``
    multiplies ghost components and inverts the ghost map, which needs a
    torsion-free ring where the divisions by ``n`` are exact.  ``"lift"``
    runs the ghost route on a torsion-free ring mapping onto ``R`` (see
    ``Ring.torsion_free_lift``) and reduces; this is valid because the
    universal polynomials have integer coefficients.  ``"scaled"`` (for
    rational coefficients) clears denominators with ``[d]`` and multiplies
    over ZZ.  ``"auto"`` picks scaled, ghost, lift, then the table.
    """
    R, N = _common(f, g)
    if method == "auto":
        if isinstance(R, Rationals):
            method = "scaled"
        elif R.torsion_free:
            method = "ghost"
        elif R.torsion_free_lift() is not None:
            method = "lift"
        else:
            method = "table"
    if method == "scaled":
        # [d] * f = f(dT) is integral for d the common denominator, and
        # ([d1] f) * ([d2] g) = [d1 d2] (f * g)
        fs, d1 = _clear_denominators(f.coeffs[:N])
        gs, d2 = _clear_denominators(g.coeffs[:N])
        h = witt_mul(WittSeries(ZZ, fs), WittSeries(ZZ, gs), "ghost")
        d = d1 * d2
        return WittSeries(R, tuple(Fraction(c, d**i) for i, c in enumerate(h.coeffs, 1)))
    if method == "lift":
        lifted = R.torsion_free_lift()
        if lifted is None:
            raise RingError(f"{R} has no torsion-free lift")
        S, lift, red = lifted
        fs = WittSeries(S, tuple(lift(a) for a in f.coeffs[:N]))
        gs = WittSeries(S, tuple(lift(a) for a in g.coeffs[:N]))
        return WittSeries(R, tuple(red(a) for a in witt_mul(fs, gs, "ghost").coeffs))
    if method == "ghost":
        wf, wg = ghost(f.truncate(N)), ghost(g.truncate(N))
        return from_ghost(R, [R.mul(x, y) for x, y in zip(wf, wg)])
    if method != "table":
        raise ValueError(f"unknown method {method!r}")
    return WittSeries(R, tuple(MUL_TABLE.evaluate(R, f.coeffs, g.coeffs, N)))


def witt_scale(f: WittSeries, b) -> WittSeries:
    """``[b] * f = f(bT)``."""
    R = f.ring
    out, pw = [], R.one
    for a in f.coeffs:
        pw = R.mul(pw, b)
        out.append(R.mul(a, pw))
    return WittSeries(R, tuple(out))


# -- ghost components ---------------------------------------------------------


def _require_torsion_free(R: Ring):
    if not R.torsion_free:
        raise RingError(f"ghost components need a torsion-free ring; {R} has torsion")


def ghost(f: WittSeries) -> list:
    """``[w_1..w_N]`` with ``-T f'/f = sum w_n T^n``."""
    R = f.ring
    _require_torsion_free(R)
    a = f.coeffs
    w = []
    for n in range(1, f.prec + 1):
        coeffs = [-n] + [-1] * (n - 1)
        elems = [a[n - 1]] + [R.mul(a[i - 1], w[n - i - 1]) for i in range(1, n)]
        w.append(R.linear_combination(coeffs, elems))
    return w


def from_ghost(R: Ring, w: Sequence) -> WittSeries:
    """Inverse of :func:`ghost`; needs exact division by ``n`` in ``R``."""
    _require_torsion_free(R)
    a: list = []
    for n in range(1, len(w) + 1):
        s = R.add(w[n - 1], R.sum(R.mul(a[i - 1], w[n - i - 1]) for i in range(1, n)))
        try:
            a.append(R.neg(R.divexact(s, R.from_int(n))))
        except (NotDivisibleError, ZeroDivisionError):
            raise RingError(f"ghost vector is not integral over {R} at n={n}") from None
    return WittSeries(R, tuple(a))


# -- Frobenius and Verschiebung -----------------------------------------------


def verschiebung(f: WittSeries, N: int) -> WittSeries:
    """``V_N f (T) = f(T^N)``; precision ``N * prec``."""
    if N < 1:
        raise ValueError("N must be a positive integer")
    R = f.ring
    out = [R.zero] * (N * f.prec)
    for k, a in enumerate(f.coeffs, start=1):
        out[N * k - 1] = a
    return WittSeries(R, tuple(out))


def frobenius(f: WittSeries, N: int, method: str = "auto") -> WittSeries:
    """``F_N f`` with ``F_N(f)(T^N) = prod_{zeta^N = 1} f(zeta T)``.

    Output precision is ``prec // N``.  ``method`` is ``"ghost"`` (ghost
    decimation, torsion-free rings), ``"resultant"`` (any ring) or ``"auto"``.
    """
    if N < 1:
        raise ValueError("N must be a positive integer")
    if f.prec < N:
        raise PrecisionError(f"F_{N} needs precision at least {N}, got {f.prec}")
    if N == 1:
        return f
    R = f.ring
    if method == "auto":
        method = "ghost" if R.torsion_free else "resultant"
    if method == "ghost":
        w = ghost(f)
        return from_ghost(R, [w[N * k - 1] for k in range(1, f.prec // N + 1)])
    if method != "resultant":
        raise ValueError(f"unknown method {method!r}")
    return _frobenius_resultant(f, N)


class TruncatedSeriesRing(Ring):
    """``A[[S]] / (S^M)`` with elements tuples of length ``M``."""

    def __init__(self, base: Ring, M: int):
        self.base = base
        self.M = M
        self.descriptor = f"Trunc({base.descriptor},{M})"
        self.characteristic = base.characteristic
        self.zero = (base.zero,) * M
        self.one = (base.one,) + (base.zero,) * (M - 1)

    def add(self, a, b):
        B = self.base
        return tuple(B.add(x, y) for x, y in zip(a, b))

    def neg(self, a):
        return tuple(self.base.neg(x) for x in a)

    def mul(self, a, b):
        return tuple(P.mul_trunc(self.base, a, b, self.M))

    def from_int(self, n):
        return (self.base.from_int(n),) + (self.base.zero,) * (self.M - 1)

    def format(self, a):
        return P.format_poly(self.base, P.trim(self.base, a), "S")


def _frobenius_resultant(f: WittSeries, N: int) -> WittSeries:
    """``Res_Z(Z^N - S, f(Z))`` over ``A[[S]]``.

    The resultant is the determinant of multiplication by ``f`` on
    ``A[[S]][Z]/(Z^N - S)`` in the basis ``1, Z, .., Z^(N-1)``.  Writing
    ``f(Z) = sum_r Z^r f_r(Z^N)`` the matrix entry ``(i, j)`` is ``f_{i-j}(S)``
    for ``i >= j`` and ``S f_{i-j+N}(S)`` otherwise.  Coefficient ``k`` of the
    result only involves ``a_1..a_{Nk}``, so unknown tail coefficients may be
    taken to be zero.
    """
    R = f.ring
    K = f.prec // N
    M = K + 1
    Ser = TruncatedSeriesRing(R, M)
    a = f.full()

    def part(r, shift):
        out = [R.zero] * M
        for k in range(M - shift):
            idx = N * k + r
            if idx < len(a):
                out[k + shift] = a[idx]
        return tuple(out)

    mat = [[part(i - j, 0) if i >= j else part(i - j + N, 1) for j in range(N)] for i in range(N)]
    d = det_expand(Ser, mat)
    if not R.is_one(d[0]):
        raise AssertionError("Frobenius norm must have constant term 1")
    return WittSeries(R, tuple(d[1:]))
