"""Hankel matrices of Witt vectors, Kronecker reconstruction and rank checks.

For ``f = 1 + a_1 T + ...`` the Hankel matrix is ``H(f) = (a_{i+j})`` with
``a_0 = 1``.  Over a field its rank is finite exactly when ``f`` is rational,
and then equals ``max(1 + deg P, deg Q)`` for the reduced ``f = P/Q``; this
is also the linear complexity of the coefficient sequence, which
Berlekamp-Massey computes.

``W_J^{<=n}(A)`` is the set of ``f`` whose ``(n+1) x (n+1)`` minors of
``H(f)`` all vanish.  On a truncated series only the minors of the largest
square view ``(a_{i+j})_{0 <= i, j < m}`` with ``2(m-1) <= N`` are visible, so
membership verdicts on series are "consistent at precision N".  For inputs
that come from a :class:`RatWitt` expanded far enough (``N >= 2 * bound``)
the verdict is exact over fields.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Sequence

from .linalg import det, minors_vanish, permutation_sign, rank_field
from .ratwitt import RatWitt
from .rings import polyring as P
from .rings.base import Ring, RingError
from .rings.dual import DualNumbers
from .wittseries import PrecisionError, WittSeries


def _full(R: Ring, f) -> list:
    if isinstance(f, WittSeries):
        return f.full()
    f = list(f)
    if not f or not R.is_one(f[0]):
        raise RingError("coefficient list must start with a_0 = 1")
    return f


def hankel_view(coeffs: Sequence, m: int | None = None) -> list[list]:
    """The ``m x m`` matrix ``(a_{i+j})`` from ``a_0..a_N``; default ``m = N//2 + 1``."""
    N = len(coeffs) - 1
    if m is None:
        m = N // 2 + 1
    if 2 * (m - 1) > N:
        raise PrecisionError(f"a {m}x{m} Hankel view needs a_0..a_{2 * (m - 1)}")
    return [[coeffs[i + j] for j in range(m)] for i in range(m)]


def hankel_determinants(R: Ring, coeffs: Sequence) -> list:
    """``D_0, D_1, ...`` with ``D_n = det(a_{i+j})_{0<=i,j<=n}`` as far as known."""
    c = list(coeffs)
    return [det(R, hankel_view(c, n + 1)) for n in range((len(c) - 1) // 2 + 1)]


# -- Berlekamp-Massey --------------------------------------------------------------


def berlekamp_massey(K: Ring, s: Sequence):
    """Shortest linear recurrence of ``s`` over a field.

    Returns ``(L, C)`` with ``C(0) = 1``, ``deg C <= L`` and
    ``sum_i C_i s_{k-i} = 0`` for ``L <= k < len(s)``.
    """
    if not K.is_field:
        raise RingError(f"Berlekamp-Massey needs a field, got {K}")
    C, B = [K.one], [K.one]
    L, m, b = 0, 1, K.one
    for n in range(len(s)):
        d = s[n]
        for i in range(1, L + 1):
            if i < len(C):
                d = K.add(d, K.mul(C[i], s[n - i]))
        if K.is_zero(d):
            m += 1
            continue
        coef = K.mul(d, K.inv(b))
        T = list(C)
        shifted = [K.zero] * m + [K.mul(coef, x) for x in B]
        if len(shifted) > len(C):
            C = C + [K.zero] * (len(shifted) - len(C))
        for i, x in enumerate(shifted):
            C[i] = K.sub(C[i], x)
        if 2 * L <= n:
            L, B, b, m = n + 1 - L, T, d, 1
        else:
            m += 1
    return L, P.trim(K, C)


@dataclass(frozen=True)
class RankResult:
    rank: int
    truncation_limited: bool = False

    def __int__(self):
        return self.rank

    def __eq__(self, other):
        if isinstance(other, int):
            return self.rank == other
        return NotImplemented if not isinstance(other, RankResult) else (
            self.rank == other.rank and self.truncation_limited == other.truncation_limited
        )

    def __hash__(self):
        return hash(self.rank)

    def __str__(self):
        return f"{self.rank}" + (" (truncation-limited)" if self.truncation_limited else "")


def hankel_rank_field(f, ring: Ring | None = None) -> RankResult:
    """Rank of ``H(f)`` over a field.

    For a :class:`RatWitt` this is ``max(1 + deg P, deg Q)`` of the reduced
    form.  For a series (``WittSeries`` or ``a_0..a_N`` with ``ring``) it is
    the linear complexity of the known terms, flagged truncation-limited when
    ``2r > N - 1``.
    """
    if isinstance(f, RatWitt):
        if not f.ring.is_field:
            raise RingError(f"hankel_rank_field needs a field, got {f.ring}")
        return RankResult(f.bound)
    R = f.ring if isinstance(f, WittSeries) else ring
    c = _full(R, f)
    L, _ = berlekamp_massey(R, c)
    N = len(c) - 1
    return RankResult(L, 2 * L > N - 1)


def kronecker_reconstruct(ring: Ring, coeffs, r: int) -> RatWitt:
    """The reduced ``P/Q`` with bound ``<= r`` whose expansion starts with ``coeffs``.

    ``coeffs`` is ``a_0 = 1, a_1, ..., a_{M-1}`` (or a :class:`WittSeries`)
    with ``M >= 2r``; two fractions of bound ``<= r`` agreeing on ``2r`` terms
    are equal, so the answer is unique.  Over a domain the series is read in
    the fraction field and the result is brought back when its coefficients
    lie in the ring.
    """
    K = ring.fraction_field() if not ring.is_field else ring
    c = _full(ring, coeffs)
    if not ring.is_field:
        c = [ring.to_fraction(x) for x in c]
    if len(c) < 2 * r:
        raise PrecisionError(f"reconstruction with bound {r} needs {2 * r} terms a_0..a_{2 * r - 1}, got {len(c)}")
    L, C = berlekamp_massey(K, c)
    if L > r:
        raise RingError(f"no rational representative within bound {r}")
    p = P.trim(K, P.mul_trunc(K, c, C, L))
    h = RatWitt.make(K, p, C)
    if h.series(len(c) - 1) != c:
        raise RingError(f"no rational representative within bound {r}")
    if ring.is_field:
        return h
    ap = [ring.from_fraction(x) for x in h.P]
    aq = [ring.from_fraction(x) for x in h.Q]
    if any(x is None for x in ap + aq):
        raise RingError(f"reduced representative is not defined over {ring}")
    return RatWitt.make(ring, tuple(ap), tuple(aq))


# -- W_J membership ----------------------------------------------------------------


@dataclass(frozen=True)
class Membership:
    member: bool
    n: int
    view: int  # size m of the square Hankel view examined
    precision: int
    witness: tuple | None = None  # (rows, cols) of a non-vanishing minor

    def __bool__(self):
        return self.member

    def __str__(self):
        verdict = "member" if self.member else "not a member"
        return f"{verdict} of W_J^<={self.n} (consistent at precision {self.precision}, view {self.view}x{self.view})"


def wj_member(f, n: int, ring: Ring | None = None) -> Membership:
    """Do all ``(n+1) x (n+1)`` minors of the in-precision Hankel view vanish?

    Over domains this is a rank computation in the fraction field; over other
    rings (dual numbers, ``ZZ/n``) the minors are enumerated.
    """
    R = f.ring if isinstance(f, (WittSeries, RatWitt)) else ring
    if isinstance(f, RatWitt):
        f = f.to_series(2 * max(f.bound, n) + 2)
    c = _full(R, f)
    H = hankel_view(c)
    m = len(H)
    N = len(c) - 1
    if n + 1 > m:
        return Membership(True, n, m, N)
    if R.is_domain:
        K = R if R.is_field else R.fraction_field()
        Hk = H if R.is_field else [[R.to_fraction(x) for x in row] for row in H]
        ok = rank_field(K, Hk) <= n
        return Membership(ok, n, m, N)
    w = minors_vanish(R, H, n + 1)
    return Membership(w is None, n, m, N, w)


def wj_rank(f, ring: Ring | None = None) -> int | None:
    """Least ``n`` with :func:`wj_member` true, or ``None`` if every visible minor size fails."""
    R = f.ring if isinstance(f, (WittSeries, RatWitt)) else ring
    c = _full(R, f)
    m = len(hankel_view(c))
    for n in range(0, m + 1):
        if wj_member(c, n, R):
            return n
    return None


# -- determinants as sums of products of minors -------------------------------


def _ordered_partitions(items: tuple, sizes: Sequence[int]):
    if not sizes:
        yield ()
        return
    for first in itertools.combinations(items, sizes[0]):
        rest = tuple(x for x in items if x not in first)
        for tail in _ordered_partitions(rest, sizes[1:]):
            yield (first,) + tail


def minor_product_expansion(R: Ring, M, n: int, k: int, col_blocks=None):
    """``sum_{I_1..I_k} sgn * prod det(M[I_v, J_v])`` for a fixed column partition.

    ``col_blocks`` defaults to consecutive blocks of ``n`` columns.  The sign
    is ``sgn(I_1 ... I_k) * sgn(J_1 ... J_k)`` of the concatenated index lists.
    """
    size = len(M)
    if size != n * k or any(len(row) != size for row in M):
        raise RingError(f"expected a square {n * k}x{n * k} matrix")
    if col_blocks is None:
        col_blocks = [tuple(range(v * n, (v + 1) * n)) for v in range(k)]
    sizes = [len(J) for J in col_blocks]
    if sorted(itertools.chain(*col_blocks)) != list(range(size)):
        raise RingError("column blocks must partition the columns")
    sj = permutation_sign(list(itertools.chain(*col_blocks)))
    terms = []
    for blocks in _ordered_partitions(tuple(range(size)), sizes):
        prod = R.one
        for I, J in zip(blocks, col_blocks):
            prod = R.mul(prod, det(R, [[M[i][j] for j in J] for i in I]))
            if R.is_zero(prod):
                break
        if R.is_zero(prod):
            continue
        s = sj * permutation_sign(list(itertools.chain(*blocks)))
        terms.append(prod if s > 0 else R.neg(prod))
    return R.sum(terms)


def minor_decomposition_check(R: Ring, M, n: int, k: int) -> bool:
    """Compare the k-fold minor expansion of an ``nk x nk`` matrix with its determinant."""
    return minor_product_expansion(R, M, n, k) == det(R, M)


def minor_expansion_terms(n: int, k: int) -> int:
    """Number of ordered row partitions in the expansion, ``(nk)! / (n!)^k``."""
    return math.factorial(n * k) // math.factorial(n) ** k


# -- nilpotent thickening ----------------------------------------------------------------


def nilpotent_rank_bound_check(f, n: int) -> bool:
    """Rank bound under ``A = B[e] -> A' = B`` (kernel ``(e)``, ``e^2 = 0``).

    If the reduction ``f'`` of ``f`` has all ``n x n`` Hankel minors zero
    (rank ``< n``), then all ``2n x 2n`` minors of ``H(f)`` must be zero
    (rank ``< 2n``).  Returns whether this implication holds on ``f``.
    Needs ``a_0..a_{4n-2}`` so that a ``2n x 2n`` view exists.
    """
    R = f.ring if isinstance(f, WittSeries) else None
    if not isinstance(R, DualNumbers):
        raise RingError("nilpotent_rank_bound_check expects a series over Dual(B)")
    k = 2
    need = 2 * (n * k - 1)
    if f.prec < need:
        raise PrecisionError(f"precision {f.prec} too small; need at least {need}")
    B = R.base
    reduced = WittSeries(B, tuple(R.reduce(a) for a in f.coeffs))
    if not wj_member(reduced, n - 1):
        return True
    return bool(wj_member(f, n * k - 1))


# -- Verschiebung section ------------------------------------------------------------------


@dataclass(frozen=True)
class Section:
    f: list | None  # a_0.. of the de-interleaved series, or None
    reason: str = ""

    def __bool__(self):
        return self.f is not None


def verschiebung_section(R: Ring, g: Sequence, N: int, n: int | None = None) -> Section:
    """Undo ``V_N``: return ``f`` with ``g = f(T^N)`` or "not a V_N image".

    When ``n`` is given, also asserts that ``g`` in ``W_J^{<=n}`` implies
    ``f`` in ``W_J^{<=n}``: the Hankel matrix of ``f`` is the submatrix of
    ``H(g)`` on rows and columns divisible by ``N``.
    """
    c = _full(R, g)
    if any(not R.is_zero(a) for i, a in enumerate(c) if i % N):
        return Section(None, "not a V_N image")
    f = c[::N]
    if n is not None and len(f) >= 2 and wj_member(c, n, R) and not wj_member(f, n, R):
        raise AssertionError("W_J bound not inherited by the V_N section")
    return Section(f)
