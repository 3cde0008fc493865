"""Exact determinants, minors and rank over the rings of :mod:`ratwitt.rings`.

Determinants dispatch on the ring: Gaussian elimination over fields,
fraction-free Bareiss over domains, and memoised expansion by minors over
rings with zero divisors (where Bareiss' exact divisions are not valid).
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from .rings.base import Ring, RingError


def _check_square(M):
    n = len(M)
    if any(len(row) != n for row in M):
        raise RingError("matrix is not square")
    return n


def det(R: Ring, M) -> object:
    n = _check_square(M)
    if n == 0:
        return R.one
    if n == 1:
        return M[0][0]
    if n == 2:
        return R.sub(R.mul(M[0][0], M[1][1]), R.mul(M[0][1], M[1][0]))
    if R.is_field:
        return det_gauss(R, M)
    if R.is_domain:
        return det_bareiss(R, M)
    return det_expand(R, M)


def det_gauss(R: Ring, M):
    a = [list(row) for row in M]
    n = len(a)
    sign = False
    result = R.one
    for k in range(n):
        piv = next((i for i in range(k, n) if not R.is_zero(a[i][k])), None)
        if piv is None:
            return R.zero
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            sign = not sign
        p = a[k][k]
        result = R.mul(result, p)
        pinv = R.inv(p)
        for i in range(k + 1, n):
            if R.is_zero(a[i][k]):
                continue
            c = R.mul(a[i][k], pinv)
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = R.sub(row_i[j], R.mul(c, row_k[j]))
    return R.neg(result) if sign else result


def det_bareiss(R: Ring, M):
    """Fraction-free elimination; every division is exact in a domain."""
    a = [list(row) for row in M]
    n = len(a)
    sign = False
    prev = R.one
    for k in range(n - 1):
        if R.is_zero(a[k][k]):
            piv = next((i for i in range(k + 1, n) if not R.is_zero(a[i][k])), None)
            if piv is None:
                return R.zero
            a[k], a[piv] = a[piv], a[k]
            sign = not sign
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                v = R.sub(R.mul(akk, row_i[j]), R.mul(aik, row_k[j]))
                row_i[j] = v if R.is_one(prev) else R.divexact(v, prev)
        prev = akk
    d = a[n - 1][n - 1]
    return R.neg(d) if sign else d


def det_expand(R: Ring, M):
    """Laplace expansion along rows, memoised on the set of remaining columns.

    Uses only ring operations, so it is valid over any commutative ring.
    Cost is ``O(n 2^n)`` multiplications.
    """
    n = len(M)

    @lru_cache(maxsize=None)
    def sub(row: int, cols: int):
        if row == n:
            return R.one
        terms = []
        sign = 1
        for j in range(n):
            if cols >> j & 1:
                a = M[row][j]
                if not R.is_zero(a):
                    d = sub(row + 1, cols & ~(1 << j))
                    if not R.is_zero(d):
                        p = R.mul(a, d)
                        terms.append(p if sign > 0 else R.neg(p))
                sign = -sign
        return R.sum(terms)

    return sub(0, (1 << n) - 1)


def submatrix(M, rows, cols):
    return [[M[i][j] for j in cols] for i in rows]


def minor(R: Ring, M, rows, cols):
    return det(R, submatrix(M, rows, cols))


def minors_vanish(R: Ring, M, k: int):
    """Return ``None`` if every ``k x k`` minor of ``M`` is zero, else a witness ``(rows, cols)``.

    ``M`` may be rectangular.  Over fields this is a rank test; elsewhere
    the minors are enumerated with early exit.
    """
    nr = len(M)
    nc = len(M[0]) if M else 0
    if k > min(nr, nc):
        return None
    if k <= 0:
        return ((), ())
    if R.is_field:
        if rank_field(R, M) < k:
            return None
        # locate a witness only when asked for a failing verdict
    for rows in itertools.combinations(range(nr), k):
        sub_rows = [M[i] for i in rows]
        for cols in itertools.combinations(range(nc), k):
            if not R.is_zero(det(R, [[r[j] for j in cols] for r in sub_rows])):
                return rows, cols
    return None


def rank_field(R: Ring, M) -> int:
    if not R.is_field:
        raise RingError(f"rank_field needs a field, got {R}")
    a = [list(row) for row in M]
    if not a:
        return 0
    nr, nc = len(a), len(a[0])
    r = 0
    for c in range(nc):
        piv = next((i for i in range(r, nr) if not R.is_zero(a[i][c])), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        pinv = R.inv(a[r][c])
        for i in range(r + 1, nr):
            if R.is_zero(a[i][c]):
                continue
            f = R.mul(a[i][c], pinv)
            for j in range(c, nc):
                a[i][j] = R.sub(a[i][j], R.mul(f, a[r][j]))
        r += 1
        if r == nr:
            break
    return r


def mat_mul(R: Ring, A, B):
    n, m, p = len(A), len(B), len(B[0]) if B else 0
    return [[R.sum(R.mul(A[i][k], B[k][j]) for k in range(m)) for j in range(p)] for i in range(n)]


def mat_pow(R: Ring, A, k: int):
    n = len(A)
    result = [[R.one if i == j else R.zero for j in range(n)] for i in range(n)]
    base = A
    while k:
        if k & 1:
            result = mat_mul(R, result, base)
        k >>= 1
        if k:
            base = mat_mul(R, base, base)
    return result


def permutation_sign(seq) -> int:
    """Sign of the permutation that sorts ``seq`` (distinct entries)."""
    s = list(seq)
    sign = 1
    for i in range(len(s)):
        for j in range(i + 1, len(s)):
            if s[i] > s[j]:
                sign = -sign
    return sign
