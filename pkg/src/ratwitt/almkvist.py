"""Characteristic polynomials of endomorphisms of free modules.

``char_map(M, phi) = det(1 - T phi)`` sends direct sums to Witt sums, tensor
products to Witt products, ``phi^N`` to ``F_N`` and the cyclic block matrix
(``e_i -> e_{i+1}``, ``e_N -> phi e_1``) to ``V_N``.  These relations make it
an independent oracle for the Witt operations.
"""

from __future__ import annotations

from dataclasses import dataclass

from .linalg import det, mat_pow
from .ratwitt import RatWitt, rw_add
from .rings import polyring as P
from .rings.base import Ring, RingError, require_same_ring
from .rings.parse import parse_matrix
from .rings.polyring import PolyRing


@dataclass(frozen=True)
class EndoModule:
    ring: Ring
    phi: tuple  # rows

    def __post_init__(self):
        n = len(self.phi)
        if any(len(r) != n for r in self.phi):
            raise RingError("endomorphism matrix must be square")

    @classmethod
    def make(cls, ring: Ring, rows) -> "EndoModule":
        return cls(ring, tuple(tuple(r) for r in rows))

    @classmethod
    def parse(cls, ring: Ring, text: str) -> "EndoModule":
        return cls.make(ring, parse_matrix(ring, text))

    @classmethod
    def diag(cls, ring: Ring, entries) -> "EndoModule":
        n = len(entries)
        return cls.make(ring, [[entries[i] if i == j else ring.zero for j in range(n)] for i in range(n)])

    @classmethod
    def companion(cls, ring: Ring, monic) -> "EndoModule":
        """Companion matrix of ``t^n + c_{n-1} t^{n-1} + ... + c_0`` (coefficients lowest first)."""
        n = len(monic) - 1
        if not ring.is_one(monic[-1]):
            raise RingError("companion needs a monic polynomial")
        rows = [[ring.zero] * n for _ in range(n)]
        for i in range(1, n):
            rows[i][i - 1] = ring.one
        for i in range(n):
            rows[i][n - 1] = ring.neg(monic[i])
        return cls.make(ring, rows)

    @property
    def rank(self) -> int:
        return len(self.phi)

    def format(self) -> str:
        R = self.ring
        return "[" + ",".join("[" + ",".join(R.format(a) for a in r) + "]" for r in self.phi) + "]"


def char_map(m: EndoModule) -> RatWitt:
    """``det(1 - T phi)`` as a rational Witt vector with ``Q = 1``."""
    R = m.ring
    n = m.rank
    if n == 0:
        return RatWitt.zero(R)
    RT = PolyRing(R, "T")
    rows = [
        [P.trim(R, [R.one if i == j else R.zero, R.neg(m.phi[i][j])]) for j in range(n)]
        for i in range(n)
    ]
    return RatWitt.poly(R, det(RT, rows))


def oracle_direct_sum(m1: EndoModule, m2: EndoModule) -> EndoModule:
    R = require_same_ring(m1.ring, m2.ring)
    a, b = m1.rank, m2.rank
    rows = [list(r) + [R.zero] * b for r in m1.phi] + [[R.zero] * a + list(r) for r in m2.phi]
    return EndoModule.make(R, rows)


def oracle_tensor(m1: EndoModule, m2: EndoModule) -> EndoModule:
    """Kronecker product."""
    R = require_same_ring(m1.ring, m2.ring)
    a, b = m1.rank, m2.rank
    rows = [
        [R.mul(m1.phi[i1][j1], m2.phi[i2][j2]) for j1 in range(a) for j2 in range(b)]
        for i1 in range(a)
        for i2 in range(b)
    ]
    return EndoModule.make(R, rows)


def oracle_frobenius(m: EndoModule, N: int) -> EndoModule:
    if m.rank == 0:
        return m
    return EndoModule.make(m.ring, mat_pow(m.ring, [list(r) for r in m.phi], N))


def oracle_verschiebung(m: EndoModule, N: int) -> EndoModule:
    """The ``N``-block cyclic matrix on ``M^N``: identity blocks below the diagonal, ``phi`` top right."""
    R = m.ring
    n = m.rank
    size = n * N
    rows = [[R.zero] * size for _ in range(size)]
    for blk in range(1, N):
        for i in range(n):
            rows[blk * n + i][(blk - 1) * n + i] = R.one
    for i in range(n):
        for j in range(n):
            rows[i][(N - 1) * n + j] = m.phi[i][j]
    return EndoModule.make(R, rows)


def ses_additivity_check(phi: EndoModule, split: int) -> bool:
    """For ``phi`` block upper triangular with blocks of sizes ``split`` and ``n - split``:
    ``char(phi) = char(phi_1) + char(phi_2)``."""
    R = phi.ring
    n = phi.rank
    if not 0 <= split <= n:
        raise RingError("split index out of range")
    if any(not R.is_zero(phi.phi[i][j]) for i in range(split, n) for j in range(split)):
        raise RingError("matrix is not block upper triangular for this split")
    m1 = EndoModule.make(R, [r[:split] for r in phi.phi[:split]])
    m2 = EndoModule.make(R, [r[split:] for r in phi.phi[split:]])
    return char_map(phi) == rw_add(char_map(m1), char_map(m2))
