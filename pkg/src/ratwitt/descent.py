"""Galois descent for rational Witt vectors over finite fields ``K = GF(q) ⊂ L = GF(q^n)``.

``L ⊗_K L`` is never built as an algebra.  It is identified with ``L^n``
through ``a ⊗ b -> (a * Frob^j(b))_j`` where ``Frob(b) = b^q``; the identity
is checked when a :class:`TensorSplit` is constructed.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .linalg import det
from .monoid import FormalSum, frobenius_action, omega, split_over
from .ratwitt import RatWitt, change_ring
from .rings.base import Ring, RingError
from .rings.finite_field import GF, embedding


def _order(F: Ring) -> int:
    return F.order


@dataclass
class TensorSplit:
    """The factorisation ``L ⊗_K L ≅ prod_{j<n} L``."""

    K: Ring
    L: Ring
    q: int = field(init=False)
    n: int = field(init=False)

    def __post_init__(self):
        self.q = _order(self.K)
        qn = _order(self.L)
        n, v = 0, 1
        while v < qn:
            v *= self.q
            n += 1
        if v != qn:
            raise RingError(f"{self.L} is not an extension of {self.K}")
        self.n = n
        self.embed = embedding(self.K, self.L)
        self.verify()

    def frob(self, b, j: int = 1):
        return self.L.pow(b, self.q**j)

    def factor(self, j: int, a, b):
        """Image of the pure tensor ``a ⊗ b`` in factor ``j``."""
        return self.L.mul(a, self.frob(b, j))

    def left(self, a):
        """``a -> a ⊗ 1`` followed by the factorisation."""
        return [self.factor(j, a, self.L.one) for j in range(self.n)]

    def right(self, b):
        """``b -> 1 ⊗ b`` followed by the factorisation."""
        return [self.factor(j, self.L.one, b) for j in range(self.n)]

    def verify(self):
        L, K = self.L, self.K
        theta = L.variables().get("x", L.one) if L != K else L.one
        basis = [L.pow(theta, i) for i in range(self.n)]
        # the structure maps are (id, Frob^j) in factor j
        for b in basis:
            for j in range(self.n):
                if self.factor(j, b, L.one) != b or self.factor(j, L.one, b) != self.frob(b, j):
                    raise AssertionError("structure maps disagree with (id, Frob^j)")
        # K-balanced: c ⊗ 1 and 1 ⊗ c agree for c in K
        for c in K.elements():
            c = self.embed(c)
            if self.left(c) != self.right(c):
                raise AssertionError("factorisation is not K-balanced")
        # bijective: the Moore matrix (Frob^j(theta^i)) is invertible
        moore = [[self.frob(b, j) for b in basis] for j in range(self.n)]
        if L.is_zero(det(L, moore)):
            raise AssertionError("factorisation is not an isomorphism")


def tensor_split(p: int, m: int, n: int) -> TensorSplit:
    return TensorSplit(GF(p**m), GF(p ** (m * n)))


def _coefficients_in_K(split: TensorSplit, f: RatWitt) -> bool:
    return all(split.frob(c) == c for c in f.P + f.Q)


def equalizer_check(f: RatWitt, split: TensorSplit) -> bool:
    """Do the two images of ``f`` in ``W_rat(L ⊗_K L) = prod W_rat(L)`` agree?"""
    if f.ring != split.L:
        raise RingError(f"expected an element over {split.L}")
    L = split.L
    for j in range(split.n):
        left = change_ring(f, L, lambda a: split.factor(j, a, L.one))
        right = change_ring(f, L, lambda b: split.factor(j, L.one, b))
        if left != right:
            return False
    return True


def base_change(f: RatWitt, split: TensorSplit) -> RatWitt:
    return change_ring(f, split.L, split.embed)


def is_frobenius_fixed(u: FormalSum, q: int) -> bool:
    return frobenius_action(u, q) == u


@dataclass
class GaloisReport:
    preimage: FormalSum
    fixed: bool
    omega_matches: bool
    converse_checked: int
    converse_failures: int

    @property
    def passed(self) -> bool:
        return self.fixed and self.omega_matches and self.converse_failures == 0


def frobenius_orbits(L: Ring, q: int) -> list[tuple]:
    seen, out = set(), []
    for a in L.elements():
        if L.is_zero(a) or a in seen:
            continue
        orb = [a]
        b = L.pow(a, q)
        while b != a:
            orb.append(b)
            b = L.pow(b, q)
        seen.update(orb)
        out.append(tuple(orb))
    return out


def fixed_sums(L: Ring, q: int, max_support: int, mults=(-2, -1, 1, 2)):
    """All Frobenius-fixed formal sums over ``L`` with support ``<= max_support``."""
    orbits = frobenius_orbits(L, q)
    for r in range(1, max_support + 1):
        for chosen in itertools.combinations(orbits, r):
            if sum(len(o) for o in chosen) > max_support:
                continue
            for ms in itertools.product(mults, repeat=r):
                yield FormalSum.make(L, [(a, n) for o, n in zip(chosen, ms) for a in o])


def galois_invariants_check(f: RatWitt, split: TensorSplit, max_support: int | None = None) -> GaloisReport:
    """Preimage of ``f`` under ``omega`` over ``L`` is Frobenius fixed, and conversely
    fixed sums of support ``<= max_support`` land in ``W_rat(K)``."""
    if f.ring != split.K:
        raise RingError(f"expected an element over {split.K}")
    u = split_over(f, split.L, split.embed)
    if u is None:
        raise RingError(f"{split.L} does not split {f}")
    fixed = is_frobenius_fixed(u, split.q)
    matches = omega(u) == base_change(f, split)
    max_support = f.bound if max_support is None else max_support
    checked = failures = 0
    for v in fixed_sums(split.L, split.q, max_support):
        checked += 1
        if not _coefficients_in_K(split, omega(v)):
            failures += 1
    return GaloisReport(u, fixed, matches, checked, failures)
