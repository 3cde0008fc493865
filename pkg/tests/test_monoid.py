import itertools
import random

import pytest
import sympy

from ratwitt.monoid import (
    FormalSum,
    frobenius_action,
    fs_add,
    fs_mul,
    fs_neg,
    kernel_witnesses,
    omega,
    split_over,
    split_preimage,
)
from ratwitt.ratwitt import RatWitt, change_ring, rw_add, rw_mul, rw_neg
from ratwitt.rings import GF, QQ, ZZ, DualNumbers, IntegersMod, RingError
from ratwitt.rings import polyring as P
from ratwitt.rings.finite_field import embedding

T = sympy.Symbol("T")


def fs(R, d):
    return FormalSum.make(R, d)


def random_sum(rng, lo=-4, hi=4, size=3):
    return fs(ZZ, {rng.randint(lo, hi): rng.choice((-2, -1, 1, 2)) for _ in range(size)})


def sympy_omega(u):
    return sympy.Mul(*[(1 - a * T) ** n for a, n in u.terms])


def test_formal_sum_arithmetic_examples():
    u = fs(ZZ, {2: 1, 3: 1})
    v = fs(ZZ, {5: 1})
    assert fs_mul(u, v) == fs(ZZ, {10: 1, 15: 1})
    assert fs_add(u, fs_neg(u)).is_zero()
    assert fs(ZZ, {0: 3, 2: 1}) == fs(ZZ, {2: 1})  # (0) is zero
    assert fs_mul(fs(ZZ, {2: 1}), fs(ZZ, {0: 1})).is_zero()


def test_format_and_parse():
    u = fs(ZZ, {2: 1, 3: -2})
    assert u.format() == "(2) - 2*(3)"
    assert FormalSum.parse(ZZ, u.format()) == u
    assert fs(ZZ, {}).format() == "0"


def test_omega_examples():
    assert omega(fs(ZZ, {2: 1, 3: 1})) == RatWitt.parse(ZZ, "1-5*T+6*T^2")
    assert omega(fs(ZZ, {})).is_zero()
    assert omega(fs(ZZ, {3: -1})) == RatWitt.parse(ZZ, "1/(1-3*T)")


def test_omega_against_sympy_product():
    rng = random.Random(40)
    for _ in range(30):
        u = random_sum(rng)
        f = omega(u)
        num = sum(int(c) * T**i for i, c in enumerate(f.P))
        den = sum(int(c) * T**i for i, c in enumerate(f.Q))
        assert sympy.simplify(num / den - sympy_omega(u)) == 0


def test_omega_is_ring_homomorphism_over_integers():
    rng = random.Random(41)
    for _ in range(25):
        u, v = random_sum(rng), random_sum(rng)
        assert omega(u + v) == rw_add(omega(u), omega(v))
        assert omega(-u) == rw_neg(omega(u))
        assert omega(u * v) == rw_mul(omega(u), omega(v))


def test_omega_injective_on_small_integer_sums():
    # on a domain omega is injective; check all sums on a small support
    seen = {}
    for ms in itertools.product((-1, 0, 1), repeat=4):
        u = fs(ZZ, dict(zip((1, 2, -1, 3), ms)))
        key = omega(u)
        assert seen.setdefault(key, u) == u


@pytest.mark.parametrize("R", [DualNumbers(GF(2)), DualNumbers(QQ), IntegersMod(6), IntegersMod(12)], ids=str)
def test_kernel_witnesses_map_to_zero(R):
    ws = kernel_witnesses(R)
    assert ws
    for u in ws:
        assert not u.is_zero()
        # multiply the linear factors out by hand
        p, q = (R.one,), (R.one,)
        for a, n in u.terms:
            for _ in range(abs(n)):
                if n > 0:
                    p = P.mul(R, p, (R.one, R.neg(a)))
                else:
                    q = P.mul(R, q, (R.one, R.neg(a)))
        assert P.trim(R, P.sub(R, p, q)) == ()


def test_no_kernel_witnesses_over_domains():
    assert kernel_witnesses(ZZ) == [] and kernel_witnesses(GF(7)) == []


def test_split_preimage_gf2():
    F = GF(2)
    f = RatWitt.parse(F, "1+T+T^2")
    k, L, u = split_preimage(f)
    assert k == 2 and L.order == 4
    roots = u.support()
    assert len(roots) == 2 and all(n == 1 for _, n in u.terms)
    for a in roots:  # alpha^2 + alpha + 1 = 0
        assert L.add(L.add(L.mul(a, a), a), L.one) == L.zero
    assert omega(u) == change_ring(f, L, embedding(F, L))


def test_split_preimage_rational_and_linear():
    F = GF(3)
    f = RatWitt.make(F, (1, 1), (1, 0, 1))  # (1 + T)/(1 + T^2)
    k, L, u = split_preimage(f)
    assert k == 2
    assert omega(u) == change_ring(f, L, embedding(F, L))
    k, _, _ = split_preimage(RatWitt.teichmuller(F, 2))
    assert k == 1


def test_split_over_returns_none_when_not_split():
    F = GF(2)
    assert split_over(RatWitt.parse(F, "1+T+T^2"), F) is None


def test_split_preimage_needs_finite_field():
    with pytest.raises(RingError):
        split_preimage(RatWitt.parse(ZZ, "1-T"))


def test_frobenius_action_fixes_preimages():
    rng = random.Random(3)
    F = GF(3)
    for _ in range(10):
        f = RatWitt.make(F, (1,) + tuple(rng.randrange(3) for _ in range(2)), (1, rng.randrange(3)))
        _, L, u = split_preimage(f)
        assert frobenius_action(u, 3) == u
