"""Fatou and complete integral closure checks.

A domain ``A`` with fraction field ``K`` is strong Fatou (equivalently cic)
when every ``f`` in ``W(A)`` that is rational over ``K`` has its reduced
representative ``P/Q`` (with ``P(0) = Q(0) = 1``) already in ``A[T]``.  The
monomial subring ``k + x k[x,y]`` fails this: ``y`` is quasi-integral
(``x y^n`` lies in ``A`` for all ``n``) without lying in ``A``.

Membership of infinitely many series coefficients cannot be decided, so
verdicts on series are qualified by the number of coefficients checked.  For
the witness ``(1 - xT + dT^2)/(1 - xT)`` the coefficients have the closed form
``1, 0, d, dx, dx^2, ...`` which makes the in-``W(A)`` claim exact once
``d x^n`` lies in ``A`` for all ``n``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .hankel import kronecker_reconstruct
from .ratwitt import RatWitt
from .rings import polyring as P
from .rings.base import Ring, RingError
from .rings.finite_field import GF
from .rings.integers import QQ, ZZ
from .rings.monomial import MonomialSubring
from .rings.polyring import PolyRing
from .wittseries import WittSeries

IN_WRAT_A = "in_Wrat_A"
IN_W_A_ONLY = "in_W_A_only"
UNDETERMINED = "undetermined"


def in_subring(A: Ring, c) -> bool:
    """Is the fraction-field element ``c`` in ``A``?"""
    return A.from_fraction(c) is not None


def quasi_integral_witness(K: Ring, x, d, N: int = 20):
    """``f = (1 - xT + dT^2)/(1 - xT)`` over ``K`` and its coefficients ``b_0..b_{N-1}``."""
    if K.is_zero(d):
        raise RingError("d must be non-zero")
    f = RatWitt.make(K, (K.one, K.neg(x), d), (K.one, K.neg(x)))
    return f, f.series(N - 1)


@dataclass
class FatouVerdict:
    f: object
    P: tuple
    Q: tuple
    P_membership: list
    Q_membership: list
    series_checked: int
    series_first_failure: int | None
    verdict: str
    reason: str = ""
    K: Ring | None = field(default=None, repr=False)

    def lines(self) -> list[str]:
        K = self.K
        out = [
            f"verdict={self.verdict}",
            f"P={P.format_poly(K, self.P)}" if K else f"P={self.P}",
            f"Q={P.format_poly(K, self.Q)}" if K else f"Q={self.Q}",
            "P_in_A=" + ",".join("1" if m else "0" for m in self.P_membership),
            "Q_in_A=" + ",".join("1" if m else "0" for m in self.Q_membership),
            f"series_checked={self.series_checked}",
        ]
        if self.series_first_failure is not None:
            out.append(f"series_leaves_A_at={self.series_first_failure}")
        if self.reason:
            out.append(f"reason={self.reason}")
        return out

    def __str__(self):
        return "\n".join(self.lines())


def strong_fatou_check(f, A: Ring, N: int | None = None) -> FatouVerdict:
    """Reduce ``f`` over ``K = Frac(A)`` and test membership of its coefficients in ``A``.

    ``f`` is a :class:`RatWitt` over ``K`` or a coefficient list ``a_0..a_M``
    over ``K`` (then it is reconstructed first with the largest bound the
    precision allows).  ``N`` series coefficients are checked (default
    ``2r + 4`` for bound ``r``).
    """
    K = A.fraction_field()
    if isinstance(f, RatWitt):
        if f.ring != K:
            raise RingError(f"expected an element over {K}, got {f.ring}")
        h = f
    else:
        coeffs = f.full() if isinstance(f, WittSeries) else list(f)
        h = kronecker_reconstruct(K, coeffs, len(coeffs) // 2)
    kp, kq = h.reduced
    r = h.bound
    N = 2 * r + 4 if N is None else N
    pm = [in_subring(A, c) for c in kp]
    qm = [in_subring(A, c) for c in kq]
    series = h.series(N)
    failure = next((i for i, c in enumerate(series) if not in_subring(A, c)), None)
    if all(pm) and all(qm):
        verdict, reason = IN_WRAT_A, ""
    elif failure is None:
        verdict = IN_W_A_ONLY
        reason = f"series in A[[T]] through T^{N} but reduced P/Q not in A[T]"
    else:
        verdict = UNDETERMINED
        reason = f"series leaves A at coefficient {failure}, so f is not in W(A)"
    return FatouVerdict(h, kp, kq, pm, qm, N, failure, verdict, reason, K)


# -- the non-cic pipeline ---------------------------------------------------------------


def monsub_witness(k: Ring | None = None, N: int = 20):
    """In ``A = MonSub(k)``: ``f = (1 - yT + xT^2)/(1 - yT)`` over ``K``."""
    A = MonomialSubring(k or GF(2))
    K = A.fraction_field()
    xs, ys = K.variables()["x"], K.variables()["y"]
    f, coeffs = quasi_integral_witness(K, ys, xs, N)
    return A, f, coeffs


@dataclass
class SuiteReport:
    lines: list = field(default_factory=list)
    passed: bool = True

    def add(self, ok: bool, text: str):
        self.lines.append(("pass " if ok else "FAIL ") + text)
        self.passed = self.passed and ok

    def __str__(self):
        return "\n".join(self.lines)


def random_integral_fraction(rng: random.Random, R: Ring, rmax: int = 3, size: int = 4):
    """Random ``(P, Q)`` over ``R`` with ``P(0) = Q(0) = 1`` and bound ``<= rmax``."""
    while True:
        dq = rng.randint(0, rmax)
        dp = rng.randint(0, rmax - 1)
        p = P.trim(R, [R.one] + [R.random_element(rng, size) for _ in range(dp)])
        q = P.trim(R, [R.one] + [R.random_element(rng, size) for _ in range(dq)])
        if p and q:
            return p, q


def cic_samples_consistent(A: Ring, rng: random.Random, count: int = 50, rmax: int = 3) -> int:
    """Count violations of the strong Fatou property on sampled rational series.

    Each sample is ``P/Q`` with ``P, Q`` over ``A`` times a common factor
    ``1 + cT`` over ``K`` that does not lie in ``A[T]``; reducing over ``K``
    must land in ``A[T]`` whenever the series does.
    """
    K = A.fraction_field()
    bad = 0
    for _ in range(count):
        p, q = random_integral_fraction(rng, A, rmax)
        c = K.random_element(rng)
        extra = (K.one, c)
        kp = P.mul(K, tuple(A.to_fraction(x) for x in p), extra)
        kq = P.mul(K, tuple(A.to_fraction(x) for x in q), extra)
        f = RatWitt.make(K, kp, kq)
        v = strong_fatou_check(f, A)
        if v.series_first_failure is None and v.verdict != IN_WRAT_A:
            bad += 1
    return bad


def cic_counterexample_suite(rng: random.Random | None = None, samples: int = 50) -> SuiteReport:
    rng = rng or random.Random(0)
    rep = SuiteReport()
    A, f, coeffs = monsub_witness()
    K = A.fraction_field()
    kx = A.ambient
    x, y = kx.variables()["x"], kx.variables()["y"]
    quasi = all(A.contains(kx.mul(x, kx.pow(y, n))) for n in range(21))
    rep.add(quasi, "MonSub(GF/2): x*y^n in A for n <= 20 (y quasi-integral)")
    rep.add(not A.contains(y), "MonSub(GF/2): y not in A")
    v = strong_fatou_check(f, A, N=20)
    rep.add(v.verdict == IN_W_A_ONLY, f"MonSub(GF/2): strong_fatou_check verdict {v.verdict}, so A is not cic")
    bad = cic_samples_consistent(ZZ, rng, samples)
    rep.add(bad == 0, f"ZZ: {samples} sampled rational series consistent with strong Fatou ({bad} violations)")
    Fx = PolyRing(GF(3), "x")
    bad = cic_samples_consistent(Fx, rng, max(samples // 5, 1), rmax=2)
    rep.add(bad == 0, f"GF/3[x]: sampled rational series consistent with strong Fatou ({bad} violations)")
    g = RatWitt.parse(QQ, "(1-1/2*T)/(1+1/3*T^2)")
    rep.add(strong_fatou_check(g, QQ).verdict == IN_WRAT_A, "QQ as its own subring: trivially cic")
    return rep
