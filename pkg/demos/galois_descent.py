"""
Descent from GF(4) to GF(2)
===========================

Over GF(4) the polynomial 1 + T + T^2 splits, and the formal sum of its
inverse roots is fixed by Frobenius.
"""

from ratwitt import GF, RatWitt
from ratwitt.descent import equalizer_check, galois_invariants_check, tensor_split
from ratwitt.monoid import split_preimage

f = RatWitt.parse(GF(2), "1+T+T^2")
k, L, u = split_preimage(f)
print(f"splits over GF(2^{k}); preimage", u)

S = tensor_split(2, 1, 2)
rep = galois_invariants_check(f, S)
print("Frobenius fixed:", rep.fixed, "  omega matches:", rep.omega_matches)

x = S.L.variables()["x"]
g = RatWitt.make(S.L, (S.L.one, x), (S.L.one,))
print("1 + xT descends?", equalizer_check(g, S))
