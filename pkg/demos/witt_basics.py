"""
Big Witt vectors as power series
================================

Elements of W(A) are series 1 + a_1 T + a_2 T^2 + ...  Addition is plain
multiplication of series, so the zero element is the series 1.
"""

from fractions import Fraction

from ratwitt import QQ, ZZ, IntegersMod, RatWitt, WittSeries, ghost, rw_add, rw_mul, witt_mul

# Teichmuller elements [a] = 1 - aT multiply like the scalars
two = RatWitt.teichmuller(ZZ, 2)
three = RatWitt.teichmuller(ZZ, 3)
print("[2] + [3] =", rw_add(two, three))
print("[2] * [3] =", rw_mul(two, three))

# ghost components turn Witt multiplication into a coordinatewise product
f = WittSeries.from_list(QQ, [1, Fraction(1, 2), -1, 3, 0, 0, 0, 0])
g = WittSeries.from_list(QQ, [1, 2, 0, Fraction(-1, 3), 1, 0, 0, 0])
wf, wg, wfg = ghost(f), ghost(g), ghost(witt_mul(f, g))
print("ghost(f*g) == ghost(f)*ghost(g):", wfg == [a * b for a, b in zip(wf, wg)])

# over Z/6 there is no ghost map, but the product is still defined
R = IntegersMod(6)
a = WittSeries.from_list(R, [1, 2, 0, 0, 0, 0])
b = WittSeries.from_list(R, [1, 3, 0, 0, 0, 0])
print("[4] * [3] over Z/6 to T^5:", witt_mul(a, b))

# the product of two bound-2 elements can need bound 5
p = RatWitt.parse(QQ, "1/((1-T)*(1-2*T))")
q = RatWitt.parse(QQ, "1/((1-3*T)*(1-5*T))")
print(rw_mul(p, q), "bound", rw_mul(p, q).bound)
