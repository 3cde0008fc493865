"""
Reading a rational function off its coefficients
================================================

A series is rational exactly when its Hankel matrix (a_{i+j}) has finite
rank, and the rank is the bound max(1 + deg P, deg Q).
"""

from ratwitt import GF, QQ, RatWitt, hankel_rank_field, kronecker_reconstruct

fib = [1, 1, 2, 3, 5, 8, 13, 21, 34, 55]
res = hankel_rank_field(fib, QQ)
print("rank", res.rank, "truncation limited:", res.truncation_limited)
print("reconstructed:", kronecker_reconstruct(QQ, fib, res.rank))

# four coefficients are enough for bound 2
print(kronecker_reconstruct(QQ, [1, 1, 2, 4], 2))

# the same over a finite field
F = GF(4)
f = RatWitt.parse(F, "(1+x*T)/(1+T+x*T^2)")
s = f.series(2 * f.bound)
print([F.format(c) for c in s])
print("round trip:", kronecker_reconstruct(F, s, f.bound) == f)
