"""
A ring where rational series need non-integral denominators
===========================================================

In A = k + x k[x, y] the series (1 - yT + xT^2)/(1 - yT) has every
coefficient in A, yet its reduced denominator 1 - yT does not.
"""

from ratwitt.fatou import monsub_witness, strong_fatou_check

A, f, coeffs = monsub_witness(N=8)
K = A.fraction_field()
for n, c in enumerate(coeffs):
    print(f"b_{n} =", K.format(c))

v = strong_fatou_check(f, A, N=20)
print(v)
