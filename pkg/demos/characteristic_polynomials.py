"""
Witt operations from linear algebra
===================================

det(1 - T phi) turns direct sums into Witt sums, tensor products into Witt
products, powers into Frobenius and cyclic block matrices into Verschiebung.
"""

from ratwitt import GF, EndoModule, char_map, rw_add, rw_frobenius, rw_mul
from ratwitt.almkvist import oracle_direct_sum, oracle_frobenius, oracle_tensor

F = GF(5)
m1 = EndoModule.parse(F, "[[1,2],[0,3]]")
m2 = EndoModule.parse(F, "[[4,1],[1,1]]")
c1, c2 = char_map(m1), char_map(m2)
print("char(m1) =", c1, "  char(m2) =", c2)

print("sum:   ", char_map(oracle_direct_sum(m1, m2)), "==", rw_add(c1, c2))
print("tensor:", char_map(oracle_tensor(m1, m2)), "==", rw_mul(c1, c2))
print("power: ", char_map(oracle_frobenius(m1, 3)), "==", rw_frobenius(c1, 3))
