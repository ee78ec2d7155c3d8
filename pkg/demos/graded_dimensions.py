"""
Graded pieces of R(n,m)
=======================

Invariants live only in degrees divisible by n.  In degree k*n the space
decomposes under GL_m according to the Kronecker square of the rectangle
k^n; its dimension can be computed from that decomposition or straight
from one character row.
"""

from math import comb

from matinv import graded_dim, graded_dim_oracle, isotypic_decomposition, schur_dim

# Degree 6 of R(3,3): the shape (3,1,1,1) has four rows and drops out.
decomp = isotypic_decomposition(3, 3, 2)
for lam, mult in decomp.items():
    print(f"S_({lam})(C^3) x {mult}: dim {schur_dim(lam, 3)}")
print("dim R(3,3)_6 =", graded_dim(3, 3, 2))

# Both routes agree.
for n, m, k in [(3, 4, 3), (2, 5, 4), (4, 3, 2)]:
    fast, slow = graded_dim(n, m, k), graded_dim_oracle(n, m, k)
    print(f"R({n},{m}) in degree {k * n}: {fast} (fast) {slow} (oracle)")

# The lowest piece is the space of degree n polynomials in m variables.
print([graded_dim(3, m, 1) for m in range(1, 7)])
print([comb(m + 2, 3) for m in range(1, 7)])

# R(n,2) is a polynomial ring on n+1 generators of degree n.
print([graded_dim(3, 2, k) for k in range(6)], [comb(k + 3, 3) for k in range(6)])
