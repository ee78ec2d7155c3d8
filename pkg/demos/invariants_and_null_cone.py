"""
Explicit invariants and the null cone for 3x3 matrices
======================================================

All arithmetic is exact, so invariance under SL_3 x SL_3 is tested as
plain equality.
"""

from fractions import Fraction
import random

from matinv import (
    MatrixTuple,
    act,
    f_stacked,
    fundamental_polynomial,
    g_invariant,
    invariance_check,
    null_cone_test_3,
    random_special_linear,
)

# Skew-symmetric 3x3 matrices: every combination is singular, so all
# degree 3 invariants vanish, but the degree 6 invariant g does not.
S1 = [[0, 1, 0], [-1, 0, 0], [0, 0, 0]]
S2 = [[0, 0, 1], [0, 0, 0], [-1, 0, 0]]
S3 = [[0, 0, 0], [0, 0, 1], [0, -1, 0]]
skew = MatrixTuple.from_matrices([S1, S2, S3])
print("det(t1 X1 + t2 X2 + t3 X3) =", fundamental_polynomial(skew).coeffs or 0)
print("g_123 =", g_invariant(skew, 1, 2, 3))
print(null_cone_test_3(skew))

# A common kernel vector puts the tuple in the null cone.
def E(i, j):
    return [[int((r, c) == (i, j)) for c in range(3)] for r in range(3)]

print(null_cone_test_3(MatrixTuple.from_matrices([E(0, 1), E(0, 2), E(1, 2)])))

# Random rational tuple, moved around by products of transvections.
rng = random.Random(1)
tup = MatrixTuple.from_matrices(
    [[[Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(3)] for _ in range(3)] for _ in range(3)]
)
A, B = random_special_linear(3, 10), random_special_linear(3, 11)
print("det X1 before/after:", fundamental_polynomial(tup)[(3, 0, 0)], fundamental_polynomial(act(tup, A, B))[(3, 0, 0)])
report = invariance_check(tup, trials=5, seed=0)
print(f"{len(report.entries)} exact comparisons, all equal: {report.passed}")

# The stacked-column determinant on 9-tuples.
basis = MatrixTuple.from_matrices([E(r, c) for c in range(3) for r in range(3)])
print("f(standard basis) =", f_stacked(basis))
