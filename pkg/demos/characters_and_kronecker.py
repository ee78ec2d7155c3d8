"""
Characters of S_d and Kronecker squares
=======================================

Irreducible characters come from the Murnaghan-Nakayama rule; Kronecker
coefficients are inner products of products of characters.
"""

from matinv import character_row, kronecker_row, partitions_of
from matinv.partitions import irrep_dimension_symmetric

# The character table of S_4, one row per irreducible, columns in the
# order of partitions_of(4).
classes = partitions_of(4)
print("classes:", [str(c) for c in classes])
for lam in classes:
    row = character_row(lam)
    print(f"{str(lam):>8}", [row[c] for c in classes])

# Decompose T_{2,2,2} x T_{2,2,2}.  Four irreducibles appear once each.
square = kronecker_row((2, 2, 2), (2, 2, 2))
print("T_{2^3} x T_{2^3} =", " + ".join(f"T_({nu})" for nu in square))

# Dimensions must balance: 5 * 5 on the left.
print(sum(c * irrep_dimension_symmetric(nu) for nu, c in square.items()), "= 25")

# A row at d = 36 has 17977 entries and still takes about a second.
import time

start = time.perf_counter()
row = character_row((9, 9, 9, 9))
print(f"chi_(9^4): {len(row)} classes in {time.perf_counter() - start:.2f} s")
