"""
Degree bounds for R(3,m)
========================

Upper bounds come from invariants cutting out the null cone; the lower
bound n^2 from the first appearance of the sign representation.
"""

from matinv.bounds import bounds_table, gamma_value, lower_bound_witness, universal_upper_bound

print("m  bound  source     set A  set B")
for rep in bounds_table():
    print(f"{rep.m}  {rep.value:5d}  {rep.source:<10} {rep.set_a!s:>5}  {rep.set_b!s:>5}")
print("every m:", universal_upper_bound(3))

print("gamma(R(3,m)):", [gamma_value(3, m) for m in range(1, 8)])

for n in (2, 3):
    w = lower_bound_witness(n)
    print(f"n={n}: a(k^n,k^n,1^kn) = {w.kron_values}  ->  beta >= {w.value} ({'verified' if w.verified else 'failed'})")
