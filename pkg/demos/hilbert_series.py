"""
Hilbert series numerators
=========================

With the universal denominator (1-t)^r the renormalized Hilbert series of
R(n,m) has an integer numerator of degree r - n*m; only that many graded
dimensions are needed.  Without assuming palindromy one extra dimension
is computed and the numerator is checked to stop where predicted.
"""

import time

from matinv import hilbert_numerator
from matinv.cli import format_polynomial

cases = [(3, 3, "off"), (3, 4, "off"), (4, 3, "off"), (3, 5, "off"), (5, 3, "on"), (4, 4, "on"), (3, 6, "on"), (3, 7, "on")]

for n, m, assume in cases:
    start = time.perf_counter()
    rep = hilbert_numerator(n, m, assume)
    secs = time.perf_counter() - start
    status = "assumed" if rep.assumed_palindrome else ("verified" if rep.palindromic else "NOT palindromic")
    print(f"R({n},{m})  r={rep.krull}  deg P={rep.numerator_degree}  palindromy {status}  [{secs:.1f} s]")
    if rep.numerator_degree <= 8:
        print("   P(t) =", format_polynomial(rep.numerator))
    else:
        print("   P coefficients:", rep.numerator)

# The report expands back to the graded dimensions it was built from.
rep = hilbert_numerator(3, 4, "off")
print(rep.expand(6), rep.coefficients[:7])
