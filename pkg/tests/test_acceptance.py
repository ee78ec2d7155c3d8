"""Exit criteria.  Each test is one criterion; the summary prints PASS/FAIL per line."""

import random
import time
from math import comb

import pytest

from matinv.bounds import lower_bound_witness, universal_upper_bound
from matinv.characters import character_row, clear_memo
from matinv.cli import run
from matinv.graded import graded_dim, graded_dim_fast, graded_dim_oracle
from matinv.hilbert import hilbert_numerator, krull_dim, series_expand
from matinv.invariants import (
    MatrixTuple,
    f_stacked,
    invariance_check,
    null_cone_test_3,
)
from matinv.kronecker import kronecker_coefficient, kronecker_row
from matinv.partitions import partitions_of, rectangle, z_order

criterion = pytest.mark.criterion


def timed(fn, *args, **kwargs):
    start = time.perf_counter()
    value = fn(*args, **kwargs)
    return value, time.perf_counter() - start


def cold_numerator(n, m, assume):
    clear_memo()
    return timed(hilbert_numerator, n, m, assume)


@criterion("1  R(3,3) numerator 1 - t + t^2 over (1-t)^11, verified, < 1 s")
def test_c01_r33():
    rep, secs = cold_numerator(3, 3, "off")
    assert rep.numerator == [1, -1, 1] and rep.krull == 11
    assert not rep.assumed_palindrome and rep.vanishing_checked >= 1
    assert secs < 1


@criterion("2  R(3,4) numerator [1,0,20,20,55,20,20,0,1] over (1-t)^20, verified, < 30 s")
def test_c02_r34():
    rep, secs = cold_numerator(3, 4, "off")
    assert rep.numerator == [1, 0, 20, 20, 55, 20, 20, 0, 1] and rep.krull == 20
    assert not rep.assumed_palindrome and rep.vanishing_checked >= 1
    assert secs < 30


@criterion("3  R(4,3) numerator [1,-3,9,8,9,-3,1] over (1-t)^18, < 2 min")
def test_c03_r43():
    rep, secs = cold_numerator(4, 3, "off")
    assert rep.krull == 18
    assert secs < 120
    assert rep.numerator == [1, -3, 9, 8, 9, -3, 1]


NUMERATOR_R35 = [1, 6, 141, 931, 4816, 13916, 27531, 33391, 27531, 13916, 4816, 931, 141, 6, 1]
NUMERATOR_R53 = [1, -6, 36, -70, 231, -189, 419, -189, 231, -70, 36, -6, 1]
NUMERATOR_R44 = [1, 1, 141, 981, 8534, 39193, 139348, 325823, 556368, 652716, 556368, 325823, 139348, 39193, 8534, 981, 141, 1, 1]
NUMERATOR_R36 = [1, 18, 626, 10246, 114901, 830484, 4081260, 13763184, 32507115, 54176230, 64224060, 54176230,
             32507115, 13763184, 4081260, 830484, 114901, 10246, 626, 18, 1]


@criterion("4  R(3,5) and R(5,3) numerators, palindromy assumed, < 30 min each")
def test_c04_extended():
    rep, secs = cold_numerator(3, 5, "on")
    assert rep.numerator == NUMERATOR_R35 and rep.krull == 29 and secs < 1800
    rep, secs = cold_numerator(5, 3, "on")
    assert rep.numerator == NUMERATOR_R53 and rep.krull == 27 and secs < 1800


@criterion("4s stretch (not gating): R(4,4) and R(3,6) numerators, palindromy assumed")
def test_c04_stretch():
    rep = hilbert_numerator(4, 4, "on")
    assert rep.numerator == NUMERATOR_R44 and rep.krull == 34
    rep = hilbert_numerator(3, 6, "on")
    assert rep.numerator == NUMERATOR_R36 and rep.krull == 38


@criterion("5  bounds --n 3 --table gives [3,3,9,44,92,160,219,264,309]; universal bound 309")
def test_c05_bounds(capsys):
    start = time.perf_counter()
    assert run(["bounds", "--n", "3", "--table"]) == 0
    out = capsys.readouterr().out.splitlines()
    rows = [line.split("\t") for line in out[1:10]]
    assert [int(r[0]) for r in rows] == list(range(1, 10))
    assert [int(r[1]) for r in rows] == [3, 3, 9, 44, 92, 160, 219, 264, 309]
    assert universal_upper_bound(3) == 309
    assert time.perf_counter() - start < 1


@criterion("6  dim R(n,m)_n = C(m+n-1, n) for 2 <= n <= 5, 1 <= m <= 6, < 5 s")
def test_c06_first_piece():
    start = time.perf_counter()
    for n in range(2, 6):
        for m in range(1, 7):
            assert graded_dim(n, m, 1) == comb(m + n - 1, n)
    assert time.perf_counter() - start < 5


@criterion("7  T_{2^3} x T_{2^3} = T_6 + T_{4,2} + T_{2^3} + T_{3,1,1,1}, < 5 s")
def test_c07_tensor_square():
    row, secs = timed(kronecker_row, (2, 2, 2), (2, 2, 2))
    assert row == {(6,): 1, (4, 2): 1, (2, 2, 2): 1, (3, 1, 1, 1): 1}
    assert secs < 5


@criterion("8  a(k^n, k^n, 1^kn) = (0,0,1) for n=3 and (0,1) for n=2, < 60 s")
def test_c08_lower_bound():
    start = time.perf_counter()
    assert lower_bound_witness(3).kron_values == {1: 0, 2: 0, 3: 1}
    assert lower_bound_witness(2).kron_values == {1: 0, 2: 1}
    for n in (2, 3):
        values = [kronecker_coefficient(rectangle(k, n), rectangle(k, n), (1,) * (k * n)) for k in range(1, n + 1)]
        assert values == [0] * (n - 1) + [1]
    assert time.perf_counter() - start < 60


@criterion("9  fast path = oracle path for n <= 3, m <= 4, kn <= 12, < 5 min")
def test_c09_oracle_equivalence():
    start = time.perf_counter()
    for n in range(1, 4):
        for m in range(1, 5):
            for k in range(0, 12 // n + 1):
                assert graded_dim_fast(n, m, k) == graded_dim_oracle(n, m, k), (n, m, k)
    assert time.perf_counter() - start < 300


@criterion("10 m <= 2 closed forms: series of R(n,2) is C(k+n,n), of R(n,1) all ones, n <= 4, < 1 min")
def test_c10_closed_forms():
    start = time.perf_counter()
    for n in range(1, 5):
        assert series_expand(n, 2, 5) == [comb(k + n, n) for k in range(6)]
        assert series_expand(n, 1, 5) == [1] * 6
        # the character engine must agree with the closed forms
        assert [graded_dim(n, 2, k) for k in range(6)] == [comb(k + n, n) for k in range(6)]
        assert [graded_dim(n, 1, k) for k in range(6)] == [1] * 6
    assert time.perf_counter() - start < 60


def _random_rational_tuple(rng, n, m):
    from fractions import Fraction

    return MatrixTuple.from_matrices(
        [[[Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(n)] for _ in range(n)] for _ in range(m)]
    )


@criterion("11 degree 3 coefficients, g_{i,j,k}, f exactly invariant (3 tuples x 5 pairs), < 1 min")
def test_c11_invariance():
    start = time.perf_counter()
    rng = random.Random(20240611)
    for m in (3, 9):
        for _ in range(3):
            t = _random_rational_tuple(rng, 3, m)
            report = invariance_check(t, 5, rng.randrange(2**32))
            names = {name for name, _, _ in report.entries}
            assert sum(name.startswith("coeff") for name in names) == comb(m + 2, 3)
            assert sum(name.startswith("g(") for name in names) == comb(m, 3)
            assert ("f" in names) == (m == 9)
            assert report.passed, report.failures()
    assert time.perf_counter() - start < 60


@criterion("12 null-cone verdicts on skew, upper-triangular, (I,0,0); f(standard basis) = +-1, < 5 s")
def test_c12_null_cone():
    start = time.perf_counter()
    S1 = [[0, 1, 0], [-1, 0, 0], [0, 0, 0]]
    S2 = [[0, 0, 1], [0, 0, 0], [-1, 0, 0]]
    S3 = [[0, 0, 0], [0, 0, 1], [0, -1, 0]]

    def E(i, j):
        return [[int((r, c) == (i, j)) for c in range(3)] for r in range(3)]

    I3 = [[int(r == c) for c in range(3)] for r in range(3)]
    Z3 = [[0] * 3 for _ in range(3)]

    v = null_cone_test_3(MatrixTuple.from_matrices([S1, S2, S3]))
    assert not v.in_null_cone and v.witness == "g(1,2,3)" and v.value != 0
    assert null_cone_test_3(MatrixTuple.from_matrices([E(0, 1), E(0, 2), E(1, 2)])).in_null_cone
    assert not null_cone_test_3(MatrixTuple.from_matrices([I3, Z3, Z3])).in_null_cone
    basis = MatrixTuple.from_matrices([E(r, c) for c in range(3) for r in range(3)])
    assert f_stacked(basis) in (1, -1)
    assert time.perf_counter() - start < 5


@criterion("13 orthogonality d <= 8, Kronecker symmetry, palindromy and deg P = r - nm, < 10 min")
def test_c13_properties():
    from itertools import permutations

    start = time.perf_counter()
    for d in range(1, 9):
        rows = [character_row(lam) for lam in partitions_of(d)]
        for a in partitions_of(d):
            for b in partitions_of(d):
                assert sum(r[a] * r[b] for r in rows) == (z_order(a) if a == b else 0)
    for d in range(1, 7):
        parts = partitions_of(d)
        for lam in parts:
            for mu in parts:
                for nu in parts:
                    assert len({kronecker_coefficient(*p) for p in permutations((lam, mu, nu))}) == 1
    rng = random.Random(7)
    for _ in range(50):
        d = rng.randint(7, 9)
        triple = [rng.choice(partitions_of(d)) for _ in range(3)]
        assert len({kronecker_coefficient(*p) for p in permutations(triple)}) == 1
    for n, m, assume in [(2, 3, "off"), (2, 4, "off"), (2, 5, "off"), (3, 3, "off"), (3, 4, "off"),
                         (4, 3, "off"), (3, 5, "on"), (5, 3, "on"), (4, 4, "on"), (3, 6, "on")]:
        rep = hilbert_numerator(n, m, assume)
        assert rep.numerator_degree == krull_dim(n, m) - n * m == len(rep.numerator) - 1
        assert rep.numerator == rep.numerator[::-1]
        if not rep.assumed_palindrome:
            assert rep.palindromic
    assert time.perf_counter() - start < 600
