from math import comb

import pytest

from matinv.graded import graded_dim, graded_dim_fast, graded_dim_oracle, schur_dim
from matinv.partitions import partitions_of

from oracles import ssyt_count


def test_schur_dim_examples():
    assert schur_dim((3,), 3) == comb(5, 3) == 10
    assert schur_dim((2, 2, 2), 3) == 1
    assert schur_dim((3, 1, 1, 1), 3) == 0
    assert schur_dim((4, 2), 3) == 27
    assert schur_dim((), 0) == 1


@pytest.mark.parametrize("m", [1, 2, 3])
@pytest.mark.parametrize("d", range(0, 6))
def test_schur_dim_counts_tableaux(d, m):
    for lam in partitions_of(d):
        assert schur_dim(lam, m) == ssyt_count(lam, m)


def test_oracle_examples():
    assert graded_dim_oracle(3, 3, 1) == 10
    assert graded_dim_oracle(3, 3, 2) == 28 + 27 + 1 + 0 == 56
    assert graded_dim_oracle(3, 3, 0) == 1


def test_fast_examples():
    assert graded_dim_fast(3, 3, 1) == 10
    assert graded_dim_fast(3, 3, 2) == 56
    # t^3 coefficient of (1 - t + t^2)/(1-t)^11
    assert graded_dim_fast(3, 3, 3) == comb(13, 10) - comb(12, 10) + comb(11, 10) == 231
    assert graded_dim(3, 3, 3) == graded_dim(3, 3, 3, oracle=True)


def test_fast_equals_oracle_exhaustive():
    for n in (1, 2, 3):
        for m in (1, 2, 3, 4):
            for k in range(0, 12 // n + 1):
                assert graded_dim_fast(n, m, k) == graded_dim_oracle(n, m, k), (n, m, k)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_m_equals_two_is_polynomial_ring(n):
    for k in range(6):
        assert graded_dim(n, 2, k) == comb(k + n, n)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_m_equals_one(n):
    assert [graded_dim(n, 1, k) for k in range(7)] == [1] * 7


def test_monotone_in_m():
    for n in (2, 3):
        for k in (1, 2, 3):
            dims = [graded_dim(n, m, k) for m in range(1, 7)]
            assert dims == sorted(dims)


def test_n_equals_one_counts_monomials():
    for m in range(1, 5):
        for k in range(6):
            assert graded_dim(1, m, k) == comb(m + k - 1, k)
