import re
from math import factorial

import pytest
from hypothesis import given, strategies as st

from matinv.errors import PartitionParseError
from matinv.partitions import (
    Partition,
    conjugate,
    irrep_dimension_symmetric,
    iter_partitions,
    parse_partition,
    partitions_of,
    rectangle,
    z_order,
)

from oracles import partition_count


@pytest.mark.parametrize(
    "text, expected",
    [("4,2", (4, 2)), ("2^3", (2, 2, 2)), ("1,3", (3, 1)), ("4,2^2", (4, 2, 2)), (" 3 , 1^2 ", (3, 1, 1)), ("", ())],
)
def test_parse(text, expected):
    assert parse_partition(text) == expected
    assert isinstance(parse_partition(text), Partition)


@pytest.mark.parametrize("text, token", [("4,a", "'a'"), ("3,0", "'0'"), ("3,,1", "''"), ("-2", "'-2'"), ("2^0", "'2^0'")])
def test_parse_errors_name_token(text, token):
    with pytest.raises(PartitionParseError, match=re.escape(token)):
        parse_partition(text)


def test_partition_normalizes():
    assert Partition([1, 3, 0, 2]) == (3, 2, 1)
    assert Partition([1, 3]).size == 4
    assert hash(Partition([2, 1])) == hash((2, 1))
    with pytest.raises(ValueError):
        Partition([2, -1])


def test_partitions_of_small():
    assert partitions_of(0) == ((),)
    assert partitions_of(4) == ((4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1))
    assert len(partitions_of(9)) == 30


def test_partition_counts_match_pentagonal_recurrence():
    expected = partition_count(60)
    for d in range(41):
        assert len(partitions_of(d)) == expected[d]
    # partitions_of caches whatever it returns; count the big ones from the generator it wraps
    for d in range(41, 61):
        assert sum(1 for _ in iter_partitions(d)) == expected[d]


def test_enumeration_is_reverse_lexicographic():
    for d in range(1, 15):
        parts = list(partitions_of(d))
        assert parts == sorted(parts, reverse=True)
        assert all(sum(p) == d and list(p) == sorted(p, reverse=True) for p in parts)


def test_conjugate_examples():
    assert conjugate((4, 2)) == (2, 2, 1, 1)
    assert conjugate((2, 2, 2)) == (3, 3)
    assert conjugate(()) == ()


def test_conjugate_involution_exhaustive():
    for d in range(21):
        for lam in partitions_of(d):
            assert conjugate(conjugate(lam)) == lam


def test_z_order():
    assert z_order((1, 1, 1)) == 6
    assert z_order((2, 1)) == 2
    assert z_order((3,)) == 3
    assert z_order((2, 2, 1)) == 8


@pytest.mark.parametrize("d", range(13))
def test_class_sizes_sum_to_group_order(d):
    assert sum(factorial(d) // z_order(rho) for rho in partitions_of(d)) == factorial(d)


def test_irrep_dimension_examples():
    assert all(irrep_dimension_symmetric((d,)) == 1 for d in range(1, 10))
    assert irrep_dimension_symmetric((1, 1, 1)) == 1
    assert irrep_dimension_symmetric((2, 2, 2)) == 5


@pytest.mark.parametrize("d", range(11))
def test_burnside_sum(d):
    assert sum(irrep_dimension_symmetric(lam) ** 2 for lam in partitions_of(d)) == factorial(d)


@given(st.lists(st.integers(min_value=0, max_value=9), max_size=8))
def test_partition_roundtrip_through_text(parts):
    lam = Partition(parts)
    assert parse_partition(str(lam)) == lam


def test_rectangle():
    assert rectangle(2, 3) == (2, 2, 2)
    assert rectangle(0, 3) == ()
