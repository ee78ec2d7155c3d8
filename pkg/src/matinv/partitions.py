"""Integer partitions and the bits of their combinatorics used elsewhere.

Partitions are plain tuples underneath (``Partition`` subclasses ``tuple``),
so they hash and compare equal to the corresponding bare tuple and can be
mixed freely as dictionary keys.
"""

from __future__ import annotations

import re
from collections import Counter
from functools import lru_cache
from math import factorial, prod
from typing import Iterable, Iterator

from .errors import PartitionParseError

__all__ = [
    "Partition",
    "parse_partition",
    "partitions_of",
    "iter_partitions",
    "conjugate",
    "z_order",
    "hooks",
    "contents",
    "irrep_dimension_symmetric",
    "rectangle",
]


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    The constructor normalizes: parts are sorted into decreasing order and
    zeros are dropped, so ``Partition([1, 3, 0]) == (3, 1)``.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()) -> "Partition":
        parts = [int(p) for p in parts]
        if any(p < 0 for p in parts):
            raise ValueError(f"negative part in {parts!r}")
        return super().__new__(cls, sorted((p for p in parts if p), reverse=True))

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"

    def __str__(self) -> str:
        return ",".join(map(str, self)) if self else "()"


_TOKEN = re.compile(r"^\s*(\d+)\s*(?:\^\s*(\d+)\s*)?$")


def parse_partition(text: str) -> Partition:
    """Parse ``"4,2^2"``-style text.  ``b^e`` means ``e`` copies of ``b``.

    ``""`` and ``"()"`` give the empty partition.
    """
    stripped = text.strip()
    if stripped in ("", "()"):
        return Partition()
    parts: list[int] = []
    for pos, token in enumerate(stripped.split(",")):
        match = _TOKEN.match(token)
        if not match:
            raise PartitionParseError(f"bad token {token!r} at position {pos} in {text!r}")
        base = int(match.group(1))
        exp = int(match.group(2)) if match.group(2) is not None else 1
        if base == 0 or exp == 0:
            raise PartitionParseError(f"zero in token {token!r} at position {pos} in {text!r}")
        parts.extend([base] * exp)
    return Partition(parts)


def iter_partitions(d: int) -> Iterator[tuple[int, ...]]:
    """Partitions of ``d`` in reverse-lexicographic order (Zoghbi-Stojmenovic ZS1)."""
    if d == 0:
        yield ()
        return
    x = [1] * d
    x[0] = d
    m, h = 1, 1
    yield (d,)
    while x[0] != 1:
        if x[h - 1] == 2:
            m += 1
            x[h - 1] = 1
            h -= 1
        else:
            r = x[h - 1] - 1
            t = m - h + 1
            x[h - 1] = r
            while t >= r:
                h += 1
                x[h - 1] = r
                t -= r
            if t == 0:
                m = h
            else:
                m = h + 1
                if t > 1:
                    h += 1
                    x[h - 1] = t
        yield tuple(x[:m])


@lru_cache(maxsize=None)
def _partitions_cached(d: int) -> tuple[Partition, ...]:
    new = tuple.__new__
    return tuple(new(Partition, p) for p in iter_partitions(d))


def partitions_of(d: int) -> tuple[Partition, ...]:
    """All partitions of ``d`` in reverse-lexicographic order, ``(d)`` first."""
    if d < 0:
        raise ValueError("d must be non-negative")
    return _partitions_cached(d)


def conjugate(lam: Iterable[int]) -> Partition:
    lam = tuple(lam)
    if not lam:
        return Partition()
    return tuple.__new__(Partition, tuple(sum(1 for p in lam if p >= j) for j in range(1, lam[0] + 1)))


def z_order(rho: Iterable[int]) -> int:
    """Centralizer order of a permutation with cycle type ``rho``."""
    return prod(i**k * factorial(k) for i, k in Counter(rho).items())


def hooks(lam: Iterable[int]) -> list[int]:
    """Hook lengths of every cell, row by row."""
    lam = tuple(lam)
    conj = conjugate(lam)
    return [lam[i] - j + conj[j] - i - 1 for i in range(len(lam)) for j in range(lam[i])]


def contents(lam: Iterable[int]) -> list[int]:
    return [j - i for i, row in enumerate(lam) for j in range(row)]


@lru_cache(maxsize=None)
def _dim(lam: tuple[int, ...]) -> int:
    return factorial(sum(lam)) // prod(hooks(lam))


def irrep_dimension_symmetric(lam: Iterable[int]) -> int:
    """Dimension of the Specht module, by the hook length formula."""
    return _dim(tuple(lam))


def rectangle(k: int, n: int) -> Partition:
    """The partition ``k^n`` (n parts equal to k)."""
    return Partition([k] * n)
