"""Degree bounds for generators of R(3,m) and the null-cone degree constant.

Upper bounds apply  beta <= max(max d_i, sum d_i - l - 2n^2 + 2)  to two
families of invariants cutting out the null cone of R(3,m):

* set A: the degree 3 invariants (as many as the Krull dimension,
  9m - 16) together with the C(m,3) degree 6 invariants g_{i,j,k};
* set B: a homogeneous system of parameters of 9m - 16 degree 6 invariants.

For m <= 3 the sharp values known in the literature are reported instead.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from math import comb

from .errors import ContractError, UnsupportedError
from .kronecker import kronecker_coefficient
from .partitions import Partition, rectangle

__all__ = [
    "gamma_value",
    "BoundReport",
    "bound_report",
    "upper_bound",
    "bounds_table",
    "universal_upper_bound",
    "lower_bound_witness",
    "LowerBoundWitness",
    "GENERAL_BOUND_NOTE",
]

log = logging.getLogger(__name__)

# sharp values for m = 1, 2, 3 (R(3,1), R(3,2) polynomial rings on degree 3 generators; beta(R(3,3)) = 9)
_KNOWN = {1: 3, 2: 3, 3: 9}

GENERAL_BOUND_NOTE = (
    "No tabulated bound for n != 3.  For general n the known upper bound is "
    "O(n^4 ((n+1)!)^2) (Ivanyos-Qiao-Subrahmanyam); beta_U(2) = 4 is known exactly."
)


def _require_three(n: int) -> None:
    if n != 3:
        raise UnsupportedError(GENERAL_BOUND_NOTE)


def gamma_value(n: int, m: int) -> int:
    """Smallest d such that invariants of degree <= d cut out the null cone of R(3,m).

    The value 3 for m <= 2 is inferred from R(3,1), R(3,2) being generated in degree 3.
    """
    _require_three(n)
    if m < 1:
        raise ContractError("m must be positive")
    return 6 if m >= 3 else 3


def _apply(degrees: list[tuple[int, int]], n: int) -> int:
    """The bound for invariants given as (degree, count) pairs."""
    count = sum(c for _, c in degrees)
    total = sum(d * c for d, c in degrees)
    return max(max(d for d, c in degrees if c), total - count - 2 * n * n + 2)


@dataclass(frozen=True)
class BoundReport:
    m: int
    value: int
    source: str  # "literature", "A" or "B"
    set_a: int | None
    set_b: int | None

    @property
    def generic(self) -> int | None:
        """What the degree formula alone gives, even where a sharper value is known."""
        if self.set_a is None:
            return None
        return min(self.set_a, self.set_b)


def bound_report(n: int, m: int) -> BoundReport:
    _require_three(n)
    if m < 1:
        raise ContractError("m must be positive")
    if m > 9:
        raise ContractError(f"m = {m} > 9: use universal_upper_bound(3), which covers every m")
    if m <= 2:
        return BoundReport(m, _KNOWN[m], "literature", None, None)
    krull = 9 * m - 16
    set_a = _apply([(3, krull), (6, comb(m, 3))], n)
    set_b = _apply([(6, krull)], n)
    if m in _KNOWN:
        return BoundReport(m, _KNOWN[m], "literature", set_a, set_b)
    if set_a <= set_b:
        return BoundReport(m, set_a, "A", set_a, set_b)
    return BoundReport(m, set_b, "B", set_a, set_b)


def upper_bound(n: int, m: int) -> int:
    return bound_report(n, m).value


def bounds_table(n: int = 3) -> list[BoundReport]:
    return [bound_report(n, m) for m in range(1, 10)]


def universal_upper_bound(n: int) -> int:
    """A degree bound for R(3,m) valid for every m.

    By Weyl's theorem on polarization, beta(R(n,m)) <= beta(R(n,n^2)), so the
    m = 9 entry bounds all m.  Known context: beta_U(2) = 4 and beta(R(3,3)) = 9.
    """
    _require_three(n)
    return upper_bound(3, 9)


@dataclass(frozen=True)
class LowerBoundWitness:
    n: int
    verified: bool
    value: int
    kron_values: dict

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "verified": self.verified,
            "value": self.value,
            "kron_values": {str(k): v for k, v in self.kron_values.items()},
        }


def lower_bound_witness(n: int, cache_dir=None) -> LowerBoundWitness:
    """Check that the sign representation first shows up in degree n^2.

    Computes a(k^n, k^n, 1^{kn}) for k = 1..n; the pattern 0, ..., 0, 1 forces
    beta(R(n,m)) >= n^2 whenever m >= n^2.
    """
    if n < 2:
        raise ContractError("n must be at least 2")
    if n > 3:
        log.warning("lower_bound_witness(%d) needs characters of S_%d; this may be slow", n, n * n)
    values = {}
    for k in range(1, n + 1):
        rect = rectangle(k, n)
        values[k] = kronecker_coefficient(rect, rect, Partition([1] * (k * n)), cache_dir)
    expected = {k: int(k == n) for k in range(1, n + 1)}
    return LowerBoundWitness(n, values == expected, n * n, values)
