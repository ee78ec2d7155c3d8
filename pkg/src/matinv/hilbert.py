"""Renormalized Hilbert series of R(n,m) over the universal denominator.

For m >= 3, n >= 2 the series  sum_k dim R(n,m)_{kn} t^k  equals
P(t) / (1-t)^r  with r the Krull dimension and P an integer polynomial of
degree r - n*m.  P is recovered by multiplying the first few graded
dimensions by (1-t)^r.  The m <= 2 and n = 1 rings are polynomial rings
and are handled in closed form.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from math import comb
from typing import Sequence

from .errors import ConsistencyError, ContractError
from .graded import graded_dim

__all__ = [
    "HilbertReport",
    "krull_dim",
    "numerator_degree",
    "hilbert_numerator",
    "series_expand",
    "unnormalized_series",
    "expand_rational",
    "PALINDROME_AUTO_LIMIT",
]

# "auto" verifies every coefficient up to this numerator degree and
# assumes palindromy above it.
PALINDROME_AUTO_LIMIT = 14


def krull_dim(n: int, m: int) -> int:
    if n < 1 or m < 1:
        raise ContractError("n and m must be positive")
    if n == 1:
        return m
    if m == 1:
        return 1
    if m == 2:
        return n + 1
    return m * n * n - 2 * (n * n - 1)


def _is_polynomial_ring(n: int, m: int) -> bool:
    return n == 1 or m <= 2


def numerator_degree(n: int, m: int) -> int:
    if _is_polynomial_ring(n, m):
        return 0
    return krull_dim(n, m) - n * m


def _times_one_minus_t_power(coeffs: Sequence[int], r: int, upto: int) -> list[int]:
    """Coefficients 0..upto of  (sum coeffs[k] t^k) * (1-t)^r."""
    binom = [(-1) ** j * comb(r, j) for j in range(min(r, upto) + 1)]
    return [sum(binom[j] * coeffs[i - j] for j in range(min(i, r) + 1)) for i in range(upto + 1)]


def expand_rational(numerator: Sequence[int], r: int, K: int) -> list[int]:
    """Coefficients 0..K of  numerator(t) / (1-t)^r."""
    # 1/(1-t)^r = sum_j C(j+r-1, r-1) t^j
    series = [comb(j + r - 1, j) for j in range(K + 1)]
    return [
        sum(numerator[i] * series[k - i] for i in range(min(k, len(numerator) - 1) + 1))
        for k in range(K + 1)
    ]


@dataclass
class HilbertReport:
    n: int
    m: int
    krull: int
    numerator: list[int]
    numerator_degree: int
    coefficients: list[int] = field(default_factory=list)
    palindromic: bool = True
    assumed_palindrome: bool = False
    # how many graded pieces past the numerator degree were checked to vanish in P
    vanishing_checked: int = 0

    def __post_init__(self) -> None:
        if len(self.numerator) != self.numerator_degree + 1:
            raise ConsistencyError("numerator length does not match its degree")
        if self.numerator[0] != 1:
            raise ConsistencyError("constant term of the numerator must be 1")

    def expand(self, K: int) -> list[int]:
        return expand_rational(self.numerator, self.krull, K)

    def value_at_one(self) -> int:
        return sum(self.numerator)

    def to_dict(self) -> dict:
        return asdict(self)


def _resolve_assumption(flag, D: int) -> bool:
    if flag in (None, "auto"):
        return D > PALINDROME_AUTO_LIMIT
    if flag in ("on", True):
        return True
    if flag in ("off", False):
        return False
    raise ContractError(f"assume_palindrome must be auto/on/off, got {flag!r}")


def hilbert_numerator(
    n: int,
    m: int,
    assume_palindrome: bool | str | None = None,
    *,
    extra_check: int = 1,
    cache_dir=None,
    workers: int = 1,
) -> HilbertReport:
    """Numerator of the renormalized Hilbert series of R(n,m).

    ``assume_palindrome`` is ``"auto"``/``None`` (assume only when the
    numerator degree exceeds ``PALINDROME_AUTO_LIMIT``), ``"on"``/``True``
    or ``"off"``/``False``.  When not assuming, ``extra_check`` further
    graded pieces are computed and the numerator coefficients they would
    produce beyond its predicted degree must vanish.
    """
    r = krull_dim(n, m)
    if _is_polynomial_ring(n, m):
        return HilbertReport(n, m, r, [1], 0, coefficients=[1])
    D = numerator_degree(n, m)
    if D < 0:
        raise ConsistencyError(f"negative numerator degree for (n,m)=({n},{m})")
    assume = _resolve_assumption(assume_palindrome, D)

    if assume:
        half = -(-D // 2)
        coeffs = [graded_dim(n, m, k, cache_dir=cache_dir, workers=workers) for k in range(half + 1)]
        low = _times_one_minus_t_power(coeffs, r, half)
        numerator = [low[i] if i <= half else low[D - i] for i in range(D + 1)]
        if numerator[: half + 1] != low:
            raise ConsistencyError(f"lower half of the numerator of R({n},{m}) is not self-consistent")
        return HilbertReport(
            n, m, r, numerator, D, coefficients=coeffs, palindromic=True, assumed_palindrome=True
        )

    top = D + max(extra_check, 0)
    coeffs = [graded_dim(n, m, k, cache_dir=cache_dir, workers=workers) for k in range(top + 1)]
    product = _times_one_minus_t_power(coeffs, r, top)
    numerator, beyond = product[: D + 1], product[D + 1 :]
    if any(beyond):
        raise ConsistencyError(
            f"R({n},{m}): numerator has nonzero coefficients {beyond} beyond predicted degree {D}"
        )
    return HilbertReport(
        n,
        m,
        r,
        numerator,
        D,
        coefficients=coeffs,
        palindromic=numerator == numerator[::-1],
        assumed_palindrome=False,
        vanishing_checked=len(beyond),
    )


def series_expand(n: int, m: int, K: int, *, report: HilbertReport | None = None, cache_dir=None) -> list[int]:
    """``[dim R(n,m)_{kn} for k = 0..K]``.

    When ``report`` is given, its rational expansion must agree.
    """
    if K < 0:
        raise ContractError("K must be non-negative")
    if _is_polynomial_ring(n, m):
        # polynomial ring on krull_dim generators of renormalized degree 1
        r = krull_dim(n, m)
        dims = [comb(k + r - 1, k) for k in range(K + 1)]
    else:
        dims = [graded_dim(n, m, k, cache_dir=cache_dir) for k in range(K + 1)]
    if report is not None and report.expand(K) != dims:
        raise ConsistencyError(f"series of R({n},{m}) disagrees with its rational form")
    return dims


def unnormalized_series(n: int, m: int, D: int, *, cache_dir=None) -> list[int]:
    """Ordinary Hilbert series coefficients in degrees 0..D (zero off multiples of n)."""
    if D < 0:
        raise ContractError("D must be non-negative")
    renorm = series_expand(n, m, D // n, cache_dir=cache_dir)
    return [renorm[d // n] if d % n == 0 else 0 for d in range(D + 1)]
