"""Dimensions of the graded pieces of the invariant ring.

Two independent routes to ``dim R(n,m)_{kn}``:

* ``graded_dim_oracle`` sums Schur-functor dimensions over the Kronecker
  square of the rectangle ``k^n`` (needs every character row of S_{kn});
* ``graded_dim_fast`` uses the power-sum expansion of the same symmetric
  function, evaluated at ``m`` ones::

      dim = (1/d!) * sum_rho (d!/z_rho) * chi_{k^n}(rho)^2 * m^len(rho)

  which needs the single row ``chi_{k^n}``.
"""

from __future__ import annotations

import logging
from math import factorial, prod
from typing import Iterable

from .characters import character_row
from .errors import ConsistencyError, ContractError
from .kronecker import isotypic_decomposition
from .partitions import Partition, contents, hooks, rectangle, z_order

__all__ = ["schur_dim", "graded_dim_oracle", "graded_dim_fast", "graded_dim"]

log = logging.getLogger(__name__)

ORACLE_SOFT_LIMIT = 14


def schur_dim(lam: Iterable[int], m: int) -> int:
    """Dimension of ``S_lam(C^m)`` by the hook-content formula."""
    lam = Partition(lam)
    if m < 0:
        raise ContractError("m must be non-negative")
    if len(lam) > m:
        return 0
    num = prod(m + c for c in contents(lam))
    den = prod(hooks(lam))
    q, r = divmod(num, den)
    if r:
        raise ConsistencyError(f"hook-content quotient for {lam} at m={m} is not integral")
    return q


def _check(n: int, m: int, k: int) -> None:
    if n < 1 or m < 1 or k < 0:
        raise ContractError(f"need n, m >= 1 and k >= 0, got n={n}, m={m}, k={k}")


def graded_dim_oracle(n: int, m: int, k: int, cache_dir=None) -> int:
    _check(n, m, k)
    if k == 0:
        return 1
    if k * n > ORACLE_SOFT_LIMIT:
        log.warning("oracle path at degree %d needs every character row of S_%d; this is slow", k * n, k * n)
    return sum(c * schur_dim(lam, m) for lam, c in isotypic_decomposition(n, m, k, cache_dir).items())


def graded_dim_fast(n: int, m: int, k: int, cache_dir=None, *, workers: int = 1) -> int:
    _check(n, m, k)
    if k == 0:
        return 1
    d = k * n
    df = factorial(d)
    chi = character_row(rectangle(k, n), cache_dir, workers=workers)
    total = 0
    for rho, v in chi.values.items():
        if v:
            total += v * v * m ** len(rho) * (df // z_order(rho))
    q, r = divmod(total, df)
    if r:
        raise ConsistencyError(f"power-sum accumulation for (n,m,k)=({n},{m},{k}) is not integral")
    return q


def graded_dim(n: int, m: int, k: int, *, oracle: bool = False, cache_dir=None, workers: int = 1) -> int:
    """``dim R(n,m)_{kn}``; the power-sum path unless ``oracle`` is set."""
    if oracle:
        return graded_dim_oracle(n, m, k, cache_dir)
    return graded_dim_fast(n, m, k, cache_dir, workers=workers)
