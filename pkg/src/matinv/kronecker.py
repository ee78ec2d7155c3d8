"""Kronecker coefficients of the symmetric groups.

``a(lam, mu, nu)`` is the class-weighted triple inner product of
characters.  Sums are accumulated as integers scaled by ``d!`` (each class
contributes ``d!/z_rho`` times the product) and divided once at the end.
"""

from __future__ import annotations

from math import factorial
from typing import Iterable

from .characters import ClassVector, character_row
from .errors import ConsistencyError, ContractError
from .partitions import Partition, partitions_of, rectangle, z_order

__all__ = ["kronecker_coefficient", "kronecker_row", "isotypic_decomposition"]


def _project(product: ClassVector, chi: ClassVector, weights: dict, df: int) -> int:
    total = sum(v * chi.values[rho] * weights[rho] for rho, v in product.values.items())
    coeff, rem = divmod(total, df)
    if rem or coeff < 0:
        raise ConsistencyError(f"multiplicity of {chi.label} is {total}/{df}, not a non-negative integer")
    return coeff


def _class_weights(d: int) -> dict:
    df = factorial(d)
    return {rho: df // z_order(rho) for rho in partitions_of(d)}


def _check_sizes(*parts: Partition) -> int:
    sizes = {p.size for p in parts}
    if len(sizes) != 1:
        raise ContractError("partitions must all have the same size: " + ", ".join(f"{p}" for p in parts))
    return sizes.pop()


def kronecker_coefficient(
    lam: Iterable[int], mu: Iterable[int], nu: Iterable[int], cache_dir=None
) -> int:
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    d = _check_sizes(lam, mu, nu)
    product = character_row(lam, cache_dir) * character_row(mu, cache_dir)
    return _project(product, character_row(nu, cache_dir), _class_weights(d), factorial(d))


def kronecker_row(lam: Iterable[int], mu: Iterable[int], cache_dir=None) -> dict[Partition, int]:
    """Decomposition of the tensor product of two irreducibles: ``{nu: a(lam, mu, nu)}``.

    Zero multiplicities are omitted; keys follow ``partitions_of`` order.
    """
    lam, mu = Partition(lam), Partition(mu)
    d = _check_sizes(lam, mu)
    product = character_row(lam, cache_dir) * character_row(mu, cache_dir)
    weights = _class_weights(d)
    df = factorial(d)
    row = {}
    for nu in partitions_of(d):
        coeff = _project(product, character_row(nu, cache_dir), weights, df)
        if coeff:
            row[nu] = coeff
    identity = (1,) * d
    if sum(c * character_row(nu, cache_dir).values[identity] for nu, c in row.items()) != product.values[identity]:
        raise ConsistencyError(f"dimensions do not add up in the decomposition of {lam} x {mu}")
    return row


def isotypic_decomposition(n: int, m: int, k: int, cache_dir=None) -> dict[Partition, int]:
    """GL_m-isotypic content of the degree ``k*n`` invariants: ``{lam: multiplicity}``.

    Only shapes with at most ``m`` rows survive, since ``S_lam(C^m)`` vanishes otherwise.
    """
    if n < 1 or m < 1 or k < 1:
        raise ContractError("n, m, k must be positive")
    rect = rectangle(k, n)
    return {lam: c for lam, c in kronecker_row(rect, rect, cache_dir).items() if len(lam) <= m}
