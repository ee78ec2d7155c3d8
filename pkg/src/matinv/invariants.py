"""Explicit semi-invariants of matrix tuples, evaluated exactly.

Everything here is rational arithmetic; invariance and vanishing are
equalities, never tolerances.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterator, Sequence

from .errors import ContractError, InputFormatError, UnsupportedError
from .linalg import Matrix, det, identity, inverse, matmul

__all__ = [
    "MatrixTuple",
    "PolynomialInT",
    "parse_rational",
    "fundamental_polynomial",
    "chi_det",
    "g_invariant",
    "f_stacked",
    "random_special_linear",
    "act",
    "invariant_values",
    "invariance_check",
    "InvarianceReport",
    "null_cone_test_3",
    "NullConeVerdict",
    "exponent_vectors",
]

_RATIONAL = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


def parse_rational(value, where: str = "value") -> Fraction:
    """Accept a JSON integer, a decimal-integer string, or a ``"p/q"`` string with q > 0."""
    if isinstance(value, bool):
        raise InputFormatError(f"{where}: booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, Fraction):
        return value
    if isinstance(value, str):
        match = _RATIONAL.match(value)
        if match:
            den = int(match.group(2)) if match.group(2) is not None else 1
            if den > 0:
                return Fraction(int(match.group(1)), den)
    raise InputFormatError(f"{where}: expected an integer or 'p/q' string, got {value!r}")


def _format_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class MatrixTuple:
    """``m`` exact ``n x n`` matrices ``(X_1, ..., X_m)``."""

    n: int
    m: int
    matrices: tuple

    def __post_init__(self) -> None:
        if self.n < 1 or self.m < 1:
            raise ContractError("n and m must be positive")
        if len(self.matrices) != self.m:
            raise ContractError(f"expected {self.m} matrices, got {len(self.matrices)}")
        for p, mat in enumerate(self.matrices):
            if len(mat) != self.n or any(len(row) != self.n for row in mat):
                raise ContractError(f"matrix {p} is not {self.n}x{self.n}")

    @classmethod
    def from_matrices(cls, matrices: Sequence[Sequence[Sequence]]) -> "MatrixTuple":
        mats = tuple(tuple(tuple(Fraction(x) for x in row) for row in mat) for mat in matrices)
        n = len(mats[0]) if mats else 0
        return cls(n, len(mats), mats)

    @classmethod
    def from_json(cls, doc) -> "MatrixTuple":
        if not isinstance(doc, dict):
            raise InputFormatError("top level: expected an object with n, m, matrices")
        for key in ("n", "m", "matrices"):
            if key not in doc:
                raise InputFormatError(f"missing field {key!r}")
        n, m, raw = doc["n"], doc["m"], doc["matrices"]
        if not isinstance(n, int) or isinstance(n, bool) or n < 1:
            raise InputFormatError(f"field 'n': expected a positive integer, got {n!r}")
        if not isinstance(m, int) or isinstance(m, bool) or m < 1:
            raise InputFormatError(f"field 'm': expected a positive integer, got {m!r}")
        if not isinstance(raw, list) or len(raw) != m:
            raise InputFormatError(f"field 'matrices': expected a list of {m} matrices")
        mats = []
        for p, mat in enumerate(raw):
            if not isinstance(mat, list) or len(mat) != n:
                raise InputFormatError(f"matrices[{p}]: expected {n} rows")
            rows = []
            for i, row in enumerate(mat):
                if not isinstance(row, list) or len(row) != n:
                    raise InputFormatError(f"matrices[{p}][{i}]: expected {n} entries")
                rows.append(tuple(parse_rational(x, f"matrices[{p}][{i}][{j}]") for j, x in enumerate(row)))
            mats.append(tuple(rows))
        return cls(n, m, tuple(mats))

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "matrices": [[[_format_rational(x) for x in row] for row in mat] for mat in self.matrices],
        }

    def __getitem__(self, p: int) -> Matrix:
        """1-based access returning a mutable copy, ``T[1]`` is ``X_1``."""
        return [list(row) for row in self.matrices[p - 1]]


def exponent_vectors(m: int, d: int) -> Iterator[tuple[int, ...]]:
    """All length-``m`` non-negative vectors summing to ``d``, lexicographically descending."""
    if m == 1:
        yield (d,)
        return
    for first in range(d, -1, -1):
        for rest in exponent_vectors(m - 1, d - first):
            yield (first,) + rest


@dataclass(frozen=True)
class PolynomialInT:
    """Homogeneous polynomial in ``t_1..t_m``: ``{exponent vector: coefficient}``, zeros omitted."""

    m: int
    degree: int
    coeffs: dict = field(default_factory=dict)

    def __post_init__(self) -> None:
        for exp, c in self.coeffs.items():
            if len(exp) != self.m or sum(exp) != self.degree:
                raise ContractError(f"exponent {exp} does not fit m={self.m}, degree={self.degree}")
            if not c:
                raise ContractError("zero coefficients must be omitted")

    def __getitem__(self, exp) -> Fraction:
        return self.coeffs.get(tuple(exp), Fraction(0))

    def is_zero(self) -> bool:
        return not self.coeffs

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "degree": self.degree,
            "terms": [
                {"exponent": list(e), "coefficient": _format_rational(self.coeffs[e])}
                for e in exponent_vectors(self.m, self.degree)
                if e in self.coeffs
            ],
        }


def _poly_mul(a: dict, b: dict) -> dict:
    out: dict = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            out[e] = out.get(e, 0) + ca * cb
    return {e: c for e, c in out.items() if c}


def fundamental_polynomial(tup: MatrixTuple) -> PolynomialInT:
    """``det(t_1 X_1 + ... + t_m X_m)`` expanded in the ``t_p``."""
    n, m = tup.n, tup.m
    units = [tuple(int(q == p) for q in range(m)) for p in range(m)]
    entry = [
        [{units[p]: tup.matrices[p][i][j] for p in range(m) if tup.matrices[p][i][j]} for j in range(n)]
        for i in range(n)
    ]
    # Expand row by row over column subsets; partial[cols] holds the signed
    # sum over injections of the first len(cols) rows onto cols.
    partial: dict[frozenset, dict] = {frozenset(): {(0,) * m: Fraction(1)}}
    for i in range(n):
        nxt: dict[frozenset, dict] = {}
        for cols, poly in partial.items():
            if not poly:
                continue
            for c in range(n):
                if c in cols or not entry[i][c]:
                    continue
                term = _poly_mul(poly, entry[i][c])
                if sum(1 for x in cols if x > c) % 2:
                    term = {e: -v for e, v in term.items()}
                key = cols | {c}
                acc = nxt.setdefault(key, {})
                for e, v in term.items():
                    acc[e] = acc.get(e, 0) + v
        partial = {k: {e: v for e, v in p.items() if v} for k, p in nxt.items()}
    coeffs = partial.get(frozenset(range(n)), {})
    return PolynomialInT(m, n, {e: Fraction(v) for e, v in coeffs.items() if v})


def chi_det(tup: MatrixTuple, k: int, t) -> Fraction:
    """Determinant of the ``kn x kn`` block matrix with block (i,j) = sum_p t[i][j][p] X_p."""
    if k < 1:
        raise ContractError("k must be positive")
    n, m = tup.n, tup.m
    big = [[Fraction(0)] * (k * n) for _ in range(k * n)]
    for bi in range(k):
        for bj in range(k):
            weights = [Fraction(x) for x in t[bi][bj]]
            if len(weights) != m:
                raise ContractError(f"t[{bi}][{bj}] must have {m} entries")
            for p, w in enumerate(weights):
                if not w:
                    continue
                mat = tup.matrices[p]
                for r in range(n):
                    row = big[bi * n + r]
                    for c in range(n):
                        row[bj * n + c] += w * mat[r][c]
    return det(big)


def _block_2x2(a, b, c, d) -> Matrix:
    top = [list(ra) + list(rb) for ra, rb in zip(a, b)]
    bottom = [list(rc) + list(rd) for rc, rd in zip(c, d)]
    return top + bottom


def g_invariant(tup: MatrixTuple, i: int, j: int, k: int) -> Fraction:
    """The degree 6 invariant det [[X_j, X_i], [X_i, X_k]] for 3x3 tuples, 1-based i < j < k."""
    if tup.n != 3:
        raise UnsupportedError("g_invariant is defined for 3x3 matrices only")
    if not 1 <= i < j < k <= tup.m:
        raise ContractError(f"need 1 <= i < j < k <= {tup.m}, got ({i}, {j}, {k})")
    X = tup.matrices
    return det(_block_2x2(X[j - 1], X[i - 1], X[i - 1], X[k - 1]))


def f_stacked(tup: MatrixTuple) -> Fraction:
    """Determinant of the n^2 x n^2 matrix whose p-th column is X_p stacked column by column."""
    n = tup.n
    if tup.m != n * n:
        raise ContractError(f"f_stacked needs m = n^2 = {n * n} matrices, got {tup.m}")
    columns = [[mat[r][c] for c in range(n) for r in range(n)] for mat in tup.matrices]
    return det([list(row) for row in zip(*columns)])


def random_special_linear(n: int, seed: int, length: int = 20) -> Matrix:
    """Product of ``length`` random transvections ``I + c E_ij`` with c in [-3, 3] \\ {0}."""
    if length < 0:
        raise ContractError("length must be non-negative")
    rng = random.Random(seed)
    mat = identity(n)
    if n < 2:
        return mat
    for _ in range(length):
        i, j = rng.sample(range(n), 2)
        c = rng.choice((-3, -2, -1, 1, 2, 3))
        # left-multiply by I + c E_ij: row i += c * row j
        mat[i] = [x + c * y for x, y in zip(mat[i], mat[j])]
    return mat


def act(tup: MatrixTuple, A, B) -> MatrixTuple:
    """``(A X_1 B^-1, ..., A X_m B^-1)``."""
    A = [[Fraction(x) for x in row] for row in A]
    B_inv = inverse(B)
    mats = tuple(
        tuple(tuple(row) for row in matmul(matmul(A, [list(r) for r in mat]), B_inv)) for mat in tup.matrices
    )
    return MatrixTuple(tup.n, tup.m, mats)


def invariant_values(tup: MatrixTuple) -> dict[str, Fraction]:
    """Every implemented invariant that applies to this shape of tuple, by name."""
    values: dict[str, Fraction] = {}
    poly = fundamental_polynomial(tup)
    for e in exponent_vectors(tup.m, tup.n):
        values["coeff" + str(e).replace(" ", "")] = poly[e]
    if tup.n == 3:
        for i, j, k in combinations(range(1, tup.m + 1), 3):
            values[f"g({i},{j},{k})"] = g_invariant(tup, i, j, k)
    if tup.m == tup.n * tup.n:
        values["f"] = f_stacked(tup)
    return values


@dataclass
class InvarianceReport:
    # (invariant name, trial index, passed)
    entries: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(ok for _, _, ok in self.entries)

    def failures(self) -> list:
        return [(name, trial) for name, trial, ok in self.entries if not ok]

    def to_json(self) -> dict:
        return {
            "passed": self.passed,
            "entries": [{"invariant": n, "trial": t, "passed": ok} for n, t, ok in self.entries],
        }


def invariance_check(tup: MatrixTuple, trials: int, seed: int, *, length: int = 20) -> InvarianceReport:
    """Compare every invariant on ``tup`` and on random SL x SL translates of it."""
    if trials < 1:
        raise ContractError("trials must be at least 1")
    rng = random.Random(seed)
    before = invariant_values(tup)
    report = InvarianceReport()
    for trial in range(trials):
        A = random_special_linear(tup.n, rng.randrange(2**32), length)
        B = random_special_linear(tup.n, rng.randrange(2**32), length)
        after = invariant_values(act(tup, A, B))
        for name, value in before.items():
            report.entries.append((name, trial, after[name] == value))
    return report


@dataclass(frozen=True)
class NullConeVerdict:
    in_null_cone: bool
    witness: str | None = None
    value: Fraction | None = None

    def to_json(self) -> dict:
        return {
            "in_null_cone": self.in_null_cone,
            "witness": self.witness,
            "value": None if self.value is None else _format_rational(self.value),
        }


def null_cone_test_3(tup: MatrixTuple) -> NullConeVerdict:
    """Null-cone membership for 3x3 tuples via all degree 3 coefficients and all g_{i,j,k}."""
    if tup.n != 3:
        raise UnsupportedError("null cone test is implemented for n = 3 only")
    poly = fundamental_polynomial(tup)
    for e in exponent_vectors(tup.m, 3):
        if poly[e]:
            return NullConeVerdict(False, "coeff" + str(e).replace(" ", ""), poly[e])
    for i, j, k in combinations(range(1, tup.m + 1), 3):
        value = g_invariant(tup, i, j, k)
        if value:
            return NullConeVerdict(False, f"g({i},{j},{k})", value)
    return NullConeVerdict(True)
