"""Irreducible characters of the symmetric groups.

Values come from the Murnaghan-Nakayama rule on the beta-set (abacus)
encoding of the shape: removing a border strip of length ``L`` is moving
one bead from position ``b`` to the free position ``b - L``, and the strip
height is the number of beads jumped over.  Sub-results are memoized on
``(shape, remaining cycle type)``; cycle parts are consumed largest first,
and once only fixed points remain the value is the hook-length dimension.

Whole rows can be written through to a directory of JSON files (one per
``(d, lambda)``) so long computations survive restarts.  The cache never
changes answers: anything unreadable is ignored and recomputed.
"""

from __future__ import annotations

import json
import logging
import os
from collections.abc import Mapping
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import factorial
from pathlib import Path
from typing import Iterable, Iterator

from .errors import ConsistencyError, ContractError
from .partitions import Partition, _dim, partitions_of, z_order

__all__ = [
    "ClassVector",
    "character_value",
    "character_row",
    "cache_path",
    "resolve_cache_dir",
    "clear_memo",
    "memo_size",
    "CACHE_VERSION",
    "CACHE_ENV",
]

log = logging.getLogger(__name__)

CACHE_VERSION = 1
CACHE_ENV = "MATINV_CACHE"

# Private to this process; worker processes each get their own copy.
_memo: dict[tuple[tuple[int, ...], tuple[int, ...]], int] = {}


def clear_memo() -> None:
    _memo.clear()


def memo_size() -> int:
    return len(_memo)


def _mn(shape: tuple[int, ...], rho: tuple[int, ...]) -> int:
    if not shape:
        return 1
    strip = rho[0]
    if strip == 1:
        return _dim(shape)
    if len(shape) == 1:
        return 1
    if shape[0] == 1:
        # sign character
        return -1 if (len(shape) - len(rho)) % 2 else 1
    key = (shape, rho)
    hit = _memo.get(key)
    if hit is not None:
        return hit

    rest = rho[1:]
    ell = len(shape)
    beta = [shape[i] + ell - 1 - i for i in range(ell)]
    occupied = set(beta)
    total = 0
    for idx, b in enumerate(beta):
        target = b - strip
        if target < 0:
            break  # beta is decreasing, later beads are lower still
        if target in occupied:
            continue
        height = 0
        j = idx + 1
        while j < ell and beta[j] > target:
            height += 1
            j += 1
        # bead moves from slot idx to slot j-1 in decreasing order
        moved = beta[:idx] + beta[idx + 1 : j] + [target] + beta[j:]
        sub = tuple(v for v in (moved[i] - (ell - 1 - i) for i in range(ell)) if v)
        value = _mn(sub, rest)
        total += -value if height & 1 else value
    _memo[key] = total
    return total


def character_value(lam: Iterable[int], rho: Iterable[int]) -> int:
    """The character of the irreducible ``lam`` on the class of cycle type ``rho``."""
    lam = Partition(lam)
    rho = Partition(rho)
    if lam.size != rho.size:
        raise ContractError(f"size mismatch: |{lam}| = {lam.size} but |{rho}| = {rho.size}")
    return _mn(tuple(lam), tuple(rho))


@dataclass(frozen=True)
class ClassVector(Mapping):
    """Exact integer values on the conjugacy classes of S_d.

    Iteration follows ``partitions_of(degree)``.  ``label`` is the indexing
    irreducible when the vector is a character row, else ``None``.
    """

    degree: int
    values: dict = field(repr=False)
    label: Partition | None = None

    def __post_init__(self) -> None:
        if set(self.values) != set(partitions_of(self.degree)):
            raise ContractError(f"class vector keys are not exactly the partitions of {self.degree}")

    def __getitem__(self, rho) -> int:
        return self.values[tuple(rho)]

    def __iter__(self) -> Iterator[Partition]:
        return iter(partitions_of(self.degree))

    def __len__(self) -> int:
        return len(self.values)

    def __mul__(self, other: "ClassVector") -> "ClassVector":
        if other.degree != self.degree:
            raise ContractError("class vectors of different degree")
        return ClassVector(self.degree, {rho: v * other.values[rho] for rho, v in self.values.items()})

    def inner(self, other: "ClassVector") -> int:
        """Class-weighted sum  sum_rho self*other*(d!/z_rho)  -- i.e. d! times the inner product."""
        df = factorial(self.degree)
        return sum(v * other.values[rho] * (df // z_order(rho)) for rho, v in self.values.items())


def resolve_cache_dir(cache_dir: str | os.PathLike | None = None) -> Path | None:
    """Explicit argument first, then ``$MATINV_CACHE``; ``None`` disables caching."""
    if cache_dir is not None:
        return Path(cache_dir)
    env = os.environ.get(CACHE_ENV)
    return Path(env) if env else None


def cache_path(cache_dir: str | os.PathLike, lam: Iterable[int]) -> Path:
    lam = Partition(lam)
    return Path(cache_dir) / f"charrow-d{lam.size}-{'_'.join(map(str, lam))}.json"


def _load_row(path: Path, lam: Partition) -> dict | None:
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except FileNotFoundError:
        return None
    except (OSError, ValueError) as exc:
        log.warning("ignoring unreadable cache file %s: %s", path, exc)
        return None
    try:
        if doc["version"] != CACHE_VERSION:
            log.warning("ignoring cache file %s with version %r", path, doc["version"])
            return None
        if list(doc["lambda"]) != list(lam):
            raise ValueError("lambda mismatch")
        values = {tuple(int(x) for x in e["rho"]): int(e["value"]) for e in doc["entries"]}
        if set(values) != set(partitions_of(lam.size)):
            raise ValueError("incomplete class list")
    except (KeyError, TypeError, ValueError) as exc:
        log.warning("ignoring corrupt cache file %s: %s", path, exc)
        return None
    return values


def _store_row(path: Path, lam: Partition, values: dict) -> None:
    doc = {
        "version": CACHE_VERSION,
        "lambda": list(lam),
        "entries": [{"rho": list(rho), "value": str(values[rho])} for rho in partitions_of(lam.size)],
    }
    tmp = path.with_name(path.name + f".tmp{os.getpid()}")
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(tmp, "w", encoding="utf-8") as fh:
            json.dump(doc, fh)
        os.replace(tmp, path)
    except OSError as exc:
        log.warning("could not write cache file %s: %s", path, exc)
        try:
            tmp.unlink()
        except OSError:
            pass


def _row_chunk(args: tuple[tuple[int, ...], list[tuple[int, ...]]]) -> list[int]:
    shape, classes = args
    return [_mn(shape, rho) for rho in classes]


def _compute_row(lam: Partition, workers: int) -> dict:
    classes = [tuple(rho) for rho in partitions_of(lam.size)]
    shape = tuple(lam)
    if workers <= 1 or len(classes) < 64:
        return {rho: _mn(shape, rho) for rho in classes}
    # Strided chunks balance cheap and expensive classes; merge order is fixed.
    chunks = [classes[i::workers] for i in range(workers)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        results = list(pool.map(_row_chunk, [(shape, c) for c in chunks]))
    out: dict = {}
    for chunk, vals in zip(chunks, results):
        out.update(zip(chunk, vals))
    return {rho: out[rho] for rho in classes}


def character_row(
    lam: Iterable[int],
    cache_dir: str | os.PathLike | None = None,
    *,
    use_cache: bool = True,
    workers: int = 1,
) -> ClassVector:
    """The full character of ``lam`` as a class vector.

    With ``use_cache`` the row is read from / written to the directory given by
    ``cache_dir`` or ``$MATINV_CACHE`` (no directory: memory only).
    """
    lam = Partition(lam)
    directory = resolve_cache_dir(cache_dir) if use_cache else None
    values = None
    path = None
    if directory is not None:
        path = cache_path(directory, lam)
        values = _load_row(path, lam)
        if values is not None and values[(1,) * lam.size] != _dim(tuple(lam)):
            log.warning("ignoring cache file %s: identity value is wrong", path)
            values = None
    if values is None:
        values = _compute_row(lam, workers)
        if path is not None:
            _store_row(path, lam, values)
    identity = (1,) * lam.size
    if values[identity] != _dim(tuple(lam)):
        raise ConsistencyError(f"character of {lam} at the identity is not the hook-length dimension")
    return ClassVector(lam.size, values, label=lam)
