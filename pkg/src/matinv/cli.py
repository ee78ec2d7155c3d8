"""Command-line front end: ``matinv <command> ...``.

Exit status is 0 on success, 1 when a computation contract fails, and 2 on
usage errors (bad flags, malformed partitions or tuple files).
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .bounds import bound_report, bounds_table, gamma_value, lower_bound_witness, universal_upper_bound
from .characters import CACHE_ENV
from .errors import (
    ConsistencyError,
    ContractError,
    InputFormatError,
    MatinvError,
    PartitionParseError,
    UnsupportedError,
)
from .graded import graded_dim
from .hilbert import HilbertReport, hilbert_numerator, unnormalized_series
from .invariants import MatrixTuple, f_stacked, fundamental_polynomial, invariance_check, null_cone_test_3
from .kronecker import isotypic_decomposition, kronecker_coefficient, kronecker_row
from .partitions import parse_partition

__all__ = ["main", "run", "render_json", "format_polynomial"]

SCHEMA_VERSION = 1


class UsageError(MatinvError):
    pass


def render_json(doc: dict) -> str:
    return json.dumps({"schema_version": SCHEMA_VERSION, **doc}, indent=2, sort_keys=True) + "\n"


def format_polynomial(coeffs, var: str = "t") -> str:
    """``[1, -1, 1]`` -> ``"1 - t + t^2"``."""
    out = []
    for i, c in enumerate(coeffs):
        if not c:
            continue
        mag = abs(c)
        if i == 0:
            body = str(mag)
        else:
            power = var if i == 1 else f"{var}^{i}"
            body = power if mag == 1 else f"{mag}{power}"
        if not out:
            out.append(body if c > 0 else f"-{body}")
        else:
            out.append(("+ " if c > 0 else "- ") + body)
    return " ".join(out) if out else "0"


def _partition_arg(text: str):
    try:
        return parse_partition(text)
    except PartitionParseError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _load_tuple(path: str) -> MatrixTuple:
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None
    except ValueError as exc:
        raise InputFormatError(f"{path}: not valid JSON: {exc}") from None
    return MatrixTuple.from_json(doc)


def _fmt_partition(p) -> list[int]:
    return list(p)


def _emit(args, doc: dict, text: str) -> None:
    sys.stdout.write(render_json(doc) if args.json else text.rstrip("\n") + "\n")


def cmd_dim(args) -> int:
    value = graded_dim(args.n, args.m, args.k, oracle=args.oracle, cache_dir=args.cache_dir)
    _emit(args, {"command": "dim", "n": args.n, "m": args.m, "k": args.k, "value": str(value)}, str(value))
    return 0


def cmd_isotypic(args) -> int:
    decomp = isotypic_decomposition(args.n, args.m, args.k, args.cache_dir)
    doc = {
        "command": "isotypic",
        "n": args.n,
        "m": args.m,
        "k": args.k,
        "components": [{"lambda": _fmt_partition(lam), "multiplicity": str(c)} for lam, c in decomp.items()],
    }
    _emit(args, doc, "\n".join(f"{lam}\t{c}" for lam, c in decomp.items()))
    return 0


def cmd_kronecker(args) -> int:
    value = kronecker_coefficient(args.lam, args.mu, args.nu, args.cache_dir)
    doc = {
        "command": "kronecker",
        "lambda": list(args.lam),
        "mu": list(args.mu),
        "nu": list(args.nu),
        "value": str(value),
    }
    _emit(args, doc, str(value))
    return 0


def cmd_kronecker_row(args) -> int:
    row = kronecker_row(args.lam, args.mu, args.cache_dir)
    doc = {
        "command": "kronecker-row",
        "lambda": list(args.lam),
        "mu": list(args.mu),
        "components": [{"nu": list(nu), "multiplicity": str(c)} for nu, c in row.items()],
    }
    _emit(args, doc, "\n".join(f"{nu}\t{c}" for nu, c in row.items()))
    return 0


def _hilbert_text(report: HilbertReport, unnormalized: bool, expansion) -> str:
    var = f"t^{report.n}" if unnormalized and report.n > 1 else "t"
    if unnormalized:
        numerator = [0] * (report.n * report.numerator_degree + 1)
        for i, c in enumerate(report.numerator):
            numerator[report.n * i] = c
        num_text = format_polynomial(numerator)
    else:
        num_text = format_polynomial(report.numerator)
    if report.assumed_palindrome:
        pal = "assumed"
    else:
        pal = "yes (verified)" if report.palindromic else "no"
    lines = [
        f"R({report.n},{report.m}): Krull dimension {report.krull}",
        f"numerator: {num_text}",
        f"denominator: (1-{var})^{report.krull}",
        f"palindromic: {pal}",
    ]
    if expansion is not None:
        lines.append("series: " + ", ".join(map(str, expansion)))
    return "\n".join(lines)


def cmd_hilbert(args) -> int:
    report = hilbert_numerator(args.n, args.m, args.assume_palindrome, cache_dir=args.cache_dir)
    expansion = None
    if args.expand is not None:
        if args.unnormalized:
            expansion = unnormalized_series(args.n, args.m, args.expand, cache_dir=args.cache_dir)
            renorm = report.expand(args.expand // args.n)
            if [expansion[d] for d in range(0, args.expand + 1, args.n)] != renorm:
                raise ConsistencyError("expansion of the numerator disagrees with the graded dimensions")
        else:
            expansion = report.expand(args.expand)
    doc = {
        "command": "hilbert",
        "n": report.n,
        "m": report.m,
        "krull": report.krull,
        "numerator": [str(c) for c in report.numerator],
        "numerator_degree": report.numerator_degree,
        "coefficients": [str(c) for c in report.coefficients],
        "palindromic": report.palindromic,
        "assumed_palindrome": report.assumed_palindrome,
        "vanishing_checked": report.vanishing_checked,
        "variable": f"t^{report.n}" if args.unnormalized else "t",
    }
    if expansion is not None:
        doc["expansion"] = [str(c) for c in expansion]
    _emit(args, doc, _hilbert_text(report, args.unnormalized, expansion))
    return 0


def _bound_doc(rep) -> dict:
    return {"m": rep.m, "value": rep.value, "source": rep.source, "set_a": rep.set_a, "set_b": rep.set_b, "generic": rep.generic}


def _bound_line(rep) -> str:
    extra = f"  (set A: {rep.set_a}, set B: {rep.set_b})" if rep.set_a is not None else ""
    return f"{rep.m}\t{rep.value}\t{rep.source}{extra}"


def cmd_bounds(args) -> int:
    if args.table:
        reps = bounds_table(args.n)
        doc = {
            "command": "bounds",
            "n": args.n,
            "table": [_bound_doc(r) for r in reps],
            "universal": universal_upper_bound(args.n),
        }
        text = "m\tbound\tsource\n" + "\n".join(_bound_line(r) for r in reps)
        text += f"\nall m\t{universal_upper_bound(args.n)}\tm = 9 entry (polarization)"
    else:
        rep = bound_report(args.n, args.m)
        doc = {"command": "bounds", "n": args.n, **_bound_doc(rep)}
        text = _bound_line(rep)
    _emit(args, doc, text)
    return 0


def cmd_gamma(args) -> int:
    value = gamma_value(args.n, args.m)
    inferred = args.m < 3
    doc = {"command": "gamma", "n": args.n, "m": args.m, "value": value, "inferred": inferred}
    _emit(args, doc, f"{value}" + ("  (inferred from the polynomial-ring structure)" if inferred else ""))
    return 0


def cmd_lower_bound(args) -> int:
    wit = lower_bound_witness(args.n, args.cache_dir)
    doc = {"command": "lower-bound", **wit.to_json()}
    lines = [f"a(k^{args.n}, k^{args.n}, 1^{args.n}k) for k={k}: {v}" for k, v in wit.kron_values.items()]
    lines.append(f"lower bound {wit.value}: {'verified' if wit.verified else 'NOT verified'}")
    _emit(args, doc, "\n".join(lines))
    return 0 if wit.verified else 1


def cmd_nullcone(args) -> int:
    verdict = null_cone_test_3(_load_tuple(args.input))
    doc = {"command": "nullcone", **verdict.to_json()}
    if verdict.in_null_cone:
        text = "in null cone"
    else:
        text = f"not in null cone; witness {verdict.witness} = {verdict.to_json()['value']}"
    _emit(args, doc, text)
    return 0


def cmd_invariant_f(args) -> int:
    value = f_stacked(_load_tuple(args.input))
    text = str(value)
    _emit(args, {"command": "invariant-f", "value": text}, text)
    return 0


def cmd_check_invariance(args) -> int:
    report = invariance_check(_load_tuple(args.input), args.trials, args.seed)
    doc = {"command": "check-invariance", "trials": args.trials, "seed": args.seed, **report.to_json()}
    names = sorted({name for name, _, _ in report.entries})
    lines = []
    for name in names:
        bad = [t for n_, t, ok in report.entries if n_ == name and not ok]
        lines.append(f"{name}\t{'pass' if not bad else 'FAIL at trials ' + ','.join(map(str, bad))}")
    lines.append("all invariants exact" if report.passed else "INVARIANCE FAILURE")
    _emit(args, doc, "\n".join(lines))
    return 0 if report.passed else 1


def cmd_fundamental(args) -> int:
    poly = fundamental_polynomial(_load_tuple(args.input))
    doc = {"command": "fundamental", **poly.to_json()}
    terms = poly.to_json()["terms"]
    text = "\n".join(f"{tuple(t['exponent'])}\t{t['coefficient']}" for t in terms) or "0"
    _emit(args, doc, text)
    return 0


def cmd_cache(args) -> int:
    directory = Path(args.dir)
    files = sorted(directory.glob("charrow-d*.json")) if directory.is_dir() else []
    if args.clear:
        for f in files:
            f.unlink()
        doc = {"command": "cache", "dir": str(directory), "removed": len(files)}
        text = f"removed {len(files)} cached rows from {directory}"
    else:
        degrees: dict[int, int] = {}
        for f in files:
            d = int(f.name.split("-")[1][1:])
            degrees[d] = degrees.get(d, 0) + 1
        size = sum(f.stat().st_size for f in files)
        doc = {
            "command": "cache",
            "dir": str(directory),
            "rows": len(files),
            "bytes": size,
            "rows_by_degree": {str(d): c for d, c in sorted(degrees.items())},
        }
        text = f"{len(files)} cached rows, {size} bytes in {directory}"
        if degrees:
            text += "\n" + "\n".join(f"d={d}\t{c}" for d, c in sorted(degrees.items()))
    _emit(args, doc, text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--cache-dir", default=None, help=f"character row cache (default: ${CACHE_ENV})")

    parser = argparse.ArgumentParser(prog="matinv", description="Semi-invariants of m-tuples of n x n matrices.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.set_defaults(func=func)
        return p

    p = add("dim", cmd_dim, "dimension of R(n,m) in degree k*n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--oracle", action="store_true", help="sum over the Kronecker square instead")

    p = add("isotypic", cmd_isotypic, "GL_m decomposition of R(n,m) in degree k*n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--k", type=int, required=True)

    p = add("kronecker", cmd_kronecker, "a single Kronecker coefficient")
    p.add_argument("--lambda", dest="lam", type=_partition_arg, required=True)
    p.add_argument("--mu", type=_partition_arg, required=True)
    p.add_argument("--nu", type=_partition_arg, required=True)

    p = add("kronecker-row", cmd_kronecker_row, "decompose a tensor product of two irreducibles")
    p.add_argument("--lambda", dest="lam", type=_partition_arg, required=True)
    p.add_argument("--mu", type=_partition_arg, required=True)

    p = add("hilbert", cmd_hilbert, "Hilbert series numerator of R(n,m)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--assume-palindrome", choices=["auto", "on", "off"], default="auto")
    p.add_argument("--expand", type=int, default=None, metavar="K", help="also print the series to degree K")
    p.add_argument("--unnormalized", action="store_true", help="use the ordinary grading (t -> t^n)")

    p = add("bounds", cmd_bounds, "upper bounds on generator degrees of R(3,m)")
    p.add_argument("--n", type=int, required=True)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--m", type=int)
    group.add_argument("--table", action="store_true")

    p = add("gamma", cmd_gamma, "degree needed to cut out the null cone of R(3,m)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)

    p = add("lower-bound", cmd_lower_bound, "verify the n^2 lower bound via Kronecker coefficients")
    p.add_argument("--n", type=int, required=True)

    for name, func, help_ in [
        ("nullcone", cmd_nullcone, "null-cone membership of a 3x3 tuple"),
        ("invariant-f", cmd_invariant_f, "the stacked-column determinant of an n^2-tuple"),
        ("fundamental", cmd_fundamental, "coefficients of det(t_1 X_1 + ... + t_m X_m)"),
        ("check-invariance", cmd_check_invariance, "exact SL x SL invariance test"),
    ]:
        p = add(name, func, help_)
        p.add_argument("--input", required=True, metavar="FILE")
        if name == "check-invariance":
            p.add_argument("--trials", type=int, default=5)
            p.add_argument("--seed", type=int, default=0)

    p = add("cache", cmd_cache, "inspect or clear a character cache directory")
    p.add_argument("--dir", required=True)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--stats", action="store_true")
    group.add_argument("--clear", action="store_true")
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s: %(message)s")
    try:
        return args.func(args)
    except (UsageError, PartitionParseError, InputFormatError, UnsupportedError) as exc:
        print(f"matinv {args.command}: {exc}", file=sys.stderr)
        return 2
    except (ContractError, ConsistencyError) as exc:
        print(f"matinv {args.command}: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())
