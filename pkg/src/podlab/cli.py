"""podlab command line: compute, coeffs, verify, factor.

Exit codes: 0 success (every selected check passed), 1 some check failed or
was skipped, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from . import pseries as ps
from . import qproducts as qp
from .congruences import REGISTRY, CheckParams, DEFAULT_INSTANCES, run_all, serialize
from .numthy import factorize
from .partitions import pod_series

PRECISION_ENV = "PODLAB_PRECISION"

SERIES = {
    "psi": qp.psi,
    "euler": qp.euler,
    "a3": qp.a3,
    "a5": qp.a5,
    "b5": qp.b5,
    "jacobi-cube": qp.jacobi_cube,
}


def _positive(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


def _nonnegative(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {v}")
    return v


def _modulus(text):
    v = _positive(text)
    if v < 2:
        raise argparse.ArgumentTypeError("modulus must be at least 2")
    return v


def _instance(text):
    try:
        p, m, r = (int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"instance must look like p,m,r; got {text!r}") from None
    return (p, m, r)


def _default_precision():
    env = os.environ.get(PRECISION_ENV)
    if env is None:
        return CheckParams().precision
    try:
        return int(env)
    except ValueError:
        return None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="podlab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    fmt = dict(choices=("text", "json", "csv"), default="text")

    p = sub.add_parser("compute", help="pod_{-k}(n) for n = 0..n_max")
    p.add_argument("--k", type=_positive, required=True)
    p.add_argument("--n-max", type=_nonnegative, required=True)
    p.add_argument("--mod", type=_modulus)
    p.add_argument("--format", **fmt)

    p = sub.add_parser("coeffs", help="dump the coefficients of a named series")
    p.add_argument("--series", required=True,
                   help=f"one of {', '.join(SERIES)}, or pod:K")
    p.add_argument("--n", type=_positive, required=True, help="precision")
    p.add_argument("--mod", type=_modulus)
    p.add_argument("--format", **fmt)

    p = sub.add_parser("verify", help="run registry checks")
    p.add_argument("--check", action="append", default=None,
                   help="check id (repeatable, comma separated) or 'all'")
    p.add_argument("--precision", type=_positive, default=None)
    p.add_argument("--alpha-max", type=_positive, default=CheckParams().alpha_max)
    p.add_argument("--range-cap", type=_positive, default=None)
    p.add_argument("--instance", type=_instance, action="append", default=None,
                   help="p,m,r triple for C13 (repeatable; replaces the defaults)")
    p.add_argument("--no-timing", action="store_true", help="omit elapsed_ms values")
    p.add_argument("--format", **fmt)

    p = sub.add_parser("factor", help="prime factorization")
    p.add_argument("n", type=int)
    return parser


def _write_rows(rows, header, fmt, out):
    if fmt == "json":
        json.dump([dict(zip(header, r)) for r in rows], out)
        out.write("\n")
    elif fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
    else:
        for r in rows:
            out.write(" ".join(str(x) for x in r) + "\n")


def cmd_compute(args, out) -> int:
    values = pod_series(args.k, args.n_max + 1).coeffs
    if args.mod:
        values = [v % args.mod for v in values]
    _write_rows(list(enumerate(values)), ("n", "pod"), args.format, out)
    return 0


def _named_series(name, N):
    if name.startswith("pod:"):
        k = int(name[4:])
        if k < 1:
            raise ValueError
        return pod_series(k, N)
    return SERIES[name](N)


def cmd_coeffs(args, out, parser) -> int:
    try:
        s = _named_series(args.series, args.n)
    except (KeyError, ValueError):
        parser.error(f"unknown series {args.series!r}; choose from {', '.join(SERIES)}, pod:K")
    if args.mod:
        s = ps.reduce(s, args.mod)
    if args.format == "text":
        out.write(ps.dumps(s))
    else:
        _write_rows(list(enumerate(s.coeffs)), ("exponent", "coeff"), args.format, out)
    return 0


def _selected_ids(raw, parser):
    valid = [c.id for c in REGISTRY]
    if not raw:
        return valid
    ids = [x.strip().upper() for item in raw for x in item.split(",") if x.strip()]
    if any(x == "ALL" for x in ids):
        return valid
    unknown = [x for x in ids if x not in valid]
    if unknown:
        parser.error(f"unknown check id(s) {', '.join(unknown)}; valid ids: {', '.join(valid)}")
    return sorted(set(ids), key=valid.index)


def cmd_verify(args, out, parser) -> int:
    ids = _selected_ids(args.check, parser)
    precision = args.precision
    if precision is None:
        precision = _default_precision()
        if precision is None:
            parser.error(f"{PRECISION_ENV} must be an integer")
    params = CheckParams(
        precision=precision,
        alpha_max=args.alpha_max,
        prime_instances=tuple(args.instance) if args.instance else DEFAULT_INSTANCES,
        range_cap=args.range_cap,
    )
    if params.problem():
        parser.error(params.problem())
    reports = run_all(params, ids)
    timing = not args.no_timing
    if args.format == "json":
        out.write(serialize(reports, timing) + "\n")
    elif args.format == "csv":
        rows = [(r.id, r.status, r.elapsed_ms if timing else "") for r in reports]
        _write_rows(rows, ("id", "status", "elapsed_ms"), "csv", out)
    else:
        for r in reports:
            line = f"{r.id:<4} {r.status:<7} {r.statement}"
            if timing:
                line += f"  ({r.elapsed_ms:.1f} ms)"
            out.write(line + "\n")
            if r.witness is not None:
                out.write(f"     witness: {json.dumps(r.witness, sort_keys=True)}\n")
        passed = sum(r.passed for r in reports)
        out.write(f"{passed}/{len(reports)} passed\n")
    return 0 if all(r.passed for r in reports) else 1


def cmd_factor(args, out, parser) -> int:
    if args.n < 1:
        parser.error(f"cannot factor {args.n}")
    out.write(str(factorize(args.n)) + "\n")
    return 0


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "compute":
            return cmd_compute(args, out)
        if args.command == "coeffs":
            return cmd_coeffs(args, out, parser)
        if args.command == "verify":
            return cmd_verify(args, out, parser)
        return cmd_factor(args, out, parser)
    except SystemExit as exc:
        return int(exc.code or 0)


def run(argv) -> tuple:
    """Invoke ``main`` and capture stdout; handy for tests and notebooks."""
    buf = io.StringIO()
    code = main(argv, buf)
    return code, buf.getvalue()
