"""Command-line surface: deterministic CSV/JSON table and report emitters.

Exit codes: 0 success, 2 invalid configuration, 3 computation error,
4 resource cap exceeded.  Exact rationals are always serialized as
"p/q" strings (or a bare integer); floats appear only in root-tracking
output and are printed with 20 significant digits alongside the
precision used.
"""

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction

import mpmath as mp

from . import subdivision
from .errors import InvalidConfig, PosetZetaError, ResourceCapExceeded
from .poset import (
    barycentric_subdivision,
    load_poset,
    poset_to_dict,
)
from .primes import (
    alpha_record,
    chi_Pn,
    dim_asymptotic_report,
    dim_Pn,
    mertens,
    pi_weight,
    top_chain_count,
)
from .roots import find_roots, theorem_report
from .subdivision import (
    H_vector,
    big_F_number,
    f_number,
)
from .zeta import zeta_rational

DEFAULT_SEED = 20240823
FLOAT_DIGITS = 20


def fmt_rational(x):
    if x is None:
        return "NA"
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(s):
    if s == "NA":
        return None
    return Fraction(s)


def fmt_float(x):
    return mp.nstr(mp.mpf(x), FLOAT_DIGITS, strip_zeros=False)


def _emit(header, rows, fmt, out):
    if fmt == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
    else:
        doc = [dict(zip(header, row)) for row in rows]
        json.dump(doc, out, indent=2)
        out.write("\n")


def _cmd_tables(args, out):
    cache_dir = os.environ.get("POSET_ZETA_CACHE")
    if cache_dir:
        subdivision.load_memo_cache(cache_dir)
    kind = args.kind
    rows = []
    if kind == "f":
        for i in range(args.dmax + 1):
            for d in range(args.dmax + 1):
                rows.append([i, d, fmt_rational(f_number(i, d))])
    elif kind == "F":
        for d in range(args.dmax + 1):
            for i in range(d + 1):
                rows.append([i, d, fmt_rational(big_F_number(i, d))])
    else:  # H
        for d in range(args.dmax + 1):
            hv = H_vector(d)
            for i in range(d + 2):
                rows.append([i, d, fmt_rational(hv[i])])
    if cache_dir:
        subdivision.save_memo_cache(cache_dir)
    _emit(["i", "d", "value"], rows, args.format, out)


def _cmd_zeta(args, out):
    p = load_poset(args.input)
    z = zeta_rational(p)
    num = [fmt_rational(c) for c in z.numerator.coeffs]
    den = [fmt_rational(c) for c in z.denominator.coeffs]
    if args.format == "json":
        json.dump({"numerator": num, "denominator": den}, out, indent=2)
        out.write("\n")
        return
    rows = [["numerator", e, c] for e, c in enumerate(num)]
    rows += [["denominator", e, c] for e, c in enumerate(den)]
    _emit(["part", "exponent", "coefficient"], rows, "csv", out)


def _cmd_subdivide(args, out):
    p = load_poset(args.input)
    for _ in range(args.times):
        p = barycentric_subdivision(p, cap=args.cap)
    doc = poset_to_dict(p)
    if args.format == "json":
        json.dump(doc, out, indent=2)
        out.write("\n")
        return
    rows = [["element", lab, ""] for lab in doc["elements"]]
    rows += [["relation", a, b] for a, b in doc["relations"]]
    _emit(["kind", "a", "b"], rows, "csv", out)


def _trajectory_rows(report):
    rows = []
    for rec in report.records:
        rows.append(
            [
                rec.k,
                fmt_float(mp.re(rec.beta1)),
                fmt_float(mp.im(rec.beta1)),
                fmt_float(rec.beta1_abs),
                fmt_float(rec.es_ratio),
                fmt_float(mp.re(rec.product_of_others)),
                fmt_float(mp.im(rec.product_of_others)),
                fmt_float(
                    max(rec.matched_distances) if rec.matched_distances else 0
                ),
                report.precision_bits,
            ]
        )
    return rows


_TRAJECTORY_HEADER = [
    "k",
    "beta1_re",
    "beta1_im",
    "beta1_abs",
    "es_ratio",
    "product_re",
    "product_im",
    "max_match_distance",
    "precision_bits",
]


def _cmd_zeros(args, out):
    p = load_poset(args.input)
    report = theorem_report(p, args.kmax, args.precision_bits)
    _emit(_TRAJECTORY_HEADER, _trajectory_rows(report), args.format, out)


def _cmd_theorem_check(args, out):
    p = load_poset(args.input)
    report = theorem_report(p, args.kmax, args.precision_bits)
    rows = _trajectory_rows(report)
    if args.format == "json":
        doc = {
            "rows": [dict(zip(_TRAJECTORY_HEADER, row)) for row in rows],
            "burn_in_k0": report.burn_in_k0,
            "beta1_real_from_k0": report.beta1_real_from_k0,
            "modulus_increasing_from_k0": report.modulus_increasing_from_k0,
            "es_ratio_final": fmt_float(report.es_ratio_final),
            "max_match_distance_final": fmt_float(
                report.max_match_distance_final
            ),
        }
        json.dump(doc, out, indent=2)
        out.write("\n")
        return
    _emit(_TRAJECTORY_HEADER, rows, "csv", out)


def _parse_range(text):
    try:
        lo, hi = text.split(":")
        lo, hi = int(lo), int(hi)
    except ValueError:
        raise InvalidConfig(f"bad range {text!r}, expected lo:hi") from None
    if lo > hi or lo < 2:
        raise InvalidConfig(f"bad range {text!r}")
    return lo, hi


def _cmd_pn(args, out):
    lo, hi = _parse_range(args.range)
    rows = []
    if args.pn_command == "chi":
        for n in range(lo, hi + 1):
            rows.append([n, chi_Pn(n, "sieve")])
        _emit(["n", "chi"], rows, args.format, out)
        return
    for n in range(lo, hi + 1):
        if n < 6:
            d = dim_Pn(n)
            rows.append(
                [
                    n,
                    chi_Pn(n, "sieve"),
                    mertens(n),
                    d,
                    top_chain_count(n, d),
                    fmt_rational(H_vector(d)[1]) if d >= 0 else "NA",
                    "NA",
                ]
            )
            continue
        rec = alpha_record(n)
        rows.append(
            [
                rec.n,
                rec.chi,
                mertens(n),
                rec.d,
                rec.top_chains,
                fmt_rational(rec.H1),
                fmt_rational(rec.alpha),
            ]
        )
    _emit(
        ["n", "chi", "mertens", "dim", "top_chains", "H1", "alpha"],
        rows,
        args.format,
        out,
    )


def _cmd_pi_weight(args, out):
    rows = [[args.d, args.x, pi_weight(args.d, args.x)]]
    _emit(["d", "x", "count"], rows, args.format, out)


def _cmd_dim_report(args, out):
    n_list = [int(v) for v in args.n.split(",")]
    rows = [
        [r.n, r.d, repr(r.estimate), repr(r.ratio), int(r.in_band)]
        for r in dim_asymptotic_report(n_list)
    ]
    _emit(["n", "dim", "estimate", "ratio", "in_band"], rows, args.format, out)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="posetzeta",
        description=(
            "Exact chain-count tables, subdivision dynamics, and "
            "squarefree-poset statistics.  Exit codes: 0 ok, 2 bad "
            "configuration, 3 computation error, 4 resource cap exceeded."
        ),
    )
    parser.add_argument(
        "--seed",
        type=int,
        default=DEFAULT_SEED,
        help="seed for any randomized auxiliary behavior (CI determinism)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--format", choices=["csv", "json"], default="csv")
        sp.add_argument("--output", default=None, help="path, default stdout")

    sp = sub.add_parser("tables", help="emit the f/F/H number triangles")
    sp.add_argument("--kind", choices=["f", "F", "H"], required=True)
    sp.add_argument("--dmax", type=int, default=7)
    common(sp)
    sp.set_defaults(func=_cmd_tables)

    sp = sub.add_parser("zeta", help="rational chain series of a poset")
    sp.add_argument("--input", required=True)
    common(sp)
    sp.set_defaults(func=_cmd_zeta)

    sp = sub.add_parser("subdivide", help="explicit barycentric subdivision")
    sp.add_argument("--input", required=True)
    sp.add_argument("--times", type=int, default=1)
    sp.add_argument("--cap", type=int, default=100_000)
    sp.add_argument("--format", choices=["csv", "json"], default="json")
    sp.add_argument("--output", default=None)
    sp.set_defaults(func=_cmd_subdivide)

    sp = sub.add_parser("zeros", help="root trajectory under subdivision")
    sp.add_argument("--input", required=True)
    sp.add_argument("--kmax", type=int, default=8)
    sp.add_argument("--precision-bits", type=int, default=256)
    common(sp)
    sp.set_defaults(func=_cmd_zeros)

    sp = sub.add_parser(
        "theorem-check", help="trajectory plus convergence flags"
    )
    sp.add_argument("--input", required=True)
    sp.add_argument("--kmax", type=int, default=8)
    sp.add_argument("--precision-bits", type=int, default=256)
    common(sp)
    sp.set_defaults(func=_cmd_theorem_check)

    sp = sub.add_parser("pn", help="squarefree divisibility poset statistics")
    pn_sub = sp.add_subparsers(dest="pn_command", required=True)
    for name in ("chi", "alpha"):
        psp = pn_sub.add_parser(name)
        psp.add_argument("--range", required=True, help="lo:hi inclusive")
        common(psp)
        psp.set_defaults(func=_cmd_pn)

    sp = sub.add_parser("pi-weight", help="count squarefree by prime weight")
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--x", type=int, required=True)
    common(sp)
    sp.set_defaults(func=_cmd_pi_weight)

    sp = sub.add_parser("dim-report", help="dimension growth diagnostics")
    sp.add_argument("--n", required=True, help="comma-separated n values")
    common(sp)
    sp.set_defaults(func=_cmd_dim_report)

    return parser


def run(argv=None, out=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    numeric = [
        v
        for v in (
            getattr(args, "dmax", None),
            getattr(args, "times", None),
            getattr(args, "kmax", None),
            getattr(args, "precision_bits", None),
            getattr(args, "cap", None),
        )
        if v is not None
    ]
    if any(v < 0 for v in numeric):
        raise InvalidConfig("numeric options must be nonnegative")
    bits = getattr(args, "precision_bits", None)
    if bits is not None and bits < 53:
        raise InvalidConfig("precision-bits must be at least 53")
    if out is not None:
        args.func(args, out)
        return
    if args.output:
        with open(args.output, "w", newline="", encoding="utf-8") as fh:
            args.func(args, fh)
    else:
        args.func(args, sys.stdout)


def run_to_string(argv):
    """Run a command and capture its document; used by tests."""
    buf = io.StringIO()
    run(argv, out=buf)
    return buf.getvalue()


def main(argv=None):
    try:
        run(argv)
    except ResourceCapExceeded as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 4
    except InvalidConfig as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except PosetZetaError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
