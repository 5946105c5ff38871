"""Command-line front end.

Subcommands: expand, klagrange, eseries, trees, specialize, verify.
Exit codes: 0 success, 1 verification failure, 2 usage error.  Everything is
controlled by flags; output is deterministic for identical invocations.
"""

from __future__ import annotations

import argparse
import json
import sys

from .combinat import enumerate_lukasiewicz, parking_quasi_ribbons
from .gfseries import BiSeries, UniSeries, specialize_ncsf
from .lagrange import (eta_t, g_t, gamma_t, geode, gessel_gamma, h_t,
                       k_lagrange_by_phi, k_lagrange_direct, prime_series,
                       solve_g, specialize_t)
from .ncsf import convert_basis
from .render import (biseries_to_json_dict, series_to_json_dict,
                     series_to_text, uniseries_to_json_dict)
from .schroeder import enumerate_prime_schroeder, enumerate_schroeder, g_e
from .verify import SUITES, run_suite


def _parse_shape(text: str) -> tuple[int, ...]:
    try:
        parts = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad composition {text!r}")
    if not parts or any(p < 1 for p in parts):
        raise argparse.ArgumentTypeError(f"bad composition {text!r}")
    return parts


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ncgeode",
        description="exact noncommutative Lagrange series, geodes and friends")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("expand", help="expand a named series")
    p.add_argument("--series", required=True,
                   choices=("g", "gamma", "h", "eta", "gessel"))
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--ring", choices=("int", "polyt"), default="int")
    p.add_argument("--basis", choices=("S", "R", "L"), default="S")
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("klagrange", help="expand the k-Lagrange series")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--route", choices=("direct", "phi", "delta"), default="delta")
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("eseries", help="expand the e-Lagrange series or e-geode")
    p.add_argument("--series", choices=("g", "gamma"), required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("trees", help="enumerate tree codes or ribbon fillings")
    p.add_argument("--kind", required=True,
                   choices=("lukasiewicz", "schroeder", "prime-schroeder", "pqr"))
    p.add_argument("--n", type=int)
    p.add_argument("--shape", type=_parse_shape)
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("specialize", help="apply a generating-function specialization")
    p.add_argument("--map", required=True, dest="map_name",
                   choices=("catalan", "coeff-sum", "ribbon-u", "lambda-abs", "zq"))
    p.add_argument("--series", choices=("g", "gamma", "ge"), required=True)
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("verify", help="run the verification suites")
    p.add_argument("--suite", choices=SUITES, default="all")
    p.add_argument("--degree", type=int, default=6)
    return parser


def _emit_series(series, name, fmt, out):
    if fmt == "json":
        print(json.dumps(series_to_json_dict(series, name)), file=out)
    else:
        for line in series_to_text(series, name):
            print(line, file=out)


def cmd_expand(args, out) -> int:
    n = args.degree
    if n < 0:
        print("degree must be nonnegative", file=sys.stderr)
        return 2
    if args.ring == "int":
        makers = {"g": solve_g, "gamma": geode, "gessel": gessel_gamma,
                  "h": lambda d: prime_series(d)[0],
                  "eta": lambda d: prime_series(d)[1]}
        series = makers[args.series](n)
    else:
        if args.series == "gessel":
            print("the inversion-formula route is only computed over int",
                  file=sys.stderr)
            return 2
        makers = {"g": g_t, "gamma": gamma_t, "h": h_t, "eta": eta_t}
        series = makers[args.series](n)
    series = convert_basis(series, args.basis)
    _emit_series(series, args.series, args.format, out)
    return 0


def cmd_klagrange(args, out) -> int:
    n = args.degree
    if n < 0:
        print("degree must be nonnegative", file=sys.stderr)
        return 2
    if args.route == "direct":
        series = k_lagrange_direct(args.k, n)
    elif args.route == "phi":
        if args.k < 1:
            print("the phi route needs k >= 1", file=sys.stderr)
            return 2
        series = k_lagrange_by_phi(args.k, n)
    else:
        series = specialize_t(g_t(n), args.k)
    _emit_series(series, f"g^({args.k})", args.format, out)
    return 0


def cmd_eseries(args, out) -> int:
    from .schroeder import gamma_e
    series = g_e(args.degree) if args.series == "g" else gamma_e(args.degree)
    name = "g^[e]" if args.series == "g" else "gamma^[e]"
    _emit_series(series, name, args.format, out)
    return 0


def _codes_for(kind, n):
    if kind == "lukasiewicz":
        return enumerate_lukasiewicz(n)
    if kind == "schroeder":
        return list(enumerate_schroeder(n))
    return list(enumerate_prime_schroeder(n))


def cmd_trees(args, out) -> int:
    if args.kind == "pqr":
        if args.shape is None:
            print("--shape is required for pqr", file=sys.stderr)
            return 2
        fillings = parking_quasi_ribbons(args.shape)
        if args.format == "json":
            payload = {"kind": "pqr", "shape": list(args.shape),
                       "count": len(fillings),
                       "items": [[list(seg) for seg in f] for f in fillings]}
            print(json.dumps(payload), file=out)
        else:
            for f in fillings:
                print("|".join("".join(str(x) for x in seg) for seg in f), file=out)
            print(f"count: {len(fillings)}", file=out)
        return 0
    if args.n is None:
        print("--n is required for tree enumerations", file=sys.stderr)
        return 2
    codes = _codes_for(args.kind, args.n)
    if args.format == "json":
        payload = {"kind": args.kind, "n": args.n, "count": len(codes),
                   "items": [list(c) for c in codes]}
        print(json.dumps(payload), file=out)
    else:
        for c in codes:
            print(",".join(str(x) for x in c) if any(x > 9 for x in c)
                  else "".join(str(x) for x in c), file=out)
        print(f"count: {len(codes)}", file=out)
    return 0


def cmd_specialize(args, out) -> int:
    if args.map_name == "zq":
        if args.series != "ge":
            print("zq applies to the e-Lagrange series (--series ge)",
                  file=sys.stderr)
            return 2
        series = specialize_ncsf(g_e(args.order), "zq")
    else:
        if args.series == "ge":
            print(f"{args.map_name} applies to integer series (g or gamma)",
                  file=sys.stderr)
            return 2
        base = solve_g(args.order) if args.series == "g" else geode(args.order)
        series = specialize_ncsf(base, args.map_name)
    name = f"{args.series}:{args.map_name}"
    if isinstance(series, UniSeries):
        if args.format == "json":
            print(json.dumps(uniseries_to_json_dict(series, name)), file=out)
        else:
            print(", ".join(str(c) for c in series.coeffs), file=out)
    else:
        assert isinstance(series, BiSeries)
        if args.format == "json":
            print(json.dumps(biseries_to_json_dict(series, name)), file=out)
        else:
            for (i, j), c in sorted(series.terms.items()):
                print(f"z^{i} q^{j}: {c}", file=out)
    return 0


def cmd_verify(args, out) -> int:
    report = run_suite(args.suite, args.degree)
    for line in report.lines():
        print(line, file=out)
    return 0 if report.passed else 1


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = sys.stdout
    handlers = {
        "expand": cmd_expand,
        "klagrange": cmd_klagrange,
        "eseries": cmd_eseries,
        "trees": cmd_trees,
        "specialize": cmd_specialize,
        "verify": cmd_verify,
    }
    return handlers[args.command](args, out)


if __name__ == "__main__":
    sys.exit(main())
