"""Command-line interface.

Subcommands take a chain description file (see chainfile) and dispatch to
the library.  Exit codes: 0 for PASS/success, 2 for FAIL (including a
found Cohen-Macaulayness obstruction), 3 for INCONCLUSIVE, 1 for usage or
parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import CapacityError, ParseError
from .monomial import INFINITY
from .chains import generate, verify_stability
from .chainfile import parse_chain_document
from .covers import gamma_chain, gamma_limit
from .primes import codim, codim_bruteforce
from .resolution import DEFAULT_GENERATOR_CAP, pd_quotient, pd_taylor_oracle
from .asymptotics import (
    SCHEMA_VERSION,
    cm_obstruction,
    fit_linear,
    invariant_table,
    verify_codim_theorem,
    verify_c1_dichotomy,
    verify_pd_bounds,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_FAIL = 2
EXIT_INCONCLUSIVE = 3

_VERDICT_EXITS = {
    "PASS": EXIT_OK,
    "NO-OBSTRUCTION-FOUND": EXIT_OK,
    "FAIL": EXIT_FAIL,
    "NECESSARY-CONDITION-FAILS": EXIT_FAIL,
    "INCONCLUSIVE": EXIT_INCONCLUSIVE,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _range(text):
    if ".." in text:
        lo, hi = text.split("..", 1)
        return (int(lo), int(hi))
    n = int(text)
    return (n, n)


def _load(path, args):
    with open(path, "r", encoding="utf-8") as fh:
        doc = parse_chain_document(fh.read())
    for warning in doc.warnings:
        print(f"warning: {warning}", file=sys.stderr)
    spec = doc.to_spec()
    char = args.char if args.char is not None else doc.options.get("char", 0)
    gen_cap = (
        args.gen_cap
        if args.gen_cap is not None
        else doc.options.get("gen_cap", DEFAULT_GENERATOR_CAP)
    )
    depth_cap = (
        args.depth
        if getattr(args, "depth", None) is not None
        else doc.options.get("depth_cap")
    )
    return spec, char, gen_cap, depth_cap


def _emit_json(payload):
    print(json.dumps(payload, sort_keys=True, indent=2))


def _cmd_gen(args):
    spec, _, _, _ = _load(args.spec, args)
    ideal = generate(spec, args.n)
    if args.format == "json":
        _emit_json(
            {
                "schemaVersion": SCHEMA_VERSION,
                "n": args.n,
                "generators": [str(g) for g in ideal.gens],
            }
        )
    else:
        for g in ideal.gens:
            print(g)
    return EXIT_OK


def _cmd_invariants(args):
    spec, char, gen_cap, _ = _load(args.spec, args)
    lo, hi = args.n
    table = invariant_table(spec, lo, hi, field_char=char, gen_cap=gen_cap)
    if args.format == "json":
        _emit_json(table.as_dict())
    else:
        sys.stdout.write(table.to_csv())
    return EXIT_OK


def _cmd_fit(args):
    spec, char, gen_cap, _ = _load(args.spec, args)
    lo, hi = args.n
    table = invariant_table(spec, lo, hi, field_char=char, gen_cap=gen_cap)
    if args.column == "codim":
        points = [(n, v) for n, v in table.column("codim") if v is not INFINITY]
    else:
        points = [(n, v) for n, v in table.column("pd_exact") if v is not None]
    fit = fit_linear(points) if len(points) >= 2 else None
    payload = {
        "schemaVersion": SCHEMA_VERSION,
        "column": args.column,
        "points": points,
    }
    if fit is None or fit.degenerate:
        payload["fit"] = None
    else:
        payload["fit"] = {
            "slope": fit.slope,
            "intercept": fit.intercept,
            "onset": fit.onset,
            "steps": fit.steps,
            "conclusive": fit.conclusive,
        }
    if args.format == "json":
        _emit_json(payload)
    elif fit is None or fit.degenerate:
        print("no usable fit (fewer than two finite points)")
    else:
        print(
            f"{args.column}: slope {fit.slope}, intercept {fit.intercept}, "
            f"onset {fit.onset}, steps {fit.steps}, "
            f"{'conclusive' if fit.conclusive else 'not conclusive'}"
        )
    return EXIT_OK


def _cmd_verify(args):
    spec, char, gen_cap, depth_cap = _load(args.spec, args)
    lo, hi = args.n
    if args.theorem == "codim":
        report = verify_codim_theorem(spec, lo, hi)
    elif args.theorem == "pd-bounds":
        report = verify_pd_bounds(
            spec, lo, hi, depth_cap=depth_cap, field_char=char, gen_cap=gen_cap
        )
    elif args.theorem == "cm":
        report = cm_obstruction(spec, depth_cap=depth_cap)
    else:
        if spec.rows != 1:
            print("error: the c1 check needs a one-row chain", file=sys.stderr)
            return EXIT_USAGE
        report = verify_c1_dichotomy(spec, lo, hi, field_char=char, gen_cap=gen_cap)
    if args.format == "json":
        _emit_json(report.as_dict())
    else:
        print(f"{report.check}: {report.verdict}")
        for key, value in sorted(report.as_dict()["details"].items()):
            print(f"  {key}: {value}")
    return _VERDICT_EXITS[report.verdict]


def _cmd_gamma(args):
    spec, _, _, depth_cap = _load(args.spec, args)
    if args.big:
        limit = gamma_limit(spec, depth_cap)
        payload = {
            "schemaVersion": SCHEMA_VERSION,
            "gamma_limit": limit.value,
            "stabilized": limit.stabilized,
            "depth": limit.depth,
            "levels": list(limit.level_values),
            "witness_path": [list(e) for e in limit.witness_path],
        }
        if args.format == "json":
            _emit_json(payload)
        else:
            print(
                f"gamma limit (depth {limit.depth}): {limit.value}"
                f" ({'stabilized' if limit.stabilized else 'not stabilized'})"
            )
            print(f"  level maxima: {list(limit.level_values)}")
            print(f"  witness path: {[list(e) for e in limit.witness_path]}")
        return EXIT_OK
    report = gamma_chain(spec)
    payload = {
        "schemaVersion": SCHEMA_VERSION,
        "gamma": "inf" if report.gamma is INFINITY else report.gamma,
        "witness": sorted(report.witness_cover) if report.witness_cover is not None else None,
        "cover_family": sorted(sorted(c) for c in report.cover_family)
        if report.cover_family is not None
        else None,
        "route": report.route,
    }
    if args.format == "json":
        _emit_json(payload)
    else:
        print(f"gamma: {payload['gamma']}")
        print(f"  witness cover: {payload['witness']}")
        if payload["cover_family"] is not None:
            print(f"  cover family: {payload['cover_family']}")
    return EXIT_OK


def _cmd_oracle(args):
    spec, char, gen_cap, _ = _load(args.spec, args)
    n = args.n[0]
    ideal = generate(spec, n)
    checks = []

    def record(name, outcome):
        checks.append((name, outcome))

    try:
        fast = codim(ideal)
        brute = codim_bruteforce(ideal)
        record("codim-vs-bruteforce", "PASS" if fast == brute else "FAIL")
    except CapacityError:
        record("codim-vs-bruteforce", "SKIP (too many variables)")
    if n >= spec.seed_index:
        ok = verify_stability(spec, n)
        record("stability-step", "PASS" if ok else "FAIL")
    else:
        record("stability-step", "SKIP (below seed index)")
    if not ideal.is_zero and not ideal.is_unit:
        try:
            engine = pd_quotient(ideal, field_char=char, gen_cap=gen_cap)
            oracle = pd_taylor_oracle(ideal, field_char=char)
            record("pd-vs-taylor", "PASS" if engine == oracle else "FAIL")
        except CapacityError:
            record("pd-vs-taylor", "SKIP (beyond oracle guard)")
    else:
        record("pd-vs-taylor", "SKIP (zero or unit ideal)")
    payload = {
        "schemaVersion": SCHEMA_VERSION,
        "n": n,
        "checks": {name: outcome for name, outcome in checks},
    }
    if args.format == "json":
        _emit_json(payload)
    else:
        for name, outcome in checks:
            print(f"{name}: {outcome}")
    return EXIT_FAIL if any(o == "FAIL" for _, o in checks) else EXIT_OK


def _build_parser():
    parser = _Parser(prog="incchains", description=__doc__)
    parser.add_argument("--char", type=int, default=None, help="field characteristic (default 0)")
    parser.add_argument("--gen-cap", type=int, default=None, help="generator cap for the exact engine")
    parser.add_argument("--format", choices=("csv", "json"), default="csv")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="print the minimal generators at one width")
    p.add_argument("--spec", required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(fn=_cmd_gen)

    p = sub.add_parser("invariants", help="tabulate codim, pd and gamma over a range")
    p.add_argument("--spec", required=True)
    p.add_argument("--n", type=_range, required=True, metavar="A..B")
    p.set_defaults(fn=_cmd_invariants)

    p = sub.add_parser("fit", help="fit an eventual linear law to a column")
    p.add_argument("--spec", required=True)
    p.add_argument("--n", type=_range, required=True, metavar="A..B")
    p.add_argument("--column", choices=("pd", "codim"), required=True)
    p.set_defaults(fn=_cmd_fit)

    p = sub.add_parser("verify", help="run a theorem-level check")
    p.add_argument("--spec", required=True)
    p.add_argument("--n", type=_range, required=True, metavar="A..B")
    p.add_argument(
        "--theorem", choices=("codim", "pd-bounds", "cm", "c1"), default="codim"
    )
    p.add_argument("--depth", type=int, default=None, help="depth cap for derived chains")
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("gamma", help="cover number, or its depth-capped limit")
    p.add_argument("--spec", required=True)
    p.add_argument("--big", action="store_true", help="compute the depth-capped limit")
    p.add_argument("--depth", type=int, default=None)
    p.set_defaults(fn=_cmd_gamma)

    p = sub.add_parser("oracle", help="run brute-force cross-checks at one width")
    p.add_argument("--spec", required=True)
    p.add_argument("--n", type=_range, required=True)
    p.set_defaults(fn=_cmd_oracle)
    return parser


def main(argv=None):
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else EXIT_USAGE
    try:
        return args.fn(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
