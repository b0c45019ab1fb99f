"""Command-line interface: tables, trace sets, cross-checks, admissibility.

Subcommands:

* table       one row per isomorphism class over F_q (CSV or JSON);
* lambda      the complementary-trace set of a single curve as JSON;
* verify      run the independent computation routes against each other;
* admissible  realizable elliptic-curve traces over F_q.

Inventories together with their formula- and enumeration-derived trace sets
are cached on disk as cache/q{q}.v1.json (override with --cache-dir or the
LAMBDA2_CACHE_DIR environment variable).  Cache files embed a schema version
and a content hash; anything stale or damaged is silently recomputed.  The
exhaustive cover oracle is never cached: it is the independent witness, so
verify always recomputes it.

Exit codes: 0 success, 1 verification mismatch, 2 invalid input.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import io
import json
import os
import sys
import tempfile

from .classify import (
    admissible_traces,
    lambda_exact,
    lambda_formula_resolved,
    lambda_set,
    weil_poly,
)
from .ecurve import curve_inventory, make_curve
from .ffield import field_of_order
from .fforacle import ORACLE_MAX_Q, lambda_oracle

CACHE_SCHEMA = 1

_MODE_FUNCTIONS = {
    "formula": lambda_formula_resolved,
    "kani": lambda_exact,
    "oracle": lambda_oracle,
}


def _dumps(payload):
    return json.dumps(payload, indent=2, sort_keys=True)


def _content_hash(payload):
    blob = json.dumps(payload, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode()).hexdigest()


def _cache_dir(args):
    if args.cache_dir:
        return args.cache_dir
    return os.environ.get("LAMBDA2_CACHE_DIR", "cache")


def _build_entry(q):
    field = field_of_order(q)
    curves = []
    for curve in curve_inventory(field):
        curves.append(
            {
                "a": str(curve.a),
                "b": str(curve.b),
                "j": str(curve.j_invariant()),
                "a_q": curve.trace(),
                "two_torsion": curve.two_torsion_structure(),
                "supersingular": curve.is_supersingular(),
                "aut_count": curve.automorphism_count(),
                "lambda": {
                    "formula": list(lambda_formula_resolved(curve).traces),
                    "kani": list(lambda_exact(curve).traces),
                },
            }
        )
    entry = {"schema": CACHE_SCHEMA, "q": q, "curves": curves}
    entry["hash"] = _content_hash({"schema": CACHE_SCHEMA, "q": q, "curves": curves})
    return entry


def _load_or_build_entry(q, cache_dir):
    path = os.path.join(cache_dir, f"q{q}.v{CACHE_SCHEMA}.json")
    try:
        with open(path, encoding="utf-8") as fh:
            entry = json.load(fh)
        if entry.get("schema") == CACHE_SCHEMA and entry.get("q") == q:
            body = {k: entry[k] for k in ("schema", "q", "curves")}
            if entry.get("hash") == _content_hash(body):
                return entry
    except (OSError, ValueError):
        pass
    entry = _build_entry(q)
    os.makedirs(cache_dir, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=cache_dir, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(_dumps(entry))
            fh.write("\n")
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
    return entry


def _parse_coefficient(field, text):
    parts = text.split(",")
    if len(parts) > field.m:
        raise ValueError(
            f"coefficient {text!r} has {len(parts)} residues; F_{field.order} takes"
            f" at most {field.m}"
        )
    return field.element([int(part) for part in parts])


def cmd_table(args):
    entry = _load_or_build_entry(args.q, _cache_dir(args))
    rows = [
        {
            "a": row["a"],
            "b": row["b"],
            "j": row["j"],
            "a_q": row["a_q"],
            "two_torsion": row["two_torsion"],
            "supersingular": row["supersingular"],
            "aut_count": row["aut_count"],
            "lambda_traces": row["lambda"]["kani"],
        }
        for row in entry["curves"]
    ]
    if args.format == "json":
        print(_dumps(rows))
        return 0
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(
        [
            "a",
            "b",
            "j",
            "a_q",
            "two_torsion",
            "supersingular",
            "aut_count",
            "lambda_traces",
        ]
    )
    for row in rows:
        writer.writerow(
            [
                row["a"],
                row["b"],
                row["j"],
                row["a_q"],
                row["two_torsion"],
                "true" if row["supersingular"] else "false",
                row["aut_count"],
                ";".join(str(t) for t in row["lambda_traces"]),
            ]
        )
    sys.stdout.write(out.getvalue())
    return 0


def cmd_lambda(args):
    field = field_of_order(args.q)
    curve = make_curve(
        field, _parse_coefficient(field, args.a), _parse_coefficient(field, args.b)
    )
    if args.mode == "oracle" and (field.m != 1 or field.order > ORACLE_MAX_Q):
        raise ValueError("oracle mode supports prime q up to 13 only")
    if args.d == 2:
        lam = _MODE_FUNCTIONS[args.mode](curve)
    else:
        lam = lambda_set(curve, args.d)
    payload = {
        "q": args.q,
        "curve": {"a": str(curve.a), "b": str(curve.b)},
        "a_q": curve.trace(),
        "j": str(curve.j_invariant()),
        "two_torsion": curve.two_torsion_structure(),
        "d": args.d,
        "mode": args.mode,
        "traces": list(lam.traces),
        "polynomials": [list(weil_poly(args.q, t)) for t in lam.traces],
    }
    print(_dumps(payload))
    return 0


def cmd_verify(args):
    q = args.q
    entry = _load_or_build_entry(q, _cache_dir(args))
    field = field_of_order(q)
    use_oracle = field.m == 1 and q <= ORACLE_MAX_Q
    failures = 0
    for curve, row in zip(curve_inventory(field), entry["curves"]):
        sets = {
            "formula": tuple(row["lambda"]["formula"]),
            "kani": tuple(row["lambda"]["kani"]),
        }
        if use_oracle:
            sets["oracle"] = lambda_oracle(curve).traces
        agreed = len(set(sets.values())) == 1
        label = f"a={row['a']} b={row['b']} a_q={row['a_q']:+d}"
        if agreed:
            traces = ";".join(str(t) for t in sets["kani"])
            print(f"{label}: ok  [{traces}]")
        else:
            failures += 1
            print(f"{label}: MISMATCH")
            for mode in sorted(sets):
                print(f"  {mode:8s} {list(sets[mode])}")
    n = len(entry["curves"])
    if failures:
        print(f"{n} classes, {failures} mismatches")
        return 1
    if use_oracle:
        print(f"{n} classes, 3 modes, all agree")
    else:
        reason = "non-prime q" if field.m != 1 else "q too large for the oracle"
        print(f"{n} classes, formula/kani agree (oracle skipped: {reason})")
    return 0


def cmd_admissible(args):
    print(_dumps(list(admissible_traces(args.q).traces)))
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="lambda2",
        description="Complementary traces of genus-2 double covers of elliptic curves.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    table = sub.add_parser("table", help="all isomorphism classes over F_q")
    table.add_argument("--q", type=int, required=True)
    table.add_argument("--format", choices=("csv", "json"), default="csv")
    table.add_argument("--cache-dir")
    table.set_defaults(func=cmd_table)

    lam = sub.add_parser("lambda", help="complementary-trace set of one curve")
    lam.add_argument("--q", type=int, required=True)
    lam.add_argument("--a", required=True, help="curve coefficient a")
    lam.add_argument("--b", required=True, help="curve coefficient b")
    lam.add_argument("--d", type=int, default=2, help="cover degree (default 2)")
    lam.add_argument("--mode", choices=sorted(_MODE_FUNCTIONS), default="kani")
    lam.add_argument("--cache-dir")
    lam.set_defaults(func=cmd_lambda)

    verify = sub.add_parser("verify", help="cross-check the computation routes")
    verify.add_argument("--q", type=int, required=True)
    verify.add_argument("--cache-dir")
    verify.set_defaults(func=cmd_verify)

    adm = sub.add_parser("admissible", help="realizable traces over F_q")
    adm.add_argument("--q", type=int, required=True)
    adm.set_defaults(func=cmd_admissible)

    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
