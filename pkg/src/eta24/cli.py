"""Command-line interface.

Subcommands: expand (q-expansions of eta quotients, theta products,
Eisenstein and L_d series), tables (re-derive the bundled reference
tables), identities (series identity checks), repnum (representation
numbers by formula and/or brute force), enumerate (eta quotient search).

Exit codes: 0 success, 1 verification mismatch, 2 usage or domain error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .arith import Ld_series, eisenstein_series
from .enumeration import (
    classify_eisenstein,
    enumerate_eta_quotients,
    level12_originating_vectors,
)
from .spaces import solve_in_basis
from .errors import Eta24Error, ParseError, UnknownForm
from .eta import parse_eta_quotient
from .identities import (
    CUSP_COMBINATION_IDENTITIES,
    check_cusp_combination,
    check_phi_eta,
    first_mismatch,
)
from .repnum import brute_force_count, brute_force_range, formula_count, normalized_forms
from .tables import TABLE_IDS, verify_table
from .theta import theta_product_series

DEFAULT_PREC = 60
DEFAULT_VERIFY_TO = 60


def _parse_int_list(text, expected=None, what="entry"):
    parts = text.split(",")
    values = []
    position = 0
    for part in parts:
        try:
            values.append(int(part))
        except ValueError:
            raise ParseError(f"non-integer {what} {part.strip()!r}", position) from None
        position += len(part) + 1
    if expected is not None and len(values) != expected:
        raise ParseError(f"expected {expected} comma-separated values, got {len(values)}")
    return values


def parse_expand_spec(text, prec):
    """Series spec: "theta:1,2,3,6", "E:1,8@3", "L:4", or "2:1,4:1,6:1,12:1"."""
    if text.startswith("theta:"):
        quad = _parse_int_list(text[6:], expected=4, what="theta coefficient")
        if any(a < 1 for a in quad):
            raise ParseError("theta coefficients must be positive")
        return theta_product_series(tuple(quad), prec)
    if text.startswith("E:"):
        body = text[2:]
        dilation = 1
        if "@" in body:
            body, dil_text = body.split("@", 1)
            try:
                dilation = int(dil_text)
            except ValueError:
                raise ParseError(f"non-integer dilation {dil_text!r}") from None
        t1, t2 = _parse_int_list(body, expected=2, what="Eisenstein index")
        return eisenstein_series(t1, t2, prec, dilation)
    if text.startswith("L:"):
        try:
            d = int(text[2:])
        except ValueError:
            raise ParseError(f"non-integer L divisor {text[2:]!r}") from None
        return Ld_series(d, prec)
    return parse_eta_quotient(text).series(prec)


def cmd_expand(args):
    series = parse_expand_spec(args.spec, args.prec)
    if args.json:
        payload = {
            "spec": args.spec,
            "prec": series.prec,
            "coefficients": {str(n): str(series.coefficient(n)) for n in range(series.prec)},
        }
        print(json.dumps(payload))
    else:
        print(series.render())
    return 0


def cmd_tables(args):
    table_ids = TABLE_IDS if args.table == "all" else (args.table,)
    status = 0
    reports = []
    for table_id in table_ids:
        report = verify_table(table_id, verify_to=args.verify_to)
        reports.append(report)
        if not report.all_match:
            status = 1
    if args.json:
        print(
            json.dumps(
                [
                    {
                        "table": r.table_id,
                        "rows": len(r.rows),
                        "matching": r.n_matching,
                        "mismatches": [
                            {"row": row.name, "details": list(row.mismatches)}
                            for row in r.rows
                            if not row.matches
                        ],
                    }
                    for r in reports
                ]
            )
        )
        return status
    for report in reports:
        print(f"table {report.table_id}: {report.n_matching}/{len(report.rows)} rows match")
        for row in report.rows:
            for label, printed, recomputed in row.mismatches:
                print(
                    f"  MISMATCH {row.name} at {label}: printed {printed}, "
                    f"recomputed {recomputed}"
                )
    return status


def cmd_identities(args):
    prec = args.prec
    status = 0
    results = []
    for identity in CUSP_COMBINATION_IDENTITIES:
        name, lhs, rhs = check_cusp_combination(identity, prec)
        n = first_mismatch(lhs, rhs)
        results.append((f"theta combination = {name}", n, lhs, rhs))
    lhs, rhs = check_phi_eta(prec)
    results.append(("phi(z) = eta quotient expression", first_mismatch(lhs, rhs), lhs, rhs))
    for name, n, lhs, rhs in results:
        if n is None:
            print(f"{name}: ok to O(q^{prec})")
        else:
            status = 1
            print(
                f"{name}: MISMATCH at q^{n}: "
                f"lhs {lhs.coefficient(n)}, rhs {rhs.coefficient(n)}"
            )
    return status


def cmd_repnum(args):
    quad = tuple(_parse_int_list(args.form, expected=4, what="form coefficient"))
    if any(a < 1 for a in quad):
        raise ParseError("form coefficients must be positive")
    if (args.n is None) == (args.range is None):
        raise ParseError("exactly one of --n and --range is required")
    if args.range is not None:
        if ".." not in args.range:
            raise ParseError("--range must look like 1..500")
        start_text, end_text = args.range.split("..", 1)
        try:
            start, end = int(start_text), int(end_text)
        except ValueError:
            raise ParseError(f"non-integer range bound in {args.range!r}") from None
        if not 0 <= start <= end:
            raise ParseError("range bounds must satisfy 0 <= start <= end")
        ns = range(start, end + 1)
    else:
        if args.n < 0:
            raise ParseError("--n must be non-negative")
        ns = (args.n,)

    use_formula = args.method in ("formula", "both")
    use_brute = args.method in ("brute", "both")
    if use_formula:
        # fail fast on forms without a stored formula
        formula_count(quad, max(max(ns), 1))
    brute = None
    if use_brute:
        if len(ns) > 1:
            brute = brute_force_range(quad, max(ns))
        else:
            brute = {ns[0]: brute_force_count(quad, ns[0])}

    rows = []
    all_match = True
    for n in ns:
        formula_value = formula_count(quad, n) if n > 0 and use_formula else (
            1 if n == 0 and use_formula else None
        )
        brute_value = brute[n] if use_brute else None
        match = formula_value == brute_value if args.method == "both" else None
        if match is False:
            all_match = False
        rows.append((n, formula_value, brute_value, match))

    if args.json:
        print(
            json.dumps(
                [
                    {"n": n, "formula": f, "brute_force": b, "match": m}
                    for n, f, b, m in rows
                ]
            )
        )
    elif len(rows) == 1:
        n, f, b, m = rows[0]
        parts = [f"N{quad};{n}:"]
        if f is not None:
            parts.append(f"formula={f}")
        if b is not None:
            parts.append(f"brute_force={b}")
        if m is not None:
            parts.append("match" if m else "MISMATCH")
        print(" ".join(parts))
    else:
        print("n,formula,brute_force,match")
        for n, f, b, m in rows:
            print(
                ",".join(
                    "" if v is None else str(v)
                    for v in (n, f, b, m)
                )
            )
    return 0 if all_match else 1


def cmd_enumerate(args):
    quotients = enumerate_eta_quotients(args.character)
    rows = []
    if args.eisenstein_only:
        eisenstein, _ = classify_eisenstein(quotients, args.character, args.verify_to)
        for f in eisenstein:
            result = solve_in_basis(
                f.series(args.verify_to + 2), args.character, args.verify_to
            )
            rows.append(
                {
                    "exponents": {str(d): r for d, r in zip((1, 2, 3, 4, 6, 8, 12, 24), f.exponent_vector())},
                    "coefficients": {k: str(v) for k, v in result.coefficients.items()},
                }
            )
        summary = (
            f"chi{args.character}: {len(quotients)} eta quotients, "
            f"{len(eisenstein)} Eisenstein"
        )
        if args.character == 12:
            arising = {tuple(f.exponent_vector()) for f in eisenstein} & level12_originating_vectors()
            summary += f" ({len(arising)} arising from level-12 dilation)"
    else:
        for f in quotients:
            rows.append(
                {
                    "exponents": {str(d): r for d, r in zip((1, 2, 3, 4, 6, 8, 12, 24), f.exponent_vector())}
                }
            )
        summary = f"chi{args.character}: {len(quotients)} eta quotients"

    if args.out:
        with open(args.out, "w") as fh:
            json.dump(rows, fh, indent=1)
        print(summary)
        print(f"wrote {len(rows)} rows to {args.out}")
    elif args.json:
        print(json.dumps(rows))
    else:
        print(summary)
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="eta24",
        description="Exact q-series computations for weight-2 level-24 modular forms.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("expand", help="print the q-expansion of a series spec")
    p.add_argument("spec", help='e.g. "2:1,4:1,6:1,12:1", "theta:1,2,3,6", "E:1,8@3", "L:4"')
    p.add_argument("--prec", type=int, default=DEFAULT_PREC)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("tables", help="re-derive a bundled reference table")
    p.add_argument("table", choices=TABLE_IDS + ("all",))
    p.add_argument("--verify-to", type=int, default=DEFAULT_VERIFY_TO)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("identities", help="check the exact series identities")
    p.add_argument("--prec", type=int, default=100)
    p.set_defaults(func=cmd_identities)

    p = sub.add_parser("repnum", help="representation numbers of a quaternary form")
    p.add_argument("--form", required=True, help='four coefficients, e.g. "1,2,3,6"')
    p.add_argument("--n", type=int)
    p.add_argument("--range", help="inclusive range like 1..500")
    p.add_argument("--method", choices=("formula", "brute", "both"), default="both")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_repnum)

    p = sub.add_parser("enumerate", help="enumerate holomorphic eta quotients")
    p.add_argument("--character", type=int, choices=(1, 8, 12, 24), required=True)
    p.add_argument("--eisenstein-only", action="store_true")
    p.add_argument("--out", help="write JSON rows to this file")
    p.add_argument("--verify-to", type=int, default=DEFAULT_VERIFY_TO)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except (ParseError, UnknownForm) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Eta24Error as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
