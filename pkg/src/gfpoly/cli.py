"""Command line front end.

Verbs: families, term, gcd, verify, table.  Every verb takes --json for
machine-readable output; grid verbs emit JSON-lines, one object per line.
Exit status is 0 only when everything asked for passed, 1 when a check or
identity failed, and 2 for usage errors (unknown family, bad index, bad
inline JSON).  Output is deterministic for identical invocations, including
fixed --seed runs.  GFP_THREADS caps worker threads for table sweeps.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from concurrent.futures import ThreadPoolExecutor

from .families import (
    BUILTIN,
    PARTNER,
    Family,
    Kind,
    UnknownFamilyError,
    builtin_family,
    equivalent_family,
    random_pair,
    sequence,
)
from .gcd_theorems import (
    GcdCase,
    compare,
    gcd_fib_closed,
    gcd_lucas_closed,
    gcd_mixed_closed,
    oracle_gcd,
)
from .identities import IDENTITY_GROUPS, iter_reports
from .polyring import Poly

MAX_TERM_INDEX = 10_000
MAX_TABLE_INDEX = 64

# Rows of the three reproduction tables: the six classical families.
TABLE_FIB_ROWS = ("fibonacci", "pell", "fermat", "chebyshev2", "jacobsthal", "morgan-voyce-b")
TABLE_LUCAS_ROWS = ("lucas", "pell-lucas-prime", "fermat-lucas", "chebyshev1", "jacobsthal-lucas", "morgan-voyce-c")


class UsageError(ValueError):
    pass


def _resolve_family(text: str) -> Family:
    """A builtin name, or an inline JSON family definition."""
    if text.lstrip().startswith("{"):
        try:
            family = Family.from_json(json.loads(text))
        except (KeyError, TypeError, ValueError) as exc:
            raise UsageError(f"bad family JSON: {exc}") from None
    else:
        try:
            family = builtin_family(text)
        except UnknownFamilyError as exc:
            raise UsageError(str(exc)) from None
    problems = family.violations()
    if problems:
        raise UsageError(f"family {family.name!r} is not valid: {'; '.join(problems)}")
    return family


def _check_index(n: int) -> int:
    if n < 0:
        raise UsageError("term index must be nonnegative")
    if n > MAX_TERM_INDEX:
        raise UsageError(f"term index {n} exceeds the cap of {MAX_TERM_INDEX}")
    return n


def cmd_families(args: argparse.Namespace) -> int:
    rows = [f for f in BUILTIN.values() if f.is_valid]
    if args.kind:
        rows = [f for f in rows if f.kind is Kind(args.kind)]
    if args.json:
        out = []
        for f in rows:
            data = f.to_json()
            data["partner"] = PARTNER.get(f.name)
            out.append(data)
        print(json.dumps(out, indent=2))
        return 0
    name_w = max(len(f.name) for f in rows)
    for f in rows:
        partner = PARTNER.get(f.name, "-")
        print(f"{f.name:<{name_w}}  {f.kind.value:<9}  d={f.d}  g={f.g}  "
              f"p0={f.p0}  p1={f.p1}  partner={partner}")
    return 0


def cmd_term(args: argparse.Namespace) -> int:
    family = _resolve_family(args.family)
    n = _check_index(args.n)
    value = sequence(family).term(n)
    if args.json:
        print(json.dumps({"family": family.name, "n": n,
                          "coeffs": value.to_json(), "text": str(value)}))
    else:
        print(value)
    return 0


def _closed_gcd(fa: Family, fb: Family, m: int, n: int) -> tuple[Poly, GcdCase] | None:
    """Closed form when one applies: same family, or an equivalent pair."""
    if min(m, n) < 1:
        return None
    if (fa.kind, fa.d, fa.g, fa.p0, fa.p1) == (fb.kind, fb.d, fb.g, fb.p0, fb.p1):
        if fa.kind is Kind.FIBONACCI:
            return gcd_fib_closed(fa, m, n), GcdCase.FIB_STRONG
        return gcd_lucas_closed(fa, m, n)
    if fa.kind is not fb.kind and (fa.d, fa.g) == (fb.d, fb.g):
        if fa.kind is Kind.FIBONACCI:
            return gcd_mixed_closed(fa, fb, m, n)
        return gcd_mixed_closed(fb, fa, n, m)
    return None


def cmd_gcd(args: argparse.Namespace) -> int:
    fa = _resolve_family(args.family_a)
    fb = _resolve_family(args.family_b)
    m, n = _check_index(args.m), _check_index(args.n)
    closed = _closed_gcd(fa, fb, m, n)
    data: dict = {"family_a": fa.name, "family_b": fb.name, "m": m, "n": n,
                  "case_tag": None, "closed_form": None, "oracle": None, "agrees": None}
    status = 0
    if closed is None:
        value = oracle_gcd(fa, fb, m, n)
        data["oracle"] = value.to_json()
        lines = [f"oracle: {value}"]
    else:
        value, case = closed
        data["case_tag"] = case.value
        data["closed_form"] = value.to_json()
        lines = [f"closed form: {value}", f"case: {case.value}"]
        if args.check:
            report = compare(fa, fb, m, n, value, case)
            data["oracle"] = report.oracle.to_json()
            data["agrees"] = report.agrees
            lines += [f"oracle: {report.oracle}", f"agrees: {str(report.agrees).lower()}"]
            if not report.agrees:
                status = 1
    print(json.dumps(data) if args.json else "\n".join(lines))
    return status


def _verify_pairs(spec: str, seed: int) -> list[tuple[Family, Family]]:
    if spec == "builtin":
        names = [name for name in BUILTIN if name in PARTNER and BUILTIN[name].kind is Kind.FIBONACCI]
    elif spec.startswith("random:"):
        try:
            count = int(spec.split(":", 1)[1])
        except ValueError:
            raise UsageError(f"bad family spec {spec!r}") from None
        if count < 1:
            raise UsageError("random family count must be positive")
        rng = random.Random(seed)
        return [random_pair(rng, f"random-{i:03d}") for i in range(count)]
    else:
        names = [s.strip() for s in spec.split(",") if s.strip()]
        if not names:
            raise UsageError("no families selected")
    pairs = []
    for name in names:
        family = _resolve_family(name)
        other = equivalent_family(family)
        pair = (family, other) if family.kind is Kind.FIBONACCI else (other, family)
        if pair not in pairs:
            pairs.append(pair)
    return pairs


def cmd_verify(args: argparse.Namespace) -> int:
    groups = list(IDENTITY_GROUPS) if args.identity == "all" else [args.identity]
    for group in groups:
        if group not in IDENTITY_GROUPS:
            raise UsageError(f"unknown identity {group!r}; known: {', '.join(IDENTITY_GROUPS)}, all")
    if args.max_index < 1:
        raise UsageError("--max-index must be positive")
    pairs = _verify_pairs(args.families, args.seed)
    passed = failed = 0
    by_group: dict[str, list[int]] = {g: [0, 0] for g in groups}
    for group in groups:
        for fib, lucas in pairs:
            for report in iter_reports(group, fib, lucas, args.max_index):
                bucket = by_group[group]
                if report.passed:
                    passed += 1
                    bucket[0] += 1
                else:
                    failed += 1
                    bucket[1] += 1
                if args.json:
                    print(json.dumps(report.to_json()))
    summary = {"passed": passed, "failed": failed,
               "groups": {g: {"passed": p, "failed": f} for g, (p, f) in by_group.items()}}
    if args.json:
        print(json.dumps({"summary": summary}))
    else:
        for g, (p, f) in by_group.items():
            print(f"{g}: {p} passed, {f} failed")
        print(f"total: {passed} passed, {failed} failed")
    return 1 if failed else 0


def _table_row(table: int, name: str, max_index: int) -> dict:
    agree = total = 0
    cases: dict[str, int] = {}
    ones_expected = ones_seen = 0
    if table == 3:
        family = BUILTIN[name]
        pair_label = name
        for m in range(1, max_index + 1):
            for n in range(1, max_index + 1):
                closed = gcd_fib_closed(family, m, n)
                report = compare(family, family, m, n, closed, GcdCase.FIB_STRONG)
                total += 1
                agree += report.agrees
                cases[report.case.value] = cases.get(report.case.value, 0) + 1
    elif table == 4:
        family = BUILTIN[name]
        pair_label = name
        one = Poly([1])
        for m in range(1, max_index + 1):
            for n in range(1, max_index + 1):
                closed, case = gcd_lucas_closed(family, m, n)
                report = compare(family, family, m, n, closed, case)
                total += 1
                cases[case.value] = cases.get(case.value, 0) + 1
                ok = report.agrees
                if case is GcdCase.LUCAS_UNEQUAL_E2:
                    ones_expected += 1
                    ones_seen += closed == one
                    ok = ok and closed == one
                agree += ok
    else:
        fib, lucas = BUILTIN[name], BUILTIN[PARTNER[name]]
        pair_label = f"{fib.name}/{lucas.name}"
        for m in range(1, max_index + 1):
            for n in range(1, max_index + 1):
                closed, case = gcd_mixed_closed(fib, lucas, m, n)
                report = compare(fib, lucas, m, n, closed, case)
                total += 1
                agree += report.agrees
                cases[case.value] = cases.get(case.value, 0) + 1
    row = {"table": table, "row": pair_label, "max_index": max_index,
           "agree": agree, "total": total, "cases": cases}
    if table == 4:
        row["unequal_e2_equal_one"] = [ones_seen, ones_expected]
    return row


def cmd_table(args: argparse.Namespace) -> int:
    if not 1 <= args.max_index <= MAX_TABLE_INDEX:
        raise UsageError(f"--max-index must be in 1..{MAX_TABLE_INDEX}")
    names = TABLE_FIB_ROWS if args.which == 3 else TABLE_LUCAS_ROWS if args.which == 4 else TABLE_FIB_ROWS
    threads = max(1, int(os.environ.get("GFP_THREADS", "1")))
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            rows = list(pool.map(lambda name: _table_row(args.which, name, args.max_index), names))
    else:
        rows = [_table_row(args.which, name, args.max_index) for name in names]
    status = 0
    for row in rows:
        if row["agree"] != row["total"]:
            status = 1
        if args.json:
            print(json.dumps(row))
        else:
            case_text = ", ".join(f"{k}={v}" for k, v in sorted(row["cases"].items()))
            extra = ""
            if args.which == 4:
                seen, expected = row["unequal_e2_equal_one"]
                extra = f", unequal-E2 gcd=1: {seen}/{expected}"
            print(f"table {args.which} | {row['row']}: {row['agree']}/{row['total']} agree ({case_text}{extra})")
    return status


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gfp",
        description="Generalized Fibonacci polynomial sequences: terms, closed-form gcds, identity checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("families", help="list the built-in family registry")
    p.add_argument("--kind", choices=[k.value for k in Kind])
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_families)

    p = sub.add_parser("term", help="print one term of a family")
    p.add_argument("family", help="builtin name or inline JSON definition")
    p.add_argument("n", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_term)

    p = sub.add_parser("gcd", help="gcd of two terms, closed form when one applies")
    p.add_argument("family_a")
    p.add_argument("m", type=int)
    p.add_argument("family_b")
    p.add_argument("n", type=int)
    p.add_argument("--check", action="store_true", help="also run the brute-force oracle and compare")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_gcd)

    p = sub.add_parser("verify", help="sweep identity checks over family grids")
    p.add_argument("--identity", default="all", help=f"one of: {', '.join(IDENTITY_GROUPS)}, all")
    p.add_argument("--families", default="builtin",
                   help="'builtin', 'random:K', or comma-separated names")
    p.add_argument("--max-index", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table", help="reproduce a gcd grid table against the oracle")
    p.add_argument("which", type=int, choices=(3, 4, 5))
    p.add_argument("--max-index", type=int, default=24)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_table)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"gfp: {exc}", file=sys.stderr)
        return 2


def run() -> None:
    sys.exit(main())
