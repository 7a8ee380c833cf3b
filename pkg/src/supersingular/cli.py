"""Command-line front end.

Subcommands::

    divpoly        render f_m (numeric or symbolic)
    check          all criteria for one curve
    verify-theorem ell_p = c_p sweep over every nonsingular (A, B)
    alpha          recurrence vs closed form for the alpha coefficients
    step3          multinomial congruence for a range of primes
    special-curve  4k + 1 | k^k - 1 for prime 4k + 1
    census         supersingular (A, B) pairs with their j-invariants (CSV)

Field elements are given and printed by index: the element
c_0 + c_1 t + ... + c_{k-1} t^{k-1} has index sum c_i p^i, so over a prime
field the index is the residue itself.

Exit status: 0 when no mathematical mismatch occurred, 1 on any mismatch,
2 on usage errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Sequence

from . import __version__
from .alphas import (
    alpha_closed,
    alpha_closed_boundary,
    alpha_recurrence,
    special_curve_check,
    step3_congruence_check,
    step3_range,
)
from .criteria import (
    MAX_SWEEP_FIELD,
    check_curve,
    default_jobs,
    verify_theorem_sweep,
)
from .curve import CurveParams, is_nonsingular, j_invariant
from .divpoly import build_table, symbolic_table
from .poly import render
from .ring import find_irreducible, is_prime, primes_between

MAX_SWEEP_P = 101


class UsageError(Exception):
    pass


def _envelope(command: str, params: dict, results: list, summary: dict) -> dict:
    return {
        "command": command,
        "params": params,
        "results": results,
        "summary": summary,
        "version": __version__,
    }


def _field(p: int, k: int):
    if not is_prime(p) or p < 3:
        raise UsageError(f"--p/--char must be an odd prime, got {p}")
    if k not in (1, 2, 3):
        raise UsageError("--k must be 1, 2 or 3")
    if p**k > MAX_SWEEP_FIELD:
        raise UsageError(f"field size {p}^{k} exceeds {MAX_SWEEP_FIELD}")
    return find_irreducible(p, k)


def _element(spec, idx: int, name: str):
    if not 0 <= idx < spec.order:
        raise UsageError(f"--{name} must be an element index in [0, {spec.order})")
    return spec.from_index(idx)


def _enc(e) -> int:
    return e.index


# -- subcommands -----------------------------------------------------------


def cmd_divpoly(args) -> tuple[dict, int, str]:
    m = args.p
    if m < 0:
        raise UsageError("--p must be non-negative")
    params = {"m": m, "char": args.char, "k": args.k, "A": args.A, "B": args.B,
              "symbolic": args.symbolic, "exact": args.exact, "modulus": args.modulus}
    numeric = args.A is not None or args.B is not None
    if numeric:
        if args.A is None or args.B is None or args.char is None:
            raise UsageError("numeric mode needs --char, --A and --B")
        if args.symbolic or args.exact:
            raise UsageError("--A/--B cannot be combined with --symbolic/--exact")
        spec = _field(args.char, args.k)
        table = build_table(_element(spec, args.A, "A"), _element(spec, args.B, "B"),
                            m, spec, targets=(m,))
    else:
        if args.exact:
            modulus = None
        elif args.modulus is not None:
            modulus = args.modulus
        elif args.char is not None:
            modulus = args.char
        else:
            raise UsageError("symbolic mode needs --char, --modulus or --exact")
        if modulus is not None and (modulus < 3 or modulus % 2 == 0):
            raise UsageError("coefficient modulus must be odd and >= 3")
        table = symbolic_table(m, modulus, targets=(m,))
    f = table[m]
    text = render(f)
    y_factor = m % 2 == 0
    shown = f"y*({text})" if y_factor else text
    result = {"m": m, "y_factor": y_factor, "f": text, "psi": shown}
    return _envelope("divpoly", params, [result], {"checked": 1, "failures": 0,
                                                   "supersingular_count": 0}), 0, shown


def cmd_check(args) -> tuple[dict, int, str]:
    spec = _field(args.p, args.k)
    A, B = _element(spec, args.A, "A"), _element(spec, args.B, "B")
    if not is_nonsingular(A, B):
        raise UsageError("curve is singular (4A^3 + 27B^2 = 0)")
    report = check_curve(CurveParams(spec, A, B))
    d = report.to_dict()
    failures = 0 if report.ok else 1
    summary = {"checked": 1, "failures": failures, "supersingular_count": int(report.ss_oracle)}
    text = (f"p={args.p} k={args.k} A={args.A} B={args.B}: ell_p={d['ell_p']} c_p={d['c_p']} "
            f"divpoly={report.ss_divpoly} deuring={report.ss_deuring} oracle={report.ss_oracle} "
            f"theorem_holds={report.theorem_holds}")
    params = {"p": args.p, "k": args.k, "A": args.A, "B": args.B}
    return _envelope("check", params, [d], summary), failures, text


def cmd_verify_theorem(args) -> tuple[dict, int, str]:
    if args.pmax > MAX_SWEEP_P:
        raise UsageError(f"--pmax must be <= {MAX_SWEEP_P}")
    if args.kmax not in (1, 2, 3):
        raise UsageError("--kmax must be 1, 2 or 3")
    for p in primes_between(max(args.pmin, 3), args.pmax):
        for k in range(1, args.kmax + 1):
            if p**k > MAX_SWEEP_FIELD:
                raise UsageError(f"field size {p}^{k} exceeds {MAX_SWEEP_FIELD}")
    result = verify_theorem_sweep(args.pmax, args.kmax, p_min=args.pmin, jobs=args.jobs,
                                  keep_reports=args.all)
    s = result.summary.to_dict()
    params = {"pmin": args.pmin, "pmax": args.pmax, "kmax": args.kmax, "all": args.all}
    rows = [r.to_dict() for r in result.reports]
    text = (f"checked={s['checked']} failures={s['failures']} "
            f"supersingular={s['supersingular_count']} skipped_singular={s['skipped_singular']}")
    return _envelope("verify-theorem", params, rows, s), int(s["failures"] > 0), text


def cmd_alpha(args) -> tuple[dict, int, str]:
    primes = [args.p] if args.p is not None else primes_between(5, args.pmax)
    for p in primes:
        if p < 5 or not is_prime(p):
            raise UsageError(f"alpha needs primes >= 5, got {p}")
    rows, failures, lines = [], 0, []
    for p in primes:
        table = alpha_recurrence(p)
        for (r, s), v in table.inner.items():
            delta = (v - alpha_closed(r, s, p)).residue
            failures += delta != 0
            rows.append({"p": p, "r": r, "s": s, "d": 2 * r + 3 * s, "kind": "inner",
                         "modulus": p * p, "recurrence": v.residue, "delta": delta})
        for (r, s), v in table.boundary.items():
            delta = (v - alpha_closed_boundary(r, s, p)).residue
            failures += delta != 0
            rows.append({"p": p, "r": r, "s": s, "d": 2 * r + 3 * s, "kind": "boundary",
                         "modulus": p, "recurrence": v.residue, "delta": delta})
        lines.append(f"p={p}: {len(table.inner)} inner, {len(table.boundary)} boundary")
    summary = {"checked": len(rows), "failures": failures, "supersingular_count": 0}
    lines.append(f"failures={failures}")
    params = {"p": args.p, "pmax": args.pmax}
    return _envelope("alpha", params, rows, summary), int(failures > 0), "\n".join(lines)


def cmd_step3(args) -> tuple[dict, int, str]:
    rows = []
    for p in primes_between(5, args.pmax):
        rows.append({"p": p, "k_values": list(step3_range(p)), "holds": step3_congruence_check(p)})
    failures = sum(not r["holds"] for r in rows)
    summary = {"checked": len(rows), "failures": failures, "supersingular_count": 0}
    text = f"primes={len(rows)} failures={failures}"
    return _envelope("step3", {"pmax": args.pmax}, rows, summary), int(failures > 0), text


def cmd_special_curve(args) -> tuple[dict, int, str]:
    checks = special_curve_check(args.kmax)
    failures = [c for c in checks if not c[2]]
    rows = [{"k": k, "p": p, "divides": ok} for k, p, ok in (checks if args.all else failures)]
    summary = {"checked": len(checks), "failures": len(failures), "supersingular_count": 0}
    text = f"checked={len(checks)} failures={len(failures)}"
    return (_envelope("special-curve", {"kmax": args.kmax, "all": args.all}, rows, summary),
            int(bool(failures)), text)


CENSUS_COLUMNS = ["p", "k", "A", "B", "j", "ss"]


def cmd_census(args) -> tuple[dict, int, str]:
    spec = _field(args.p, args.k)
    rows, failures, ss_count, checked = [], 0, 0, 0
    for A in spec.elements():
        for B in spec.elements():
            if not is_nonsingular(A, B):
                continue
            report = check_curve(CurveParams(spec, A, B), structure=False)
            checked += 1
            failures += not report.ok
            ss_count += report.ss_oracle
            if report.ss_oracle or args.all:
                j = j_invariant(CurveParams(spec, A, B))
                rows.append({"p": args.p, "k": args.k, "A": _enc(A), "B": _enc(B),
                             "j": _enc(j), "ss": report.ss_oracle})
    summary = {"checked": checked, "failures": failures, "supersingular_count": ss_count}
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CENSUS_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({**row, "ss": str(row["ss"]).lower()})
    params = {"p": args.p, "k": args.k, "all": args.all}
    return _envelope("census", params, rows, summary), int(failures > 0), buf.getvalue().rstrip("\n")


# -- parser ----------------------------------------------------------------


def _jobs(value: str) -> int:
    n = int(value)
    if n < 1:
        raise argparse.ArgumentTypeError("--jobs must be >= 1")
    return n


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="supersingular",
        description="Division polynomials and supersingularity criteria over finite fields.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, default_format):
        sp.add_argument("--format", choices=("json", "csv", "text"), default=default_format)
        sp.add_argument("--output", help="write to this file instead of stdout")

    sp = sub.add_parser("divpoly", help="render f_m")
    sp.add_argument("--p", type=int, required=True, help="division polynomial index m")
    sp.add_argument("--char", type=int, help="characteristic of the coefficient field")
    sp.add_argument("--k", type=int, default=1, help="extension degree (numeric mode)")
    sp.add_argument("--A", type=int, help="element index of A (numeric mode)")
    sp.add_argument("--B", type=int, help="element index of B (numeric mode)")
    sp.add_argument("--symbolic", action="store_true", help="keep A and B as symbols")
    sp.add_argument("--exact", action="store_true", help="symbolic, with integer coefficients")
    sp.add_argument("--modulus", type=int, help="symbolic coefficients modulo this (e.g. p^2)")
    common(sp, "text")
    sp.set_defaults(func=cmd_divpoly)

    sp = sub.add_parser("check", help="all criteria for one curve")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--k", type=int, default=1)
    sp.add_argument("--A", type=int, required=True)
    sp.add_argument("--B", type=int, required=True)
    common(sp, "json")
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("verify-theorem", help="exhaustive ell_p = c_p sweep")
    sp.add_argument("--pmax", type=int, required=True)
    sp.add_argument("--pmin", type=int, default=5)
    sp.add_argument("--kmax", type=int, default=1)
    sp.add_argument("--jobs", type=_jobs, default=None,
                    help="worker processes (default: $DIVPOLY_JOBS or all cores)")
    sp.add_argument("--all", action="store_true", help="emit every curve, not only failures")
    common(sp, "json")
    sp.set_defaults(func=cmd_verify_theorem)

    sp = sub.add_parser("alpha", help="alpha recurrence vs closed forms")
    g = sp.add_mutually_exclusive_group(required=True)
    g.add_argument("--p", type=int)
    g.add_argument("--pmax", type=int)
    common(sp, "json")
    sp.set_defaults(func=cmd_alpha)

    sp = sub.add_parser("step3", help="multinomial congruence sweep")
    sp.add_argument("--pmax", type=int, default=199)
    common(sp, "json")
    sp.set_defaults(func=cmd_step3)

    sp = sub.add_parser("special-curve", help="4k+1 | k^k - 1 for prime 4k+1")
    sp.add_argument("--kmax", type=int, required=True)
    sp.add_argument("--all", action="store_true", help="emit every k, not only failures")
    common(sp, "json")
    sp.set_defaults(func=cmd_special_curve)

    sp = sub.add_parser("census", help="supersingular (A, B) pairs as CSV")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--k", type=int, default=1)
    sp.add_argument("--all", action="store_true", help="list ordinary curves too")
    common(sp, "csv")
    sp.set_defaults(func=cmd_census)
    return parser


def _render(payload: dict, text: str, fmt: str, command: str) -> str:
    if fmt == "json":
        return json.dumps(payload, indent=2)
    if fmt == "text":
        return text
    if command == "census":
        return text
    rows = payload["results"]
    if not rows:
        return ""
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({k: json.dumps(v) if isinstance(v, (list, dict)) else v
                         for k, v in row.items()})
    return buf.getvalue().rstrip("\n")


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "jobs", "absent") is None:
        args.jobs = default_jobs()
    try:
        payload, code, text = args.func(args)
    except UsageError as exc:
        parser.error(str(exc))
    out = _render(payload, text, args.format, args.command)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(out + "\n")
    else:
        sys.stdout.write(out + "\n")
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
