"""Command-line front end.

Coefficients are the half list ``c_0 .. c_g`` of the palindrome, given inline
as integers, decimals or fractions ``p/q``, or through ``--file`` as JSON
``{"g": g, "coeffs": ["p/q", ...]}``.

Exit codes: 0 when the command ran (a failing verdict is data), 1 when a
``verify`` check exceeds its tolerance, 2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import re
import sys
import time
from fractions import Fraction
from typing import Optional, Sequence

from .canonical import DEFAULT_Q, from_log_report, run_battery
from .criterion import (
    InvalidPolynomial,
    SelfReciprocalPoly,
    fraction_str,
    r_sequence,
    report_to_json,
    run_log,
    run_omega,
    run_omega_sampled,
)
from .oracle import InstanceMode, find_roots, from_lambdas, lambda_r_values, random_spec, square_free

SCHEMA_VERSION = 1
Q_ENV = "RECIPCIRCLE_Q"

# argparse treats "-1/2" as an unknown option; a leading space keeps it positional
_NEG_RATIONAL = re.compile(r"^-\d+(/\d+)?$|^-\d*\.\d+(/\d+)?$")


class UsageError(ValueError):
    pass


def parse_rational(s: str) -> Fraction:
    try:
        return Fraction(s.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"not a rational number: {s.strip()!r}") from exc


def _protect_negatives(argv: Sequence[str]) -> list[str]:
    return [" " + a if _NEG_RATIONAL.match(a) else a for a in argv]


def load_poly(args) -> SelfReciprocalPoly:
    if getattr(args, "file", None):
        try:
            with open(args.file, encoding="utf-8") as fh:
                data = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"cannot read {args.file}: {exc}") from exc
        if not isinstance(data, dict) or "coeffs" not in data:
            raise UsageError('input file must hold {"g": int, "coeffs": [...]}')
        coeffs = [parse_rational(str(c)) for c in data["coeffs"]]
        g = data.get("g", len(coeffs) - 1)
        if len(coeffs) != g + 1:
            raise UsageError(
                f"expected g+1 = {g + 1} coefficients c_0..c_g, got {len(coeffs)}; "
                "full coefficient lists are not accepted"
            )
    else:
        if not args.coeffs:
            raise UsageError("no coefficients given")
        coeffs = [parse_rational(c) for c in args.coeffs]
    try:
        return SelfReciprocalPoly(coeffs)
    except InvalidPolynomial as exc:
        raise UsageError(str(exc)) from exc


def resolve_q(flag: Optional[str]) -> float:
    raw = flag if flag is not None else os.environ.get(Q_ENV)
    if raw is None:
        return DEFAULT_Q
    q = float(parse_rational(raw))
    if not q > 1:
        raise UsageError("q must exceed 1")
    return q


def _dump_json(payload: dict) -> str:
    return json.dumps(payload, indent=2, sort_keys=True)


def _csv(rows: list[list]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerows(rows)
    return buf.getvalue().rstrip("\n")


def _exact(x) -> str:
    if x is None:
        return "undefined"
    if isinstance(x, Fraction):
        return fraction_str(x)
    return str(x)


# -- check -----------------------------------------------------------------------------


def cmd_check(args) -> int:
    p = load_poly(args)
    modes = ["log", "omega"] if args.mode == "both" else [args.mode]
    reports = []
    for mode in modes:
        if mode == "log":
            reports.append(run_log(p))
        elif args.samples:
            reports.append(run_omega_sampled(p, [parse_rational(s) for s in args.samples]))
        else:
            reports.append(run_omega(p))
    if args.format == "json":
        payload = {
            "schema_version": SCHEMA_VERSION,
            "command": "check",
            "coeffs": [fraction_str(c) for c in p.coeffs],
            "reports": [report_to_json(r) for r in reports],
        }
        print(_dump_json(payload))
    elif args.format == "csv":
        rows = [["mode", "n", "index", "status", "m_exact", "m_decimal"]]
        for r in reports:
            js = report_to_json(r, with_r=False)
            for st in js["steps"]:
                m = st["m"]
                exact = m.get("exact", m.get("text")) if m else "undefined"
                dec = m.get("decimal", "") if m else ""
                rows.append([js["mode"], st["n"], st["index"], st["status"], exact, dec])
            rows.append([js["mode"], "verdict", "", str(r.verdict), "", ""])
        print(_csv(rows))
    else:
        lines = [f"P: c = ({', '.join(fraction_str(c) for c in p.coeffs)}), g = {p.g}"]
        for r in reports:
            js = report_to_json(r)
            lines.append(f"[{js['mode']}]")
            lines.append(f"  m_{2 * p.g} = {_table_scalar(js['m_top'])}")
            for st in js["steps"]:
                extra = ""
                if "sturm" in st:
                    c = st["sturm"]
                    extra = (f"  sturm: num_roots={c.get('num_roots_on_ray')}"
                             f" den_roots={c.get('den_roots_on_ray')} checked={c.get('checked', '')}")
                lines.append(f"  n={st['n']:<2} m_{st['index']:<2} = {_table_scalar(st['m'])}"
                             f"  [{st['status']}]{extra}")
            if js.get("r_sequence"):
                R = ", ".join(_table_scalar(x) for x in js["r_sequence"][1:])
                lines.append(f"  R_1..R_{2 * p.g} = {R}")
            lines.append(f"  verdict: {r.verdict}")
        print("\n".join(lines))
    return 0


def _table_scalar(x) -> str:
    if x is None:
        return "undefined"
    if "exact" in x:
        return x["exact"]
    return x["text"]


# -- rvalues ---------------------------------------------------------------------------


def cmd_rvalues(args) -> int:
    closed = None
    if args.lambdas:
        lam = [parse_rational(s) for s in args.coeffs]
        if not lam:
            raise UsageError("no lambda values given")
        p = from_lambdas(lam, parse_rational(args.c0))
        if len(lam) <= 3:
            try:
                closed = lambda_r_values(lam)
            except ZeroDivisionError:
                closed = None
    else:
        p = load_poly(args)
    R = r_sequence(run_log(p), partial=True)[1:]
    rows = []
    for n, r in enumerate(R, start=1):
        row = {"n": n, "R": _exact(r)}
        if closed is not None:
            row["closed_form"] = _exact(closed[n - 1])
            row["equal"] = (r == closed[n - 1]) if r is not None and closed[n - 1] is not None else None
        rows.append(row)
    if args.format == "json":
        payload = {"schema_version": SCHEMA_VERSION, "command": "rvalues",
                   "coeffs": [fraction_str(c) for c in p.coeffs], "rows": rows}
        print(_dump_json(payload))
    elif args.format == "csv":
        keys = list(rows[0].keys())
        print(_csv([keys] + [[row[k] for k in keys] for row in rows]))
    else:
        if closed is not None:
            print(f"P: c = ({', '.join(fraction_str(c) for c in p.coeffs)})")
        for row in rows:
            line = f"R_{row['n']} = {row['R']}"
            if closed is not None:
                line += f"    closed form: {row['closed_form']}"
            print(line)
    return 0


# -- verify ----------------------------------------------------------------------------


def cmd_verify(args) -> int:
    p = load_poly(args)
    q = resolve_q(args.q)
    omegas = [float(parse_rational(w)) for w in (args.omega or [])]
    if any(w <= 0 for w in omegas):
        raise UsageError("omega must be positive")
    rep = run_battery(p, args.battery, q=q, omegas=omegas, seed=args.seed)
    roots = find_roots(p)
    sf = square_free(p)
    ham = from_log_report(p, q).hamiltonian
    if args.hamiltonian_csv:
        with open(args.hamiltonian_csv, "w", encoding="utf-8") as fh:
            fh.write(ham.to_csv())
    if args.format == "json":
        payload = {
            "schema_version": SCHEMA_VERSION,
            "command": "verify",
            "coeffs": [fraction_str(c) for c in p.coeffs],
            "battery": args.battery,
            "q": q,
            "omega": omegas,
            "checks": [c.to_json() for c in rep.checks],
            "oracle": roots.to_json(),
            "square_free": sf,
            "ok": rep.ok,
        }
        print(_dump_json(payload))
    elif args.format == "csv":
        rows = [["name", "kind", "residual", "tolerance", "passed", "skipped"]]
        for c in rep.checks:
            rows.append([c.name, c.kind, "" if c.residual is None else repr(c.residual),
                         "" if c.tolerance is None else repr(c.tolerance),
                         "" if c.passed is None else c.passed, c.skipped or ""])
        print(_csv(rows))
    else:
        print(_verify_table(p, rep, roots, sf))
    return 0 if rep.ok else 1


def _verify_table(p, rep, roots, sf) -> str:
    groups: dict = {}
    for c in rep.checks:
        g = groups.setdefault(c.name, {"n": 0, "worst": None, "tol": c.tolerance, "fail": 0,
                                       "skipped": c.skipped, "kind": c.kind})
        if c.skipped:
            continue
        g["n"] += 1
        g["worst"] = c.residual if g["worst"] is None else max(g["worst"], c.residual)
        g["fail"] += c.passed is False
    lines = [f"P: c = ({', '.join(fraction_str(c) for c in p.coeffs)}), g = {p.g}"]
    for name, g in groups.items():
        if g["skipped"]:
            lines.append(f"  SKIP  {name}: {g['skipped']}")
            continue
        status = "PASS" if g["fail"] == 0 else "FAIL"
        label = " (sampling evidence)" if g["kind"] == "evidence" else ""
        lines.append(f"  {status}  {name}{label}: {g['n']} checks, worst residual "
                     f"{g['worst']:.3e} (tolerance {g['tol']:.1e})")
    lines.append(f"  oracle: all_on_circle={roots.all_on_circle} all_simple={roots.all_simple} "
                 f"max_residual={roots.max_residual:.1e}")
    lines.append(f"  square_free (exact): {sf}")
    lines.append(f"  overall: {'PASS' if rep.ok else 'FAIL'}")
    return "\n".join(lines)


# -- experiment -------------------------------------------------------------------------


def _parse_range(s: str) -> list[int]:
    m = re.fullmatch(r"\s*(\d+)\s*(?:\.\.|-)\s*(\d+)\s*", s)
    if m:
        lo, hi = int(m.group(1)), int(m.group(2))
    elif s.strip().isdigit():
        lo = hi = int(s)
    else:
        raise UsageError(f"bad range {s!r}; expected e.g. 1..6")
    if lo < 1 or hi < lo:
        raise UsageError(f"bad range {s!r}")
    return list(range(lo, hi + 1))


def run_experiment(modes: Sequence[str], g_values: Sequence[int], count: int, seed: int):
    """Rows of the agreement matrix plus any disagreeing instances."""
    rows, disagreements = [], []
    timing = {"log": 0.0, "omega": 0.0, "oracle": 0.0}
    for mode in modes:
        for g in g_values:
            cell = {"mode": mode, "g": g, "instances": 0, "log_agree": 0, "omega_agree": 0,
                    "oracle_on_circle": 0, "oracle_simple": 0, "log_pass": 0, "omega_pass": 0}
            for i in range(count):
                spec = random_spec(mode, g, seed * 1_000_003 + i)
                p = from_lambdas(spec)
                t0 = time.perf_counter()
                roots = find_roots(p)
                sf = square_free(p)
                t1 = time.perf_counter()
                log_rep = run_log(p)
                t2 = time.perf_counter()
                om_rep = run_omega(p)
                t3 = time.perf_counter()
                timing["oracle"] += t1 - t0
                timing["log"] += t2 - t1
                timing["omega"] += t3 - t2
                log_ok = log_rep.verdict.kind == "AllOnCircleSimple"
                om_ok = om_rep.verdict.kind == "AllOnCircle"
                cell["instances"] += 1
                cell["oracle_on_circle"] += roots.all_on_circle
                cell["oracle_simple"] += sf
                cell["log_pass"] += log_ok
                cell["omega_pass"] += om_ok
                agree_log = log_ok == (roots.all_on_circle and sf)
                agree_om = om_ok == roots.all_on_circle
                cell["log_agree"] += agree_log
                cell["omega_agree"] += agree_om
                if not (agree_log and agree_om):
                    disagreements.append({
                        "mode": mode, "g": g, "index": i,
                        "coeffs": [fraction_str(c) for c in p.coeffs],
                        "lambdas": [fraction_str(x) for x in spec.real],
                        "complex_pairs": [[fraction_str(x.re), fraction_str(x.im)]
                                          for x in spec.complex_pairs],
                        "c0": fraction_str(spec.c0),
                        "log_verdict": str(log_rep.verdict),
                        "omega_verdict": str(om_rep.verdict),
                        "oracle_all_on_circle": roots.all_on_circle,
                        "square_free": sf,
                    })
            rows.append(cell)
    return rows, disagreements, timing


EXPERIMENT_COLUMNS = ["mode", "g", "instances", "oracle_on_circle", "oracle_simple", "log_pass",
                      "omega_pass", "log_agree", "omega_agree"]


def cmd_experiment(args) -> int:
    modes = args.modes or [m.value for m in InstanceMode]
    for m in modes:
        try:
            InstanceMode(m)
        except ValueError as exc:
            raise UsageError(f"unknown mode {m!r}") from exc
    g_values = _parse_range(args.g_range)
    if args.count < 0:
        raise UsageError("count must be nonnegative")
    rows, bad, timing = run_experiment(modes, g_values, args.count, args.seed)
    if args.count == 0:
        rows = []
    if args.timing:
        print(json.dumps({k: round(v, 3) for k, v in timing.items()}), file=sys.stderr)
    total = sum(r["instances"] for r in rows)
    agree = total - len(bad)
    if args.format == "json":
        payload = {"schema_version": SCHEMA_VERSION, "command": "experiment", "seed": args.seed,
                   "count": args.count, "modes": modes, "g_range": g_values, "rows": rows,
                   "disagreements": bad, "instances": total, "disagreement_count": len(bad)}
        print(_dump_json(payload))
    elif args.format == "csv":
        out = [EXPERIMENT_COLUMNS] + [[r[k] for k in EXPERIMENT_COLUMNS] for r in rows]
        print(_csv(out))
        for d in bad:
            print("# DISAGREEMENT " + json.dumps(d, sort_keys=True))
    else:
        print(f"{'mode':<18}{'g':>3}{'n':>6}{'on':>6}{'simple':>8}{'log':>6}{'omega':>7}"
              f"{'log=':>7}{'omega=':>8}")
        for r in rows:
            print(f"{r['mode']:<18}{r['g']:>3}{r['instances']:>6}{r['oracle_on_circle']:>6}"
                  f"{r['oracle_simple']:>8}{r['log_pass']:>6}{r['omega_pass']:>7}"
                  f"{r['log_agree']:>7}{r['omega_agree']:>8}")
        print(f"instances: {total}, agreeing with the oracle: {agree}, "
              f"disagreements: {len(bad)}")
        for d in bad:
            print("DISAGREEMENT " + json.dumps(d, sort_keys=True))
    return 0


# -- parser ----------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="recipcircle",
        description="Decide whether a self-reciprocal polynomial has all zeros on the unit circle.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_poly(sp, fmt_default="table"):
        sp.add_argument("coeffs", nargs="*", help="c_0 .. c_g (integers, decimals or p/q)")
        sp.add_argument("--file", help='JSON file {"g": g, "coeffs": ["p/q", ...]}')
        sp.add_argument("--format", choices=["json", "table", "csv"], default=fmt_default)

    sp = sub.add_parser("check", help="run the exact criteria")
    add_poly(sp)
    sp.add_argument("--mode", choices=["log", "omega", "both"], default="log")
    sp.add_argument("--samples", nargs="+", metavar="T",
                    help="omega mode: reject-only check at these rational t > 1 instead of the "
                         "exact symbolic run")
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("rvalues", help="print R_1 .. R_2g exactly")
    add_poly(sp)
    sp.add_argument("--lambdas", action="store_true",
                    help="read the positional values as lambda_1 .. lambda_g")
    sp.add_argument("--c0", default="1", help="leading coefficient with --lambdas (default 1)")
    sp.set_defaults(func=cmd_rvalues)

    sp = sub.add_parser("verify", help="run the canonical-system verification battery")
    add_poly(sp)
    sp.add_argument("--battery", choices=["canonical", "factorization", "kernel", "all"],
                    default="all")
    sp.add_argument("--q", default=None, help=f"base q > 1 (default ${Q_ENV} or {DEFAULT_Q:g})")
    sp.add_argument("--omega", action="append", help="add the shifted battery at this omega > 0")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--hamiltonian-csv", help="write the Hamiltonian steps to this CSV file")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("experiment", help="compare the criteria with the root oracle")
    sp.add_argument("--modes", nargs="+", help="instance modes (default: all four)")
    sp.add_argument("--g-range", default="1..6")
    sp.add_argument("--count", type=int, default=100, help="instances per mode and g")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--format", choices=["json", "table", "csv"], default="table")
    sp.add_argument("--timing", action="store_true", help="print timings to stderr")
    sp.set_defaults(func=cmd_experiment)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args = parser.parse_args(_protect_negatives(argv))
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
