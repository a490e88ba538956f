"""Command-line interface: ``ellmoments <command> [options]``.

Exit status is 0 on success, 1 when a verification check fails and 2 for an
invalid configuration. Output is JSON by default; ``--format csv`` writes
the table described in the README.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from itertools import chain

from . import curves, verify
from .curves import AbelianSpec
from .finitefield import field_of_order
from .numtheory import is_prime
from .quadforms import hurwitz_H
from .traceformula import T_dual, T_ell, T_hyp, T_id, T_trace, TraceParams, main_theorem_rhs
from .verify import fmt


class ConfigError(ValueError):
    pass


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from exc


def _group(text: str) -> AbelianSpec:
    parts = _int_list(text)
    if len(parts) == 1:
        parts.append(1)
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"A must be 'm1,m2', got {text!r}")
    try:
        return AbelianSpec(*parts)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _field_order(args) -> int:
    if args.q is not None:
        if args.p is not None or args.n is not None:
            raise ConfigError("give either --q or --p/--n, not both")
        q = args.q
    else:
        if args.p is None:
            raise ConfigError("--q or --p is required")
        if not is_prime(args.p):
            raise ConfigError(f"p={args.p} is not prime")
        q = args.p ** (args.n or 1)
    try:
        field_of_order(q)
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc
    return q


def _add_field(sp):
    sp.add_argument("--q", type=int, help="field order (prime power)")
    sp.add_argument("--p", type=int, help="characteristic, with --n")
    sp.add_argument("--n", type=int, help="extension degree, with --p")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="ellmoments", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--output", "-o", help="write to this file instead of stdout")
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("hurwitz", parents=[common], help="Hurwitz class number H(delta)")
    sp.add_argument("--delta", type=int, required=True)

    sp = sub.add_parser("census", parents=[common], help="weighted census of curves by trace")
    _add_field(sp)
    sp.add_argument("--A", type=_group, default=AbelianSpec(1, 1), help="subgroup 'm1,m2'")
    sp.add_argument("--workers", type=int, default=1)

    sp = sub.add_parser("moment", parents=[common], help="moment vs class-number side")
    _add_field(sp)
    sp.add_argument("--A", type=_group, required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--workers", type=int, default=1)

    sp = sub.add_parser("trace", parents=[common], help="trace of T_q <d> on S_k(Gamma(p^r N, M))")
    _add_field(sp)
    sp.add_argument("--N", type=int, default=1)
    sp.add_argument("--M", type=int, default=1)
    sp.add_argument("--d", type=int, default=1)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--r", type=int, default=0)

    sp = sub.add_parser("verify-main", parents=[common], help="run the main verification grid")
    sp.add_argument("--q", type=_int_list, help="restrict every q grid to these values")
    sp.add_argument("--k", type=_int_list, help="restrict every weight grid to these values")
    sp.add_argument("--workers", type=int, default=1)

    sp = sub.add_parser("verify-lemmas", parents=[common], help="run the lemma grids")
    sp.add_argument("--only", choices=sorted(verify.LEMMAS), action="append",
                    help="run only this lemma (repeatable)")
    return ap


# --- commands ---------------------------------------------------------------------

def cmd_hurwitz(args):
    value = hurwitz_H(args.delta)
    return {"delta": args.delta}, fmt(value), [], [("delta", "H"), (args.delta, fmt(value))]


def cmd_census(args):
    q = _field_order(args)
    spec = args.A
    report = curves.census(field_of_order(q), spec, workers=_workers(args))
    params = {"q": q, "A": [spec.m1, spec.m2]}
    rows = [("t", "mass_all", "mass_A")]
    rows += [(t, fmt(a), fmt(b)) for t, (a, b) in sorted(report.buckets.items())]
    return params, report.to_dict(), [], rows


def cmd_moment(args):
    q = _field_order(args)
    spec, k = args.A, args.k
    if k < 2:
        raise ConfigError("k must be >= 2")
    ctx = field_of_order(q)
    curves.shape_tally(ctx, _workers(args))
    lhs = curves.moment(spec, k, ctx)
    params = {"q": q, "A": [spec.m1, spec.m2], "k": k}
    if verify.admissible(spec, ctx.p):
        rhs = main_theorem_rhs(spec, q, k)
        result = {"lhs": fmt(lhs), "rhs": fmt(rhs), "equal": lhs == rhs}
        checks = [verify.Check("main_theorem", lhs == rhs, lhs, rhs)]
    else:
        # no class-number side unless p | m1 and p does not divide m2
        result = {"lhs": fmt(lhs), "rhs": None, "equal": None}
        checks = []
    rows = [("lhs", "rhs", "equal"), (result["lhs"], result["rhs"] or "", result["equal"])]
    return params, result, checks, rows


def cmd_trace(args):
    q = _field_order(args)
    try:
        P = TraceParams(args.N, args.M, q, args.d, args.k, args.r)
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc
    terms = {"T_id": T_id(P), "T_ell": T_ell(P), "T_hyp": T_hyp(P), "T_dual": T_dual(P)}
    total = T_trace(P)
    params = {"N": P.N, "M": P.M, "q": q, "d": P.d, "k": P.k, "r": P.r}
    result = {"trace": fmt(total), **{name: fmt(v) for name, v in terms.items()}}
    checks = [verify.Check("integral", total.denominator == 1, total, Fraction(round(total)))]
    rows = [("term", "value")] + [(name, v) for name, v in result.items()]
    return params, result, checks, rows


def _filtered(grid, only):
    return tuple(v for v in grid if only is None or v in only)


def cmd_verify_main(args):
    qs, ks = args.q, args.k
    w = _workers(args)
    level1_q = _filtered(verify.LEVEL1_Q, qs)
    trace_ks = _filtered(range(2, 17), ks)
    runs = [
        verify.hurwitz_checks(),
        verify.level1_checks(level1_q, _filtered(verify.LEVEL1_CUSP_K, ks),
                             _filtered(verify.LEVEL1_EMPTY_K, ks)),
        verify.mass_checks(_filtered(verify.MASS_Q, qs), workers=w),
        verify.prob_class_checks(_filtered(verify.PROB_Q, qs), workers=w),
        verify.main_checks(_filtered(verify.MAIN_Q, qs), ks=_filtered(verify.MAIN_K, ks), workers=w),
        verify.integrality_checks(qs=_filtered(verify.TRACE_Q, qs), ks=trace_ks),
        verify.two_route_checks(qs=_filtered(verify.TRACE_Q, qs), ks=trace_ks),
        verify.determinism_checks(_filtered((5, 7), qs), workers=max(w, 2)),
    ]
    checks = list(chain.from_iterable(runs))
    params = {"q": qs, "k": ks}
    return params, _summary(checks), checks, _check_rows(checks)


def cmd_verify_lemmas(args):
    names = args.only or sorted(verify.LEMMAS)
    checks = list(chain.from_iterable(verify.LEMMAS[n]() for n in names))
    return {"only": names}, _summary(checks), checks, _check_rows(checks)


def _summary(checks):
    failed = [c.name for c in checks if not c.passed]
    return {"total": len(checks), "failed": len(failed), "failures": failed}


def _check_rows(checks):
    return [("name", "pass", "lhs", "rhs")] + [
        (c.name, c.passed, fmt(c.lhs), fmt(c.rhs)) for c in checks]


def _workers(args) -> int:
    if args.workers < 1:
        raise ConfigError("--workers must be >= 1")
    return args.workers


COMMANDS = {
    "hurwitz": cmd_hurwitz,
    "census": cmd_census,
    "moment": cmd_moment,
    "trace": cmd_trace,
    "verify-main": cmd_verify_main,
    "verify-lemmas": cmd_verify_lemmas,
}


def render(command, params, result, checks, rows, form) -> str:
    if form == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerows(rows)
        return buf.getvalue()
    doc = {"command": command, "params": params, "result": result,
           "checks": [c.to_dict() for c in checks]}
    return json.dumps(doc, indent=2) + "\n"


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        params, result, checks, rows = COMMANDS[args.command](args)
    except ConfigError as exc:
        print(f"ellmoments: error: {exc}", file=sys.stderr)
        return 2
    text = render(args.command, params, result, checks, rows, args.format)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    failed = [c for c in checks if not c.passed]
    for c in failed:
        print(f"FAIL {c.name}: lhs={fmt(c.lhs)} rhs={fmt(c.rhs)}", file=sys.stderr)
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
