"""Command-line entry point.

Exit codes: 0 success, 1 a verification mismatch, 2 invalid input,
3 coefficient growth hit the bit limit (JPA_BIT_LIMIT).
"""
from __future__ import annotations

import argparse
import logging
import sys
import time
from functools import partial
from typing import Optional, Sequence

from .algfield import NumberField, ResourceLimit, ZeroDivisorError
from .analysis import family_root_report, negative_root_bound_check, root_report
from .exactpoly import Poly, ShapeError
from .families import FamilyParams, expected_unit, family_field, theorem_grid, verify_family
from .pureroot import DEFAULT_BUDGET, conjecture_scan, ordered_map, scan_nth_roots
from .records import RecordWriter, ScanRecord

log = logging.getLogger("periodic_jpa")

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_LIMIT = 0, 1, 2, 3


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _poly(text: str) -> Poly:
    try:
        return Poly.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


class Output:
    """Records go to --out (or stdout); one-line summaries go to stderr."""

    def __init__(self, args, resume: bool = False):
        self.writer = RecordWriter(args.out, resume=resume) if args.out else None
        self.timing = not args.no_timing

    @property
    def done(self) -> set:
        return self.writer.done if self.writer else set()

    def emit(self, rec: ScanRecord, summary: str = "") -> None:
        if not self.timing:
            rec.wall_ms = None
        if self.writer:
            self.writer.write(rec)
        else:
            print(rec.format(), flush=True)
        if summary:
            print(summary, file=sys.stderr, flush=True)

    def close(self):
        if self.writer:
            self.writer.close()


def _summary(rec: ScanRecord) -> str:
    label = " ".join(f"{k}={v}" for k, v in rec.params.items() if k != "budget")
    s = f"{label}: {rec.status}"
    if rec.l1 is not None:
        s += f" l0={rec.l0} l1={rec.l1} l0+l1={rec.l0 + rec.l1}"
    elif rec.steps_used:
        s += f" steps={rec.steps_used}"
    if rec.unit_coeffs is not None:
        s += f" unit=[{','.join(rec.unit_coeffs)}] norm={rec.unit_norm}"
    return s


# expand

def cmd_expand(args) -> int:
    from .pureroot import run_expansion

    mode = args.mode
    F = NumberField.auto(args.poly) if mode == "auto" else NumberField(args.poly, mode)
    alphas = [F.parse_elem(s) for s in args.alpha.split(";")]
    params = {"poly": args.poly.format(), "alpha": args.alpha, "budget": args.budget, "mode": F.mode}
    rec = run_expansion("expand", params, alphas, args.budget)
    out = Output(args)
    out.emit(rec, _summary(rec))
    out.close()
    if args.figures and rec.digits:
        from . import plots

        plots.digit_stream(rec.digits, args.figures, l0=rec.l0, l1=rec.l1)
    if rec.status == "ResourceLimit":
        return EXIT_LIMIT
    if rec.status == "ZeroDivisor":
        return EXIT_FAIL
    return EXIT_OK


# family

def family_record(p: FamilyParams, budget: Optional[int] = None, closed_forms: bool = True) -> ScanRecord:
    t0 = time.perf_counter()
    rep = verify_family(p, budget=budget, closed_forms=closed_forms)
    rec = ScanRecord(kind="family", params=p.to_json(), status=rep.status, l0=rep.l0, l1=rep.l1)
    rec.steps_used = (rep.l0 or 0) + (rep.l1 or 0)
    rec.set_digits(rep.digits)
    if rep.unit is not None:
        rec.unit_coeffs = [str(c) for c in rep.unit.coeffs]
        rec.unit_norm = str(rep.unit_norm)
    rec.findings = list(rep.failures) + list(rep.findings)
    rec.extra = {
        "passed": rep.passed,
        "mode": rep.mode,
        "poly": rep.poly.format() if rep.poly is not None else None,
        "expected_l1": rep.expected_l1,
        "first_divergence": rep.first_divergence,
    }
    rec.wall_ms = round((time.perf_counter() - t0) * 1000, 3)
    return rec


def _family_params(args) -> FamilyParams:
    return FamilyParams(args.n, args.m, args.t, tuple(args.c))


def cmd_family_verify(args) -> int:
    rec = family_record(_family_params(args), args.budget, not args.no_closed_forms)
    out = Output(args)
    out.emit(rec, _summary(rec) + (" PASS" if rec.extra["passed"] else " FAIL"))
    for msg in rec.findings:
        print(f"  {msg}", file=sys.stderr)
    out.close()
    return EXIT_OK if rec.extra["passed"] else EXIT_FAIL


def cmd_family_grid(args) -> int:
    cases = list(theorem_grid(range(args.n_min, args.n_max + 1), args.m_span, args.t, args.c_max))
    out = Output(args)
    fn = partial(family_record, budget=None, closed_forms=not args.no_closed_forms)
    records = []
    failed = 0
    for rec in ordered_map(fn, cases, args.threads):
        records.append(rec)
        if not rec.extra["passed"]:
            failed += 1
            print(_summary(rec) + " FAIL: " + "; ".join(rec.findings), file=sys.stderr)
        out.emit(rec)
    out.close()
    print(f"family grid: {len(records) - failed}/{len(records)} cases pass", file=sys.stderr)
    if args.figures:
        from . import plots

        plots.grid_summary(records, args.figures)
    return EXIT_OK if failed == 0 else EXIT_FAIL


# scans

def _run_scan(args, records_iter_factory) -> int:
    out = Output(args, resume=args.resume)
    recs = []
    limit_hit = False
    for rec in records_iter_factory(out.done):
        recs.append(rec)
        limit_hit |= rec.status == "ResourceLimit"
        out.emit(rec, _summary(rec))
    out.close()
    if args.figures and recs:
        from . import plots

        plots.scan_lengths(recs, args.figures)
    return EXIT_LIMIT if limit_hit else EXIT_OK


def cmd_scan_nthroot(args) -> int:
    return _run_scan(args, lambda done: scan_nth_roots(args.n, args.m_from, args.m_to, args.budget,
                                                       threads=args.threads, skip=done))


def cmd_scan_conjecture(args) -> int:
    return _run_scan(args, lambda done: conjecture_scan(args.x_from, args.x_to, args.budget,
                                                        threads=args.threads, skip=done))


# analyze / unit

def cmd_analyze(args) -> int:
    t0 = time.perf_counter()
    f = args.poly
    if args.family:
        p = FamilyParams(args.family[0], args.family[1], args.family[2], tuple(args.family[3:]))
        rep = family_root_report(p, printed=f)
        f = rep.poly
    else:
        rep = root_report(f)
    neg = negative_root_bound_check(f)
    params = {"poly": f.format()}
    if args.family:
        params["family"] = list(args.family)
    rec = ScanRecord(kind="analyze", params=params, status=rep.pisot)
    rec.extra = rep.to_json()
    rec.extra["negative_root_check"] = neg
    rec.findings = rep.findings + neg["findings"]
    rec.wall_ms = round((time.perf_counter() - t0) * 1000, 3)
    out = Output(args)
    out.emit(rec, f"{f}: inside={rep.count_inside_unit_disk} on={rep.on_unit_circle} "
                  f"outside={rep.count_outside} pisot: {rep.pisot}")
    for msg in rec.findings:
        print(f"  {msg}", file=sys.stderr)
    out.close()
    if args.figures:
        from . import plots

        plots.roots_plane(f, args.figures)
    return EXIT_OK


def cmd_unit(args) -> int:
    p = _family_params(args)
    F = family_field(p)
    eps = expected_unit(p, F)
    rec = ScanRecord(kind="unit", params=p.to_json(), status="ok")
    rec.unit_coeffs = [str(c) for c in eps.coeffs]
    rec.unit_norm = str(eps.norm())
    rec.extra = {"poly": F.f.format(), "unit": eps.format()}
    out = Output(args)
    out.emit(rec, f"f = {F.f}; unit = {eps.to_poly()} (in omega); norm = {rec.unit_norm}")
    out.close()
    return EXIT_OK


# parser

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="append JSONL records here instead of printing them")
    common.add_argument("--figures", metavar="DIR", help="also write PNG figures into DIR")
    common.add_argument("--threads", type=int, default=1, help="worker processes (1 = sequential)")
    common.add_argument("--no-timing", action="store_true", help="omit wall_ms so output is byte-stable")
    common.add_argument("--log-level", default="WARNING")

    fam = argparse.ArgumentParser(add_help=False)
    fam.add_argument("--n", type=int, required=True)
    fam.add_argument("--m", type=int, required=True)
    fam.add_argument("--t", type=int, required=True)
    fam.add_argument("--c", type=_int_list, required=True, help="c0,c1,...,c_{n-1}")

    ap = argparse.ArgumentParser(prog="jpa", description="Exact Jacobi-Perron expansions and periodic families.")
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("expand", parents=[common], help="expand a vector of field elements")
    p.add_argument("--poly", type=_poly, required=True, help="defining polynomial, constant term first")
    p.add_argument("--alpha", required=True, help="elements separated by ';', each as c0,c1,... rationals")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--mode", choices=("auto", "lemma3", "positive_root"), default="auto")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("family", help="periodic families")
    fsub = p.add_subparsers(dest="family_cmd", required=True)
    q = fsub.add_parser("verify", parents=[common, fam], help="verify one parameter tuple")
    q.add_argument("--budget", type=int, default=None)
    q.add_argument("--no-closed-forms", action="store_true")
    q.set_defaults(func=cmd_family_verify)
    q = fsub.add_parser("grid", parents=[common], help="verify the default parameter grid")
    q.add_argument("--n-min", type=int, default=2)
    q.add_argument("--n-max", type=int, default=5)
    q.add_argument("--m-span", type=int, default=5)
    q.add_argument("--t", type=_int_list, default=[1, 2, 7])
    q.add_argument("--c-max", type=int, default=3)
    q.add_argument("--no-closed-forms", action="store_true")
    q.set_defaults(func=cmd_family_grid)

    p = sub.add_parser("scan", help="long scans over pure roots")
    ssub = p.add_subparsers(dest="scan_cmd", required=True)
    q = ssub.add_parser("nthroot", parents=[common], help="expand (m^(1/n), ..., m^((n-1)/n))")
    q.add_argument("--n", type=int, default=3)
    q.add_argument("--from", dest="m_from", type=int, required=True)
    q.add_argument("--to", dest="m_to", type=int, required=True)
    q.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    q.add_argument("--resume", action="store_true", help="skip params already present in --out")
    q.set_defaults(func=cmd_scan_nthroot)
    q = ssub.add_parser("conjecture", parents=[common], help="cube roots of m = x^3 - x")
    q.add_argument("--x-from", type=int, required=True)
    q.add_argument("--x-to", type=int, required=True)
    q.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    q.add_argument("--resume", action="store_true")
    q.set_defaults(func=cmd_scan_conjecture)

    p = sub.add_parser("analyze", parents=[common], help="root location report for a polynomial")
    p.add_argument("--poly", type=_poly, help="monic integer polynomial, constant term first")
    p.add_argument("--family", type=_int_list, metavar="N,M,T,C0,...",
                   help="analyze the family polynomial; --poly then names a quoted variant to compare")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("unit", parents=[common, fam], help="predicted Hasse-Bernstein unit")
    p.set_defaults(func=cmd_unit)
    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    logging.basicConfig(level=getattr(logging, str(args.log_level).upper(), logging.WARNING),
                        format="%(levelname)s %(name)s: %(message)s")
    if args.cmd == "analyze" and args.poly is None and not args.family:
        ap.error("analyze needs --poly or --family")
    if getattr(args, "budget", 1) is not None and getattr(args, "budget", 1) < 1:
        ap.error("--budget must be positive")
    try:
        return args.func(args)
    except ResourceLimit as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except ZeroDivisorError as exc:
        print(f"zero divisor: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except (ValueError, ShapeError) as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
