"""End-to-end acceptance checks, one test per criterion.

Each test prints a PASS/FAIL line (also collected in the terminal summary).
"""
import random
import time
from collections import defaultdict
from fractions import Fraction

import pytest

from oracles import quadratic_surd, surd_cf
from periodic_jpa.algfield import NumberField
from periodic_jpa.analysis import NO, conjecture1_sample, cubic_disc_criterion, family_root_report, is_pisot
from periodic_jpa.cli import main
from periodic_jpa.exactpoly import Poly, real_root_intervals, refine_root
from periodic_jpa.families import (
    COLUMN_ORDER,
    STRICT_RANGE,
    FamilyParams,
    alpha0,
    family_field,
    family_poly,
    lemma3_check,
    lemma_oracles,
    sharpness_witness,
    theorem_grid,
    verify_family,
)
from periodic_jpa.jpa import PURELY_PERIODIC, jpa_states
from periodic_jpa.pureroot import conjecture_scan, scan_nth_roots

GRID = list(theorem_grid())


def cf_digits(alpha, steps):
    out = []
    for d, _ in jpa_states([alpha]):
        out.append(d[0])
        if len(out) == steps:
            return out


def test_criterion_01_theorem_grid(report):
    t0 = time.perf_counter()
    bad = [(p, r.failures) for p in GRID for r in [verify_family(p, closed_forms=False)] if not r.passed]
    dt = time.perf_counter() - t0
    report(1, not bad, f"{len(GRID) - len(bad)}/{len(GRID)} grid cases: period m, digit cycle, unit, |norm| = 1 "
                       f"({dt:.1f}s)")
    assert not bad, bad[:3]


def test_criterion_02_closed_forms(report):
    bad = []
    checked = 0
    for p in GRID:
        r = verify_family(p, closed_forms=True)
        checked += p.m - 1
        if not r.passed:
            bad.append((p, r.failures[:2]))
    report(2, not bad, f"closed-form states equal engine states at {checked} steps, {len(bad)} mismatching cases")
    assert not bad, bad[:3]


def test_criterion_03_quadratic_reduction(report):
    rng = random.Random(31337)
    mismatches = 0
    cases = 0
    for _ in range(50):
        b = rng.randint(1, 12)
        c = rng.randint(1, b)
        F = NumberField(Poly([-c, -b, 1]))
        x = Fraction(rng.randint(-30, 30), rng.randint(1, 9))
        y = Fraction(rng.choice([-1, 1]) * rng.randint(1, 9), rng.randint(1, 9))
        cases += 1
        mismatches += cf_digits(F.elem([x, y]), 100) != surd_cf(*quadratic_surd(x, y, b, c), 100)
    for p in (q for q in GRID if q.n == 2):
        F = family_field(p)
        (a,) = alpha0(p, F)
        c, b = (-x for x in F.f.coeffs[:2])
        x, y = a.coeffs
        cases += 1
        mismatches += cf_digits(a, 100) != surd_cf(*quadratic_surd(x, y, b, c), 100)
    report(3, mismatches == 0, f"{cases} quadratic cases, 100 digits each, {mismatches} mismatches vs integer CF")
    assert mismatches == 0


def test_criterion_04_m17(report, capsys):
    t0 = time.perf_counter()
    rc = main(["scan", "nthroot", "--n", "3", "--from", "17", "--to", "17", "--no-timing"])
    dt = time.perf_counter() - t0
    import json

    rec = json.loads(capsys.readouterr().out.splitlines()[0])
    total = rec["l0"] + rec["l1"]
    ok = rc == 0 and total == 93 and dt < 60
    report(4, ok, f"m=17: l0={rec['l0']} l1={rec['l1']} l0+l1={total} in {dt:.1f}s")
    assert ok


def test_criterion_05_long_cube_roots(report):
    ms = [4, 6, 11, 13, 15, 19, 20]
    t0 = time.perf_counter()
    recs = [r for m in ms for r in scan_nth_roots(3, m, m, 2000)]
    dt = time.perf_counter() - t0
    ok = all(r.status == "BudgetExhausted" and r.steps_used == 2000 for r in recs) and dt < 600
    report(5, ok, f"m in {ms}: statuses {sorted({r.status for r in recs})} at 2000 steps, {dt:.1f}s")
    assert ok


def test_criterion_06_conjecture_scan(report):
    t0 = time.perf_counter()
    recs = list(conjecture_scan(2, 5, 2000))
    dt = time.perf_counter() - t0
    ms = [r.params["m"] for r in recs]
    ok = ms == [6, 24, 60, 120] and all(r.status == "BudgetExhausted" for r in recs)
    report(6, ok, f"m={ms}: all BudgetExhausted at 2000 steps (evidence only), {dt:.1f}s")
    assert ok


def test_criterion_07_period_twelve(report):
    r = verify_family(FamilyParams(3, 4, 1, (2, 0, 2)))
    ok = r.passed and r.status == PURELY_PERIODIC and r.l1 == 12
    report(7, ok, f"(3,4,1,(2,0,2)): {r.status}, l1={r.l1}")
    assert ok


def test_criterion_08_first_quartic(report):
    f = family_poly(FamilyParams(4, 4, 1, (1, 0, 1, 1)))
    (iv,) = real_root_intervals(f, Fraction(-2), Fraction(0))
    iv = refine_root(f, iv, Fraction(1, 10 ** 6))
    inside = Fraction(-113419, 100000) < iv.lo and iv.hi < Fraction(-113417, 100000)
    verdict, _ = is_pisot(f)
    ok = f == Poly.parse("-2,0,-2,-2,1") and inside and verdict == NO
    report(8, ok, f"f = {f}; negative root in [{float(iv.lo):.7f}, {float(iv.hi):.7f}]; Pisot: {verdict}")
    assert ok


def test_criterion_09_second_quartic(report):
    p = FamilyParams(4, 5, 10, (1, 0, 0, 1))
    rep = family_root_report(p, printed=Poly.parse("-11,0,-10,-11,1"))
    enc = rep.max_nonreal_modulus
    # the quoted value 1.1908 carries four decimals: the enclosure must round to it
    rounds = Fraction(119075, 100000) <= enc.lo and enc.hi < Fraction(119085, 100000)
    noted = any("quoted polynomial" in s and "X^2" in s for s in rep.findings)
    ok = rep.poly == Poly.parse("-11,-10,0,-11,1") and rounds and enc.width < Fraction(1, 1000) and noted
    report(9, ok, f"f = {rep.poly}; |z| in [{float(enc.lo):.7f}, {float(enc.hi):.7f}] (1.1908 to 4 d.p.); "
                  f"printed-term discrepancy noted: {noted}")
    assert ok


class LemmaStatementGap(AssertionError):
    """The literal inequality statements fail on the grid; see the test body."""


@pytest.mark.xfail(raises=LemmaStatementGap, strict=True,
                   reason="column order fails when c1 = c2 = 0 (c=(1,0,0,1), m=5); "
                          "strict index is only guaranteed in 0..n-1 at m = n (n=2, c=(1,1), m=2)")
def test_criterion_10_lemma_suites(report):
    rng = random.Random(2718)
    lemma3_fail = 0
    for _ in range(500):
        n = rng.randint(2, 7)
        top = rng.randint(1, 20)
        a = [rng.randint(1, top)] + sorted(rng.randint(0, top) for _ in range(n - 2)) + [top]
        lemma3_fail += bool(lemma3_check(a))
    kinds = defaultdict(int)
    bad_c = defaultdict(set)
    checks = 0
    tables = {(p.c, p.n) for p in GRID}
    for c, n in sorted(tables):
        rep = lemma_oracles(c, n, n + 5)
        checks += rep.checks
        for k, v in rep.kinds().items():
            kinds[k] += v
            bad_c[k].add(c)
    witness_ok = all(w["bound_holds"] and w["strong_fails"] for w in map(sharpness_witness, range(3, 9)))
    total = lemma3_fail + sum(kinds.values()) + (not witness_ok)
    detail = (f"dominant-root lemma {500 - lemma3_fail}/500; {len(tables)} recurrence tables, {checks} checks; "
              f"witness ok: {witness_ok}; failures: "
              + (", ".join(f"{k} x{v} over {len(bad_c[k])} c-vectors" for k, v in sorted(kinds.items())) or "none"))
    report(10, total == 0, detail)
    # anything outside the two documented gaps is a genuine regression
    assert lemma3_fail == 0 and witness_ok
    assert set(kinds) <= {COLUMN_ORDER, STRICT_RANGE}
    assert all(c[1] == c[2] == 0 for c in bad_c[COLUMN_ORDER])
    if total:
        raise LemmaStatementGap(detail)


def test_criterion_11_cubic_discriminant(report):
    samples = defaultdict(list)
    for p in GRID:
        if p.n == 3:
            samples[p.c].append((p.m, p.t))
    findings = []
    rows = 0
    for c, mt in sorted(samples.items()):
        rep = cubic_disc_criterion(c[1], c[2], mt)
        rows += len(rep["rows"])
        findings += rep["findings"]
    report(11, not findings, f"{rows} cubic grid cases over {len(samples)} c-vectors, {len(findings)} mismatches")
    assert not findings, findings[:3]


def test_criterion_12_cyclotomic_sampler(report):
    t0 = time.perf_counter()
    parts, ok = [], True
    for n in (3, 4, 5, 6):
        r = conjecture1_sample(n, 1000, seed=42)
        reducible = [rec for rec in r["records"] if rec.verdict.kind == "reducible"]
        # a reducible verdict is explained only when every cyclotomic factor found has an exception case
        excepted = all(rec.cases and all(e["cases"] for e in rec.cases) and not rec.candidate for rec in reducible)
        ok &= excepted and not r["candidates"] and r["unknown_rate"] <= 0.2
        parts.append(f"n={n}: {len(reducible)} reducible (excepted: {excepted}), {len(r['candidates'])} candidates, "
                     f"unknown {r['unknown_rate']:.1%}")
    report(12, ok, "; ".join(parts) + f" ({time.perf_counter() - t0:.1f}s)")
    assert ok
