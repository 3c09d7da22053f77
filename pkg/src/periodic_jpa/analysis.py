"""Root-location analytics for family polynomials.

Unit-disk counts are exact: roots on the circle are split off through
gcd(p, p*) and counted via the substitution x = z + 1/z; the remainder goes
through the Schur-Cohn transform chain, falling back to a Cauchy-index count
on the Moebius image when the chain hits a singular step.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .exactpoly import (
    Interval,
    IrreducibilityVerdict,
    Poly,
    X,
    count_in_chain,
    count_real_roots,
    cyclotomic_divisors,
    cyclotomic_poly,
    discriminant,
    integer_nth_root,
    irreducibility_verdict,
    poly_gcd,
    real_root_intervals,
    refine_root,
    squarefree_part,
)

YES, NO, BOUNDARY = "Yes", "No", "Boundary"


# unit-circle counting

def _strip_content(cs: list) -> list:
    while cs and cs[-1] == 0:
        cs.pop()
    g = math.gcd(*cs) if cs else 0
    return [c // g for c in cs] if g > 1 else cs


def _schur_cohn_inside(cs: list) -> Optional[int]:
    """Roots strictly inside |z| = 1 for an integer polynomial with no roots
    on the circle; None on a singular step (|a_0| = |a_n|)."""
    cs = list(cs)
    zeros = 0
    while cs and cs[0] == 0:
        cs.pop(0)
        zeros += 1
    n = len(cs) - 1
    if n <= 0:
        return zeros
    a0, an = cs[0], cs[-1]
    delta = a0 * a0 - an * an
    if delta == 0:
        return None
    t = _strip_content([a0 * cs[k] - an * cs[n - k] for k in range(n + 1)])
    sub = _schur_cohn_inside(t)
    if sub is None:
        return None
    return zeros + (sub if delta > 0 else n - sub)


def _sturm_pair(f0: Poly, f1: Poly) -> list[Poly]:
    seq = [f0, f1]
    while not seq[-1].is_zero():
        r = seq[-2] % seq[-1]
        if r.is_zero():
            break
        seq.append(-r)
    return [s for s in seq if not s.is_zero()]


def _cauchy_index(num: Poly, den: Poly) -> int:
    """Cauchy index of num/den over the whole real line."""
    if num.is_zero():
        return 0
    return count_in_chain(_sturm_pair(den, num), None, None)


def _left_half_plane_count(q: Poly) -> int:
    """Roots with negative real part, for q without roots on the imaginary axis."""
    N = q.degree
    re, im = [], []
    for k, c in enumerate(q.coeffs):
        # i^k: 1, i, -1, -i
        r = k % 4
        if r == 0:
            re.append(c); im.append(0)
        elif r == 1:
            re.append(0); im.append(c)
        elif r == 2:
            re.append(-c); im.append(0)
        else:
            re.append(0); im.append(-c)
    A, B = Poly(re), Poly(im)
    if N % 2 == 1:
        d = _cauchy_index(A, B)
    else:
        d = -_cauchy_index(B, A)
    return (N + d) // 2


def _cauchy_inside(p: Poly) -> int:
    """Inside count via z = (w+1)/(w-1), which sends the disk to Re w < 0."""
    n = p.degree
    q = Poly()
    wp, wm = Poly((1, 1)), Poly((-1, 1))
    for k, c in enumerate(p.coeffs):
        q = q + c * wp ** k * wm ** (n - k)
    return _left_half_plane_count(q)


def _count_inside_off_circle(p: Poly) -> int:
    cs = [int(c) for c in p.primitive().coeffs]
    k = _schur_cohn_inside(cs)
    return k if k is not None else _cauchy_inside(p.primitive())


def _palindromic_to_trace(g: Poly) -> Poly:
    """h with g(z) = z^k h(z + 1/z) for palindromic g of degree 2k."""
    b = g.coeffs
    k = g.degree // 2
    x = X
    D = [Poly.const(2), x]
    for _ in range(2, k + 1):
        D.append(x * D[-1] - D[-2])
    h = Poly.const(b[k])
    for j in range(1, k + 1):
        h = h + b[k + j] * D[j]
    return h


def unit_disk_count(p: Poly) -> tuple[int, int]:
    """(distinct roots with |z| < 1, distinct roots with |z| = 1)."""
    if p.is_zero():
        raise ValueError("zero polynomial")
    p = squarefree_part(p).primitive()
    on = 0
    inside = 0
    for r in (1, -1):
        if p.degree >= 1 and p(r) == 0:
            on += 1
            p = p.exact_div(X - r).primitive()
    if p.degree <= 0:
        return inside, on
    g = poly_gcd(p, p.reversed()).primitive()
    if g.degree > 0:
        if g.coeffs != g.reversed().coeffs:
            raise ArithmeticError(f"gcd with reciprocal is not palindromic: {g}")
        h = _palindromic_to_trace(g)
        on_g = 2 * count_real_roots(h, lo=-2, hi=2)
        on += on_g
        inside += (g.degree - on_g) // 2
        p = p.exact_div(g).primitive()
    if p.degree >= 1:
        inside += _count_inside_off_circle(p)
    return inside, on


# Pisot verdicts

def _omega_factor(f: Poly, bracket: Interval) -> tuple[Poly, str]:
    """Strip factors that do not vanish at omega, as far as certificates allow."""
    h = f
    note = ""
    for d in cyclotomic_divisors(h):
        phi = cyclotomic_poly(d)
        while phi.divides(h):
            h = h.exact_div(phi)
    for _ in range(h.degree):
        v = irreducibility_verdict(h)
        if v.kind == "irreducible":
            return h, note
        if v.kind == "unknown":
            return h, "irreducibility of the omega factor not certified"
        w = v.witness.monic()
        if count_real_roots(w, bracket) == 1:
            h = Poly(int(c) for c in w.coeffs)
        else:
            h = h.exact_div(w)
            h = Poly(int(c) for c in h.coeffs)
    return h, note


def is_pisot(f: Poly, bracket: Optional[Interval] = None) -> tuple[str, str]:
    """Pisot verdict for the positive root omega > 1 of monic f, with a note."""
    if bracket is None:
        from .algfield import NumberField

        bracket = NumberField.auto(f).omega_bracket
    if bracket.hi <= 1:
        return NO, "omega <= 1"
    h, note = _omega_factor(f, bracket)
    inside, on = unit_disk_count(h)
    outside = h.degree - inside - on
    if on == 0 and outside == 1:
        return YES, note
    if note:
        return BOUNDARY, note
    if on:
        return BOUNDARY, f"{on} conjugate(s) on the unit circle"
    return NO, f"{outside - 1} conjugate(s) outside the unit circle"


# enclosures

def _imul(a: Interval, b: Interval) -> Interval:
    ps = (a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi)
    return Interval(min(ps), max(ps))


def _idiv(a: Interval, b: Interval) -> Interval:
    if b.lo <= 0 <= b.hi:
        raise ZeroDivisionError("interval division by an interval containing 0")
    return _imul(a, Interval(1 / b.hi, 1 / b.lo))


def _isqrt_interval(a: Interval, bits: int = 80) -> Interval:
    if a.lo < 0:
        raise ValueError("negative lower bound under square root")
    S = 1 << bits
    lo = math.isqrt(math.floor(a.lo * S * S))
    hi = math.isqrt(math.ceil(a.hi * S * S)) + 1
    return Interval(Fraction(lo, S), Fraction(hi, S))


def graeffe_upper_bound(p: Poly, rounds: int = 4) -> Fraction:
    """Upper bound on all root moduli from Fujiwara's bound after Graeffe squaring."""
    q = p.primitive()
    for _ in range(rounds):
        a = q
        b = q.compose_neg()
        prod = (a * b).coeffs
        q = Poly(prod[::2])
        if q.lc < 0:
            q = -q
    lc = abs(q.lc)
    n = q.degree
    best = 0
    for j in range(1, n + 1):
        c = abs(q[n - j])
        if c == 0:
            continue
        ratio = -(-c // lc)
        best = max(best, integer_nth_root(ratio, j) + 1)
    bound = 2 * best
    e = 1 << rounds
    S = 1 << 20
    return Fraction(integer_nth_root(bound * S ** e, e) + 1, S)


def nonreal_modulus_enclosure(f: Poly, eps: Fraction = Fraction(1, 10 ** 6)) -> tuple[Optional[Interval], str]:
    """Enclosure of the largest modulus among non-real roots.

    Exact when there is a single conjugate pair (product of roots divided by
    the real roots); otherwise a coarse Graeffe bound.
    """
    f = squarefree_part(f).primitive()
    reals = real_root_intervals(f)
    nonreal = f.degree - len(reals)
    if nonreal == 0:
        return None, "no non-real roots"
    if nonreal == 2:
        tight = [refine_root(f, iv, eps * Fraction(1, 10 ** 6)) for iv in reals]
        prod = Interval(1, 1)
        for iv in tight:
            prod = _imul(prod, iv)
        total = Fraction((-1) ** f.degree * f.coeffs[0], f.lc)
        sq = _idiv(Interval(total, total), prod)
        return _isqrt_interval(sq), "exact pair enclosure"
    return Interval(0, graeffe_upper_bound(f)), "coarse Graeffe enclosure"


# negative real roots

def negative_root_bound_check(f: Poly, n: Optional[int] = None) -> dict:
    """Compare negative real roots of f with the negative root of x^(n-1) + x^(n-2) + 1."""
    n = f.degree if n is None else n
    findings = []
    negs = [iv for iv in real_root_intervals(f, None, 0) if iv.hi < 0 or iv.lo < 0]
    negs = [iv for iv in negs if not (iv.lo == iv.hi == 0)]
    bpoly = Poly.monomial(n - 1) + Poly.monomial(n - 2) + 1
    bnegs = real_root_intervals(bpoly, None, 0)
    bound = bnegs[0] if bnegs else None
    rows = []
    for iv in negs:
        root_iv = refine_root(f, iv, Fraction(1, 10 ** 9)) if iv.width else iv
        row = {"root": root_iv.to_json(), "approx": float(root_iv.mid)}
        if bound is not None:
            common = poly_gcd(f, bpoly)
            b_iv = bound
            r_iv = root_iv
            eps = Fraction(1, 10 ** 9)
            verdict = None
            for _ in range(40):
                b_iv = refine_root(bpoly, b_iv, eps) if b_iv.width else b_iv
                r_iv = refine_root(f, r_iv, eps) if r_iv.width else r_iv
                if r_iv.lo > b_iv.hi:
                    verdict = True
                    break
                if r_iv.hi < b_iv.lo:
                    verdict = False
                    break
                if common.degree > 0 and count_real_roots(common, Interval(min(r_iv.lo, b_iv.lo), max(r_iv.hi, b_iv.hi))) > 0:
                    verdict = True  # equal roots
                    break
                eps /= 2 ** 32
            row["above_bound"] = verdict
            if verdict is False:
                findings.append(f"negative root {float(r_iv.mid):.6f} lies below the bound root {float(b_iv.mid):.6f}")
        rows.append(row)
    below_minus_one = count_real_roots(f, lo=None, hi=-1) - (1 if f(-1) == 0 else 0)
    if n % 2 == 1 and below_minus_one:
        findings.append(f"odd degree polynomial with {below_minus_one} real root(s) below -1")
    return {
        "poly": f.format(),
        "n": n,
        "negative_roots": rows,
        "bound_root": None if bound is None else refine_root(bpoly, bound, Fraction(1, 10 ** 9)).to_json(),
        "bound_root_approx": None if bound is None else float(refine_root(bpoly, bound, Fraction(1, 10 ** 9)).mid),
        "roots_below_minus_one": below_minus_one,
        "findings": findings,
    }


# cubic discriminant sign

def cubic_discriminant(f: Poly) -> int:
    """18abc - 4a^3c + a^2b^2 - 4b^3 - 27c^2 for monic X^3 + aX^2 + bX + c."""
    if f.degree != 3 or f.lc != 1:
        raise ValueError("monic cubic required")
    c, b, a = f.coeffs[0], f.coeffs[1], f.coeffs[2]
    return 18 * a * b * c - 4 * a ** 3 * c + a * a * b * b - 4 * b ** 3 - 27 * c * c


def cubic_disc_criterion(c1: int, c2: int, samples: Sequence[tuple[int, int]]) -> dict:
    """Compare sign(disc f) < 0 with c2 >= ceil(c1^2 / 4) over sampled (m, t)."""
    from .families import recurrence_table

    predicted_negative = c2 >= -(-c1 * c1 // 4)
    rows, findings = [], []
    for m, t in samples:
        # built straight from the recurrence so that c2 < c1 can be probed too
        u = recurrence_table((1, c1, c2), 3, m)
        a = [u[i, m] * t + ci for i, ci in enumerate((1, c1, c2))]
        f = Poly([-a[0], -a[1], -a[2], 1])
        d = cubic_discriminant(f)
        if d != discriminant(f):
            findings.append(f"discriminant routes disagree for m={m}, t={t}")
        nreal = count_real_roots(f)
        if (d < 0) != (nreal == 1):
            findings.append(f"sign/real-root mismatch for m={m}, t={t}")
        if (d < 0) != predicted_negative:
            findings.append(f"criterion mismatch for c=(1,{c1},{c2}), m={m}, t={t}: disc={d}")
        rows.append({"m": m, "t": t, "poly": f.format(), "disc": d, "real_roots": nreal})
    return {"c": [1, c1, c2], "criterion_negative": predicted_negative, "rows": rows, "findings": findings}


# cyclotomic-exception sampler

def allowed_cyclotomic(a: Sequence[int], d: int) -> list[str]:
    """Which exception cases permit Phi_d to divide X^n - a_{n-1}X^{n-1} - ... - a_0."""
    n = len(a)
    cases = []
    if n >= 2 and a[-1] == a[-2] and n % d == 0 and 1 < d < n:
        cases.append("a")
    if n % 2 == 0 and d == 2:
        cases.append("b")
    if n % 6 == 5 and d == 6:
        cases.append("c")
    return cases


@dataclass
class SampleRecord:
    coeffs: list
    verdict: IrreducibilityVerdict
    cyclotomic: list = field(default_factory=list)
    cases: list = field(default_factory=list)
    cofactor: Optional[IrreducibilityVerdict] = None
    candidate: bool = False
    unknown: bool = False


def classify_shape_poly(a: Sequence[int]) -> SampleRecord:
    g = Poly([-x for x in a] + [1])
    v = irreducibility_verdict(g)
    rec = SampleRecord(list(a), v)
    if v.kind == "irreducible":
        return rec
    if v.kind == "unknown":
        rec.unknown = True
        return rec
    ds = cyclotomic_divisors(g)
    rec.cyclotomic = ds
    if not ds:
        rec.candidate = True
        return rec
    h = g
    for d in ds:
        cases = allowed_cyclotomic(a, d)
        rec.cases.append({"d": d, "cases": cases})
        if not cases:
            rec.candidate = True
        phi = cyclotomic_poly(d)
        while phi.divides(h):
            h = h.exact_div(phi)
    h = Poly(int(c) for c in h.coeffs)
    if h.degree >= 1:
        rec.cofactor = irreducibility_verdict(h)
        if rec.cofactor.kind == "reducible":
            rec.candidate = True
        elif rec.cofactor.kind == "unknown":
            rec.unknown = True
    return rec


def sample_shape_coeffs(n: int, rng: random.Random, cap: int = 10) -> list[int]:
    top = rng.randint(1, cap)
    mids = sorted(rng.randint(0, top) for _ in range(n - 2))
    a0 = rng.randint(1, top)
    return [a0] + mids + [top]


def conjecture1_sample(n: int, samples: int, seed: int, cap: int = 10) -> dict:
    if n < 2:
        raise ValueError("n must be at least 2")
    records = []
    for i in range(samples):
        rng = random.Random(f"{seed}:{n}:{i}")
        records.append(classify_shape_poly(sample_shape_coeffs(n, rng, cap)))
    reducible = [r for r in records if r.verdict.kind == "reducible"]
    candidates = [r for r in records if r.candidate]
    unknown = [r for r in records if r.unknown]
    return {
        "n": n,
        "samples": samples,
        "seed": seed,
        "cap": cap,
        "irreducible": sum(r.verdict.kind == "irreducible" and not r.unknown for r in records),
        "reducible": len(reducible),
        "unknown": len(unknown),
        "unknown_rate": len(unknown) / samples if samples else 0.0,
        "candidates": [r.coeffs for r in candidates],
        "reducible_cases": [{"coeffs": r.coeffs, "cyclotomic": r.cases} for r in reducible],
        "records": records,
    }


# full report

@dataclass
class RootReport:
    poly: Poly
    dominant_root: Optional[Interval]
    count_inside_unit_disk: int
    on_unit_circle: int
    pisot: str
    pisot_note: str
    negative_real_roots: list
    max_nonreal_modulus: Optional[Interval]
    modulus_note: str
    cyclotomic_divisors: list
    irreducibility: IrreducibilityVerdict
    findings: list = field(default_factory=list)

    @property
    def count_outside(self) -> int:
        return squarefree_part(self.poly).degree - self.count_inside_unit_disk - self.on_unit_circle

    def to_json(self) -> dict:
        return {
            "poly": self.poly.format(),
            "dominant_root": None if self.dominant_root is None else self.dominant_root.to_json(),
            "inside": self.count_inside_unit_disk,
            "on_circle": self.on_unit_circle,
            "outside": self.count_outside,
            "pisot": self.pisot,
            "pisot_note": self.pisot_note,
            "negative_real_roots": [iv.to_json() for iv in self.negative_real_roots],
            "max_nonreal_modulus": None if self.max_nonreal_modulus is None else self.max_nonreal_modulus.to_json(),
            "modulus_note": self.modulus_note,
            "cyclotomic_divisors": self.cyclotomic_divisors,
            "irreducibility": self.irreducibility.to_json(),
            "findings": self.findings,
        }


def root_report(f: Poly) -> RootReport:
    from .algfield import NumberField

    if not f.is_integral() or not f.is_monic():
        raise ValueError("monic integer polynomial required")
    try:
        bracket = NumberField.auto(f).omega_bracket
        dominant = refine_root(f, bracket, Fraction(1, 10 ** 12))
    except ValueError:
        bracket = dominant = None
    inside, on = unit_disk_count(f)
    if bracket is not None:
        pisot, note = is_pisot(f, bracket)
    else:
        pisot, note = NO, "no unique positive root"
    negs = [refine_root(f, iv, Fraction(1, 10 ** 12)) if iv.width else iv
            for iv in real_root_intervals(f, None, 0) if iv.lo < 0]
    mod, mnote = nonreal_modulus_enclosure(f)
    rep = RootReport(f, dominant, inside, on, pisot, note, negs, mod, mnote,
                     cyclotomic_divisors(f), irreducibility_verdict(f))
    return rep


def family_root_report(params, printed: Optional[Poly] = None) -> RootReport:
    """Root report for the family polynomial of ``params``.

    If ``printed`` is given and differs from the polynomial the recurrence
    produces, the difference is recorded as a finding, together with the
    non-real modulus of the printed variant so the two can be compared.
    """
    from .families import family_poly

    f = family_poly(params)
    rep = root_report(f)
    if printed is not None and printed != f:
        diff = [k for k in range(max(len(f), len(printed))) if f[k] != printed[k]]
        terms = ", ".join(f"X^{k}" for k in diff)
        other, _ = nonreal_modulus_enclosure(printed)
        msg = (f"recurrence gives {f}; the quoted polynomial {printed} differs in {terms}")
        if other is not None:
            msg += f" and has non-real modulus near {float(other.mid):.4f}"
        rep.findings.append(msg)
    return rep
