"""Infinite families of purely periodic expansions.

Given c_0..c_{n-1}, n linear recurrences u_{i,k} start from the identity
block u_{i,k} = [i == k] (0 <= i, k <= n-1) and satisfy
u_{i,k} = c_{n-1} u_{i,k-1} + ... + c_0 u_{i,k-n}. For a period length m the
family polynomial is f = X^n - sum_j (u_{j,m} t + c_j) X^j, and the starting
vector built from its positive root omega expands with period exactly m.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Iterator, Optional, Sequence

from .algfield import FieldElem, NumberField, ZeroDivisorError
from .exactpoly import Poly
from .jpa import PURELY_PERIODIC, expand, hasse_bernstein_unit

THEOREM = "theorem"
REMARK2 = "remark2"


@dataclass(frozen=True)
class FamilyParams:
    n: int
    m: int
    t: int
    c: tuple

    def __post_init__(self):
        object.__setattr__(self, "c", tuple(int(x) for x in self.c))
        if len(self.c) != self.n:
            raise ValueError(f"need {self.n} values of c, got {len(self.c)}")
        if self.n < 2 or self.m < self.n or self.t < 1:
            raise ValueError("need m >= n >= 2 and t >= 1")
        if any(x < 0 for x in self.c):
            raise ValueError("c must be non-negative")
        if self.mode is None:
            raise ValueError(f"c = {self.c} satisfies neither the c0 = 1 nor the c0 | c_i constraints")

    @property
    def mode(self) -> Optional[str]:
        c, n = self.c, self.n
        mono = all(c[i] <= c[i + 1] for i in range(1, n - 1))
        if c[0] == 1 and c[-1] >= 1 and mono:
            return THEOREM
        if c[0] > 1 and all(x % c[0] == 0 for x in c[1:]) and c[-1] >= 1:
            return REMARK2
        return None

    def coeffs(self, table: Optional["RecurrenceTable"] = None) -> list[int]:
        """a_j = u_{j,m} t + c_j."""
        table = table or recurrence_table(self.c, self.n, self.m)
        return [table[j, self.m] * self.t + self.c[j] for j in range(self.n)]

    def to_json(self) -> dict:
        return {"n": self.n, "m": self.m, "t": self.t, "c": list(self.c)}


class RecurrenceTable:
    """u[i][k] for 0 <= i <= n-1, 0 <= k <= M."""

    def __init__(self, c: Sequence[int], n: int, M: int):
        if len(c) != n:
            raise ValueError("len(c) must equal n")
        if M < n - 1:
            raise ValueError("M must be at least n-1")
        self.c = tuple(c)
        self.n = n
        self.M = M
        rows = []
        for i in range(n):
            row = [1 if i == k else 0 for k in range(n)]
            for k in range(n, M + 1):
                row.append(sum(c[l] * row[k - n + l] for l in range(n)))
            rows.append(row[: M + 1])
        self.u = rows

    def __getitem__(self, ik: tuple[int, int]) -> int:
        i, k = ik
        return self.u[i][k]

    def column(self, k: int) -> tuple:
        return tuple(self.u[i][k] for i in range(self.n))


def recurrence_table(c: Sequence[int], n: int, M: int) -> RecurrenceTable:
    return RecurrenceTable(c, n, M)


def family_poly(p: FamilyParams) -> Poly:
    return Poly([-a for a in p.coeffs()] + [1])


def family_field(p: FamilyParams) -> NumberField:
    return NumberField.auto(family_poly(p))


def _poly_in_omega(F: NumberField, coeffs: Sequence[int]) -> FieldElem:
    return F.elem(list(coeffs))


def alpha0(p: FamilyParams, F: NumberField, form: str = "sum") -> list[FieldElem]:
    """Starting vector: sum_{j<=i} a_j omega^(j-i), or the polynomial form
    omega^(n-i) - sum_{j>i} a_j omega^(j-i)."""
    a = p.coeffs()
    n = p.n
    w = F.omega()
    if form == "sum":
        winv = w.inv()
        powers = [F.one()]
        for _ in range(n):
            powers.append(powers[-1] * winv)
        return [sum((powers[i - j] * a[j] for j in range(i + 1)), F.zero()) for i in range(1, n)]
    if form == "remark1":
        out = []
        for i in range(1, n):
            cs = [0] * n
            cs[n - i] += 1
            for j in range(i + 1, n):
                cs[j - i] -= a[j]
            out.append(F.elem(cs))
        return out
    raise ValueError(f"unknown form {form!r}")


def expected_digit_cycle(p: FamilyParams) -> list[tuple]:
    a = p.coeffs()
    c, n, m = p.c, p.n, p.m
    rows = [tuple(a[1:])]
    for nu in range(1, m):
        if nu <= m - n + 1:
            rows.append(tuple(c[1:]))
        else:
            k = m - nu
            rows.append(tuple(c[1:k + 1]) + tuple(a[k + 1:]))
    return rows


def expected_unit(p: FamilyParams, F: NumberField) -> FieldElem:
    table = recurrence_table(p.c, p.n, p.m)
    return _poly_in_omega(F, table.column(p.m))


def closed_form_state(p: FamilyParams, F: NumberField, nu: int, form: Optional[str] = None) -> list[FieldElem]:
    """Closed-form alpha^(nu) for 1 <= nu <= m-1.

    ``form`` is one of "first" (nu = 1, general c_0), "induction"
    (1 <= nu <= m-n+1, c_0 = 1) or "tail" (m-n+1 <= nu <= m-1). Defaults
    to "tail" from nu = m-n+1 on and "induction" before that.
    """
    n, m, t, c = p.n, p.m, p.t, p.c
    if not 1 <= nu <= m - 1:
        raise ValueError(f"nu must lie in 1..{m - 1}")
    if form is None:
        form = "tail" if nu >= m - n + 1 else "induction"
    table = recurrence_table(c, n, m)
    u = table.u

    if form == "first":
        if nu != 1:
            raise ValueError("the first-step form only covers nu = 1")
        den = _poly_in_omega(F, [c[0] * u[k][m - 1] for k in range(n)])
        dinv = den.inv()
        out = []
        for i in range(1, n):
            num = [sum(c[j] * u[k][m - 1 - i + j] for j in range(i + 1)) for k in range(n)]
            out.append(_poly_in_omega(F, num) * dinv)
        return out

    if form == "induction":
        if not 1 <= nu <= m - n + 1:
            raise ValueError(f"induction form covers 1..{m - n + 1}")
        if c[0] != 1:
            raise ValueError("induction form assumes c_0 = 1")
        dinv = _poly_in_omega(F, [u[k][m - nu] for k in range(n)]).inv()
        out = []
        for i in range(1, n):
            num = []
            for k in range(n):
                v = c[i] * u[k][m - nu] + c[0] * u[k][m - nu - i]
                v += sum(c[j] * u[k][m - nu - i + j] for j in range(1, i))
                num.append(v)
            out.append(_poly_in_omega(F, num) * dinv)
        return out

    if form == "tail":
        if not m - n + 1 <= nu <= m - 1:
            raise ValueError(f"tail form covers {m - n + 1}..{m - 1}")
        a = [u[j][m] * t + c[j] for j in range(n)]
        w = F.omega()
        winv = w.inv()
        ipow = [F.one()]
        for _ in range(n):
            ipow.append(ipow[-1] * winv)
        out = []
        for i in range(1, n):
            if i <= m - nu:
                e = ipow[i]
                for j in range(1, i + 1):
                    e = e + ipow[i - j] * c[j]
            else:
                cs = [0] * n
                cs[n - i] += 1
                for j in range(i + 1, n):
                    cs[j - i] -= a[j]
                e = F.elem(cs)
            out.append(e)
        return out
    raise ValueError(f"unknown form {form!r}")


def applicable_forms(p: FamilyParams, nu: int) -> list[str]:
    forms = []
    if nu == 1:
        forms.append("first")
    if p.c[0] == 1 and 1 <= nu <= p.m - p.n + 1:
        forms.append("induction")
    if p.m - p.n + 1 <= nu <= p.m - 1:
        forms.append("tail")
    return forms


@dataclass
class VerificationReport:
    params: FamilyParams
    mode: str
    passed: bool = True
    status: str = ""
    l0: Optional[int] = None
    l1: Optional[int] = None
    expected_l1: Optional[int] = None
    digits: list = field(default_factory=list)
    unit: Optional[FieldElem] = None
    unit_norm: Optional[int] = None
    poly: Optional[Poly] = None
    failures: list = field(default_factory=list)
    findings: list = field(default_factory=list)
    first_divergence: Optional[int] = None

    def fail(self, msg: str, step: Optional[int] = None) -> None:
        self.passed = False
        self.failures.append(msg)
        if step is not None and (self.first_divergence is None or step < self.first_divergence):
            self.first_divergence = step


def verify_family(p: FamilyParams, budget: Optional[int] = None, closed_forms: bool = True) -> VerificationReport:
    """Run the engine on a family member and check every predicted quantity."""
    mode = p.mode
    rep = VerificationReport(params=p, mode=mode)
    f = family_poly(p)
    rep.poly = f
    try:
        F = NumberField.auto(f)
    except ValueError as exc:
        rep.fail(f"field construction failed: {exc}")
        return rep
    expected_l1 = p.m if mode == THEOREM else math.lcm(p.m, p.n)
    rep.expected_l1 = expected_l1
    budget = budget or 2 * expected_l1 + 10
    try:
        a0 = alpha0(p, F, "sum")
        a0_alt = alpha0(p, F, "remark1")
        if [x.key() for x in a0] != [x.key() for x in a0_alt]:
            rep.fail("starting-vector forms disagree", 0)
        out = expand(a0, budget)
    except ZeroDivisorError as exc:
        rep.fail(f"zero divisor: {exc}; factor {exc.factor}")
        rep.findings.append(f"reducible defining polynomial detected: factor {exc.factor}")
        return rep

    rep.status, rep.l0, rep.l1 = out.status, out.l0, out.l1
    rep.digits = out.digits
    if out.status != PURELY_PERIODIC:
        rep.fail(f"expected purely periodic, got {out.status} (l0={out.l0})")
        return rep
    if out.l1 != expected_l1:
        rep.fail(f"period length {out.l1} != {expected_l1}")

    eps = hasse_bernstein_unit(out)
    rep.unit = eps
    nrm = eps.norm()
    rep.unit_norm = int(nrm) if nrm.denominator == 1 else None
    if abs(nrm) != 1:
        rep.fail(f"|norm(unit)| = {abs(nrm)} != 1")

    if mode == THEOREM:
        expected = expected_digit_cycle(p)
        for nu, (got, want) in enumerate(zip(out.digits, expected)):
            if tuple(got) != tuple(want):
                rep.fail(f"digits at step {nu}: {got} != {want}", nu)
                break
        want_unit = expected_unit(p, F)
        if eps.key() != want_unit.key():
            rep.fail(f"unit {eps.format()} != {want_unit.format()}")
        if closed_forms:
            for nu in range(1, p.m):
                engine = out.period_states[nu].alphas
                for form in applicable_forms(p, nu):
                    cf = closed_form_state(p, F, nu, form)
                    if [x.key() for x in cf] != [x.key() for x in engine]:
                        rep.fail(f"closed form '{form}' differs from engine at step {nu}", nu)
    else:
        reps = expected_l1 // p.m
        rep.findings.append(
            f"scaled-c0 pattern: {reps} blocks of length {p.m}; digits recorded, not asserted"
        )
    return rep


def theorem_grid(n_values: Sequence[int] = (2, 3, 4, 5), m_span: int = 5,
                 t_values: Sequence[int] = (1, 2, 7), c_max: int = 3) -> Iterator[FamilyParams]:
    """All valid c_0 = 1 parameter tuples on the default verification grid."""
    for n in n_values:
        for mids in itertools.combinations_with_replacement(range(c_max + 1), n - 1):
            c = (1,) + tuple(mids)
            if c[-1] < 1:
                continue
            for m in range(n, n + m_span + 1):
                for t in t_values:
                    yield FamilyParams(n, m, t, c)


# property oracles for the recurrence and the dominant-root lemma

@dataclass
class LemmaReport:
    """Outcome of the recurrence checks; failures are "kind: detail" strings."""

    c: tuple
    n: int
    M: int
    checks: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, ok: bool, kind: str, detail: str) -> None:
        self.checks += 1
        if not ok:
            self.failures.append(f"{kind}: {detail}")

    def kinds(self) -> dict:
        out: dict = {}
        for msg in self.failures:
            k = msg.split(":", 1)[0]
            out[k] = out.get(k, 0) + 1
        return out


KRONECKER = "identity block"
SHIFT = "shift identity"
CONVOLUTION = "convolution identity"
MONOTONE = "monotone in m"
STRICT_GROWTH = "strict growth in m"
NONZERO = "nonzero column"
COLUMN_ORDER = "column order"
BOUND = "plus-one bound"
STRICT_EXISTS = "strict index exists"
STRICT_RANGE = "strict index in 1..n-1"
STRICT_ABOVE = "strict index above tight ones"


def lemma_oracles(c: Sequence[int], n: int, M: int) -> LemmaReport:
    """Check the recurrence identities and inequalities over 0..M, as stated.

    Two stated inequalities do not hold everywhere on the default grid and
    show up as failures of their kind: the column order u_{i,m} >= u_{i-1,m}
    breaks when c_1 = c_2 = 0 (e.g. c = (1,0,0,1), m = 5), and at m = n the
    only strict index can be 0, outside the stated range 1..n-1.
    """
    c = tuple(c)
    if M < 2 * n:
        raise ValueError("M must be at least 2n")
    tab = recurrence_table(c, n, M)
    u = tab.u
    rep = LemmaReport(c, n, M)

    for i in range(n):
        for k in range(n):
            rep.check(u[i][k] == (i == k), KRONECKER, f"u[{i}][{k}]")
        rep.check(u[i][n] == c[i], KRONECKER, f"u[{i}][n] != c_{i}")

    for m in range(1, M + 1):
        rep.check(u[0][m] == c[0] * u[n - 1][m - 1], SHIFT, f"i=0, m={m}")
        for i in range(1, n):
            rep.check(u[i][m] == c[i] * u[n - 1][m - 1] + u[i - 1][m - 1], SHIFT, f"i={i}, m={m}")
    for i in range(1, n):
        for m in range(i + 1, M + 1):
            rhs = sum(c[j] * u[n - 1][m - i + j - 1] for j in range(i + 1))
            rep.check(u[i][m] == rhs, CONVOLUTION, f"i={i}, m={m}")

    for m in range(n, M + 1):
        rep.check(all(u[i][m] >= u[i][m - 1] for i in range(n)), MONOTONE, f"m={m}")
        rep.check(any(u[i][m] > u[i][m - 1] for i in range(n)), STRICT_GROWTH, f"m={m}")
    for m in range(0, M + 1):
        rep.check(any(u[i][m] >= 1 for i in range(n)), NONZERO, f"m={m}")

    for m in range(n - 1, M + 1):
        for i in range(2, n):
            rep.check(u[i][m] >= u[i - 1][m], COLUMN_ORDER, f"i={i}, m={m}")
        rep.check(u[n - 1][m] >= u[0][m], COLUMN_ORDER, f"top vs bottom, m={m}")

    ordered = all(c[i] <= c[i + 1] for i in range(1, n - 1))
    if c[0] == 1 and ordered:
        for m in range(n, M + 1):
            for j in range(1, n):
                lhs = [sum(c[l] * u[i][m - j + l] for l in range(j)) for i in range(n)]
                for i in range(n):
                    rep.check(lhs[i] <= u[i][m] + 1, BOUND, f"i={i}, j={j}, m={m}")
                strict = [i for i in range(n) if lhs[i] < u[i][m]]
                rep.check(bool(strict), STRICT_EXISTS, f"j={j}, m={m}")
                rep.check(any(i >= 1 for i in strict), STRICT_RANGE, f"j={j}, m={m}, strict={strict}")
                tight = [i for i in range(n) if lhs[i] == u[i][m] + 1]
                if tight:
                    rep.check(bool(strict) and max(strict) > max(tight), STRICT_ABOVE, f"j={j}, m={m}")
    return rep


def sharpness_witness(n: int) -> dict:
    """The boundary case showing the strong inequality can fail by one.

    c_0 = c_{n-1} = 1, other c_i = 0, i = n-2, j = n-1, m = 2n-3.
    """
    if n < 3:
        raise ValueError("witness needs n >= 3")
    c = [0] * n
    c[0] = c[-1] = 1
    i, j, m = n - 2, n - 1, 2 * n - 3
    u = recurrence_table(c, n, 2 * n + 1).u
    strong_lhs = sum(c[l] * u[i][m - j + l] for l in range(1, j)) + u[i][m - j]
    return {"n": n, "u_im": u[i][m], "strong_lhs": strong_lhs,
            "bound_holds": strong_lhs <= u[i][m] + 1, "strong_fails": strong_lhs > u[i][m]}


def lemma3_check(a: Sequence[int]) -> list[str]:
    """Check the dominant-root bracket and the partial-sum bounds for
    g = X^n - a_{n-1}X^{n-1} - ... - a_0. Returns a list of failures."""
    from .exactpoly import count_real_roots, lemma_shape_coeffs

    n = len(a)
    g = Poly([-x for x in a] + [1])
    fails = []
    if lemma_shape_coeffs(g) is None:
        return [f"{g} is not shape-valid"]
    top = a[-1]
    if count_real_roots(g, lo=0, hi=None) != 1 or g.sign_at(0) == 0:
        fails.append("not exactly one non-negative root")
    if count_real_roots(g, lo=top, hi=top + 1) != 1 or g.sign_at(top + 1) == 0:
        fails.append("root outside (a_{n-1}, a_{n-1}+1)")
    F = NumberField(g, "lemma3")
    w = F.omega()
    winv = w.inv()
    for i in range(1, n):
        s = sum((winv ** (i - j) * a[j] for j in range(i)), F.zero())
        if s.sign() <= 0 or (F.one() - s).sign() <= 0:
            fails.append(f"partial sum {i} not in (0, 1)")
    return fails
