"""Expansions of (m^(1/n), ..., m^((n-1)/n)) and scans over m."""
from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from functools import partial
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Optional

from .algfield import FieldElem, NumberField, ResourceLimit, ZeroDivisorError
from .exactpoly import Poly, integer_nth_root
from .jpa import expand, hasse_bernstein_unit, replay_period
from .records import ScanRecord

DEFAULT_BUDGET = 2000


class PerfectPowerError(ValueError):
    """m^(1/n) generates a field of degree below n."""


@dataclass(frozen=True)
class PureRootCase:
    m: int
    n: int
    field: NumberField


def degenerate_power(m: int, n: int) -> Optional[int]:
    """Smallest d > 1 dividing n with m a perfect d-th power, else None."""
    for d in range(2, n + 1):
        if n % d == 0:
            r = integer_nth_root(m, d)
            if r ** d == m:
                return d
    return None


def pure_root_alpha0(m: int, n: int) -> tuple[PureRootCase, list[FieldElem]]:
    if m < 2 or n < 2:
        raise ValueError("need m >= 2 and n >= 2")
    d = degenerate_power(m, n)
    if d is not None:
        raise PerfectPowerError(f"{m} is a perfect power with exponent {d}, so X^{n} - {m} is reducible")
    f = Poly([-m] + [0] * (n - 1) + [1])
    F = NumberField(f, "positive_root")
    w = F.omega()
    alphas = [w]
    for _ in range(n - 2):
        alphas.append(alphas[-1] * w)
    return PureRootCase(m, n, F), alphas


def run_expansion(kind: str, params: dict, alpha0: list, budget: int) -> ScanRecord:
    """Expand and package the outcome, with unit and replay checks when periodic."""
    t0 = time.perf_counter()
    rec = ScanRecord(kind=kind, params=params)
    try:
        out = expand(alpha0, budget)
    except ResourceLimit as exc:
        rec.status = "ResourceLimit"
        rec.findings.append(str(exc))
    except ZeroDivisorError as exc:
        rec.status = "ZeroDivisor"
        rec.findings.append(str(exc))
    else:
        rec.status = out.status
        rec.l0, rec.l1 = out.l0, out.l1
        rec.steps_used = out.steps_used
        rec.set_digits(out.digits)
        if out.periodic:
            eps = hasse_bernstein_unit(out)
            rec.unit_coeffs = [str(c) for c in eps.coeffs]
            rec.unit_norm = str(eps.norm())
            if abs(eps.norm()) != 1:
                rec.findings.append("Hasse-Bernstein product is not a unit")
            if not replay_period(out):
                rec.findings.append("period replay failed")
    rec.wall_ms = round((time.perf_counter() - t0) * 1000, 3)
    return rec


def nthroot_record(m: int, n: int, budget: int) -> ScanRecord:
    params = {"n": n, "m": m, "budget": budget}
    d = degenerate_power(m, n)
    if d is not None:
        rec = ScanRecord(kind="nthroot", params=params, status="degenerate")
        rec.findings.append(f"m is a perfect power with exponent {d}; skipped")
        return rec
    _, alphas = pure_root_alpha0(m, n)
    return run_expansion("nthroot", params, alphas, budget)


def conjecture_record(x: int, budget: int) -> ScanRecord:
    m = x ** 3 - x
    params = {"x": x, "m": m, "budget": budget}
    _, alphas = pure_root_alpha0(m, 3)
    rec = run_expansion("conjecture", params, alphas, budget)
    if rec.status == "BudgetExhausted":
        rec.findings.append(f"no period within {budget} steps")
    return rec


def ordered_map(fn: Callable, items: Iterable, threads: int = 1) -> Iterator:
    """Map a picklable fn over items, yielding results in input order.

    With threads > 1 the work goes to a process pool (the expansions are
    CPU-bound pure Python), and pool.map keeps the output order fixed.
    """
    items = list(items)
    if threads <= 1 or len(items) <= 1:
        for it in items:
            yield fn(it)
        return
    with ProcessPoolExecutor(max_workers=threads) as pool:
        yield from pool.map(fn, items)


def scan_nth_roots(n: int, m_from: int, m_to: int, budget: int = DEFAULT_BUDGET,
                   threads: int = 1, skip: Optional[set] = None) -> Iterator[ScanRecord]:
    if m_from < 2 or m_to < m_from:
        raise ValueError("need 2 <= from <= to")
    if budget < 1:
        raise ValueError("budget must be positive")
    ms = [m for m in range(m_from, m_to + 1)
          if not skip or ScanRecord.params_key({"n": n, "m": m, "budget": budget}) not in skip]
    yield from ordered_map(partial(nthroot_record, n=n, budget=budget), ms, threads)


def conjecture_scan(x_from: int, x_to: int, budget: int = DEFAULT_BUDGET,
                    threads: int = 1, skip: Optional[set] = None) -> Iterator[ScanRecord]:
    if x_from < 2 or x_to < x_from:
        raise ValueError("need 2 <= x_from <= x_to")
    xs = [x for x in range(x_from, x_to + 1)
          if not skip or ScanRecord.params_key({"x": x, "m": x ** 3 - x, "budget": budget}) not in skip]
    yield from ordered_map(partial(conjecture_record, budget=budget), xs, threads)
