"""Jacobi-Perron stepping, exact cycle detection and Hasse-Bernstein units."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Optional, Sequence

from .algfield import FieldElem, ResourceLimit, bit_limit, check_growth

PURELY_PERIODIC = "PurelyPeriodic"
PERIODIC = "Periodic"
TERMINATED = "Terminated"
BUDGET_EXHAUSTED = "BudgetExhausted"


class Terminated(Exception):
    """The first coordinate equals its floor, so the next state is undefined."""

    def __init__(self, step: int, digits: tuple):
        super().__init__(f"expansion terminates at step {step}")
        self.step = step
        self.digits = digits


@dataclass(frozen=True)
class JpaState:
    alphas: tuple
    step: int = 0

    def __post_init__(self):
        if len(self.alphas) < 1:
            raise ValueError("state needs at least one coordinate")
        f0 = self.alphas[0].field
        if any(a.field != f0 for a in self.alphas):
            raise ValueError("all coordinates must share one field")

    def key(self) -> tuple:
        return tuple(a.key() for a in self.alphas)

    @property
    def field(self):
        return self.alphas[0].field


@dataclass
class ExpansionOutcome:
    status: str
    l0: Optional[int]
    l1: Optional[int]
    digits: list
    period_states: list = field(default_factory=list)
    steps_used: int = 0
    error: str = ""

    @property
    def periodic(self) -> bool:
        return self.status in (PURELY_PERIODIC, PERIODIC)

    def digit_cycle(self) -> list:
        if not self.periodic:
            raise ValueError("outcome is not periodic")
        return self.digits[self.l0:self.l0 + self.l1]


def jpa_step(state: JpaState) -> tuple[tuple, JpaState]:
    alphas = state.alphas
    digits = tuple(a.floor() for a in alphas)
    d1 = alphas[0] - digits[0]
    if d1.is_zero():
        raise Terminated(state.step, digits)
    inv = d1.inv()
    nxt = [(a - d) * inv for a, d in zip(alphas[1:], digits[1:])]
    nxt.append(inv)
    return digits, JpaState(tuple(nxt), state.step + 1)


def jpa_states(alpha0: Sequence[FieldElem]) -> Iterator[tuple[tuple, JpaState]]:
    """Yield (digits, state) pairs forever, starting from state 0."""
    state = JpaState(tuple(alpha0), 0)
    while True:
        digits, nxt = jpa_step(state)
        yield digits, state
        state = nxt


def expand(alpha0: Sequence[FieldElem], budget: int, limit: Optional[int] = None) -> ExpansionOutcome:
    """Run up to ``budget`` steps, detecting the first repeated exact state.

    Raises ResourceLimit if coefficients outgrow ``limit`` bits.
    """
    if budget < 1:
        raise ValueError("budget must be positive")
    limit = bit_limit() if limit is None else limit
    state = JpaState(tuple(alpha0), 0)
    seen = {state.key(): 0}
    states = [state]
    digits: list = []
    for nu in range(budget):
        try:
            d, state = jpa_step(state)
        except Terminated as exc:
            digits.append(exc.digits)
            return ExpansionOutcome(TERMINATED, None, None, digits, steps_used=nu + 1)
        digits.append(d)
        check_growth(state.alphas, limit)
        k = state.key()
        mu = seen.get(k)
        if mu is not None:
            step = nu + 1
            l0, l1 = mu, step - mu
            return ExpansionOutcome(
                PURELY_PERIODIC if l0 == 0 else PERIODIC,
                l0, l1, digits[: l0 + l1], states[l0:l0 + l1], steps_used=step,
            )
        seen[k] = nu + 1
        states.append(state)
    return ExpansionOutcome(BUDGET_EXHAUSTED, None, None, digits, steps_used=budget)


def hasse_bernstein_unit(out: ExpansionOutcome) -> FieldElem:
    """Product of the last coordinates over one period."""
    if not out.periodic:
        raise ValueError(f"no unit for a {out.status} expansion")
    states = out.period_states
    eps = states[0].field.one()
    for s in states:
        eps = eps * s.alphas[-1]
    return eps


def replay_period(out: ExpansionOutcome) -> bool:
    """Step l1 times from state(l0) and check the state comes back exactly."""
    start = out.period_states[0]
    state = start
    for _ in range(out.l1):
        _, state = jpa_step(state)
    return state.key() == start.key()


__all__ = [
    "BUDGET_EXHAUSTED", "ExpansionOutcome", "JpaState", "PERIODIC", "PURELY_PERIODIC",
    "ResourceLimit", "TERMINATED", "Terminated", "expand", "hasse_bernstein_unit",
    "jpa_states", "jpa_step", "replay_period",
]
