import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from oracles import elem_float_digits
from periodic_jpa.exactpoly import Poly
from periodic_jpa.families import (
    COLUMN_ORDER,
    STRICT_RANGE,
    REMARK2,
    THEOREM,
    FamilyParams,
    alpha0,
    applicable_forms,
    closed_form_state,
    expected_digit_cycle,
    expected_unit,
    family_field,
    family_poly,
    lemma3_check,
    lemma_oracles,
    recurrence_table,
    sharpness_witness,
    theorem_grid,
    verify_family,
)
from periodic_jpa.jpa import expand, hasse_bernstein_unit


def test_params_validation():
    assert FamilyParams(3, 4, 1, (1, 0, 1)).mode == THEOREM
    assert FamilyParams(3, 4, 1, (2, 0, 2)).mode == REMARK2
    for bad in [(3, 2, 1, (1, 0, 1)), (3, 4, 0, (1, 0, 1)), (3, 4, 1, (1, 2, 1)),
                (3, 4, 1, (2, 1, 2)), (3, 4, 1, (1, 0)), (1, 1, 1, (1,))]:
        with pytest.raises(ValueError):
            FamilyParams(*bad)


def test_recurrence_examples():
    t = recurrence_table((1, 0, 1), 3, 8)
    assert t.column(3) == (1, 0, 1)
    assert t.column(6) == (2, 1, 3)
    t = recurrence_table((1, 1), 2, 10)
    assert [t[1, k] for k in range(8)] == [0, 1, 1, 2, 3, 5, 8, 13]


def test_family_poly_examples():
    assert family_poly(FamilyParams(4, 4, 1, (1, 0, 1, 1))) == Poly.parse("-2,0,-2,-2,1")
    assert family_poly(FamilyParams(3, 4, 1, (1, 0, 1))) == Poly.parse("-2,-1,-2,1")
    assert family_poly(FamilyParams(2, 2, 1, (1, 1))) == Poly.parse("-2,-2,1")
    assert family_poly(FamilyParams(4, 5, 10, (1, 0, 0, 1))) == Poly.parse("-11,-10,0,-11,1")


def test_alpha0_examples():
    p = FamilyParams(2, 2, 1, (1, 1))
    F = family_field(p)
    assert alpha0(p, F) == [F.omega()]
    p = FamilyParams(3, 4, 1, (1, 0, 1))
    F = family_field(p)
    a = alpha0(p, F)
    w = F.omega()
    assert a[1] == 2 + w.inv() + 2 * w.inv() ** 2
    assert alpha0(p, F, "remark1")[-1] == w


def test_expected_cycles_and_units():
    assert expected_digit_cycle(FamilyParams(3, 4, 1, (1, 0, 1))) == [(1, 2), (0, 1), (0, 1), (0, 2)]
    assert expected_digit_cycle(FamilyParams(2, 2, 1, (1, 1))) == [(2,), (1,)]
    assert expected_digit_cycle(FamilyParams(3, 6, 1, (1, 0, 1))) == [(1, 4), (0, 1), (0, 1), (0, 1), (0, 1), (0, 4)]
    p = FamilyParams(3, 4, 1, (1, 0, 1))
    F = family_field(p)
    w = F.omega()
    assert expected_unit(p, F) == w ** 2 + w + 1
    p = FamilyParams(2, 2, 1, (1, 1))
    F = family_field(p)
    assert expected_unit(p, F) == F.omega() + 1 and expected_unit(p, F).norm() == 1
    p = FamilyParams(3, 6, 1, (1, 0, 1))
    F = family_field(p)
    w = F.omega()
    assert expected_unit(p, F) == 3 * w ** 2 + w + 2


def test_closed_forms_small_case():
    p = FamilyParams(3, 4, 1, (1, 0, 1))
    F = family_field(p)
    out = expand(alpha0(p, F), 20)
    for nu in range(1, p.m):
        for form in applicable_forms(p, nu):
            assert closed_form_state(p, F, nu, form) == list(out.period_states[nu].alphas)
    # last step, first coordinate: omega^-1 + c_1
    last = closed_form_state(p, F, p.m - 1, "tail")
    assert last[0] == F.omega().inv() + p.c[1]
    with pytest.raises(ValueError):
        closed_form_state(p, F, 0)
    with pytest.raises(ValueError):
        closed_form_state(p, F, p.m)


@pytest.mark.parametrize("args", [(3, 4, 1, (1, 0, 1)), (4, 5, 10, (1, 0, 0, 1)), (2, 2, 1, (1, 1)),
                                  (5, 9, 7, (1, 0, 2, 2, 3)), (4, 4, 1, (1, 0, 1, 1))])
def test_verify_family_passes(args):
    rep = verify_family(FamilyParams(*args))
    assert rep.passed, rep.failures
    assert rep.l0 == 0 and rep.l1 == args[1]
    assert abs(rep.unit_norm) == 1


def test_verify_family_second_example_polynomial():
    rep = verify_family(FamilyParams(4, 5, 10, (1, 0, 0, 1)))
    assert rep.poly == Poly.parse("-11,-10,0,-11,1")


def test_scaled_c0_mode_period():
    rep = verify_family(FamilyParams(3, 4, 1, (2, 0, 2)))
    assert rep.passed and rep.l1 == 12 and rep.l0 == 0


def test_first_digits_match_float_oracle():
    p = FamilyParams(4, 6, 2, (1, 1, 2, 3))
    F = family_field(p)
    rep = verify_family(p)
    assert [tuple(d) for d in rep.digits] == elem_float_digits(alpha0(p, F), p.m)


def test_grid_size_and_validity():
    cases = list(theorem_grid())
    assert len(cases) == len(set(cases))
    assert all(c.mode == THEOREM for c in cases)
    assert {c.n for c in cases} == {2, 3, 4, 5}


def test_omega_lower_bound_on_grid_sample():
    rng = random.Random(3)
    cases = list(theorem_grid())
    for p in rng.sample(cases, 40):
        F = family_field(p)
        a = p.coeffs()
        assert (F.omega() - a[-1]).sign() == 1
        assert a[-1] >= (p.t + 1) * p.c[-1]
        # fractional parts of the starting vector lie in (0, 1)
        for x, d in zip(alpha0(p, F), expected_digit_cycle(p)[0]):
            assert (x - d).sign() == 1 and (x - d - 1).sign() == -1


def test_telescoping_product():
    p = FamilyParams(4, 7, 2, (1, 1, 1, 2))
    F = family_field(p)
    out = expand(alpha0(p, F), 50)
    prod = F.one()
    for s in out.period_states:
        prod = prod * s.alphas[-1]
    assert prod == expected_unit(p, F) == hasse_bernstein_unit(out)


def test_state_m_returns_to_start():
    p = FamilyParams(3, 5, 7, (1, 2, 3))
    F = family_field(p)
    out = expand(alpha0(p, F), 50)
    assert out.l0 == 0 and out.l1 == 5


# recurrence lemmas

@pytest.mark.parametrize("c, n, kinds", [
    ((1, 0, 1), 3, {STRICT_RANGE: 1}),
    ((1, 1), 2, {STRICT_RANGE: 1}),
    ((1, 2, 2, 3, 3), 5, {}),
    ((1, 1, 2, 3), 4, {}),
])
def test_lemma_oracles_examples(c, n, kinds):
    rep = lemma_oracles(c, n, 20)
    assert rep.checks > 0
    assert rep.kinds() == kinds, rep.failures[:5]


def test_column_order_counterexample():
    # c = (1, 0, 0, 1): u_{1,5} = c_3 c_1 + c_0 = 1 but u_{2,5} = c_3 c_2 + c_1 = 0
    t = recurrence_table((1, 0, 0, 1), 4, 6)
    assert t[1, 5] == 1 and t[2, 5] == 0
    rep = lemma_oracles((1, 0, 0, 1), 4, 20)
    assert set(rep.kinds()) == {COLUMN_ORDER, STRICT_RANGE}
    # every other stated identity and inequality holds
    assert all(k in (COLUMN_ORDER, STRICT_RANGE) for k in rep.kinds())


def test_strict_index_range_counterexample():
    # n = 2, c = (1, 1), m = 2, j = 1: u_{1,1} = u_{1,2} = 1, so only index 0 is strict
    t = recurrence_table((1, 1), 2, 4)
    assert t[1, 1] == t[1, 2] == 1
    assert t[0, 1] < t[0, 2]
    rep = lemma_oracles((1, 1), 2, 20)
    assert rep.failures == [f"{STRICT_RANGE}: j=1, m=2, strict=[0]"]


@pytest.mark.parametrize("n", [3, 4, 5, 6, 8])
def test_sharpness_witness(n):
    w = sharpness_witness(n)
    assert w["u_im"] == 0 and w["strong_lhs"] == 1
    assert w["bound_holds"] and w["strong_fails"]


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 6), st.randoms(use_true_random=False))
def test_lemma_oracles_random(n, rng):
    top = rng.randint(1, 5)
    c = (1,) + tuple(sorted(rng.randint(0, top) for _ in range(n - 2))) + (top,)
    rep = lemma_oracles(c, n, 2 * n + 10)
    # only the two known gaps may appear, the range one only at m = n
    assert set(rep.kinds()) <= {COLUMN_ORDER, STRICT_RANGE}
    assert all(f", m={n}," in f for f in rep.failures if f.startswith(STRICT_RANGE))
    if COLUMN_ORDER in rep.kinds():
        assert n >= 4 and c[1] == c[2] == 0


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 6), st.randoms(use_true_random=False))
def test_dominant_root_lemma_random(n, rng):
    top = rng.randint(1, 15)
    a = [rng.randint(1, top)] + sorted(rng.randint(0, top) for _ in range(n - 2)) + [top]
    assert lemma3_check(a) == []


def test_lemma3_rejects_bad_shape():
    assert lemma3_check([3, 0, 1]) != []
