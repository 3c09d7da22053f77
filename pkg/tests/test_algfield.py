import pickle
import random
import threading
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from periodic_jpa.algfield import (
    FieldElem,
    NumberField,
    ResourceLimit,
    ZeroDivisorError,
    check_growth,
    elem_arith,
    elem_floor,
    elem_inv,
    elem_norm,
    elem_sign,
    field_new,
)
from periodic_jpa.exactpoly import Poly

Q3 = NumberField(Poly.parse("-2,-3,1"))          # omega^2 = 3 omega + 2
Q22 = NumberField(Poly.parse("-2,-2,1"))         # omega^2 = 2 omega + 2
C = NumberField(Poly.parse("-2,-1,-2,1"))        # X^3 - 2X^2 - X - 2
C4 = NumberField(Poly.parse("-3,-1,-4,1"))       # X^3 - 4X^2 - X - 3
R17 = NumberField(Poly.parse("-17,0,0,1"), "positive_root")
FIELDS = [Q3, Q22, C, C4, R17, NumberField(Poly.parse("-2,0,-2,-2,1"))]


def omega_mp(F, dps=60):
    with mpmath.workdps(dps):
        roots = mpmath.polyroots([int(c) for c in reversed(F.f.coeffs)], maxsteps=200, extraprec=200)
        reals = [r.real for r in roots if abs(r.imag) < mpmath.mpf(10) ** (-dps // 2)]
        lo = mpmath.mpf(F.omega_bracket.lo.numerator) / F.omega_bracket.lo.denominator
        hi = mpmath.mpf(F.omega_bracket.hi.numerator) / F.omega_bracket.hi.denominator
        return [r for r in reals if lo <= r <= hi][0]


def value_mp(a, dps=60):
    with mpmath.workdps(dps):
        w = omega_mp(a.field, dps)
        return sum(mpmath.mpf(c.numerator) / c.denominator * w ** i for i, c in enumerate(a.coeffs))


def rand_elem(F, rng, size=5):
    return F.elem([Fraction(rng.randint(-size, size), rng.randint(1, 3)) for _ in range(F.n)])


# construction

def test_field_new_brackets():
    F = field_new(Poly.parse("-2,-2,1"))
    assert 2 <= F.omega_bracket.lo and F.omega_bracket.hi <= 3
    F = field_new(Poly.parse("-17,0,0,1"), "positive_root")
    assert 2 <= F.omega_bracket.lo and F.omega_bracket.hi <= 3
    with pytest.raises(ValueError):
        field_new(Poly.parse("1,0,1"), "positive_root")
    with pytest.raises(ValueError):
        field_new(Poly.parse("1,0,1"))


def test_non_monic_rejected():
    with pytest.raises(ValueError):
        NumberField(Poly.parse("-2,-2,2"))


# arithmetic examples

def test_mul_reduces_mod_f():
    w = Q3.omega()
    assert (w - 3) * w == Q3.const(2)
    a = Q3.elem([1, 2])
    assert elem_arith(a, Q3.zero(), "add") == a
    w = C.omega()
    assert w * w * w == C.elem([2, 1, 2])


def test_inverse_examples():
    w = Q3.omega()
    assert elem_inv(w - 3) == w / 2
    assert Q3.one().inv() == Q3.one()
    w = Q22.omega()
    assert w.inv() == (w - 2) / 2
    with pytest.raises(ZeroDivisionError):
        Q3.zero().inv()


def test_sign_examples():
    assert elem_sign(Q22.omega() - 2) == 1
    assert Q22.zero().sign() == 0
    assert (C4.omega() ** 2 - 20).sign() == -1


def test_floor_examples():
    assert elem_floor(C4.omega()) == 4
    assert C4.const(Fraction(7, 2)).floor() == 3
    assert (C4.omega() ** 2).floor() == 19
    assert C4.const(Fraction(-7, 2)).floor() == -4


def test_norm_examples():
    assert elem_norm(Q22.omega() + 1) == 1
    assert C.const(5).norm() == 125
    assert R17.omega().norm() == 17


def test_element_text_round_trip():
    a = C.parse_elem("1,0,1/2")
    assert a.coeffs == (1, 0, Fraction(1, 2))
    assert C.parse_elem(a.format()) == a


def test_mixed_fields_rejected():
    with pytest.raises(ValueError):
        Q3.omega() + Q22.omega()


# properties

@pytest.mark.parametrize("F", FIELDS, ids=lambda F: F.f.format())
def test_ring_axioms(F):
    rng = random.Random(F.n)
    for _ in range(40):
        a, b, c = (rand_elem(F, rng) for _ in range(3))
        assert (a * b) * c == a * (b * c)
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c
        assert (a + b) - b == a


@pytest.mark.parametrize("F", FIELDS, ids=lambda F: F.f.format())
def test_inverse_property(F):
    rng = random.Random(100 + F.n)
    for _ in range(200):
        a = rand_elem(F, rng)
        if a.is_zero():
            continue
        assert a * a.inv() == F.one()


@pytest.mark.parametrize("F", FIELDS, ids=lambda F: F.f.format())
def test_norm_multiplicative(F):
    rng = random.Random(200 + F.n)
    for _ in range(30):
        a, b = rand_elem(F, rng), rand_elem(F, rng)
        assert (a * b).norm() == a.norm() * b.norm()


@pytest.mark.parametrize("F", FIELDS, ids=lambda F: F.f.format())
def test_floor_and_sign_against_mpmath(F):
    rng = random.Random(300 + F.n)
    for _ in range(30):
        a = rand_elem(F, rng, size=40)
        k = a.floor()
        v = value_mp(a)
        assert k <= v < k + 1
        assert (a - k).sign() in (0, 1)
        assert (a - (k + 1)).sign() == -1
        s = a.sign()
        assert s == (0 if a.is_zero() else (1 if v > 0 else -1))


def test_floor_certified_interval():
    a = C4.omega() ** 2
    k = a.floor()
    enc = (a - k).enclosure(200)
    assert 0 <= enc.lo and enc.hi < 1


def test_refined_bracket_shrinks():
    iv = R17.refined_bracket(Fraction(1, 10 ** 30))
    assert iv.width < Fraction(1, 10 ** 30)
    assert iv.lo ** 3 < 17 < iv.hi ** 3


def test_concurrent_refinement_is_consistent():
    F = NumberField(Poly.parse("-3,-1,-5,1"))
    results = []

    def work(seed):
        rng = random.Random(seed)
        for _ in range(20):
            a = rand_elem(F, rng, size=50)
            results.append((a.key(), a.floor()))

    threads = [threading.Thread(target=work, args=(s,)) for s in range(4)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    for key, k in results:
        assert FieldElem(F, key[0], key[1]).floor() == k


def test_zero_divisor_detected():
    # X^4 - X^2 - 2 = (X^2 - 2)(X^2 + 1), omega = sqrt(2)
    F = NumberField(Poly.parse("-2,0,-1,0,1"), "positive_root")
    w = F.omega()
    with pytest.raises(ZeroDivisorError):
        (w ** 2 + 1).inv()
    with pytest.raises(ZeroDivisorError):
        (w ** 2 - 2).sign()
    assert (w ** 2 - 1).sign() == 1


def test_pickle_round_trip():
    a = C.parse_elem("1/3,-2,5")
    b = pickle.loads(pickle.dumps(a))
    assert b == a and b.floor() == a.floor()


def test_growth_guard():
    a = Q3.elem([2 ** 300, 1])
    check_growth([a], 400)
    with pytest.raises(ResourceLimit):
        check_growth([a], 100)


@settings(max_examples=50, deadline=None)
@given(st.lists(st.integers(-10 ** 6, 10 ** 6), min_size=3, max_size=3), st.integers(1, 50))
def test_sign_compatible_with_floor(nums, den):
    a = C.elem([Fraction(x, den) for x in nums])
    k = a.floor()
    assert (a - k).sign() in (0, 1)
    assert (a - k - 1).sign() == -1
