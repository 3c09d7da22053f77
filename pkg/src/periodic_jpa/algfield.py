"""Exact arithmetic in Q[X]/(f) with a distinguished real root omega.

Elements are stored as an integer numerator vector over a positive common
denominator, reduced so that (numerators, denominator) is canonical. Real
evaluation uses dyadic brackets L/2^k < omega < (L+1)/2^k that are certified
by exact sign checks of f, so floor and sign never guess.
"""
from __future__ import annotations

import math
import os
import threading
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .exactpoly import (
    Interval,
    Poly,
    ShapeError,
    count_real_roots,
    isolate_dominant_root,
    isolate_positive_root,
    poly_gcd,
    resultant,
)

DEFAULT_BIT_LIMIT = 1_000_000


class ZeroDivisorError(ArithmeticError):
    """Raised when an element shares a factor with the defining polynomial."""

    def __init__(self, msg: str = "zero divisor - defining polynomial reducible", factor: Optional[Poly] = None):
        super().__init__(msg)
        self.factor = factor


class ResourceLimit(ArithmeticError):
    """Coefficient growth exceeded the configured bit limit."""


def bit_limit() -> int:
    return int(os.environ.get("JPA_BIT_LIMIT", DEFAULT_BIT_LIMIT))


class NumberField:
    """Q[X]/(f) for monic integer f, with a certified bracket for omega.

    ``mode="lemma3"`` requires the dominant-root coefficient shape and uses
    the bracket (a_{n-1}, a_{n-1}+1); ``mode="positive_root"`` accepts any
    monic f with exactly one positive real root.
    """

    def __init__(self, f: Poly, mode: str = "lemma3"):
        if not f.is_integral() or not f.is_monic():
            raise ValueError(f"defining polynomial must be monic with integer coefficients: {f}")
        if f.degree < 2:
            raise ValueError("defining polynomial must have degree >= 2")
        if mode == "lemma3":
            bracket = isolate_dominant_root(f)
        elif mode == "positive_root":
            bracket = isolate_positive_root(f)
        else:
            raise ValueError(f"unknown field mode {mode!r}")
        self.f = f
        self.n = f.degree
        self.mode = mode
        self.omega_bracket = bracket
        # X^n = sum red[j] X^j
        self._red = tuple(-c for c in f.coeffs[:-1])
        self._sign_lo = f.sign_at(bracket.lo)
        self._approx: dict[int, int] = {}
        self._lock = threading.Lock()

    @classmethod
    def auto(cls, f: Poly) -> "NumberField":
        """Lemma-3 bracket when the shape allows it, positive-root mode otherwise."""
        try:
            return cls(f, "lemma3")
        except ShapeError:
            return cls(f, "positive_root")

    def __eq__(self, other) -> bool:
        return isinstance(other, NumberField) and self.f == other.f

    def __hash__(self) -> int:
        return hash(self.f)

    def __repr__(self) -> str:
        return f"NumberField({self.f}, omega in {self.omega_bracket})"

    def __getstate__(self):
        return {"f": self.f, "mode": self.mode}

    def __setstate__(self, state):
        self.__init__(state["f"], state["mode"])

    # element constructors
    def elem(self, coeffs: Sequence) -> "FieldElem":
        return FieldElem.from_rationals(self, coeffs)

    def const(self, c) -> "FieldElem":
        return FieldElem.from_rationals(self, [c])

    def zero(self) -> "FieldElem":
        return FieldElem(self, (0,) * self.n, 1)

    def one(self) -> "FieldElem":
        return self.const(1)

    def omega(self) -> "FieldElem":
        return self.elem([0, 1])

    def from_poly(self, p: Poly) -> "FieldElem":
        return self.elem((p % self.f).coeffs)

    def parse_elem(self, text: str) -> "FieldElem":
        text = text.strip().replace("−", "-")
        return self.elem([Fraction(t.strip()) for t in text.split(",")])

    # dyadic approximations of omega
    def omega_dyadic(self, k: int) -> int:
        """Integer L with L/2^k < omega < (L+1)/2^k (certified)."""
        with self._lock:
            hit = self._approx.get(k)
        if hit is not None:
            return hit
        L = self._compute_dyadic(k)
        with self._lock:
            self._approx[k] = L
        return L

    def _sign_f_scaled(self, x: int, k: int) -> int:
        # sign of f(x / 2^k)
        n = self.n
        acc = 0
        for j in range(n, -1, -1):
            acc = acc * x + (self.f.coeffs[j] << (k * (n - j)))
        return (acc > 0) - (acc < 0)

    def _certify(self, L: int, k: int) -> bool:
        lo = Fraction(L, 1 << k)
        hi = Fraction(L + 1, 1 << k)
        # the sub-bracket must stay inside the isolating bracket
        if lo < self.omega_bracket.lo or hi > self.omega_bracket.hi:
            return False
        s_lo = self._sign_f_scaled(L, k)
        s_hi = self._sign_f_scaled(L + 1, k)
        return s_lo == self._sign_lo and s_hi == -self._sign_lo

    def _compute_dyadic(self, k: int) -> int:
        # seed from the best cached coarser level, or from the bracket
        with self._lock:
            coarser = [j for j in self._approx if j < k]
        if coarser:
            j = max(coarser)
            x = self._approx[j] << (k - j)
        else:
            x = int(self.omega_bracket.mid * (1 << k))
        fcs = self.f.coeffs
        dcs = self.f.derivative().coeffs
        n = self.n
        for _ in range(200):
            if self._certify(x, k):
                return x
            # fixed-point Newton step
            F = sum(c * x ** j << (k * (n - j)) for j, c in enumerate(fcs))
            Fp = sum(c * x ** j << (k * (n - 1 - j)) for j, c in enumerate(dcs))
            if Fp == 0:
                break
            step = F // Fp
            if step == 0:
                for cand in (x - 1, x + 1):
                    if self._certify(cand, k):
                        return cand
                break
            x -= step
        return self._bisect_dyadic(k)

    def _bisect_dyadic(self, k: int) -> int:
        lo = self.omega_bracket.lo
        hi = self.omega_bracket.hi
        s = self._sign_lo
        while hi - lo > Fraction(1, 1 << k):
            m = (lo + hi) / 2
            sm = self.f.sign_at(m)
            if sm == s:
                lo = m
            else:
                hi = m
        L = math.floor(lo * (1 << k))
        for cand in (L, L - 1, L + 1):
            if self._certify(cand, k):
                return cand
        raise ArithmeticError("failed to certify a dyadic bracket for omega")

    def refined_bracket(self, eps: Fraction) -> Interval:
        k = 64
        while Fraction(1, 1 << k) >= eps:
            k *= 2
        L = self.omega_dyadic(k)
        return Interval(Fraction(L, 1 << k), Fraction(L + 1, 1 << k))


def field_new(f: Poly, mode: str = "lemma3") -> NumberField:
    return NumberField(f, mode)


def _reduce(field: NumberField, prod: list) -> list:
    n = field.n
    red = field._red
    for k in range(len(prod) - 1, n - 1, -1):
        c = prod[k]
        if c:
            base = k - n
            for j, r in enumerate(red):
                if r:
                    prod[base + j] += c * r
        prod.pop()
    return prod + [0] * (n - len(prod))


class FieldElem:
    """c_0 + c_1 omega + ... + c_{n-1} omega^{n-1}, stored as integers over ``den``."""

    __slots__ = ("field", "num", "den")

    def __init__(self, field: NumberField, num: Sequence[int], den: int = 1, _normalized: bool = False):
        if not _normalized:
            num = tuple(num)
            if len(num) != field.n:
                raise ValueError(f"expected {field.n} coefficients, got {len(num)}")
            if den == 0:
                raise ZeroDivisionError("zero denominator")
            if den < 0:
                num = tuple(-c for c in num)
                den = -den
            g = math.gcd(den, *num)
            if g > 1:
                num = tuple(c // g for c in num)
                den //= g
        self.field = field
        self.num = num
        self.den = den

    @classmethod
    def from_rationals(cls, field: NumberField, coeffs: Sequence) -> "FieldElem":
        fr = [Fraction(c) for c in coeffs]
        if len(fr) > field.n:
            return field.from_poly(Poly(fr))
        fr += [Fraction(0)] * (field.n - len(fr))
        den = math.lcm(*(c.denominator for c in fr))
        return cls(field, tuple(int(c * den) for c in fr), den)

    # representation
    @property
    def coeffs(self) -> tuple:
        return tuple(Fraction(c, self.den) for c in self.num)

    def key(self) -> tuple:
        return (self.num, self.den)

    def format(self) -> str:
        return ",".join(str(c) for c in self.coeffs)

    def to_poly(self) -> Poly:
        return Poly(self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.num)

    def is_rational(self) -> bool:
        return not any(self.num[1:])

    def max_bits(self) -> int:
        return max(max((abs(c).bit_length() for c in self.num), default=0), self.den.bit_length())

    def __repr__(self) -> str:
        return f"FieldElem({self.format()})"

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldElem):
            return self.field == other.field and self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction)):
            return self == self.field.const(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    # arithmetic
    def _coerce(self, other) -> "FieldElem":
        if isinstance(other, FieldElem):
            if other.field is not self.field and other.field != self.field:
                raise ValueError("field mismatch")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.const(other)
        raise TypeError(f"cannot combine FieldElem with {type(other).__name__}")

    def __add__(self, other) -> "FieldElem":
        o = self._coerce(other)
        if self.den == o.den:
            return FieldElem(self.field, tuple(a + b for a, b in zip(self.num, o.num)), self.den)
        return FieldElem(self.field, tuple(a * o.den + b * self.den for a, b in zip(self.num, o.num)),
                         self.den * o.den)

    __radd__ = __add__

    def __neg__(self) -> "FieldElem":
        return FieldElem(self.field, tuple(-a for a in self.num), self.den, _normalized=True)

    def __sub__(self, other) -> "FieldElem":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "FieldElem":
        return self._coerce(other) - self

    def __mul__(self, other) -> "FieldElem":
        o = self._coerce(other)
        a, b = self.num, o.num
        prod = [0] * (2 * self.field.n - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        return FieldElem(self.field, tuple(_reduce(self.field, prod)), self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "FieldElem":
        return self * self._coerce(other).inv()

    def __rtruediv__(self, other) -> "FieldElem":
        return self._coerce(other) * self.inv()

    def __pow__(self, e: int) -> "FieldElem":
        if e < 0:
            return self.inv() ** (-e)
        result, base = self.field.one(), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def mult_matrix(self) -> list[list[int]]:
        """Integer matrix M (columns = num * omega^j reduced) so that
        self * x has numerator M @ x.num."""
        n = self.field.n
        cols = []
        col = list(self.num)
        for j in range(n):
            cols.append(col)
            shifted = [0] + col
            col = _reduce(self.field, shifted)
        return [[cols[j][i] for j in range(n)] for i in range(n)]

    def inv(self) -> "FieldElem":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        n = self.field.n
        M = self.mult_matrix()
        sol = _solve_fraction_free(M, [1] + [0] * (n - 1))
        if sol is None:
            g = poly_gcd(Poly(self.num), self.field.f)
            raise ZeroDivisorError(factor=g)
        x, det = sol
        # self = P/den, inverse = den / P = den * x / det
        return FieldElem(self.field, tuple(self.den * c for c in x), det)

    def norm(self) -> Fraction:
        """Field norm via Res(f, representative), so norm(c) = c^n."""
        if self.is_zero():
            return Fraction(0)
        r = resultant(self.field.f, Poly(self.num))
        return Fraction(r) / Fraction(self.den) ** self.field.n

    # real evaluation
    def _interval_num(self, k: int) -> tuple[int, int]:
        """[lo, hi] enclosing num(omega) * 2^(k(n-1))."""
        L = self.field.omega_dyadic(k)
        U = L + 1
        num = self.num
        lo = hi = num[-1]
        for j in range(len(num) - 2, -1, -1):
            prods = (lo * L, lo * U, hi * L, hi * U)
            add = num[j] << (k * (len(num) - 1 - j))
            lo = min(prods) + add
            hi = max(prods) + add
        return lo, hi

    def _start_precision(self) -> int:
        omega_bits = int(self.field.omega_bracket.hi).bit_length() + 1
        need = self.max_bits() + self.field.n * omega_bits + 32
        k = 64
        while k < need:
            k *= 2
        return k

    def _zero_at_omega(self) -> bool:
        g = poly_gcd(Poly(self.num), self.field.f)
        if g.degree < 1:
            return False
        # roots of g are roots of f, and f has exactly one root in the bracket
        return count_real_roots(g, self.field.omega_bracket) == 1

    def sign(self) -> int:
        if self.is_zero():
            return 0
        if self.is_rational():
            return 1 if self.num[0] > 0 else -1
        k = self._start_precision()
        rounds = 0
        while True:
            lo, hi = self._interval_num(k)
            if lo >= 0 and hi > 0:
                return 1
            if hi <= 0 and lo < 0:
                return -1
            rounds += 1
            if rounds == 3 and self._zero_at_omega():
                raise ZeroDivisorError("element vanishes at omega - defining polynomial reducible",
                                       factor=poly_gcd(Poly(self.num), self.field.f))
            k *= 2

    def floor(self) -> int:
        if self.is_rational():
            return self.num[0] // self.den
        k = self._start_precision()
        rounds = 0
        while True:
            lo, hi = self._interval_num(k)
            D = self.den << (k * (self.field.n - 1))
            q = lo // D
            if hi <= (q + 1) * D:
                return q
            rounds += 1
            if rounds == 3:
                # an integer boundary may coincide with the value only if the
                # representative of (self - q') vanishes at omega
                for cand in (q + 1, q + 2):
                    diff = self - cand
                    if not diff.is_zero() and diff._zero_at_omega():
                        raise ZeroDivisorError("element minus integer vanishes at omega - defining polynomial reducible",
                                               factor=poly_gcd(Poly(diff.num), self.field.f))
            k *= 2

    def approx(self, digits: int = 30) -> Fraction:
        """Rational approximation within 2^-(~3.3*digits)."""
        k = 64
        while k < digits * 4 + self.max_bits():
            k *= 2
        lo, hi = self._interval_num(k)
        D = self.den << (k * (self.field.n - 1))
        return Fraction(lo + hi, 2 * D)

    def __float__(self) -> float:
        return float(self.approx(20))

    def enclosure(self, k: int = 128) -> Interval:
        lo, hi = self._interval_num(k)
        D = self.den << (k * (self.field.n - 1))
        return Interval(Fraction(lo, D), Fraction(hi, D))


def _solve_fraction_free(M: list[list[int]], b: list[int]) -> Optional[tuple[list[int], int]]:
    """Solve M x = b over Q via Bareiss elimination.

    Returns (y, d) with x = y / d, where d = +-det(M) is the last Bareiss
    pivot; None if M is singular.
    """
    n = len(M)
    A = [list(row) + [b[i]] for i, row in enumerate(M)]
    prev = 1
    for k in range(n):
        piv = next((r for r in range(k, n) if A[r][k] != 0), None)
        if piv is None:
            return None
        if piv != k:
            A[k], A[piv] = A[piv], A[k]
        akk = A[k][k]
        for i in range(k + 1, n):
            aik = A[i][k]
            row_i = A[i]
            row_k = A[k]
            for j in range(k + 1, n + 1):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = akk
    det = A[n - 1][n - 1]
    # back substitution: x_i = y_i / det with integer y_i
    y = [0] * n
    for i in range(n - 1, -1, -1):
        s = A[i][n] * det
        for j in range(i + 1, n):
            s -= A[i][j] * y[j]
        y[i] = s // A[i][i]
    return y, det


def elem_arith(a: FieldElem, b: FieldElem, op: str) -> FieldElem:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown op {op!r}")


def elem_inv(a: FieldElem) -> FieldElem:
    return a.inv()


def elem_sign(a: FieldElem) -> int:
    return a.sign()


def elem_floor(a: FieldElem) -> int:
    return a.floor()


def elem_norm(a: FieldElem) -> Fraction:
    return a.norm()


def check_growth(elems: Iterable[FieldElem], limit: Optional[int] = None) -> None:
    limit = bit_limit() if limit is None else limit
    for e in elems:
        if e.max_bits() > limit:
            raise ResourceLimit(f"coefficient size {e.max_bits()} bits exceeds limit {limit}")
