"""Exact univariate polynomials over Z and Q.

Coefficients are stored constant term first. Integer-valued rationals are
kept as plain ``int`` so that integer polynomials stay on the fast path.
Real roots are counted with Sturm chains and isolated by bisection on
rational endpoints; every sign decision is exact.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Optional, Sequence, Union

Number = Union[int, Fraction]


def _norm_coeff(c) -> Number:
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, int):
        return c
    raise TypeError(f"unsupported coefficient type {type(c).__name__}")


class Poly:
    """Immutable polynomial with int/Fraction coefficients, constant term first."""

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Iterable[Number] = ()):
        cs = [_norm_coeff(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple = tuple(cs)
        self._hash = None

    # construction helpers
    @classmethod
    def x(cls) -> "Poly":
        return cls((0, 1))

    @classmethod
    def const(cls, c: Number) -> "Poly":
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c: Number = 1) -> "Poly":
        return cls([0] * k + [c])

    @classmethod
    def parse(cls, text: str) -> "Poly":
        """Parse ``"c0,c1,...,cn"`` (constant first); rationals as ``p/q``."""
        text = text.strip().replace("−", "-")
        if not text:
            raise ValueError("empty polynomial text")
        return cls(Fraction(tok.strip()) for tok in text.split(","))

    def format(self) -> str:
        if not self.coeffs:
            return "0"
        return ",".join(str(c) for c in self.coeffs)

    # basic properties
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> Number:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.coeffs)

    def is_monic(self) -> bool:
        return self.lc == 1

    def __getitem__(self, k: int) -> Number:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Poly.const(other).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.coeffs)
        return self._hash

    def __repr__(self) -> str:
        return f"Poly({self.format()})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            a = -c if c < 0 else c
            if k == 0:
                body = str(a)
            else:
                mono = "X" if k == 1 else f"X^{k}"
                body = mono if a == 1 else f"{a}*{mono}"
            terms.append((sign, body))
        head_sign, head = terms[0]
        out = ("-" if head_sign == "-" else "") + head
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    # arithmetic
    def __neg__(self) -> "Poly":
        return Poly(-c for c in self.coeffs)

    def __add__(self, other) -> "Poly":
        other = _as_poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self[k] + other[k] for k in range(n))

    __radd__ = __add__

    def __sub__(self, other) -> "Poly":
        other = _as_poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self[k] - other[k] for k in range(n))

    def __rsub__(self, other) -> "Poly":
        return _as_poly(other) - self

    def __mul__(self, other) -> "Poly":
        other = _as_poly(other)
        if not self.coeffs or not other.coeffs:
            return Poly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Poly":
        if e < 0:
            raise ValueError("negative exponent")
        result, base = Poly.const(1), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other) -> tuple["Poly", "Poly"]:
        other = _as_poly(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db = other.degree
        lcb = other.lc
        if len(rem) - 1 < db:
            return Poly(), self
        quot = [0] * (len(rem) - db)
        for k in range(len(rem) - 1, db - 1, -1):
            c = rem[k]
            if c == 0:
                continue
            q = c // lcb if isinstance(c, int) and isinstance(lcb, int) and c % lcb == 0 else Fraction(c) / lcb
            quot[k - db] = q
            for j, b in enumerate(other.coeffs):
                rem[k - db + j] -= q * b
        return Poly(quot), Poly(rem[:db])

    def __floordiv__(self, other) -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other) -> "Poly":
        return divmod(self, other)[1]

    def exact_div(self, other) -> "Poly":
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    def divides(self, other: "Poly") -> bool:
        """True if ``self`` divides ``other`` over Q."""
        return (other % self).is_zero()

    def derivative(self) -> "Poly":
        return Poly(k * c for k, c in enumerate(self.coeffs) if k > 0)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def sign_at(self, x: Number) -> int:
        v = self(x)
        return (v > 0) - (v < 0)

    def content(self) -> Number:
        """Positive rational content; ``self / content`` is primitive in Z[X]."""
        if not self.coeffs:
            return 0
        num = 0
        den = 1
        for c in self.coeffs:
            f = Fraction(c)
            num = math.gcd(num, f.numerator)
            den = den * f.denominator // math.gcd(den, f.denominator)
        return _norm_coeff(Fraction(num, den))

    def primitive(self) -> "Poly":
        """Integer primitive part with positive leading coefficient."""
        if not self.coeffs:
            return self
        c = self.content()
        p = Poly(Fraction(a) / c for a in self.coeffs)
        return -p if p.lc < 0 else p

    def monic(self) -> "Poly":
        if not self.coeffs:
            return self
        lc = self.lc
        return Poly(Fraction(c) / lc for c in self.coeffs)

    def reversed(self, degree: Optional[int] = None) -> "Poly":
        """Reciprocal polynomial X^d p(1/X) with d = deg p unless given."""
        d = self.degree if degree is None else degree
        cs = list(self.coeffs) + [0] * (d + 1 - len(self.coeffs))
        return Poly(reversed(cs[: d + 1]))

    def compose_neg(self) -> "Poly":
        """p(-X)."""
        return Poly(c if k % 2 == 0 else -c for k, c in enumerate(self.coeffs))

    def shift_scale(self, a: Number, b: Number) -> "Poly":
        """p(a*X + b)."""
        out = Poly()
        lin = Poly((b, a))
        for c in reversed(self.coeffs):
            out = out * lin + c
        return out


def _as_poly(p) -> Poly:
    if isinstance(p, Poly):
        return p
    if isinstance(p, (int, Fraction)):
        return Poly.const(p)
    raise TypeError(f"cannot coerce {type(p).__name__} to Poly")


X = Poly.x()


def poly_gcd(p: Poly, q: Poly) -> Poly:
    """Monic gcd over Q (zero if both are zero)."""
    a, b = p.primitive(), q.primitive()
    while not b.is_zero():
        a, b = b, (a % b).primitive()
    return a.monic() if not a.is_zero() else a


def squarefree_part(p: Poly) -> Poly:
    if p.degree <= 0:
        return p
    g = poly_gcd(p, p.derivative())
    return p.exact_div(g) if g.degree > 0 else p


def poly_arith(p: Poly, q: Poly, op: str):
    """Dispatch helper mirroring the textual operation names."""
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    if op == "divmod":
        return divmod(p, q)
    if op == "derivative":
        return p.derivative()
    if op == "content":
        return p.content()
    if op == "gcd":
        return poly_gcd(p, q)
    raise ValueError(f"unknown op {op!r}")


# resultants

def _pseudo_rem(a: list, b: list) -> list:
    """lc(b)^(deg a - deg b + 1) * a mod b, integer lists, constant first."""
    r = list(a)
    db = len(b) - 1
    lcb = b[-1]
    e = len(r) - 1 - db + 1
    while len(r) - 1 >= db and r:
        c = r[-1]
        k = len(r) - 1 - db
        r = [x * lcb for x in r]
        for j in range(db + 1):
            r[k + j] -= c * b[j]
        r.pop()
        e -= 1
        while r and r[-1] == 0:
            r.pop()
    if e > 0:
        f = lcb ** e
        r = [x * f for x in r]
    return r


def _int_resultant(a: list, b: list) -> int:
    """Subresultant PRS resultant of integer coefficient lists."""
    if not a or not b:
        return 0
    s = 1
    if len(a) < len(b):
        a, b = b, a
        if (len(a) - 1) % 2 == 1 and (len(b) - 1) % 2 == 1:
            s = -1
    if len(b) == 1:
        return s * b[0] ** (len(a) - 1)
    ca = math.gcd(*a)
    cb = math.gcd(*b)
    a = [x // ca for x in a]
    b = [x // cb for x in b]
    t = ca ** (len(b) - 1) * cb ** (len(a) - 1)
    g = h = 1
    while True:
        da, db = len(a) - 1, len(b) - 1
        delta = da - db
        if da % 2 == 1 and db % 2 == 1:
            s = -s
        r = _pseudo_rem(a, b)
        if not r:
            return 0
        a = b
        div = g * h ** delta
        b = [x // div for x in r]
        g = a[-1]
        if delta == 0:
            pass
        elif delta == 1:
            h = g
        else:
            h = g ** delta // h ** (delta - 1)
        if len(b) == 1:
            break
    da = len(a) - 1
    h = b[-1] ** da // h ** (da - 1) if da >= 1 else b[-1]
    return s * t * h


def resultant(p: Poly, q: Poly) -> Number:
    """Res(p, q) = lc(p)^deg(q) * prod q(r) over roots r of p.

    Rational inputs are scaled to integers first.
    """
    if p.is_zero() or q.is_zero():
        raise ValueError("resultant of zero polynomial")
    dp, dq = p.degree, q.degree
    cp = Fraction(p.content())
    cq = Fraction(q.content())
    pi = [int(Fraction(c) / cp) for c in p.coeffs]
    qi = [int(Fraction(c) / cq) for c in q.coeffs]
    r = Fraction(_int_resultant(pi, qi)) * cp ** dq * cq ** dp
    return _norm_coeff(r)


def discriminant(p: Poly) -> Number:
    n = p.degree
    r = resultant(p, p.derivative())
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return _norm_coeff(Fraction(sign * r) / p.lc)


# Sturm sequences and real roots

@dataclass(frozen=True)
class Interval:
    """Closed rational interval; ``lo == hi`` marks an exact rational root."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lo", Fraction(self.lo))
        object.__setattr__(self, "hi", Fraction(self.hi))
        if self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def contains(self, x) -> bool:
        return self.lo <= x <= self.hi

    def __contains__(self, x) -> bool:
        return self.contains(x)

    def within(self, other: "Interval") -> bool:
        return other.lo <= self.lo and self.hi <= other.hi

    def to_json(self) -> list:
        return [str(self.lo), str(self.hi)]

    def __str__(self) -> str:
        return f"[{float(self.lo):.12g}, {float(self.hi):.12g}]"


def sturm_chain(p: Poly) -> list[Poly]:
    """Signed remainder sequence of the squarefree part of ``p``."""
    if p.is_zero():
        raise ValueError("Sturm chain of zero polynomial")
    p0 = squarefree_part(p).primitive()
    chain = [p0]
    if p0.degree <= 0:
        return chain
    chain.append(p0.derivative().primitive())
    while True:
        r = chain[-2] % chain[-1]
        if r.is_zero():
            break
        # positive rescaling keeps sign variations intact
        chain.append(-r.primitive() if r.lc > 0 else r.primitive())
    return chain


def _sign_variations(signs: Iterable[int]) -> int:
    prev = 0
    count = 0
    for s in signs:
        if s == 0:
            continue
        if prev and s != prev:
            count += 1
        prev = s
    return count


def _variations_at(chain: Sequence[Poly], x: Optional[Number], at_inf: int = 0) -> int:
    if x is None:
        # at_inf = +1 for +infinity, -1 for -infinity
        signs = []
        for q in chain:
            s = 1 if q.lc > 0 else -1
            if at_inf < 0 and q.degree % 2 == 1:
                s = -s
            signs.append(s)
        return _sign_variations(signs)
    return _sign_variations(q.sign_at(x) for q in chain)


def count_in_chain(chain: Sequence[Poly], lo: Optional[Number], hi: Optional[Number]) -> int:
    """Distinct real roots in (lo, hi]; ``None`` means -inf / +inf."""
    va = _variations_at(chain, lo, -1)
    vb = _variations_at(chain, hi, +1)
    return va - vb


def count_real_roots(p: Poly, interval: Optional[Interval] = None,
                     lo: Optional[Number] = None, hi: Optional[Number] = None) -> int:
    """Number of distinct real roots of ``p`` in (lo, hi]."""
    if interval is not None:
        lo, hi = interval.lo, interval.hi
    return count_in_chain(sturm_chain(p), lo, hi)


def cauchy_bound(p: Poly) -> Fraction:
    lc = Fraction(p.lc)
    return 1 + max((abs(Fraction(c) / lc) for c in p.coeffs[:-1]), default=Fraction(0))


def real_root_intervals(p: Poly, lo: Optional[Number] = None,
                        hi: Optional[Number] = None) -> list[Interval]:
    """Disjoint isolating intervals for the distinct real roots in (lo, hi], ascending."""
    if p.degree < 1:
        return []
    chain = sturm_chain(p)
    sq = chain[0]
    b = cauchy_bound(sq)
    a_ = Fraction(-b if lo is None else lo)
    b_ = Fraction(b if hi is None else hi)
    out: list[Interval] = []
    stack = [(a_, b_, count_in_chain(chain, a_, b_))]
    while stack:
        a, c, k = stack.pop()
        if k == 0:
            continue
        if k == 1:
            if sq.sign_at(c) == 0:
                out.append(Interval(c, c))
            else:
                out.append(Interval(a, c))
            continue
        m = (a + c) / 2
        k_left = count_in_chain(chain, a, m)
        stack.append((m, c, k - k_left))
        stack.append((a, m, k_left))
    out.sort(key=lambda iv: iv.lo)
    return out


def refine_root(p: Poly, interval: Interval, eps: Number) -> Interval:
    """Bisect an isolating interval of a simple root down to width < eps."""
    eps = Fraction(eps)
    if eps <= 0:
        raise ValueError("eps must be positive")
    lo, hi = interval.lo, interval.hi
    slo, shi = p.sign_at(lo), p.sign_at(hi)
    if slo == 0:
        return Interval(lo, lo)
    if shi == 0:
        return Interval(hi, hi)
    if slo == shi:
        raise ValueError("interval does not bracket a sign change")
    while hi - lo >= eps:
        m = (lo + hi) / 2
        sm = p.sign_at(m)
        if sm == 0:
            return Interval(m, m)
        if sm == slo:
            lo = m
        else:
            hi = m
    return Interval(lo, hi)


class ShapeError(ValueError):
    """Polynomial does not have the coefficient shape a routine requires."""


def lemma_shape_coeffs(p: Poly) -> Optional[list[int]]:
    """Return a_0..a_{n-1} if p = X^n - a_{n-1}X^{n-1} - ... - a_0 has the
    dominant-root shape, else None."""
    if not p.is_integral() or not p.is_monic() or p.degree < 2:
        return None
    a = [-c for c in p.coeffs[:-1]]
    top = a[-1]
    if top < 1 or not (top >= a[0] > 0):
        return None
    mids = a[1:]
    if any(mids[i] > mids[i + 1] for i in range(len(mids) - 1)) or (mids and mids[0] < 0):
        return None
    return a


def isolate_dominant_root(p: Poly) -> Interval:
    """Bracket (a_{n-1}, a_{n-1}+1) around the unique non-negative root."""
    a = lemma_shape_coeffs(p)
    if a is None:
        raise ShapeError(f"{p} lacks the dominant-root coefficient shape")
    iv = Interval(a[-1], a[-1] + 1)
    if count_real_roots(p, iv) != 1 or p.sign_at(iv.hi) == 0:
        raise ShapeError(f"{p}: dominant root not isolated by {iv}")
    return iv


def isolate_positive_root(p: Poly) -> Interval:
    """Integer bracket (k, k+1) around the unique positive real root.

    Works for any polynomial with exactly one positive root, e.g. X^n - m.
    """
    if p.degree < 1:
        raise ShapeError("constant polynomial has no roots")
    chain = sturm_chain(p)
    if count_in_chain(chain, 0, None) != 1:
        raise ShapeError(f"{p} does not have exactly one positive real root")
    b = math.ceil(cauchy_bound(chain[0]))
    lo, hi = 0, max(b, 1)
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if count_in_chain(chain, 0, mid) == 1:
            hi = mid
        else:
            lo = mid
    if p.sign_at(hi) == 0:
        raise ShapeError(f"{p} has the rational positive root {hi}")
    return Interval(lo, hi)


# cyclotomic polynomials

@lru_cache(maxsize=None)
def cyclotomic_poly(m: int) -> Poly:
    if m < 1:
        raise ValueError("cyclotomic order must be positive")
    p = Poly.monomial(m) - 1
    for d in range(1, m):
        if m % d == 0:
            p = p.exact_div(cyclotomic_poly(d))
    return p


def euler_phi(m: int) -> int:
    result, k = m, m
    q = 2
    while q * q <= k:
        if k % q == 0:
            while k % q == 0:
                k //= q
            result -= result // q
        q += 1
    if k > 1:
        result -= result // k
    return result


def cyclotomic_divisors(g: Poly) -> list[int]:
    """Orders d with Phi_d | g (checked for every d with phi(d) <= deg g)."""
    n = g.degree
    out = []
    for d in range(1, 2 * n * n + 7):
        if euler_phi(d) <= n and cyclotomic_poly(d).divides(g):
            out.append(d)
    return out


# irreducibility certificates

@dataclass(frozen=True)
class IrreducibilityVerdict:
    kind: str  # "irreducible" | "reducible" | "unknown"
    witness: Optional[Poly] = None
    note: str = ""

    def __post_init__(self):
        if self.kind not in ("irreducible", "reducible", "unknown"):
            raise ValueError(f"bad verdict kind {self.kind!r}")
        if self.kind == "reducible" and self.witness is None:
            raise ValueError("reducible verdict needs a witness factor")

    def to_json(self) -> dict:
        d = {"kind": self.kind}
        if self.witness is not None:
            d["witness"] = self.witness.format()
        if self.note:
            d["note"] = self.note
        return d


def _primes():
    yield 2
    k = 3
    while True:
        if all(k % q for q in range(3, math.isqrt(k) + 1, 2)):
            yield k
        k += 2


# F_p[X] helpers on coefficient lists (constant first, trailing zeros stripped)

def _fp_trim(a: list) -> list:
    while a and a[-1] == 0:
        a.pop()
    return a


def _fp_mod(a: list, b: list, p: int) -> list:
    a = list(a)
    inv = pow(b[-1], -1, p)
    db = len(b) - 1
    while len(a) - 1 >= db and a:
        c = a[-1] * inv % p
        k = len(a) - 1 - db
        for j in range(db + 1):
            a[k + j] = (a[k + j] - c * b[j]) % p
        _fp_trim(a)
    return a


def _fp_divexact(a: list, b: list, p: int) -> list:
    a = list(a)
    inv = pow(b[-1], -1, p)
    db = len(b) - 1
    q = [0] * (len(a) - db)
    for k in range(len(a) - 1 - db, -1, -1):
        c = a[k + db] * inv % p
        q[k] = c
        for j in range(db + 1):
            a[k + j] = (a[k + j] - c * b[j]) % p
    return _fp_trim(q)


def _fp_mulmod(a: list, b: list, m: list, p: int) -> list:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _fp_mod([c % p for c in out], m, p)


def _fp_gcd(a: list, b: list, p: int) -> list:
    a, b = _fp_trim(list(a)), _fp_trim(list(b))
    while b:
        a, b = b, _fp_mod(a, b, p)
    if a:
        inv = pow(a[-1], -1, p)
        a = [c * inv % p for c in a]
    return a


def _fp_powmod(base: list, e: int, m: list, p: int) -> list:
    result = [1]
    base = _fp_mod(base, m, p)
    while e:
        if e & 1:
            result = _fp_mulmod(result, base, m, p)
        base = _fp_mulmod(base, base, m, p)
        e >>= 1
    return result


def factor_degrees_mod_p(g: Poly, p: int) -> list[int]:
    """Degrees of the irreducible factors of a squarefree-mod-p monic g over F_p."""
    f = _fp_trim([int(c) % p for c in g.coeffs])
    degrees = []
    h = [0, 1]
    d = 0
    while len(f) - 1 >= 2 * (d + 1):
        d += 1
        h = _fp_powmod(h, p, f, p)
        diff = list(h) + [0] * max(0, 2 - len(h))
        diff[1] = (diff[1] - 1) % p
        gd = _fp_gcd(f, _fp_trim(diff), p)
        if len(gd) > 1:
            degrees += [d] * ((len(gd) - 1) // d)
            f = _fp_divexact(f, gd, p)
            h = _fp_mod(h, f, p)
    if len(f) > 1:
        degrees.append(len(f) - 1)
    return sorted(degrees)


def _subset_sums(degs: Sequence[int]) -> set[int]:
    sums = {0}
    for d in degs:
        sums |= {s + d for s in sums}
    return sums


def _small_divisors(n: int, limit: int = 10 ** 12) -> Optional[list[int]]:
    n = abs(n)
    if n > limit:
        return None
    out = []
    for d in range(1, math.isqrt(n) + 1):
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
    return sorted(out)


def irreducibility_verdict(g: Poly, n_primes: int = 8) -> IrreducibilityVerdict:
    """Cheap certificates: squarefreeness, rational roots, cyclotomic factors,
    then factor-degree patterns modulo small primes. May answer unknown."""
    if not g.is_integral() or not g.is_monic():
        raise ValueError("irreducibility_verdict needs a monic integer polynomial")
    n = g.degree
    if n < 1:
        raise ValueError("degree must be at least 1")
    if n == 1:
        return IrreducibilityVerdict("irreducible")
    sq = poly_gcd(g, g.derivative())
    if sq.degree > 0:
        return IrreducibilityVerdict("reducible", sq, "repeated factor")
    a0 = g.coeffs[0]
    if a0 == 0:
        return IrreducibilityVerdict("reducible", X, "root at 0")
    divs = _small_divisors(a0)
    candidates = [1] if divs is None else divs
    for d in candidates:
        for r in (d, -d):
            if g(r) == 0:
                return IrreducibilityVerdict("reducible", X - r, "rational root")
    for d in cyclotomic_divisors(g):
        phi = cyclotomic_poly(d)
        if phi.degree == n:
            return IrreducibilityVerdict("irreducible", None, f"g is Phi_{d}")
        return IrreducibilityVerdict("reducible", phi, f"cyclotomic Phi_{d}")
    disc = discriminant(g)
    allowed = set(range(1, n))
    used = 0
    for p in _primes():
        if disc % p == 0:
            continue
        allowed &= _subset_sums(factor_degrees_mod_p(g, p))
        used += 1
        if not allowed:
            return IrreducibilityVerdict("irreducible")
        if used >= n_primes:
            break
    return IrreducibilityVerdict("unknown", note=f"factor degrees {sorted(allowed)} not excluded")


def integer_nth_root(m: int, k: int) -> int:
    """floor(m ** (1/k)) for m >= 0."""
    if m < 0:
        raise ValueError("negative radicand")
    if m < 2:
        return m
    x = 1 << ((m.bit_length() + k - 1) // k)
    while True:
        y = ((k - 1) * x + m // x ** (k - 1)) // k
        if y >= x:
            break
        x = y
    while x ** k > m:
        x -= 1
    while (x + 1) ** k <= m:
        x += 1
    return x
