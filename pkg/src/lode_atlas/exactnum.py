"""Exact rational and cyclotomic field arithmetic.

Rationals are `fractions.Fraction` (aliased as `Rat`).  An element of
Q(zeta_m) is stored in the power basis 1, zeta, ..., zeta^(phi(m)-1) of the
m-th cyclotomic polynomial, as an integer coefficient vector over a single
positive denominator.  Canonical reduction mod Phi_m makes equality and
hashing syntactic.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd

from .errors import ConductorMismatch, DivisionByZero, EmbedUnsupported

Rat = Fraction


def rat_from_str(s: str) -> Fraction:
    return Fraction(s)


def rat_to_str(r: Fraction) -> str:
    return f"{r.numerator}/{r.denominator}" if r.denominator != 1 else str(r.numerator)


def _int_poly_divexact(num: list[int], den: list[int]) -> list[int]:
    """Exact division of integer polynomials (ascending coefficients)."""
    num = list(num)
    dn = len(den) - 1
    out = [0] * (len(num) - dn)
    for i in range(len(out) - 1, -1, -1):
        c = num[i + dn]
        assert c % den[dn] == 0
        q = c // den[dn]
        out[i] = q
        if q:
            for j, d in enumerate(den):
                num[i + j] -= q * d
    assert not any(num)
    return out


@lru_cache(maxsize=None)
def euler_phi(m: int) -> int:
    n, result, p = m, m, 2
    while p * p <= n:
        if n % p == 0:
            while n % p == 0:
                n //= p
            result -= result // p
        p += 1
    if n > 1:
        result -= result // n
    return result


@lru_cache(maxsize=None)
def cyclotomic_poly(m: int) -> tuple[int, ...]:
    """Coefficients of Phi_m, ascending, monic with integer entries."""
    if m == 1:
        return (-1, 1)
    num = [0] * (m + 1)
    num[0], num[m] = -1, 1
    den = [1]
    for d in range(1, m):
        if m % d == 0:
            phi_d = list(cyclotomic_poly(d))
            new = [0] * (len(den) + len(phi_d) - 1)
            for i, a in enumerate(den):
                for j, b in enumerate(phi_d):
                    new[i + j] += a * b
            den = new
    return tuple(_int_poly_divexact(num, den))


@lru_cache(maxsize=None)
def _reduction_rows(m: int) -> tuple[tuple[int, ...], ...]:
    """zeta^j in the power basis for j = phi(m) .. 2*phi(m)-2."""
    phi = euler_phi(m)
    base = cyclotomic_poly(m)
    rows = []
    cur = [-c for c in base[:phi]]  # zeta^phi
    rows.append(tuple(cur))
    for _ in range(phi - 2):
        top = cur[phi - 1]
        cur = [0] + cur[: phi - 1]
        if top:
            cur = [a + top * b for a, b in zip(cur, rows[0])]
        rows.append(tuple(cur))
    return tuple(rows)


@lru_cache(maxsize=None)
def _power_table(m: int) -> tuple[tuple[int, ...], ...]:
    """zeta^e in the power basis for e = 0 .. m-1."""
    phi = euler_phi(m)
    rows = _reduction_rows(m)
    table = []
    for e in range(m):
        if e < phi:
            v = [0] * phi
            v[e] = 1
            table.append(tuple(v))
        elif e < 2 * phi - 1:
            table.append(rows[e - phi])
        else:
            prev = table[e - 1]
            v = [0] + list(prev[: phi - 1])
            top = prev[phi - 1]
            if top:
                v = [a + top * b for a, b in zip(v, rows[0])]
            table.append(tuple(v))
    return tuple(table)


def _content(nums, den: int) -> int:
    g = den
    for c in nums:
        if c:
            g = gcd(g, c)
            if g == 1:
                return 1
    return g


class Cyclo:
    """Element of Q(zeta_m), canonically reduced mod Phi_m."""

    __slots__ = ("m", "num", "den")

    def __init__(self, m: int, num, den: int = 1):
        phi = euler_phi(m)
        num = list(num)
        if len(num) < phi:
            num += [0] * (phi - len(num))
        elif len(num) > phi:
            raise ValueError("coefficient vector longer than phi(m)")
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        if den < 0:
            den, num = -den, [-c for c in num]
        if not any(num):
            self.m, self.num, self.den = m, (0,) * phi, 1
            return
        g = _content(num, den)
        if g > 1:
            den //= g
            num = [c // g for c in num]
        self.m, self.num, self.den = m, tuple(num), den

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_rat(cls, r, m: int = 1) -> "Cyclo":
        r = Fraction(r)
        return cls(m, [r.numerator], r.denominator)

    @classmethod
    def zeta(cls, m: int, k: int = 1) -> "Cyclo":
        k %= m
        return cls(m, list(_power_table(m)[k]))

    @classmethod
    def zero(cls, m: int = 1) -> "Cyclo":
        return cls(m, [0])

    @classmethod
    def one(cls, m: int = 1) -> "Cyclo":
        return cls(m, [1])

    # -- views -------------------------------------------------------------

    @property
    def conductor(self) -> int:
        return self.m

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self.den) for c in self.num)

    def is_zero(self) -> bool:
        return not any(self.num)

    def is_rational(self) -> bool:
        return not any(self.num[1:])

    def to_rat(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"not rational: {self!r}")
        return Fraction(self.num[0], self.den)

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Cyclo):
            if other.m != self.m:
                if other.is_rational():
                    return Cyclo(self.m, [other.num[0]], other.den)
                if self.is_rational():
                    return NotImplemented  # handled by reflected op path
                raise ConductorMismatch(f"conductors {self.m} and {other.m}")
            return other
        if isinstance(other, (int, Fraction)):
            return Cyclo.from_rat(other, self.m)
        return None

    def _binary(self, other):
        o = self._coerce(other)
        if o is None or o is NotImplemented:
            if isinstance(other, Cyclo) and self.is_rational():
                return Cyclo(other.m, [self.num[0]], self.den), other
            raise ConductorMismatch(f"conductors {self.m} and {other.m}") \
                if isinstance(other, Cyclo) else TypeError(type(other))
        return self, o

    def __add__(self, other):
        if not isinstance(other, (Cyclo, int, Fraction)):
            return NotImplemented
        a, b = self._binary(other)
        if a.den == b.den:
            return Cyclo(a.m, [x + y for x, y in zip(a.num, b.num)], a.den)
        return Cyclo(a.m, [x * b.den + y * a.den for x, y in zip(a.num, b.num)],
                     a.den * b.den)

    __radd__ = __add__

    def __neg__(self):
        c = Cyclo.__new__(Cyclo)
        c.m, c.num, c.den = self.m, tuple(-x for x in self.num), self.den
        return c

    def __sub__(self, other):
        if not isinstance(other, (Cyclo, int, Fraction)):
            return NotImplemented
        a, b = self._binary(other)
        if a.den == b.den:
            return Cyclo(a.m, [x - y for x, y in zip(a.num, b.num)], a.den)
        return Cyclo(a.m, [x * b.den - y * a.den for x, y in zip(a.num, b.num)],
                     a.den * b.den)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        if not isinstance(other, (Cyclo, int, Fraction)):
            return NotImplemented
        a, b = self._binary(other)
        phi = len(a.num)
        if phi == 1:
            return Cyclo(a.m, [a.num[0] * b.num[0]], a.den * b.den)
        an, bn = a.num, b.num
        conv = [0] * (2 * phi - 1)
        for i, x in enumerate(an):
            if x:
                for j, y in enumerate(bn):
                    if y:
                        conv[i + j] += x * y
        out = conv[:phi]
        rows = _reduction_rows(a.m)
        for k in range(phi, 2 * phi - 1):
            c = conv[k]
            if c:
                row = rows[k - phi]
                for i in range(phi):
                    if row[i]:
                        out[i] += c * row[i]
        return Cyclo(a.m, out, a.den * b.den)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            return self.inv() ** (-e)
        result = Cyclo.one(self.m)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def inv(self) -> "Cyclo":
        """Multiplicative inverse via extended Euclid against Phi_m."""
        if self.is_zero():
            raise DivisionByZero("inverse of zero")
        if self.is_rational():
            return Cyclo(self.m, [self.den] + [0] * (len(self.num) - 1), self.num[0])
        mod = [Fraction(c) for c in cyclotomic_poly(self.m)]
        a = [Fraction(c, self.den) for c in self.num]
        # extended gcd: find u with u*a = gcd (mod Phi_m); gcd is a unit.
        r0, r1 = mod, a
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while True:
            while r1 and r1[-1] == 0:
                r1.pop()
            if len(r1) == 1:
                break
            q, rem = _frac_poly_divmod(r0, r1)
            r0, r1 = r1, rem
            s0, s1 = s1, _frac_poly_sub(s0, _frac_poly_mul(q, s1))
        c = r1[0]
        inv_coeffs = [x / c for x in s1]
        den = 1
        for x in inv_coeffs:
            den = den * x.denominator // gcd(den, x.denominator)
        return Cyclo(self.m, [int(x * den) for x in inv_coeffs] +
                     [0] * (len(self.num) - len(inv_coeffs)), den)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Cyclo.from_rat(other, self.m)
        return self * other.inv()

    def __rtruediv__(self, other):
        return Cyclo.from_rat(other, self.m) * self.inv()

    # -- embeddings --------------------------------------------------------

    def embed(self, m2: int) -> "Cyclo":
        """Image under zeta_m -> zeta_m2^(m2/m); requires m | m2."""
        if m2 == self.m:
            return self
        if m2 % self.m != 0:
            raise EmbedUnsupported(f"conductor {self.m} does not divide {m2}")
        k = m2 // self.m
        table = _power_table(m2)
        phi2 = euler_phi(m2)
        out = [0] * phi2
        for j, c in enumerate(self.num):
            if c:
                row = table[(j * k) % m2]
                for i in range(phi2):
                    if row[i]:
                        out[i] += c * row[i]
        return Cyclo(m2, out, self.den)

    # -- comparisons -------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.to_rat() == other
        if not isinstance(other, Cyclo):
            return NotImplemented
        if self.m == other.m:
            return self.num == other.num and self.den == other.den
        if self.is_rational() and other.is_rational():
            return self.to_rat() == other.to_rat()
        return False

    def __hash__(self):
        if self.is_rational():
            return hash(Fraction(self.num[0], self.den))
        return hash((self.m, self.num, self.den))

    def __repr__(self):
        if self.is_rational():
            return f"Cyclo({rat_to_str(self.to_rat())})"
        parts = []
        for j, c in enumerate(self.num):
            if c:
                term = f"{c}" if j == 0 else (f"{c}*z^{j}" if j > 1 else f"{c}*z")
                parts.append(term)
        s = " + ".join(parts).replace("+ -", "- ")
        return f"Cyclo[{self.m}]({s})/{self.den}" if self.den != 1 else f"Cyclo[{self.m}]({s})"


def _frac_poly_divmod(a: list[Fraction], b: list[Fraction]):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    db = len(b) - 1
    q = [Fraction(0)] * max(len(a) - db, 1)
    while len(a) - 1 >= db and a:
        c = a[-1] / b[-1]
        d = len(a) - 1 - db
        q[d] = c
        for j in range(db + 1):
            a[d + j] -= c * b[j]
        while a and a[-1] == 0:
            a.pop()
    return q, (a if a else [Fraction(0)])


def _frac_poly_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _frac_poly_sub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    for j, y in enumerate(b):
        a[j] -= y
    return a


# -- named operation surface --------------------------------------------------

def cyclo_arith(x: Cyclo, y: Cyclo, op: str) -> Cyclo:
    """Field arithmetic on two elements sharing a conductor."""
    if isinstance(x, Cyclo) and isinstance(y, Cyclo) and x.m != y.m:
        raise ConductorMismatch(f"conductors {x.m} and {y.m}")
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    raise ValueError(f"unknown op {op!r}")


def cyclo_embed(x: Cyclo, m2: int) -> Cyclo:
    return x.embed(m2)


def cyclo_inv(x: Cyclo) -> Cyclo:
    return x.inv()


def common_conductor(*ms: int) -> int:
    out = 1
    for m in ms:
        out = out * m // gcd(out, m)
    return out


# -- guarded square-root constants ------------------------------------------

def _guarded(value: Cyclo, square: int) -> Cyclo:
    assert (value * value) == Cyclo.from_rat(square, value.m), \
        f"square of constant is not {square}"
    return value


@lru_cache(maxsize=None)
def sqrt5() -> Cyclo:
    """sqrt(5) = (zeta5^4 + zeta5) - (zeta5^3 + zeta5^2) in Q(zeta_5)."""
    z = Cyclo.zeta(5)
    return _guarded(z ** 4 + z - z ** 3 - z ** 2, 5)


@lru_cache(maxsize=None)
def sqrt_minus7() -> Cyclo:
    """sqrt(-7) = b^6+b^5+b^3-b^4-b^2-b with b = zeta_7."""
    b = Cyclo.zeta(7)
    return _guarded(b ** 6 + b ** 5 + b ** 3 - b ** 4 - b ** 2 - b, -7)


@lru_cache(maxsize=None)
def sqrt_minus3(m: int = 3) -> Cyclo:
    """sqrt(-3) = 1 + 2*zeta_3, embedded into Q(zeta_m) for 3 | m."""
    v = Cyclo.one(3) + Cyclo.zeta(3) * 2
    return _guarded(v.embed(m), -3)


@lru_cache(maxsize=None)
def sqrt_minus15() -> Cyclo:
    """sqrt(-15) = sqrt(5) * sqrt(-3) in Q(zeta_15)."""
    return _guarded(sqrt5().embed(15) * sqrt_minus3(15), -15)


@lru_cache(maxsize=None)
def sqrt3(m: int = 12) -> Cyclo:
    """sqrt(3) = 2*zeta_12 - zeta_12^3, embedded into Q(zeta_m) for 12 | m."""
    z = Cyclo.zeta(12)
    return _guarded((z * 2 - z ** 3).embed(m), 3)
