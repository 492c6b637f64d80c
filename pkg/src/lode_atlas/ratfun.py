"""Rational functions over Q(t).

A RatFun is c * N(t)/D(t) with c rational, N and D primitive integer
polynomials, gcd(N, D) = 1 and lc(D) > 0.  The serialized view is the
reduced num/(monic den) pair required by the operator formats.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from . import intpoly as ip
from .exactnum import rat_to_str


class RatFun:
    __slots__ = ("c", "num", "den")

    def __init__(self, c, num, den=(1,)):
        num = ip.pstrip(num)
        den = ip.pstrip(den)
        if not den:
            raise ZeroDivisionError("zero denominator")
        c = Fraction(c)
        if c == 0 or not num:
            self.c, self.num, self.den = Fraction(0), (), (1,)
            return
        g = ip.pgcd(num, den)
        if len(g) > 1:
            num = ip.pdiv_exact(num, g)
            den = ip.pdiv_exact(den, g)
        cn, num = ip.pprimitive(num)
        cd, den = ip.pprimitive(den)
        self.c = c * Fraction(cn, cd)
        self.num, self.den = num, den

    # -- constructors --------------------------------------------------------

    @classmethod
    def from_frac(cls, r) -> "RatFun":
        return cls(Fraction(r), (1,))

    @classmethod
    def t(cls) -> "RatFun":
        return cls(1, (0, 1))

    @classmethod
    def zero(cls) -> "RatFun":
        return cls(0, ())

    @classmethod
    def one(cls) -> "RatFun":
        return cls(1, (1,))

    @classmethod
    def from_coeffs(cls, num: list[Fraction], den: list[Fraction]) -> "RatFun":
        """From ascending rational coefficient lists."""
        def clear(v):
            l = 1
            for x in v:
                x = Fraction(x)
                l = l * x.denominator // gcd(l, x.denominator)
            return tuple(int(Fraction(x) * l) for x in v), l
        ni, nl = clear(num)
        di, dl = clear(den)
        return cls(Fraction(dl, nl), ni, di)

    # -- predicates / views ----------------------------------------------------

    def is_zero(self) -> bool:
        return self.c == 0

    def is_constant(self) -> bool:
        return len(self.num) <= 1 and len(self.den) == 1

    def as_frac(self) -> Fraction:
        if not self.is_constant():
            raise ValueError("not a constant")
        return self.c * (self.num[0] if self.num else 0) * Fraction(1, self.den[0])

    def num_deg(self) -> int:
        return len(self.num) - 1

    def den_deg(self) -> int:
        return len(self.den) - 1

    def monic_pairs(self) -> tuple[list[Fraction], list[Fraction]]:
        """(num coeffs, monic den coeffs), ascending, reduced."""
        if self.is_zero():
            return [Fraction(0)], [Fraction(1)]
        lc = self.den[-1]
        num = [self.c * Fraction(x, lc) for x in self.num]
        den = [Fraction(x, lc) for x in self.den]
        return num, den

    # -- arithmetic ------------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, RatFun):
            return other
        if isinstance(other, (int, Fraction)):
            return RatFun.from_frac(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.is_zero():
            return o
        if o.is_zero():
            return self
        # c1 n1/d1 + c2 n2/d2 over common denominator
        c1, c2 = self.c, o.c
        l = c1.denominator * c2.denominator // gcd(c1.denominator, c2.denominator)
        a = int(c1 * l)
        b = int(c2 * l)
        num = ip.padd(ip.pmul(ip.pscale(self.num, a), o.den),
                      ip.pmul(ip.pscale(o.num, b), self.den))
        return RatFun(Fraction(1, l), num, ip.pmul(self.den, o.den))

    __radd__ = __add__

    def __neg__(self):
        r = RatFun.__new__(RatFun)
        r.c, r.num, r.den = -self.c, self.num, self.den
        return r

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.is_zero() or o.is_zero():
            return RatFun.zero()
        # cross-reduce before multiplying to keep parts small
        n1, d2 = self.num, o.den
        g = ip.pgcd(n1, d2)
        if len(g) > 1:
            n1, d2 = ip.pdiv_exact(n1, g), ip.pdiv_exact(d2, g)
        n2, d1 = o.num, self.den
        g = ip.pgcd(n2, d1)
        if len(g) > 1:
            n2, d1 = ip.pdiv_exact(n2, g), ip.pdiv_exact(d1, g)
        return RatFun(self.c * o.c, ip.pmul(n1, n2), ip.pmul(d1, d2))

    __rmul__ = __mul__

    def inv(self) -> "RatFun":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero rational function")
        return RatFun(1 / self.c, self.den, self.num)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inv()

    def __rtruediv__(self, other):
        return RatFun.from_frac(other) * self.inv()

    def __pow__(self, e: int):
        if e < 0:
            return self.inv() ** (-e)
        out = RatFun.one()
        base = self
        while e:
            if e & 1:
                out = out * base
            e >>= 1
            if e:
                base = base * base
        return out

    def deriv(self) -> "RatFun":
        if self.is_zero():
            return self
        num = ip.psub(ip.pmul(ip.pderiv(self.num), self.den),
                      ip.pmul(self.num, ip.pderiv(self.den)))
        return RatFun(self.c, num, ip.pmul(self.den, self.den))

    def eval(self, x) -> Fraction:
        x = Fraction(x)
        d = ip.peval_frac(self.den, x)
        if d == 0:
            raise ZeroDivisionError(f"pole at {x}")
        return self.c * ip.peval_frac(self.num, x) / d

    def compose(self, h: "RatFun") -> "RatFun":
        """self(h(t)), exact."""
        if self.is_zero():
            return self
        hn, hd = h.num, h.den
        hc = h.c

        def poly_at(poly):
            # sum_i poly[i] * (hc*hn)^i * hd^(deg-i), with rational hc folded in
            d = len(poly) - 1
            scale = hc.denominator ** d
            acc = ()
            hn_pow = (1,)
            hd_pows = [(1,)]
            for _ in range(d):
                hd_pows.append(ip.pmul(hd_pows[-1], hd))
            for i, coef in enumerate(poly):
                if coef:
                    term = ip.pscale(ip.pmul(hn_pow, hd_pows[d - i]),
                                     coef * hc.numerator ** i * hc.denominator ** (d - i))
                    acc = ip.padd(acc, term)
                if i < d:
                    hn_pow = ip.pmul(hn_pow, hn)
            return acc, scale

        pn, sn = poly_at(self.num)
        pd, sd = poly_at(self.den)
        dn, dd = len(self.num) - 1, len(self.den) - 1
        # self(h) = c * [pn/(sn*hd^dn)] / [pd/(sd*hd^dd)]
        num = ip.pmul(pn, ip.ppow(hd, max(dd - dn, 0)))
        den = ip.pmul(pd, ip.ppow(hd, max(dn - dd, 0)))
        return RatFun(self.c * Fraction(sd, sn), num, den)

    # -- local data --------------------------------------------------------------

    def valuation(self, point: Fraction) -> int:
        """Order of vanishing at a finite point (negative for a pole)."""
        if self.is_zero():
            raise ValueError("valuation of zero")
        lin = (-Fraction(point).numerator, Fraction(point).denominator)
        v = 0
        num = self.num
        while True:
            try:
                num = ip.pdiv_exact(num, lin)
                v += 1
            except ArithmeticError:
                break
        den = self.den
        while True:
            try:
                den = ip.pdiv_exact(den, lin)
                v -= 1
            except ArithmeticError:
                break
        return v

    def leading_at(self, point: Fraction) -> Fraction:
        """Leading Laurent coefficient at a finite point: the value of
        f(t) / (t - point)^v at the point, v the valuation."""
        point = Fraction(point)
        lin = (-point.numerator, point.denominator)
        num, den = self.num, self.den
        kn = kd = 0
        while True:
            try:
                num = ip.pdiv_exact(num, lin)
                kn += 1
            except ArithmeticError:
                break
        while True:
            try:
                den = ip.pdiv_exact(den, lin)
                kd += 1
            except ArithmeticError:
                break
        # dividing by the primitive (q t - p) instead of (t - p/q) drops a
        # factor q per step
        scale = Fraction(point.denominator) ** (kn - kd)
        return self.c * scale * ip.peval_frac(num, point) / ip.peval_frac(den, point)

    def valuation_inf(self) -> int:
        """Valuation in the local parameter 1/t: deg den - deg num."""
        if self.is_zero():
            raise ValueError("valuation of zero")
        return (len(self.den) - 1) - (len(self.num) - 1)

    def leading_inf(self) -> Fraction:
        return self.c * Fraction(self.num[-1], self.den[-1])

    # -- comparisons ---------------------------------------------------------------

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.c == o.c and self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.c, self.num, self.den))

    def __repr__(self):
        if self.is_zero():
            return "RatFun(0)"

        def side(p):
            return " + ".join(f"{c}*t^{i}" if i else f"{c}"
                              for i, c in enumerate(p) if c).replace("+ -", "- ")
        s = f"({side(self.num)})"
        if len(self.den) > 1 or self.den[0] != 1:
            s += f"/({side(self.den)})"
        if self.c != 1:
            s = f"{rat_to_str(self.c)}*" + s
        return f"RatFun({s})"


def ratfun_from_roots(c, roots_num: list[tuple[Fraction, int]],
                      roots_den: list[tuple[Fraction, int]]) -> RatFun:
    """c * prod (q t - p)^k / prod (q t - p)^k from (p/q, k) lists."""
    num: tuple = (1,)
    for r, k in roots_num:
        r = Fraction(r)
        num = ip.pmul(num, ip.ppow((-r.numerator, r.denominator), k))
    den: tuple = (1,)
    for r, k in roots_den:
        r = Fraction(r)
        den = ip.pmul(den, ip.ppow((-r.numerator, r.denominator), k))
    return RatFun(c, num, den)


def ratfun_nth_root(f: RatFun, n: int) -> RatFun:
    """Exact n-th root of a rational function whose factor multiplicities
    are all divisible by n; raises ValueError otherwise."""
    if f.is_zero():
        return f

    def root_part(poly):
        out: tuple = (1,)
        for g, m in ip.squarefree_decomposition(poly):
            if m % n != 0:
                raise ValueError("multiplicity not divisible by root index")
            out = ip.pmul(out, ip.ppow(g, m // n))
        return out

    rn = root_part(f.num)
    rd = root_part(f.den)
    # remaining scalar: f / (rn/rd)^n must be an n-th power of a rational
    rest = f / RatFun(1, ip.ppow(rn, n), ip.ppow(rd, n))
    cval = rest.as_frac()
    num = ip._int_kth_root(abs(cval.numerator), n)
    den = ip._int_kth_root(cval.denominator, n)
    sign = 1
    if cval < 0:
        if n % 2 == 0:
            raise ValueError("negative constant under even root")
        sign = -1
    if num ** n != abs(cval.numerator) or den ** n != cval.denominator:
        raise ValueError("constant is not a perfect power")
    return RatFun(Fraction(sign * num, den), rn, rd)
