"""Truncated power series at ordinary points: fundamental solution systems,
generalized hypergeometric series, operator residuals, and exact span
membership (the basis-independent verifier for invariant-value claims)."""

from __future__ import annotations

from fractions import Fraction
from math import gcd

import numpy as np

from . import intpoly as ip
from . import modp
from .diffop import LinODE
from .errors import (InconclusiveTruncation, InvalidParameter,
                     SingularExpansionPoint)
from .ratfun import RatFun


class TruncSeries:
    """Exact truncated power series sum c_k (t - t0)^k, k <= N."""

    __slots__ = ("t0", "coeffs")

    def __init__(self, t0, coeffs):
        self.t0 = Fraction(t0)
        self.coeffs = tuple(Fraction(c) for c in coeffs)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def constant(cls, value, t0, order: int) -> "TruncSeries":
        return cls(t0, (Fraction(value),) + (Fraction(0),) * order)

    def _check(self, other: "TruncSeries"):
        if self.t0 != other.t0:
            raise ValueError("base point mismatch")

    def __add__(self, other):
        self._check(other)
        n = min(len(self.coeffs), len(other.coeffs))
        return TruncSeries(self.t0, [a + b for a, b in
                                     zip(self.coeffs[:n], other.coeffs[:n])])

    def __sub__(self, other):
        self._check(other)
        n = min(len(self.coeffs), len(other.coeffs))
        return TruncSeries(self.t0, [a - b for a, b in
                                     zip(self.coeffs[:n], other.coeffs[:n])])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return TruncSeries(self.t0, [c * other for c in self.coeffs])
        self._check(other)
        n = min(len(self.coeffs), len(other.coeffs))
        a = _scaled_ints(self.coeffs[:n])
        b = _scaled_ints(other.coeffs[:n])
        conv = [0] * n
        an, ad = a
        bn, bd = b
        for i, x in enumerate(an):
            if x:
                top = n - i
                for j, y in enumerate(bn[:top]):
                    if y:
                        conv[i + j] += x * y
        den = ad * bd
        return TruncSeries(self.t0, [Fraction(c, den) for c in conv])

    __rmul__ = __mul__

    def differentiate(self) -> "TruncSeries":
        return TruncSeries(self.t0, [k * c for k, c in
                                     enumerate(self.coeffs)][1:] or [Fraction(0)])

    def truncate(self, order: int) -> "TruncSeries":
        return TruncSeries(self.t0, self.coeffs[: order + 1])

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __eq__(self, other):
        return (isinstance(other, TruncSeries) and self.t0 == other.t0
                and self.coeffs == other.coeffs)

    def __repr__(self):
        head = ", ".join(str(c) for c in self.coeffs[:6])
        return f"TruncSeries(t0={self.t0}, [{head}, ...], order={self.order})"


def _scaled_ints(coeffs) -> tuple[list[int], int]:
    den = 1
    for c in coeffs:
        den = den * c.denominator // gcd(den, c.denominator)
    return [int(c * den) for c in coeffs], den


def ratfun_series(f: RatFun, t0, order: int) -> TruncSeries:
    """Taylor expansion of a rational function at a non-pole point."""
    t0 = Fraction(t0)
    if f.is_zero():
        return TruncSeries.constant(0, t0, order)
    nsh = _shift_poly_frac(f.num, t0)
    dsh = _shift_poly_frac(f.den, t0)
    if dsh[0] == 0:
        raise ZeroDivisionError(f"pole at {t0}")
    inv0 = 1 / dsh[0]
    out: list[Fraction] = []
    for k in range(order + 1):
        acc = nsh[k] if k < len(nsh) else Fraction(0)
        for j in range(max(0, k - len(dsh) + 1), k):
            acc -= out[j] * dsh[k - j]
        out.append(acc * inv0)
    return TruncSeries(t0, [f.c * c for c in out])


def series_solutions(L: LinODE, t0, N: int) -> list[TruncSeries]:
    """Fundamental system at an ordinary point with unit-triangular data
    d^i y_j (t0) = [i == j-1]; each series has L(y) = 0 through order N-n."""
    t0 = Fraction(t0)
    cleared = L.cleared()
    n = L.order
    for a in L.coeffs:
        if not a.is_zero() and ip.peval_frac(a.den, t0) == 0:
            raise SingularExpansionPoint(f"coefficient pole at t0={t0}")
    # shift cleared coefficients to u = t - t0
    shifted = [_shift_poly_frac(p, t0) for p in cleared]
    lead0 = shifted[n][0] if shifted[n] else Fraction(0)
    if lead0 == 0:
        raise SingularExpansionPoint(f"leading coefficient vanishes at {t0}")
    out = []
    for j in range(n):
        coeffs = [Fraction(0)] * (N + 1)
        coeffs[j] = Fraction(1, _factorial(j))
        for r in range(N - n + 1):
            # coefficient of u^r in sum_k P_k y^(k) determines c_{r+n}
            acc = Fraction(0)
            for k in range(n + 1):
                P = shifted[k]
                for mdeg, pc in enumerate(P):
                    if pc == 0 or mdeg > r:
                        continue
                    idx = r - mdeg + k
                    if idx <= N and (k == 0 or idx >= k):
                        c = coeffs[idx]
                        if c:
                            acc += pc * c * _falling(idx, k)
            lead = lead0 * _falling(r + n, n)
            # acc currently includes the unknown c_{r+n} term only if it was
            # preset (it is zero), so solve directly
            coeffs[r + n] = -acc / lead
        out.append(TruncSeries(t0, coeffs))
    return out


def _factorial(k: int) -> int:
    out = 1
    for i in range(2, k + 1):
        out *= i
    return out


def _falling(idx: int, k: int) -> int:
    out = 1
    for i in range(k):
        out *= idx - i
    return out


def _shift_poly_frac(poly, t0: Fraction):
    work = [Fraction(c) for c in poly]
    n = len(work)
    for i in range(n - 1):
        for j in range(n - 2, i - 1, -1):
            work[j] += t0 * work[j + 1]
    return work


def operator_residual(L: LinODE, s: TruncSeries) -> list[Fraction]:
    """Coefficients of the denominator-cleared operator applied to the
    series, on the window where all inputs are valid (length N - n + 1)."""
    cleared = L.cleared()
    n = L.order
    shifted = [_shift_poly_frac(p, s.t0) for p in cleared]
    N = s.order
    derivs = [list(s.coeffs)]
    for _ in range(n):
        prev = derivs[-1]
        derivs.append([k * prev[k] for k in range(1, len(prev))])
    out = []
    for r in range(N - n + 1):
        acc = Fraction(0)
        for k in range(n + 1):
            P = shifted[k]
            dk = derivs[k]
            for mdeg, pc in enumerate(P):
                if pc and mdeg <= r and r - mdeg < len(dk):
                    acc += pc * dk[r - mdeg]
        out.append(acc)
    return out


def hyp3f2_series(a1, a2, a3, b1, b2, N: int) -> TruncSeries:
    """3F2(a1,a2,a3; b1,b2 | t) truncated at order N, exact."""
    params = [Fraction(x) for x in (a1, a2, a3)]
    lowers = [Fraction(x) for x in (b1, b2)]
    for b in lowers:
        if b.denominator == 1 and b <= 0:
            raise InvalidParameter(f"lower parameter {b} is a non-positive integer")
    coeffs = [Fraction(1)]
    for k in range(N):
        num = (params[0] + k) * (params[1] + k) * (params[2] + k)
        den = (lowers[0] + k) * (lowers[1] + k) * (k + 1)
        coeffs.append(coeffs[-1] * num / den)
    return TruncSeries(Fraction(0), coeffs)


def hyp2f1_series(a, b, c, N: int) -> TruncSeries:
    a, b, c = Fraction(a), Fraction(b), Fraction(c)
    if c.denominator == 1 and c <= 0:
        raise InvalidParameter(f"lower parameter {c} is a non-positive integer")
    coeffs = [Fraction(1)]
    for k in range(N):
        coeffs.append(coeffs[-1] * (a + k) * (b + k) / ((c + k) * (k + 1)))
    return TruncSeries(Fraction(0), coeffs)


def span_membership(products: list[TruncSeries], candidate: TruncSeries) -> bool:
    """True iff the candidate is an exact Q-linear combination of the
    products on the retained coefficient window.

    Membership verdicts are exact: a positive answer carries a combination
    verified over Q on the whole window; a negative one carries a modular
    rank excess, which is one-sided proof of independence."""
    if not products:
        return candidate.is_zero()
    t0 = products[0].t0
    rows = min(min(s.order for s in products), candidate.order) + 1
    cols = len(products)
    if rows < cols + 4:
        raise InconclusiveTruncation(
            f"window {rows} too short for {cols} products")
    for s in products:
        if s.t0 != t0 or candidate.t0 != t0:
            raise ValueError("base point mismatch")
    scaled = [_scaled_ints(s.coeffs[:rows]) for s in products]
    cand = _scaled_ints(candidate.coeffs[:rows])
    pool = modp.prime_pool(192)
    sol_res: list[np.ndarray] = []
    used_primes: list[int] = []
    pivots_ref: list[int] | None = None
    combo = None
    target = 3
    idx = 0
    while combo is None:
        while len(used_primes) < target and idx < len(pool):
            p = pool[idx]
            idx += 1
            cols_mod = []
            ok = True
            for nums, den in scaled + [cand]:
                if den % p == 0:
                    ok = False
                    break
                inv = pow(den % p, -1, p)
                cols_mod.append([(c % p) * inv % p for c in nums])
            if not ok:
                continue
            A = np.array(cols_mod, dtype=np.int64).T % p  # rows x (cols+1)
            R, piv = modp.rref_mod(A, p)
            if cols in piv:
                return False  # rank excess: certified not in span
            if pivots_ref is None:
                pivots_ref = piv
            elif piv != pivots_ref:
                continue
            x = np.zeros(cols, dtype=np.int64)
            for ri, pc in enumerate(piv):
                x[pc] = R[ri, cols]
            sol_res.append(x)
            used_primes.append(p)
        if not sol_res:
            raise InconclusiveTruncation("all screening primes degenerate")
        combo = modp.lift_vector(sol_res, used_primes)
        if combo is None:
            if idx >= len(pool):
                raise InconclusiveTruncation("combination lift failed")
            target = min(len(pool), target * 2)
    # exact verification of the lifted combination on the full window
    residual = [-c for c in candidate.coeffs[:rows]]
    for q, s in zip(combo, products):
        if q:
            for i in range(rows):
                residual[i] += q * s.coeffs[i]
    return all(r == 0 for r in residual)
