"""Monic linear differential operators over Q(t) and their transformations.

Operators are delta^n + a_{n-1} delta^(n-1) + ... + a_0 with reduced
rational-function coefficients, so equality after a transformation is a
syntactic check.  delta is d/dt throughout.
"""

from __future__ import annotations

from fractions import Fraction

from . import intpoly as ip
from .errors import ConstantPullback, DegenerateGauge, ZeroScale
from .ratfun import RatFun


def _as_ratfun(x) -> RatFun:
    if isinstance(x, RatFun):
        return x
    return RatFun.from_frac(x)


class LinODE:
    """Monic operator; coeffs holds a_0 .. a_{n-1}."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs):
        self.coeffs = tuple(_as_ratfun(c) for c in coeffs)
        self.order = len(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, LinODE):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"LinODE(order={self.order}, coeffs={list(self.coeffs)!r})"

    def apply(self, f: RatFun) -> RatFun:
        """L(f) for a rational function f."""
        f = _as_ratfun(f)
        out = RatFun.zero()
        d = f
        for a in self.coeffs:
            if not a.is_zero():
                out = out + a * d
            d = d.deriv()
        return out + d

    def cleared(self) -> tuple[tuple, ...]:
        """Integer-polynomial coefficients (P_0, ..., P_n) of the operator
        scaled by the lcm of all denominators: sum P_k y^(k) = 0."""
        den: tuple = (1,)
        scale = 1
        for a in self.coeffs:
            if not a.is_zero():
                den = ip.plcm(den, a.den)
                scale = scale * a.c.denominator // __import__("math").gcd(scale, a.c.denominator)
        out = []
        for a in self.coeffs:
            if a.is_zero():
                out.append(())
            else:
                q = ip.pdiv_exact(den, a.den)
                val = a.c * scale
                assert val.denominator == 1
                out.append(ip.pscale(ip.pmul(a.num, q), int(val)))
        out.append(ip.pscale(den, scale))
        return tuple(out)

    def singular_den(self) -> tuple:
        """lcm of coefficient denominators (roots = finite singularities)."""
        den: tuple = (1,)
        for a in self.coeffs:
            if not a.is_zero():
                den = ip.plcm(den, a.den)
        return den


def companion_step(L: LinODE, v: list[RatFun]) -> list[RatFun]:
    """nabla of a coordinate vector in the companion module of L.

    Coordinates are over the basis e_1, ..., e_n with nabla(e_i) = e_{i+1}
    and nabla(e_n) = -a_{n-1} e_n - ... - a_0 e_1.
    """
    n = L.order
    last = v[n - 1]
    out = []
    for j in range(n):
        w = v[j].deriv()
        if j >= 1 and not v[j - 1].is_zero():
            w = w + v[j - 1]
        if not last.is_zero() and not L.coeffs[j].is_zero():
            w = w - L.coeffs[j] * last
        out.append(w)
    return out


def _solve_ratfun_system(cols: list[list[RatFun]], rhs: list[RatFun]) -> list[RatFun]:
    """Solve M x = rhs with M given by columns; raises DegenerateGauge if
    the columns are linearly dependent over Q(t)."""
    n = len(rhs)
    m = len(cols)
    A = [[cols[j][i] for j in range(m)] + [rhs[i]] for i in range(n)]
    row = 0
    pivots = []
    for col in range(m):
        piv = None
        for r in range(row, n):
            if not A[r][col].is_zero():
                piv = r
                break
        if piv is None:
            raise DegenerateGauge("dependent module vectors")
        A[row], A[piv] = A[piv], A[row]
        pivots.append(col)
        inv = A[row][col].inv()
        A[row] = [x * inv for x in A[row]]
        for r in range(n):
            if r != row and not A[r][col].is_zero():
                f = A[r][col]
                A[r] = [x - f * y for x, y in zip(A[r], A[row])]
        row += 1
    for r in range(row, n):
        if not A[r][m].is_zero():
            raise DegenerateGauge("inconsistent system")
    return [A[i][m] for i in range(m)]


def gauge_transform(L: LinODE, fvec) -> LinODE:
    """Monic operator annihilating x = f_0 y + f_1 y' + ... + f_{n-1} y^(n-1)
    over all solutions y of L."""
    n = L.order
    fvec = [_as_ratfun(f) for f in fvec]
    if len(fvec) < n:
        fvec = fvec + [RatFun.zero()] * (n - len(fvec))
    if all(f.is_zero() for f in fvec):
        raise DegenerateGauge("zero gauge vector")
    vectors = [fvec]
    for _ in range(n):
        vectors.append(companion_step(L, vectors[-1]))
    rhs = [-x for x in vectors[n]]
    b = _solve_ratfun_system(vectors[:n], rhs)
    return LinODE(b)


def compose_gauge(L: LinODE, fvec, gvec) -> list[RatFun]:
    """Vector h with sum g_k delta^k (sum f_j delta^j y) = sum h_j delta^j y
    modulo L; witnesses closure of gauge transformations."""
    n = L.order
    fvec = [_as_ratfun(f) for f in fvec] + [RatFun.zero()] * (n - len(fvec))
    gvec = [_as_ratfun(g) for g in gvec] + [RatFun.zero()] * (n - len(gvec))
    out = [RatFun.zero()] * n
    cur = fvec[:n]
    for g in gvec[:n]:
        if not g.is_zero():
            out = [o + g * c for o, c in zip(out, cur)]
        cur = companion_step(L, cur)
    return out


def pullback(L: LinODE, h: RatFun) -> LinODE:
    """Monic operator annihilating y(h(t)) over all solutions y of L."""
    h = _as_ratfun(h)
    if h.is_constant():
        raise ConstantPullback("pullback map must be non-constant")
    n = L.order
    hp = h.deriv()
    a_at_h = [a.compose(h) if not a.is_zero() else RatFun.zero() for a in L.coeffs]
    w = [RatFun.one()] + [RatFun.zero()] * (n - 1)
    vectors = [w]
    for _ in range(n):
        v = vectors[-1]
        last = v[n - 1]
        new = []
        for j in range(n):
            x = v[j].deriv()
            if j >= 1 and not v[j - 1].is_zero():
                x = x + hp * v[j - 1]
            if not last.is_zero() and not a_at_h[j].is_zero():
                x = x - hp * a_at_h[j] * last
            new.append(x)
        vectors.append(new)
    rhs = [-x for x in vectors[n]]
    b = _solve_ratfun_system(vectors[:n], rhs)
    return LinODE(b)


def exp_product(L: LinODE, f: RatFun, lam: int) -> LinODE:
    """Monic operator annihilating f^(1/lam) * y over all solutions y of L.

    Only the logarithmic derivative f'/(lam f) enters, so the result stays
    over Q(t)."""
    f = _as_ratfun(f)
    if f.is_zero():
        raise ZeroScale("zero scaling function")
    if lam <= 0:
        raise ValueError("lam must be a positive integer")
    u = f.deriv() / (f * lam)
    n = L.order
    # powers (delta - u)^i as coefficient lists in delta
    powers = [[RatFun.one()]]
    for _ in range(n):
        prev = powers[-1]
        new = [RatFun.zero()] * (len(prev) + 1)
        for k, c in enumerate(prev):
            new[k + 1] = new[k + 1] + c
            new[k] = new[k] + c.deriv() - u * c
        powers.append(new)
    total = [RatFun.zero()] * (n + 1)
    for k, c in enumerate(powers[n]):
        total[k] = total[k] + c
    for i, a in enumerate(L.coeffs):
        if a.is_zero():
            continue
        for k, c in enumerate(powers[i]):
            total[k] = total[k] + a * c
    lead = total[n]
    assert lead == RatFun.one()
    return LinODE(total[:n])


def operator_delta() -> LinODE:
    return LinODE([RatFun.zero()])


def operator_delta_n(n: int) -> LinODE:
    return LinODE([RatFun.zero()] * n)
