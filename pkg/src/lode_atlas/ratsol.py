"""Exact rational solutions of monic operators over Q(t).

Pole orders at finite singular points are bounded by integer indicial roots,
the degree at infinity by the integer exponents there; the resulting linear
system is solved exactly (modular nullspace, CRT lift, integer verification).
Denominator factors without rational roots are out of scope unless the caller
certifies them pole-free (as the symmetric-power pipeline can: apparent
factors coprime to the base operator's singularities carry only analytic
solutions)."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

import numpy as np

from . import intpoly as ip
from . import modp
from .diffop import LinODE
from .errors import UnsupportedFactor
from .ratfun import RatFun


@dataclass
class SingularityData:
    """Finite singular points with denominator multiplicities and rational
    indicial roots, plus the data at infinity."""
    finite: list          # (point, multiplicity, [rational indicial roots])
    infinity: list        # rational indicial roots at infinity
    pole_free_factors: list


def _falling_poly(k: int) -> list[Fraction]:
    """Coefficients of rho (rho-1) ... (rho-k+1)."""
    out = [Fraction(1)]
    for i in range(k):
        new = [Fraction(0)] * (len(out) + 1)
        for j, c in enumerate(out):
            new[j + 1] += c
            new[j] -= c * i
        out = new
    return out


def _rising_poly(k: int) -> list[Fraction]:
    """Coefficients of rho (rho+1) ... (rho+k-1)."""
    out = [Fraction(1)]
    for i in range(k):
        new = [Fraction(0)] * (len(out) + 1)
        for j, c in enumerate(out):
            new[j + 1] += c
            new[j] += c * i
        out = new
    return out


def indicial_polynomial(L: LinODE, point) -> list[Fraction]:
    """Indicial polynomial at a finite point or at infinity ('inf'),
    ascending coefficients in the exponent variable."""
    n = L.order
    coeffs = list(L.coeffs) + [RatFun.one()]
    if point == "inf":
        data = []
        for k, a in enumerate(coeffs):
            if a.is_zero():
                continue
            data.append((a.valuation_inf() + k, k, a.leading_inf()))
        w = min(v for v, _, _ in data)
        poly = [Fraction(0)] * (n + 1)
        for v, k, lc in data:
            if v == w:
                sign = -1 if k % 2 else 1
                for j, c in enumerate(_rising_poly(k)):
                    poly[j] += sign * lc * c
        return poly
    point = Fraction(point)
    data = []
    for k, a in enumerate(coeffs):
        if a.is_zero():
            continue
        data.append((a.valuation(point) - k, k, a.leading_at(point)))
    w = min(v for v, _, _ in data)
    poly = [Fraction(0)] * (n + 1)
    for v, k, lc in data:
        if v == w:
            for j, c in enumerate(_falling_poly(k)):
                poly[j] += lc * c
    return poly


def _clear_to_int(poly: list[Fraction]) -> tuple:
    den = 1
    from math import gcd
    for c in poly:
        den = den * c.denominator // gcd(den, c.denominator)
    return ip.pstrip([int(c * den) for c in poly])


def indicial_roots(L: LinODE, point) -> list[Fraction]:
    """Rational roots of the indicial equation at the point (or 'inf');
    ordinary points yield {0, 1, ..., n-1}."""
    return ip.rat_roots(_clear_to_int(indicial_polynomial(L, point)))


def singularity_data(L: LinODE, pole_free=()) -> SingularityData:
    den = L.singular_den()
    pole_free = [ip.pprimitive(f)[1] for f in pole_free]
    finite = []
    pf_found = []
    for g, mult in ip.squarefree_decomposition(den):
        roots = ip.rat_roots(g)
        if len(roots) != len(g) - 1:
            covered = g
            for f in pole_free:
                h = ip.pgcd(covered, f)
                while len(h) > 1:
                    covered = ip.pdiv_exact(covered, h)
                    h = ip.pgcd(covered, f)
            extra = ip.rat_roots(covered) if len(covered) > 1 else []
            if len(extra) != len(covered) - 1:
                raise UnsupportedFactor(
                    f"denominator factor of degree {len(g) - 1} does not "
                    "split into rational linear factors")
            pf_found.append(g)
            roots = extra
        for r in roots:
            finite.append((r, mult, indicial_roots(L, r)))
    inf_roots = indicial_roots(L, "inf")
    return SingularityData(finite, inf_roots, pf_found)


def rational_solutions(L: LinODE, pole_free=()) -> list[RatFun]:
    """Q-basis of rational solutions of L, each verified exactly.

    pole_free lists denominator factors certified to carry only analytic
    local solutions (no poles allowed there)."""
    sing = singularity_data(L, pole_free)
    n = L.order
    Q: tuple = (1,)
    for point, _, roots in sing.finite:
        int_roots = sorted({int(r) for r in roots if r.denominator == 1})
        e = max(0, -int_roots[0]) if int_roots else 0
        if e:
            Q = ip.pmul(Q, ip.ppow((-point.numerator, point.denominator), e))
    inf_int = sorted({int(r) for r in sing.infinity if r.denominator == 1})
    if not inf_int:
        return []
    E = (len(Q) - 1) - inf_int[0]
    if E < 0:
        return []
    A = _ansatz_matrix(L, Q, E)
    basis = _int_nullspace(A, E + 1)
    out = []
    from math import gcd as _gcd
    for vec in basis:
        den = 1
        for x in vec:
            den = den * x.denominator // _gcd(den, x.denominator)
        num = ip.pstrip([int(x * den) for x in vec])
        sol = RatFun(1, num, Q)
        # normalize: lowest-degree nonzero numerator coefficient equals 1
        lead = next(c for c in sol.monic_pairs()[0] if c != 0)
        out.append(sol * (1 / lead) if lead != 1 else sol)
    return out


def _ansatz_matrix(L: LinODE, Q: tuple, E: int) -> list[list[int]]:
    """Columns: the cleared polynomial L(t^j / Q), j = 0..E."""
    cleared = L.cleared()
    n = L.order
    # B_m = Q^(m+1) * (1/Q)^(m): B_0 = 1, B_{m+1} = B_m' Q - (m+1) B_m Q'
    B = [(1,)]
    Qp = ip.pderiv(Q)
    for m in range(n):
        B.append(ip.psub(ip.pmul(ip.pderiv(B[m]), Q),
                         ip.pscale(ip.pmul(B[m], Qp), m + 1)))
    Qpow = [(1,)]
    for _ in range(n + 1):
        Qpow.append(ip.pmul(Qpow[-1], Q))
    cols = []
    maxlen = 0
    for j in range(E + 1):
        acc: tuple = ()
        for k in range(n + 1):
            P = cleared[k]
            if not P:
                continue
            for i in range(min(k, j) + 1):
                c = comb(k, i) * _falling_int(j, i)
                if c == 0:
                    continue
                term = ip.pmul(P, B[k - i])
                term = ip.pmul(term, Qpow[n - k + i])
                term = ip.pscale(term, c)
                # times t^(j-i)
                term = (0,) * (j - i) + term
                acc = ip.padd(acc, term)
        cols.append(list(acc))
        maxlen = max(maxlen, len(acc))
    return [[col[r] if r < len(col) else 0 for col in cols]
            for r in range(maxlen)]


def _falling_int(j: int, i: int) -> int:
    out = 1
    for s in range(i):
        out *= j - s
    return out


def _int_nullspace(A: list[list[int]], cols: int) -> list[list[Fraction]]:
    """Exact rational nullspace basis of an integer matrix: modular
    candidates, CRT + Wang lift, and an exact A v = 0 verification.  The
    modular nullity upper-bounds the true one, so verified lifts certify
    the dimension."""
    rows = len(A)
    if cols == 0:
        return []
    if rows == 0:
        return [[Fraction(1 if i == j else 0) for i in range(cols)]
                for j in range(cols)]
    pool = modp.prime_pool()
    nprimes = 2
    while nprimes <= 32:
        primes = list(pool[:nprimes])
        per_prime = []
        ref = None
        for p in primes:
            Ap = np.array([[x % p for x in row] for row in A], dtype=np.int64)
            basis, piv, free = modp.nullspace_mod(Ap, p)
            key = tuple(free)
            if ref is None:
                ref = key
            if key != ref:
                per_prime = None
                break
            per_prime.append(basis)
        if per_prime is None:
            nprimes += 2
            continue
        k = per_prime[0].shape[0]
        if k == 0:
            return []
        lifted = []
        ok = True
        for bi in range(k):
            vec = modp.lift_vector([b[bi] for b in per_prime], primes)
            if vec is None:
                ok = False
                break
            lifted.append(vec)
        if ok and all(_verify_matvec(A, v) for v in lifted):
            return lifted
        nprimes += 2
    raise RuntimeError("rational nullspace lift failed")


def _verify_matvec(A: list[list[int]], v: list[Fraction]) -> bool:
    from math import gcd
    den = 1
    for x in v:
        den = den * x.denominator // gcd(den, x.denominator)
    iv = [int(x * den) for x in v]
    for row in A:
        if sum(r * x for r, x in zip(row, iv)) != 0:
            return False
    return True
