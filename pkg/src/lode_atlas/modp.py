"""Modular linear algebra and rational reconstruction kernels.

Candidates are found mod word-size primes (numpy int64 arithmetic; primes
stay below 2^26 so products fit comfortably), then lifted to Q by CRT plus
Wang rational reconstruction.  Callers are responsible for exact
verification of lifted results; nothing here is trusted blindly.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import isqrt as _isqrt

import numpy as np

_PRIME_CEILING = (1 << 26) - 1


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@lru_cache(maxsize=1)
def prime_pool(count: int = 64) -> tuple[int, ...]:
    out = []
    n = _PRIME_CEILING
    while len(out) < count:
        if _is_prime(n):
            out.append(n)
        n -= 2
    return tuple(out)


def crt_pair(r1: int, m1: int, r2: int, m2: int) -> tuple[int, int]:
    inv = pow(m1 % m2, -1, m2)
    k = ((r2 - r1) * inv) % m2
    return r1 + m1 * k, m1 * m2


def rational_reconstruct(r: int, m: int) -> Fraction | None:
    """Wang reconstruction: p/q = r (mod m) with |p|, q <= sqrt(m/2)."""
    r %= m
    if r == 0:
        return Fraction(0)
    bound = _isqrt(m // 2)
    s0, s1 = m, r
    t0, t1 = 0, 1
    while s1 > bound:
        q = s0 // s1
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if s1 == 0 or abs(t1) > bound:
        return None
    from math import gcd
    if gcd(s1, t1) != 1:
        return None
    if t1 < 0:
        s1, t1 = -s1, -t1
    return Fraction(s1, t1)


# -- dense modular polynomials (int lists, ascending) --------------------------


def pmod(f, p: int) -> list[int]:
    out = [c % p for c in f]
    while out and out[-1] == 0:
        out.pop()
    return out


def pmul_mod(f, g, p: int) -> list[int]:
    if not f or not g:
        return []
    fa = np.array(f, dtype=np.int64)
    ga = np.array(g, dtype=np.int64)
    # convolution in chunks to stay within int64
    out = np.convolve(fa, ga)
    out %= p
    res = out.tolist()
    while res and res[-1] == 0:
        res.pop()
    return res


def pdivmod_mod(f, g, p: int):
    f = list(f)
    dg = len(g) - 1
    inv = pow(g[-1], -1, p)
    q = [0] * max(len(f) - dg, 0)
    for i in range(len(f) - dg - 1, -1, -1):
        c = f[i + dg] * inv % p
        if c:
            q[i] = c
            for j, gc in enumerate(g):
                f[i + j] = (f[i + j] - c * gc) % p
    while f and f[-1] == 0:
        f.pop()
    return q, f


def peval_mod(f, x: int, p: int) -> int:
    acc = 0
    for c in reversed(f):
        acc = (acc * x + c) % p
    return acc


def _batch_inverse_mod(v: np.ndarray, p: int) -> np.ndarray:
    """Montgomery batch inversion of a nonzero int64 vector mod p."""
    n = v.shape[0]
    pref = np.empty(n, dtype=np.int64)
    acc = 1
    for i in range(n):
        acc = acc * int(v[i]) % p
        pref[i] = acc
    inv_all = pow(acc, -1, p)
    out = np.empty(n, dtype=np.int64)
    for i in range(n - 1, 0, -1):
        out[i] = int(pref[i - 1]) * inv_all % p
        inv_all = inv_all * int(v[i]) % p
    out[0] = inv_all
    return out


def newton_interpolate_mod(xs: np.ndarray, ys: np.ndarray, p: int) -> np.ndarray:
    """Monomial coefficients of interpolants through (xs, ys[row]) mod p.

    ys has shape (rows, npoints); returns (rows, npoints) coefficient array."""
    n = xs.shape[0]
    dd = ys.astype(np.int64).copy()
    # divided differences: dd[:, i] becomes the i-th Newton coefficient
    for level in range(1, n):
        denom = (xs[level:] - xs[:-level]) % p
        inv = _batch_inverse_mod(denom, p)
        dd[:, level:] = (dd[:, level:] - dd[:, level - 1:-1]) % p
        dd[:, level:] = dd[:, level:] * inv % p
    # Horner back-conversion to monomial basis
    rows = ys.shape[0]
    coeff = np.zeros((rows, n), dtype=np.int64)
    for i in range(n - 1, -1, -1):
        # coeff = coeff * (x - xs[i]) + dd[:, i]
        shifted = np.zeros_like(coeff)
        shifted[:, 1:] = coeff[:, :-1]
        coeff = (shifted - coeff * int(xs[i])) % p
        coeff[:, 0] = (coeff[:, 0] + dd[:, i]) % p
    return coeff


def _np_strip(a: np.ndarray) -> np.ndarray:
    nz = np.nonzero(a)[0]
    return a[: int(nz[-1]) + 1] if nz.size else a[:0]


def _np_divmod_mod(f: np.ndarray, g: np.ndarray, p: int):
    """Quotient and remainder of int64 coefficient arrays mod p."""
    f = f.copy()
    dg = g.shape[0] - 1
    inv = pow(int(g[-1]), -1, p)
    qlen = f.shape[0] - dg
    q = np.zeros(max(qlen, 0), dtype=np.int64)
    for i in range(qlen - 1, -1, -1):
        c = f[i + dg] * inv % p
        if c:
            q[i] = c
            f[i:i + dg + 1] = (f[i:i + dg + 1] - c * g) % p
    return q, _np_strip(f)


def cauchy_reconstruct_mod(node_poly, interp, p: int, max_deg: int):
    """Rational function num/den with num and den degree <= max_deg agreeing
    with the interpolant modulo the node polynomial, or None."""
    r0 = np.array(node_poly, dtype=np.int64)
    r1 = _np_strip(np.array(interp, dtype=np.int64))
    if not r1.size:
        return [0], [1]
    t0 = np.zeros(0, dtype=np.int64)
    t1 = np.ones(1, dtype=np.int64)
    while r1.size and r1.size - 1 > max_deg:
        q, r = _np_divmod_mod(r0, r1, p)
        r0, r1 = r1, r
        if q.size and t1.size:
            qt = np.convolve(q, t1) % p
        else:
            qt = np.zeros(0, dtype=np.int64)
        n = max(t0.size, qt.size)
        nt = np.zeros(n, dtype=np.int64)
        nt[: t0.size] += t0
        nt[: qt.size] -= qt
        t0, t1 = t1, _np_strip(nt % p)
    if not r1.size or not t1.size or t1.size - 1 > max_deg:
        return None
    return r1.tolist(), t1.tolist()


# -- modular matrices --------------------------------------------------------------


def rref_mod(A: np.ndarray, p: int):
    """Reduced row echelon form of an int64 matrix mod p.

    Returns (R, pivot_columns)."""
    A = A.astype(np.int64) % p
    rows, cols = A.shape
    piv_cols = []
    r = 0
    for c in range(cols):
        if r >= rows:
            break
        col = A[r:, c]
        nz = np.nonzero(col)[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            A[[r, i]] = A[[i, r]]
        inv = pow(int(A[r, c]), -1, p)
        A[r] = A[r] * inv % p
        mask = np.nonzero(A[:, c])[0]
        mask = mask[mask != r]
        if mask.size:
            A[mask] = (A[mask] - np.outer(A[mask, c], A[r])) % p
        piv_cols.append(c)
        r += 1
    return A, piv_cols


def nullspace_mod(A: np.ndarray, p: int) -> tuple[np.ndarray, list[int], list[int]]:
    """Canonical nullspace basis mod p.

    Returns (basis, pivot_cols, free_cols); basis has shape (k, cols) with a
    1 in each free column, so the same shape reconstructs across primes."""
    R, piv = rref_mod(A, p)
    cols = A.shape[1]
    free = [c for c in range(cols) if c not in piv]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for bi, fc in enumerate(free):
        basis[bi, fc] = 1
        for ri, pc in enumerate(piv):
            basis[bi, pc] = (-int(R[ri, fc])) % p
    return basis, piv, free


class RowEchelonTracker:
    """Incremental rank tracking of integer vectors evaluated mod p."""

    def __init__(self, dim: int, p: int):
        self.p = p
        self.dim = dim
        self.rows: list[np.ndarray] = []
        self.pivots: list[int] = []

    def add(self, vec) -> bool:
        """Reduce vec against the basis; returns True if independent."""
        v = np.array([int(x) % self.p for x in vec], dtype=np.int64)
        p = self.p
        for row, piv in zip(self.rows, self.pivots):
            if v[piv]:
                v = (v - v[piv] * row) % p
        nz = np.nonzero(v)[0]
        if nz.size == 0:
            return False
        piv = int(nz[0])
        inv = pow(int(v[piv]), -1, p)
        v = v * inv % p
        self.rows.append(v)
        self.pivots.append(piv)
        return True


def _crt_basis(primes: tuple[int, ...]):
    """(M, [E_i]) with E_i = (M/p_i) * ((M/p_i)^-1 mod p_i); then
    x = sum res_i E_i mod M reconstructs residues in one pass."""
    M = 1
    for p in primes:
        M *= p
    basis = []
    for p in primes:
        Mi = M // p
        basis.append(Mi * pow(Mi % p, -1, p))
    return M, basis


_CRT_CACHE: dict = {}


def lift_vector(residue_lists: list, primes: list[int]):
    """CRT + Wang lift of per-prime residue vectors; None if any entry fails."""
    key = tuple(primes)
    if key not in _CRT_CACHE:
        _CRT_CACHE[key] = _crt_basis(key)
        if len(_CRT_CACHE) > 8:
            _CRT_CACHE.pop(next(iter(_CRT_CACHE)))
    M, basis = _CRT_CACHE[key]
    out = []
    n = len(residue_lists[0])
    for i in range(n):
        acc = 0
        for res, e in zip(residue_lists, basis):
            acc += int(res[i]) * e
        q = rational_reconstruct(acc % M, M)
        if q is None:
            return None
        out.append(q)
    return out
