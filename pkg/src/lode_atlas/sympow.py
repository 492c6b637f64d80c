"""Symmetric powers of monic operators over Q(t).

The d-th symmetric power is built from the cyclic vector e1^d of the d-th
symmetric power of the companion module: iterate the connection, stop at the
first Q(t)-linear dependence, and solve for the monic coefficients.  Small
systems are solved directly over Q(t); large ones find the dependence by
evaluation mod primes with rational-function reconstruction, and the lifted
coefficients are verified exactly over Z[t] before anything is returned.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, gcd

import numpy as np

from . import intpoly as ip
from . import modp
from .diffop import LinODE, _solve_ratfun_system
from .ratfun import RatFun


def sym_basis(n: int, d: int) -> list[tuple[int, ...]]:
    """Exponent tuples of e_1^m1 * ... * e_n^mn with m1+...+mn = d."""
    if n == 1:
        return [(d,)]
    out = []
    for k in range(d, -1, -1):
        for rest in sym_basis(n - 1, d - k):
            out.append((k,) + rest)
    return out


def _gcd_free_base(polys: list[tuple]) -> list[tuple]:
    """Pairwise-coprime squarefree polynomials generating the given ones."""
    base: list[tuple] = []
    todo = []
    for f in polys:
        for g, _ in ip.squarefree_decomposition(f):
            if len(g) > 1:
                todo.append(g)
    while todo:
        f = todo.pop()
        if len(f) <= 1:
            continue
        for i, b in enumerate(base):
            g = ip.pgcd(f, b)
            if len(g) > 1:
                if g != b:
                    base[i] = g
                    todo.append(ip.pdiv_exact(b, g))
                f = ip.pdiv_exact(f, g)
                while True:
                    h = ip.pgcd(f, g)
                    if len(h) <= 1:
                        break
                    f = ip.pdiv_exact(f, h)
                if len(f) <= 1:
                    break
        if len(f) > 1:
            base.append(f)
            todo.append(f)  # re-check against the rest
    # deduplicate
    out = []
    for b in base:
        if b not in out:
            out.append(b)
    return out


def _factor_exps(poly: tuple, base: list[tuple]) -> tuple[int, list[int]]:
    """(constant, exponents) with poly = constant * prod base_j^e_j."""
    exps = [0] * len(base)
    rest = poly
    for j, f in enumerate(base):
        while True:
            try:
                rest = ip.pdiv_exact(rest, f)
                exps[j] += 1
            except ArithmeticError:
                break
    if len(rest) != 1:
        raise ArithmeticError("denominator not generated by the factor base")
    return rest[0], exps


class _SymModule:
    """State for iterating nabla on Sym^d of the companion module of L."""

    def __init__(self, L: LinODE, d: int):
        self.L = L
        self.n = L.order
        self.d = d
        self.basis = sym_basis(L.order, d)
        self.index = {m: i for i, m in enumerate(self.basis)}
        self.N = len(self.basis)
        dens = [a.den for a in L.coeffs if not a.is_zero()]
        self.base = _gcd_free_base(dens) if dens else []
        self.dscale = 1
        mus = []
        for a in L.coeffs:
            if a.is_zero():
                mus.append([0] * len(self.base))
                continue
            c0, e = _factor_exps(a.den, self.base)
            mus.append(e)
            den = (a.c / c0).denominator
            self.dscale = self.dscale * den // gcd(self.dscale, den)
        self.mu = [max((m[j] for m in mus), default=0) for j in range(len(self.base))]
        self.g = [max(1, m) for m in self.mu]
        # A_k = a_k * dscale * prod base^mu, as integer polynomials
        self.A = []
        for a, m in zip(L.coeffs, mus):
            if a.is_zero():
                self.A.append(())
                continue
            c0, _ = _factor_exps(a.den, self.base)
            scal = a.c / c0 * self.dscale
            assert scal.denominator == 1
            poly = ip.pscale(a.num, int(scal))
            for j, f in enumerate(self.base):
                poly = ip.pmul(poly, ip.ppow(f, self.mu[j] - m[j]))
            self.A.append(poly)
        self.F = (1,)
        for f in self.base:
            self.F = ip.pmul(self.F, f)
        self.pad_d = (1,)   # prod f^(g-1)
        self.pad_int = (1,)  # prod f^g
        self.pad_a = (1,)   # prod f^(g-mu)
        for j, f in enumerate(self.base):
            self.pad_d = ip.pmul(self.pad_d, ip.ppow(f, self.g[j] - 1))
            self.pad_int = ip.pmul(self.pad_int, ip.ppow(f, self.g[j]))
            self.pad_a = ip.pmul(self.pad_a, ip.ppow(f, self.g[j] - self.mu[j]))
        # symbolic action of nabla on basis monomials
        self.action: list[list[tuple[int, str, int]]] = [[] for _ in self.basis]
        for i, m in enumerate(self.basis):
            for slot in range(self.n - 1):
                if m[slot]:
                    tgt = list(m)
                    tgt[slot] -= 1
                    tgt[slot + 1] += 1
                    self.action[self.index[tuple(tgt)]].append((i, "int", m[slot]))
            if m[self.n - 1]:
                for k in range(self.n):
                    tgt = list(m)
                    tgt[self.n - 1] -= 1
                    tgt[k] += 1
                    self.action[self.index[tuple(tgt)]].append((i, "a", k))
                    # multiplier is -m[n-1] * a_k
        self.mults = [m[self.n - 1] for m in self.basis]
        # iteration state
        nums = [() for _ in range(self.N)]
        nums[self.index[(d,) + (0,) * (self.n - 1)]] = (1,)
        self.vectors = [(nums, tuple(0 for _ in self.base), 1)]

    def step(self):
        nums, exps, s = self.vectors[-1]
        # sum_j e_j f_j' prod_{l != j} f_l
        corr: tuple = ()
        for j, f in enumerate(self.base):
            if exps[j]:
                term = ip.pderiv(f)
                for l, fl in enumerate(self.base):
                    if l != j:
                        term = ip.pmul(term, fl)
                corr = ip.padd(corr, ip.pscale(term, exps[j]))
        new = []
        for tgt in range(self.N):
            acc: tuple = ()
            u = nums[tgt]
            if u:
                # derivative of u / (s * prod f^e), aligned to exponents e + g;
                # the A-terms below already carry one dscale factor
                dterm = ip.pmul(ip.pderiv(u), self.F)
                if corr:
                    dterm = ip.psub(dterm, ip.pmul(u, corr))
                if dterm:
                    acc = ip.pmul(ip.pscale(dterm, self.dscale), self.pad_d)
            for src, kind, val in self.action[tgt]:
                usrc = nums[src]
                if not usrc:
                    continue
                if kind == "int":
                    acc = ip.padd(acc, ip.pmul(ip.pscale(usrc, val * self.dscale),
                                               self.pad_int))
                elif self.A[val]:
                    term = ip.pscale(ip.pmul(usrc, self.A[val]), -self.mults[src])
                    if self.pad_a != (1,):
                        term = ip.pmul(term, self.pad_a)
                    acc = ip.padd(acc, term)
            new.append(acc)
        s2 = s * self.dscale
        content = s2
        for u in new:
            for c in u:
                if c:
                    content = gcd(content, c)
                    if content == 1:
                        break
            if content == 1:
                break
        if content > 1:
            new = [tuple(c // content for c in u) for u in new]
            s2 //= content
        self.vectors.append((new, tuple(e + g for e, g in zip(exps, self.g)), s2))

    def aligned_numerators(self, upto: int):
        """Integer-polynomial numerators of vectors 0..upto over the common
        denominator (lcm of scales, max factor exponents)."""
        vs = self.vectors[: upto + 1]
        smax = 1
        for _, _, s in vs:
            smax = smax * s // gcd(smax, s)
        emax = [max(v[1][j] for v in vs) for j in range(len(self.base))]
        out = []
        for nums, exps, s in vs:
            pad: tuple = (smax // s,)
            for j, f in enumerate(self.base):
                if emax[j] > exps[j]:
                    pad = ip.pmul(pad, ip.ppow(f, emax[j] - exps[j]))
            out.append([ip.pmul(u, pad) if u else () for u in nums])
        return out


def symmetric_power(L: LinODE, d: int) -> LinODE:
    """Monic operator whose solutions span the degree-d products of
    solutions of L; order at most C(n+d-1, d)."""
    if d < 1:
        raise ValueError("d must be a positive integer")
    if d == 1:
        return L
    mod = _SymModule(L, d)
    N = mod.N
    p_track = modp.prime_pool()[0]
    # two evaluation points for early dependence detection
    taus = _good_points(mod, p_track, 2)
    trackers = [modp.RowEchelonTracker(N, p_track) for _ in taus]
    order = None
    k = 0
    while True:
        nums, _, _ = mod.vectors[k]
        dep = []
        for tr, tau in zip(trackers, taus):
            vec = [ip.peval_int(u, tau) % p_track if u else 0 for u in nums]
            dep.append(not tr.add(vec))
        if any(dep):
            order = k
            result = _solve_dependence(mod, order)
            if result is not None:
                return result
            # false alarm (unlucky evaluation); rebuild trackers with new points
            taus = _good_points(mod, p_track, len(taus) + 1)
            trackers = [modp.RowEchelonTracker(N, p_track) for _ in taus]
            for kk in range(k + 1):
                nums_k = mod.vectors[kk][0]
                for tr, tau in zip(trackers, taus):
                    tr.add([ip.peval_int(u, tau) % p_track if u else 0
                            for u in nums_k])
        if k == N:
            # dependence is guaranteed at k = N; force the solve
            result = _solve_dependence(mod, N)
            if result is not None:
                return result
            raise RuntimeError("symmetric power reconstruction failed")
        k += 1
        if k >= len(mod.vectors):
            mod.step()


def _good_points(mod: _SymModule, p: int, count: int, start: int = 2):
    out = []
    tau = start
    while len(out) < count:
        if all(ip.peval_int(f, tau) % p for f in mod.base):
            out.append(tau)
        tau += 1
    return out


def _solve_dependence(mod: _SymModule, m: int) -> LinODE | None:
    """Reconstruct and exactly verify the monic dependence of nabla^m w on
    its predecessors; None if the dependence is refuted."""
    if m == 0:
        return None
    U = mod.aligned_numerators(m)
    N = mod.N
    if (m + 1) * N <= 64:
        return _direct_solve(mod, m)
    max_deg = max(len(u) for col in U for u in col) - 1
    npoints = 256
    while npoints <= (max_deg + 2) * 4:
        npoints *= 2
    maxbits = max((max((abs(c).bit_length() for c in u), default=1)
                   for col in U for u in col), default=1)
    nprimes = max(4, min(240, maxbits // 13))
    pool = modp.prime_pool(320)
    cache: dict[int, list] = {}
    while npoints <= 16384:
        restart = False
        for p in pool[:nprimes]:
            if p in cache:
                continue
            rec = _meik_prime(mod, U, m, npoints, p)
            if rec == "more_points":
                npoints *= 2
                cache.clear()
                restart = True
                break
            cache[p] = rec
        if restart:
            continue
        # keep the primes agreeing with the modal degree shape
        shapes: dict = {}
        for p in pool[:nprimes]:
            key = tuple((len(n), len(d)) for n, d in cache[p])
            shapes.setdefault(key, []).append(p)
        plist = max(shapes.values(), key=len)
        if len(plist) < max(2, nprimes - 4):
            nprimes += max(8, nprimes // 2)
            if nprimes > 300:
                return None
            continue
        degs = max(max(len(n), len(d)) for n, d in cache[plist[0]])
        if degs >= npoints // 2 - 4:
            npoints *= 2
            cache.clear()
            continue
        coeffs = _lift_coeffs([cache[p] for p in plist], plist, m)
        if coeffs is not None and _verify_dependence(U, coeffs):
            return LinODE(coeffs)
        nprimes += max(8, nprimes // 2)
        if nprimes > 300:
            return None
    return None


def _lift_coeffs(recs_list, plist, m):
    coeffs = []
    for j in range(m):
        num_res = [recs[j][0] for recs in recs_list]
        den_res = [recs[j][1] for recs in recs_list]
        num = modp.lift_vector(num_res, plist)
        den = modp.lift_vector(den_res, plist)
        if num is None or den is None:
            return None
        coeffs.append(RatFun.from_coeffs(num, den))
    return coeffs


def _direct_solve(mod: _SymModule, m: int) -> LinODE | None:
    U = mod.aligned_numerators(m)
    cols = [[RatFun(1, u) if u else RatFun.zero() for u in col] for col in U]
    try:
        b = _solve_ratfun_system(cols[:m], [-x for x in cols[m]])
    except Exception:
        return None
    return LinODE(b)


def _meik_prime(mod: _SymModule, U, m: int, npoints: int, p: int):
    """Monic coefficient functions mod p as (num, den) pairs with monic
    denominators, reconstructed from npoints evaluations; or a retry signal."""
    N = mod.N
    ncols = m + 1
    taus = np.array(_good_points(mod, p, npoints), dtype=np.int64)
    degp1 = max(len(u) for col in U for u in col)
    C = np.zeros((ncols * N, degp1), dtype=np.int64)
    for k, col in enumerate(U):
        for i, u in enumerate(col):
            if u:
                C[k * N + i, :len(u)] = [c % p for c in u]
    # Vandermonde evaluation, chunked so int64 accumulation cannot overflow
    V = np.empty((degp1, npoints), dtype=np.int64)
    V[0] = 1
    for r in range(1, degp1):
        V[r] = V[r - 1] * taus % p
    chunk = max(1, (1 << 62) // (p * p) - 1)
    vals = np.zeros((ncols * N, npoints), dtype=np.int64)
    for lo in range(0, degp1, chunk):
        hi = min(degp1, lo + chunk)
        vals = (vals + C[:, lo:hi] @ V[lo:hi]) % p
    # per-point kernel, last coordinate normalized to 1
    ratios = np.zeros((ncols - 1, npoints), dtype=np.int64)
    good = np.ones(npoints, dtype=bool)
    for t in range(npoints):
        M = vals[:, t].reshape(ncols, N).T
        basis, piv, free = modp.nullspace_mod(M, p)
        if len(free) != 1 or free[0] != ncols - 1:
            good[t] = False
            continue
        ratios[:, t] = basis[0][: ncols - 1]
    if good.sum() < max(ncols + 8, npoints * 3 // 4):
        return "more_points"
    taus_g = taus[good]
    vals_g = ratios[:, good]
    node = [1]
    for tau in taus_g.tolist():
        node = modp.pmul_mod(node, [-tau, 1], p)
    interp = modp.newton_interpolate_mod(taus_g, vals_g, p)
    recs = []
    for j in range(ncols - 1):
        f = interp[j].tolist()
        while f and f[-1] == 0:
            f.pop()
        rec = modp.cauchy_reconstruct_mod(node, f, p, len(taus_g) // 2 - 2)
        if rec is None or not rec[1]:
            return "more_points"
        num, den = rec
        inv = pow(den[-1], -1, p)
        num = [c * inv % p for c in num]
        den = [c * inv % p for c in den]
        recs.append((num, den))
    return recs


def _verify_dependence(U, coeffs: list[RatFun]) -> bool:
    """Exact check: sum_j alpha_j U_j + alpha_m U_m = 0 over Z[t]."""
    m = len(coeffs)
    dc_poly: tuple = (1,)
    dc_scale = 1
    for c in coeffs:
        if not c.is_zero():
            dc_poly = ip.plcm(dc_poly, c.den)
            dc_scale = dc_scale * c.c.denominator // gcd(dc_scale, c.c.denominator)
    alphas = []
    for c in coeffs:
        if c.is_zero():
            alphas.append(())
            continue
        scal = c.c * dc_scale
        assert scal.denominator == 1
        alphas.append(ip.pscale(ip.pmul(c.num, ip.pdiv_exact(dc_poly, c.den)),
                                int(scal)))
    alpha_m = ip.pscale(dc_poly, dc_scale)
    N = len(U[0])
    for i in range(N):
        acc = ip.pmul(U[m][i], alpha_m) if U[m][i] else ()
        for j in range(m):
            if alphas[j] and U[j][i]:
                acc = ip.padd(acc, ip.pmul(U[j][i], alphas[j]))
        if acc:
            return False
    return True
