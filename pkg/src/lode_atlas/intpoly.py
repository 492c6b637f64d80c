"""Dense univariate polynomial kernels over Z (ascending coefficient tuples).

The zero polynomial is the empty tuple.  Large products go through Kronecker
substitution so CPython's big-integer multiplication does the heavy lifting.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt

IPoly = tuple  # tuple[int, ...]


def pstrip(seq) -> IPoly:
    seq = list(seq)
    while seq and seq[-1] == 0:
        seq.pop()
    return tuple(seq)


def pdeg(f: IPoly) -> int:
    return len(f) - 1


def padd(f: IPoly, g: IPoly) -> IPoly:
    if len(f) < len(g):
        f, g = g, f
    out = list(f)
    for i, c in enumerate(g):
        out[i] += c
    return pstrip(out)


def pneg(f: IPoly) -> IPoly:
    return tuple(-c for c in f)


def psub(f: IPoly, g: IPoly) -> IPoly:
    n = max(len(f), len(g))
    out = list(f) + [0] * (n - len(f))
    for i, c in enumerate(g):
        out[i] -= c
    return pstrip(out)


def pscale(f: IPoly, c: int) -> IPoly:
    if c == 0:
        return ()
    return tuple(x * c for x in f)


def _kronecker_unsigned(f: list[int], g: list[int], nbytes: int) -> list[int]:
    fb = b"".join(c.to_bytes(nbytes, "little") for c in f)
    gb = b"".join(c.to_bytes(nbytes, "little") for c in g)
    prod = int.from_bytes(fb, "little") * int.from_bytes(gb, "little")
    total = len(f) + len(g) - 1
    raw = prod.to_bytes(total * nbytes + 16, "little")
    return [int.from_bytes(raw[i * nbytes:(i + 1) * nbytes], "little")
            for i in range(total)]


def pmul(f: IPoly, g: IPoly) -> IPoly:
    if not f or not g:
        return ()
    if len(f) == 1:
        return pstrip(x * f[0] for x in g)
    if len(g) == 1:
        return pstrip(x * g[0] for x in f)
    if len(f) * len(g) <= 1024:
        out = [0] * (len(f) + len(g) - 1)
        for i, a in enumerate(f):
            if a:
                for j, b in enumerate(g):
                    if b:
                        out[i + j] += a * b
        return pstrip(out)
    # Kronecker substitution on the positive/negative parts.
    fp = [c if c > 0 else 0 for c in f]
    fn = [-c if c < 0 else 0 for c in f]
    gp = [c if c > 0 else 0 for c in g]
    gn = [-c if c < 0 else 0 for c in g]
    bits = (max(map(abs, f)).bit_length() + max(map(abs, g)).bit_length()
            + min(len(f), len(g)).bit_length() + 1)
    nbytes = (bits + 7) // 8
    total = len(f) + len(g) - 1
    out = [0] * total
    for a, b, sign in ((fp, gp, 1), (fn, gn, 1), (fp, gn, -1), (fn, gp, -1)):
        if any(a) and any(b):
            part = _kronecker_unsigned(a, b, nbytes)
            for i in range(total):
                out[i] += sign * part[i]
    return pstrip(out)


def ppow(f: IPoly, e: int) -> IPoly:
    result = (1,)
    base = f
    while e:
        if e & 1:
            result = pmul(result, base)
        e >>= 1
        if e:
            base = pmul(base, base)
    return result


def pderiv(f: IPoly) -> IPoly:
    return pstrip(i * c for i, c in enumerate(f) if i > 0) if len(f) > 1 else ()


def peval_int(f: IPoly, x: int) -> int:
    acc = 0
    for c in reversed(f):
        acc = acc * x + c
    return acc


def peval_frac(f: IPoly, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(f):
        acc = acc * x + c
    return acc


def pshift_int(f: IPoly, c: int) -> IPoly:
    """f(t + c) for integer c, via iterated synthetic division."""
    if not f or c == 0:
        return f
    work = list(f)
    n = len(work)
    for i in range(n - 1):
        for j in range(n - 2, i - 1, -1):
            work[j] += c * work[j + 1]
    return pstrip(work)


def pcontent(f: IPoly) -> int:
    g = 0
    for c in f:
        g = gcd(g, c)
        if g == 1:
            return 1
    return g


def pprimitive(f: IPoly) -> tuple[int, IPoly]:
    """(content, primitive part) with positive leading coefficient."""
    if not f:
        return 0, ()
    c = pcontent(f)
    if f[-1] < 0:
        c = -c
    return c, tuple(x // c for x in f)


def pdiv_exact(f: IPoly, g: IPoly) -> IPoly:
    """Quotient assuming g | f over Q with integer output."""
    if not f:
        return ()
    rem = list(f)
    dg = len(g) - 1
    out = [0] * (len(f) - dg)
    for i in range(len(out) - 1, -1, -1):
        c = rem[i + dg]
        if c % g[-1] != 0:
            raise ArithmeticError("inexact division")
        q = c // g[-1]
        out[i] = q
        if q:
            for j, d in enumerate(g):
                rem[i + j] -= q * d
    if any(rem):
        raise ArithmeticError("inexact division")
    return pstrip(out)


def ppseudo_rem(f: IPoly, g: IPoly) -> tuple[IPoly, int]:
    """(r, k) with r = lc(g)^k * f mod g over Z; k = reduction steps taken."""
    dg = len(g) - 1
    lc = g[-1]
    rem = list(f)
    k = 0
    while True:
        rem_t = pstrip(rem)
        if not rem_t or len(rem_t) - 1 < dg:
            return rem_t, k
        rem = list(rem_t)
        d = len(rem) - 1
        c = rem[-1]
        rem = [x * lc for x in rem]
        for j, gc in enumerate(g):
            rem[d - dg + j] -= c * gc
        k += 1


_GCD_PRIMES = (67108859, 67108837, 67108819)


def _gcd_degree_mod(a: IPoly, b: IPoly) -> int | None:
    """deg gcd(a, b) computed mod a prime not dividing either leading
    coefficient; an upper bound for the true gcd degree."""
    for p in _GCD_PRIMES:
        if a[-1] % p == 0 or b[-1] % p == 0:
            continue
        fa = [c % p for c in a]
        fb = [c % p for c in b]
        while True:
            while fb and fb[-1] == 0:
                fb.pop()
            if not fb:
                return len(fa) - 1
            inv = pow(fb[-1], -1, p)
            db = len(fb) - 1
            while len(fa) - 1 >= db and fa:
                c = fa[-1] * inv % p
                if c:
                    off = len(fa) - 1 - db
                    for j in range(db):
                        fa[off + j] = (fa[off + j] - c * fb[j]) % p
                fa.pop()
                while fa and fa[-1] == 0:
                    fa.pop()
            fa, fb = fb, fa
    return None


def pgcd(f: IPoly, g: IPoly) -> IPoly:
    """Primitive gcd over Z, positive leading coefficient.

    A modular degree probe proves coprimality cheaply; the primitive PRS
    runs only when a nontrivial common factor is possible."""
    if not f:
        return pprimitive(g)[1]
    if not g:
        return pprimitive(f)[1]
    _, a = pprimitive(f)
    _, b = pprimitive(g)
    if len(a) < len(b):
        a, b = b, a
    if len(b) > 1 and _gcd_degree_mod(a, b) == 0:
        return (1,)
    while b:
        r, _ = ppseudo_rem(a, b)
        a, b = b, pprimitive(r)[1]
    return a


def plcm(f: IPoly, g: IPoly) -> IPoly:
    if not f or not g:
        return ()
    d = pgcd(f, g)
    return pprimitive(pmul(pdiv_exact(f, d), g))[1]


def squarefree_decomposition(f: IPoly) -> list[tuple[IPoly, int]]:
    """Yun's algorithm: [(g_i, i)] with f ~ prod g_i^i, g_i squarefree."""
    _, f = pprimitive(f)
    if len(f) <= 1:
        return []
    out = []
    df = pderiv(f)
    a = pgcd(f, df)
    b = pdiv_exact(f, a)
    c = pdiv_exact(df, a)
    i = 1
    while True:
        d = psub(c, pderiv(b))
        g = pgcd(b, d)
        if len(g) > 1:
            out.append((g, i))
        b2 = pdiv_exact(b, g)
        if len(b2) == 1:
            break
        b = b2
        c = pdiv_exact(d, g)
        i += 1
    return out


# -- root finding ------------------------------------------------------------

_ROOT_PRIMES = (10007, 10009, 10037, 10039, 10061, 10067, 10069, 10079,
                10091, 10093, 10099, 10103, 10111, 10133, 10139, 10141)


def _roots_mod_p(f: IPoly, p: int) -> list[int]:
    fm = [c % p for c in f]
    if not any(fm):
        return list(range(p))  # degenerate; caller avoids this prime
    return [r for r in range(p) if _horner_mod(fm, r, p) == 0]


def _horner_mod(fm, x, p):
    acc = 0
    for c in reversed(fm):
        acc = (acc * x + c) % p
    return acc


def _root_bound(f: IPoly) -> int:
    """Fujiwara-style bound on the absolute value of any complex root."""
    d = len(f) - 1
    lc = abs(f[-1])
    best = 0
    for i in range(d):
        if f[i]:
            # |r| <= 2 * max |a_i/a_d|^(1/(d-i))
            k = d - i
            val = (2 * abs(f[i]) + lc - 1) // lc
            r = _int_kth_root(2 ** k * val, k) + 1
            best = max(best, r)
    return max(best, 1)


def _int_kth_root(n: int, k: int) -> int:
    if n <= 0:
        return 0
    if k == 1:
        return n
    r = 1 << (n.bit_length() // k + 1)  # guaranteed >= n^(1/k)
    while True:
        nxt = ((k - 1) * r + n // r ** (k - 1)) // k
        if nxt >= r:
            break
        r = nxt
    while r ** k > n:
        r -= 1
    return r


def _sturm_chain(f: IPoly) -> list[IPoly]:
    """Sturm sequence; pseudo-remainder signs corrected so the classical
    variation count applies."""
    chain = [f, pderiv(f)]
    while chain[-1] and len(chain[-1]) > 1:
        r, k = ppseudo_rem(chain[-2], chain[-1])
        if not r:
            break
        # r = lc^k * true_remainder; next chain entry must be a positive
        # multiple of -true_remainder
        sign = -1 if (chain[-1][-1] < 0 and k % 2 == 1) else 1
        c = pcontent(r)
        r = tuple(x // c for x in r)
        chain.append(pneg(r) if sign == 1 else r)
    return chain


def _sign_changes(vals) -> int:
    signs = [v for v in vals if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if (a > 0) != (b > 0))


def _sturm_count(chain, a: int, b: int) -> int:
    """Number of distinct real roots in (a, b]."""
    va = _sign_changes([peval_int(f, a) for f in chain])
    vb = _sign_changes([peval_int(f, b) for f in chain])
    return va - vb


def int_roots(f: IPoly) -> list[int]:
    """Sorted distinct integer roots of f, exact and complete."""
    if not f:
        raise ValueError("zero polynomial")
    _, f = pprimitive(f)
    roots = set()
    while f[0] == 0:
        roots.add(0)
        f = f[1:]
    if len(f) <= 1:
        return sorted(roots)
    bound = _root_bound(f)
    # candidate residues by CRT over a few fixed primes
    cands: dict[int, int] | None = None
    modulus = 1
    for p in _ROOT_PRIMES:
        if f[-1] % p == 0:
            continue
        pr = _roots_mod_p(f, p)
        if cands is None:
            cands = {r: r for r in pr}
            modulus = p
        else:
            new = {}
            inv = pow(modulus, -1, p)
            for c in cands.values():
                for r in pr:
                    k = ((r - c) * inv) % p
                    new_c = c + modulus * k
                    new[new_c] = new_c
            cands = new
            modulus *= p
        if modulus > 2 * bound or (cands is not None and len(cands) == 0):
            break
    assert cands is not None
    verified = set()
    for c in cands:
        for r in (c, c - modulus):
            if abs(r) <= bound and peval_int(f, r) == 0:
                verified.add(r)
    if modulus <= 2 * bound:
        # fixed primes insufficient for the bound: fall back to Sturm
        # isolation to certify completeness of the verified set
        reduced = f
        for r in verified:
            while True:
                try:
                    reduced = pdiv_exact(reduced, (-r, 1))
                except ArithmeticError:
                    break
        chain = _sturm_chain(reduced)
        total = _sturm_count(chain, -bound - 1, bound + 1)
        found = _isolate_integer_roots(reduced, chain, -bound - 1, bound + 1, total)
        verified |= found
    roots |= verified
    return sorted(roots)


def _isolate_integer_roots(f, chain, lo, hi, count) -> set[int]:
    """Bisection by Sturm counts; collect integer roots among real ones."""
    out: set[int] = set()
    stack = [(lo, hi, count)]
    while stack:
        a, b, cnt = stack.pop()
        if cnt == 0:
            continue
        if b - a <= 1:
            for r in (a, b):
                if peval_int(f, r) == 0:
                    out.add(r)
            continue
        mid = (a + b) // 2
        left = _sturm_count(chain, a, mid)
        stack.append((a, mid, left))
        stack.append((mid, b, cnt - left))
    return out


def rat_roots(f: IPoly) -> list[Fraction]:
    """Sorted distinct rational roots of f."""
    if not f:
        raise ValueError("zero polynomial")
    _, f = pprimitive(f)
    roots = set()
    while f and f[0] == 0:
        roots.add(Fraction(0))
        f = f[1:]
    if len(f) <= 1:
        return sorted(roots)
    if len(f) == 2:
        roots.add(Fraction(-f[0], f[1]))
        return sorted(roots)
    # rational roots of f <-> integer roots of lc^(d-1) f(y/lc)
    lc = f[-1]
    d = len(f) - 1
    g = tuple(f[i] * lc ** (d - 1 - i) for i in range(d)) + (1,)
    for y in int_roots(g):
        r = Fraction(y, lc)
        if peval_frac(f, r) == 0:
            roots.add(r)
    return sorted(roots)


def root_multiplicity(f: IPoly, r: Fraction) -> int:
    lin = (-r.numerator, r.denominator)
    mult = 0
    while len(f) > 1:
        try:
            f = pdiv_exact(f, lin)
        except ArithmeticError:
            break
        mult += 1
    return mult
