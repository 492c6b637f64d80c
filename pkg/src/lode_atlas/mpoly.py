"""Sparse multivariate polynomials over cyclotomic coefficients.

Terms map exponent vectors to nonzero Cyclo coefficients; all coefficients
of one polynomial share a conductor.  The group action is the column
substitution X_j -> sum_i X_i g[i][j].
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ShapeMismatch
from .exactnum import Cyclo, common_conductor


def _grlex_key(exp):
    return (sum(exp), tuple(-e for e in exp))


class MPoly:
    __slots__ = ("nvars", "conductor", "terms")

    def __init__(self, nvars: int, conductor: int, terms: dict | None = None):
        self.nvars = nvars
        self.conductor = conductor
        self.terms = {} if terms is None else terms

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls, nvars: int = 3, conductor: int = 1) -> "MPoly":
        return cls(nvars, conductor, {})

    @classmethod
    def const(cls, c, nvars: int = 3, conductor: int | None = None) -> "MPoly":
        if isinstance(c, (int, Fraction)):
            c = Cyclo.from_rat(c, conductor or 1)
        elif conductor is not None and c.m != conductor:
            c = c.embed(conductor)
        if c.is_zero():
            return cls.zero(nvars, c.m)
        return cls(nvars, c.m, {(0,) * nvars: c})

    @classmethod
    def variable(cls, i: int, nvars: int = 3, conductor: int = 1) -> "MPoly":
        exp = tuple(1 if j == i else 0 for j in range(nvars))
        return cls(nvars, conductor, {exp: Cyclo.one(conductor)})

    @classmethod
    def monomial(cls, exp, coeff, nvars: int = 3) -> "MPoly":
        if isinstance(coeff, (int, Fraction)):
            coeff = Cyclo.from_rat(coeff)
        if coeff.is_zero():
            return cls.zero(nvars, coeff.m)
        return cls(nvars, coeff.m, {tuple(exp): coeff})

    # -- conductor management ---------------------------------------------------

    def lift(self, m2: int) -> "MPoly":
        if m2 == self.conductor:
            return self
        return MPoly(self.nvars, m2,
                     {e: c.embed(m2) for e, c in self.terms.items()})

    def _pair(self, other: "MPoly"):
        if self.nvars != other.nvars:
            raise ShapeMismatch("variable count mismatch")
        m = common_conductor(self.conductor, other.conductor)
        return self.lift(m), other.lift(m), m

    # -- ring operations ----------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Fraction, Cyclo)):
            other = MPoly.const(other, self.nvars)
        a, b, m = self._pair(other)
        out = dict(a.terms)
        for e, c in b.terms.items():
            if e in out:
                s = out[e] + c
                if s.is_zero():
                    del out[e]
                else:
                    out[e] = s
            else:
                out[e] = c
        return MPoly(self.nvars, m, out)

    __radd__ = __add__

    def __neg__(self):
        return MPoly(self.nvars, self.conductor,
                     {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, Cyclo)):
            other = MPoly.const(other, self.nvars)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Cyclo)):
            if isinstance(other, (int, Fraction)):
                other = Cyclo.from_rat(other, self.conductor)
            m = common_conductor(self.conductor, other.m)
            oc = other.embed(m) if other.m != m else other
            if oc.is_zero():
                return MPoly.zero(self.nvars, m)
            me = self.lift(m)
            return MPoly(self.nvars, m,
                         {e: c * oc for e, c in me.terms.items()})
        a, b, m = self._pair(other)
        if len(a.terms) > len(b.terms):
            a, b = b, a
        out: dict = {}
        for e1, c1 in a.terms.items():
            for e2, c2 in b.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                p = c1 * c2
                if e in out:
                    s = out[e] + p
                    if s.is_zero():
                        del out[e]
                    else:
                        out[e] = s
                elif not p.is_zero():
                    out[e] = p
        return MPoly(self.nvars, m, out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        result = MPoly.const(1, self.nvars, self.conductor)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    # -- structure ------------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    def num_terms(self) -> int:
        return len(self.terms)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: _grlex_key(kv[0]))

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, Cyclo)):
            other = MPoly.const(other, self.nvars)
        if not isinstance(other, MPoly):
            return NotImplemented
        a, b, _ = self._pair(other)
        return a.terms == b.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __repr__(self):
        if self.is_zero():
            return "MPoly(0)"
        names = ["X1", "X2", "X3", "X4"][: self.nvars]
        parts = []
        for e, c in self.sorted_terms()[:12]:
            mon = "*".join(f"{n}^{k}" if k > 1 else n
                           for n, k in zip(names, e) if k)
            parts.append(f"({c!r})*{mon}" if mon else f"({c!r})")
        tail = " + ..." if len(self.terms) > 12 else ""
        return "MPoly(" + " + ".join(parts) + tail + ")"

    # -- calculus and action -----------------------------------------------------------

    def diff(self, var_index: int) -> "MPoly":
        out = {}
        for e, c in self.terms.items():
            k = e[var_index]
            if k:
                ne = tuple(x - 1 if i == var_index else x for i, x in enumerate(e))
                nc = c * k
                if ne in out:
                    nc = out[ne] + nc
                out[ne] = nc
        return MPoly(self.nvars, self.conductor,
                     {e: c for e, c in out.items() if not c.is_zero()})

    def eval(self, point) -> Cyclo:
        point = list(point)
        if len(point) != self.nvars:
            raise ShapeMismatch("point length mismatch")
        m = common_conductor(self.conductor,
                             *[p.m if isinstance(p, Cyclo) else 1 for p in point])
        pts = [p.embed(m) if isinstance(p, Cyclo) else Cyclo.from_rat(p, m)
               for p in point]
        maxe = [0] * self.nvars
        for e in self.terms:
            for i, k in enumerate(e):
                maxe[i] = max(maxe[i], k)
        pows = []
        for i in range(self.nvars):
            row = [Cyclo.one(m)]
            for _ in range(maxe[i]):
                row.append(row[-1] * pts[i])
            pows.append(row)
        acc = Cyclo.zero(m)
        for e, c in self.terms.items():
            v = c.embed(m) if c.m != m else c
            for i, k in enumerate(e):
                if k:
                    v = v * pows[i][k]
            acc = acc + v
        return acc

    def substitute_linear(self, g) -> "MPoly":
        """X_j -> sum_i X_i g[i][j] for an nvars x nvars matrix g."""
        n = self.nvars
        if len(g) != n or any(len(row) != n for row in g):
            raise ShapeMismatch("matrix size mismatch")
        m = self.conductor
        for row in g:
            for x in row:
                if isinstance(x, Cyclo):
                    m = common_conductor(m, x.m)
        me = self.lift(m)
        lin = []
        for j in range(n):
            lj = MPoly.zero(n, m)
            for i in range(n):
                x = g[i][j]
                c = x.embed(m) if isinstance(x, Cyclo) else Cyclo.from_rat(x, m)
                if not c.is_zero():
                    lj.terms[tuple(1 if k == i else 0 for k in range(n))] = c
            lin.append(lj)
        return _horner_sub(me, lin, 0, m)


def _horner_sub(f: MPoly, lin: list[MPoly], var: int, m: int) -> MPoly:
    """Substitute linear forms into f by Horner over variables var, var+1, ..."""
    n = f.nvars
    if f.is_zero():
        return MPoly.zero(n, m)
    if var == n:
        return f
    nonzero = any(e[var] for e in f.terms)
    if not nonzero:
        return _horner_sub(f, lin, var + 1, m)
    # split by exponent of `var`
    layers: dict[int, MPoly] = {}
    for e, c in f.terms.items():
        k = e[var]
        ne = tuple(0 if i == var else x for i, x in enumerate(e))
        layer = layers.setdefault(k, MPoly.zero(n, m))
        layer.terms[ne] = c
    top = max(layers)
    acc = None
    for k in range(top, -1, -1):
        part = layers.get(k)
        sub = _horner_sub(part, lin, var + 1, m) if part is not None else None
        if acc is None:
            acc = sub if sub is not None else MPoly.zero(n, m)
        else:
            acc = acc * lin[var]
            if sub is not None:
                acc = acc + sub
    return acc


def poly_substitute_linear(F: MPoly, g) -> MPoly:
    return F.substitute_linear(g)


def poly_diff(F: MPoly, var_index: int) -> MPoly:
    return F.diff(var_index)


def poly_eval(F: MPoly, point) -> Cyclo:
    return F.eval(point)


def poly_det(M) -> MPoly:
    """Determinant of a square matrix of MPoly by Laplace expansion (size <= 4)."""
    n = len(M)
    if any(len(row) != n for row in M):
        raise ShapeMismatch("matrix not square")
    if n > 4:
        raise ShapeMismatch("Laplace expansion capped at size 4")
    if n == 1:
        return M[0][0]
    if n == 2:
        return M[0][0] * M[1][1] - M[0][1] * M[1][0]
    acc = None
    for j in range(n):
        sub = [[row[k] for k in range(n) if k != j] for row in M[1:]]
        term = M[0][j] * poly_det(sub)
        if j % 2 == 1:
            term = -term
        acc = term if acc is None else acc + term
    return acc
