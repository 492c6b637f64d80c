"""The eight finite primitive subgroups of SL3(C): generators, closure
enumeration, invariance tests, and Molien series."""

from __future__ import annotations

from enum import Enum
from fractions import Fraction

from .errors import ClosureBoundExceeded, NotSemiInvariant
from .exactnum import Cyclo, common_conductor, sqrt5, sqrt_minus3, sqrt_minus7, sqrt_minus15
from .mpoly import MPoly


class GroupId(str, Enum):
    G168 = "g168"
    G168xC3 = "g168xc3"
    H216SL3 = "h216"
    H72SL3 = "h72"
    F36SL3 = "f36"
    A6SL3 = "a6"
    A5 = "a5"
    A5xC3 = "a5xc3"


GROUP_ALIASES = {
    "g168": GroupId.G168, "klein": GroupId.G168,
    "g168xc3": GroupId.G168xC3,
    "h216": GroupId.H216SL3, "h216sl3": GroupId.H216SL3, "hessian": GroupId.H216SL3,
    "h72": GroupId.H72SL3, "h72sl3": GroupId.H72SL3,
    "f36": GroupId.F36SL3, "f36sl3": GroupId.F36SL3,
    "a6": GroupId.A6SL3, "a6sl3": GroupId.A6SL3, "valentiner": GroupId.A6SL3,
    "a5": GroupId.A5,
    "a5xc3": GroupId.A5xC3,
}


class Mat3:
    """3x3 matrix over a fixed cyclotomic field; hashable, immutable."""

    __slots__ = ("m", "rows")

    def __init__(self, m: int, rows):
        self.m = m
        self.rows = tuple(tuple(x if isinstance(x, Cyclo) else Cyclo.from_rat(x, m)
                                for x in row) for row in rows)

    @classmethod
    def identity(cls, m: int) -> "Mat3":
        one, zero = Cyclo.one(m), Cyclo.zero(m)
        return cls(m, [[one, zero, zero], [zero, one, zero], [zero, zero, one]])

    def __mul__(self, other: "Mat3") -> "Mat3":
        a, b = self.rows, other.rows
        out = []
        for i in range(3):
            ai = a[i]
            row = []
            for j in range(3):
                row.append(ai[0] * b[0][j] + ai[1] * b[1][j] + ai[2] * b[2][j])
            out.append(row)
        return Mat3(self.m, out)

    def det(self) -> Cyclo:
        r = self.rows
        return (r[0][0] * (r[1][1] * r[2][2] - r[1][2] * r[2][1])
                - r[0][1] * (r[1][0] * r[2][2] - r[1][2] * r[2][0])
                + r[0][2] * (r[1][0] * r[2][1] - r[1][1] * r[2][0]))

    def trace(self) -> Cyclo:
        return self.rows[0][0] + self.rows[1][1] + self.rows[2][2]

    def adj_trace(self) -> Cyclo:
        """Sum of principal 2x2 minors (second characteristic coefficient)."""
        r = self.rows
        return (r[1][1] * r[2][2] - r[1][2] * r[2][1]
                + r[0][0] * r[2][2] - r[0][2] * r[2][0]
                + r[0][0] * r[1][1] - r[0][1] * r[1][0])

    def inv(self) -> "Mat3":
        d = self.det().inv()
        r = self.rows
        cof = [[(r[(i + 1) % 3][(j + 1) % 3] * r[(i + 2) % 3][(j + 2) % 3]
                 - r[(i + 1) % 3][(j + 2) % 3] * r[(i + 2) % 3][(j + 1) % 3])
                for j in range(3)] for i in range(3)]
        # inverse = adjugate / det; adjugate = transpose of cofactor matrix
        return Mat3(self.m, [[cof[j][i] * d for j in range(3)] for i in range(3)])

    def is_scalar(self) -> bool:
        r = self.rows
        return (r[0][1].is_zero() and r[0][2].is_zero() and r[1][0].is_zero()
                and r[1][2].is_zero() and r[2][0].is_zero() and r[2][1].is_zero()
                and r[0][0] == r[1][1] and r[1][1] == r[2][2])

    def embed(self, m2: int) -> "Mat3":
        return Mat3(m2, [[x.embed(m2) for x in row] for row in self.rows])

    def __eq__(self, other):
        return isinstance(other, Mat3) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"Mat3[{self.m}]{list(list(r) for r in self.rows)}"


class MatGroup:
    """Finite matrix group: generators plus (optionally) the enumerated
    element set filled in by closure()."""

    __slots__ = ("gid", "conductor", "generators", "elements")

    def __init__(self, gid: GroupId | None, conductor: int, generators: list[Mat3]):
        self.gid = gid
        self.conductor = conductor
        self.generators = list(generators)
        self.elements: set[Mat3] | None = None

    @property
    def order(self) -> int:
        if self.elements is None:
            raise ValueError("closure not computed")
        return len(self.elements)


def _klein_generators():
    b = Cyclo.zeta(7)
    a = b ** 4 - b ** 3
    bb = b ** 2 - b ** 5
    c = b - b ** 6
    r7i = sqrt_minus7()
    w = r7i.inv()
    S = Mat3(7, [[b, 0, 0], [0, b ** 2, 0], [0, 0, b ** 4]])
    R = Mat3(7, [[w * a, w * bb, w * c], [w * bb, w * c, w * a], [w * c, w * a, w * bb]])
    T = Mat3(7, [[0, 1, 0], [0, 0, 1], [1, 0, 0]])
    return R, S, T


def _hessian_generators():
    eps = Cyclo.zeta(9)
    om = -Cyclo.one(9) - eps ** 3
    rho = (om - om * om).inv()
    S1 = Mat3(9, [[1, 0, 0], [0, om, 0], [0, 0, om * om]])
    T = Mat3(9, [[0, 1, 0], [0, 0, 1], [1, 0, 0]])
    U = Mat3(9, [[eps, 0, 0], [0, eps, 0], [0, 0, eps * om]])
    V = Mat3(9, [[rho, rho, rho], [rho, rho * om, rho * om * om],
                 [rho, rho * om * om, rho * om]])
    return S1, T, U, V


def _icosahedral_generators(m: int):
    """E1, E2, E3 over Q(zeta_m) for 5 | m."""
    xi = Cyclo.zeta(5).embed(m)
    s = (Cyclo.zeta(5, 3) + Cyclo.zeta(5, 2)).embed(m)
    t = (Cyclo.zeta(5, 4) + Cyclo.zeta(5, 1)).embed(m)
    inv5 = sqrt5().embed(m) / 5  # 1/sqrt(5)
    E1 = Mat3(m, [[1, 0, 0], [0, xi ** 4, 0], [0, 0, xi]])
    E2 = Mat3(m, [[-1, 0, 0], [0, 0, -1], [0, -1, 0]])
    E3 = Mat3(m, [[inv5, inv5 * 2, inv5 * 2],
                  [inv5, inv5 * s, inv5 * t],
                  [inv5, inv5 * t, inv5 * s]])
    return E1, E2, E3, s, t, inv5


def catalog_generators(gid: GroupId) -> MatGroup:
    """Generator matrices exactly as printed, over the group's conductor."""
    gid = GroupId(gid)
    if gid == GroupId.G168:
        R, S, T = _klein_generators()
        return MatGroup(gid, 7, [R, S, T])
    if gid == GroupId.G168xC3:
        R, S, T = _klein_generators()
        om21 = Cyclo.zeta(21, 7)
        Z = Mat3(21, [[om21, 0, 0], [0, om21, 0], [0, 0, om21]])
        return MatGroup(gid, 21, [R.embed(21), S.embed(21), T.embed(21), Z])
    if gid in (GroupId.H216SL3, GroupId.H72SL3, GroupId.F36SL3):
        S1, T, U, V = _hessian_generators()
        if gid == GroupId.H216SL3:
            return MatGroup(gid, 9, [S1, T, V, U])
        if gid == GroupId.H72SL3:
            return MatGroup(gid, 9, [S1, T, V, U * V * U.inv()])
        return MatGroup(gid, 9, [S1, T, V])
    if gid == GroupId.A5:
        E1, E2, E3, *_ = _icosahedral_generators(5)
        return MatGroup(gid, 5, [E1, E2, E3])
    if gid == GroupId.A5xC3:
        E1, E2, E3, *_ = _icosahedral_generators(15)
        om15 = Cyclo.zeta(15, 5)
        Z = Mat3(15, [[om15, 0, 0], [0, om15, 0], [0, 0, om15]])
        return MatGroup(gid, 15, [E1, E2, E3, Z])
    if gid == GroupId.A6SL3:
        E1, E2, E3, s, t, inv5 = _icosahedral_generators(15)
        lam1 = (Cyclo.from_rat(-1, 15) + sqrt_minus15()) / 4
        lam2 = (Cyclo.from_rat(-1, 15) - sqrt_minus15()) / 4
        E4 = Mat3(15, [[inv5, inv5 * 2 * lam2, inv5 * 2 * lam2],
                       [inv5 * lam1, inv5 * s, inv5 * t],
                       [inv5 * lam1, inv5 * t, inv5 * s]])
        return MatGroup(gid, 15, [E1, E2, E3, E4])
    raise ValueError(gid)


def closure(g: MatGroup, bound: int = 4000) -> MatGroup:
    """Fill g.elements with the generated group (breadth-first products)."""
    if g.elements is not None:
        return g
    elements = {Mat3.identity(g.conductor)}
    frontier = list(elements)
    while frontier:
        new = []
        for x in frontier:
            for gen in g.generators:
                y = x * gen
                if y not in elements:
                    elements.add(y)
                    new.append(y)
                    if len(elements) > bound:
                        raise ClosureBoundExceeded(
                            f"more than {bound} elements generated")
        frontier = new
    g.elements = elements
    return g


def projective_order(g: MatGroup) -> int:
    """Number of elements modulo the enumerated scalar subgroup."""
    if g.elements is None:
        raise ValueError("closure not computed")
    scalars = sum(1 for e in g.elements if e.is_scalar())
    assert len(g.elements) % scalars == 0
    return len(g.elements) // scalars


def sl3_check(g: MatGroup) -> bool:
    if g.elements is None:
        raise ValueError("closure not computed")
    one = Cyclo.one(g.conductor)
    return all(e.det() == one for e in g.elements)


def is_invariant(F: MPoly, g: MatGroup) -> bool:
    """True iff F is fixed by every generator (hence by the group)."""
    return all(F.substitute_linear(gen.rows) == F for gen in g.generators)


def semi_character(F: MPoly, g: MatGroup) -> list[Cyclo]:
    """Per-generator scalars chi with F o gen = chi * F; raises
    NotSemiInvariant when an image is not a scalar multiple."""
    if not F.is_homogeneous():
        raise NotSemiInvariant("polynomial is not homogeneous")
    out = []
    for gen in g.generators:
        img = F.substitute_linear(gen.rows)
        m = common_conductor(img.conductor, F.conductor)
        Fm, Im = F.lift(m), img.lift(m)
        if set(Fm.terms) != set(Im.terms):
            raise NotSemiInvariant("image support differs")
        exp = next(iter(Fm.terms))
        chi = Im.terms[exp] / Fm.terms[exp]
        for e, c in Fm.terms.items():
            if Im.terms[e] != chi * c:
                raise NotSemiInvariant("image is not a scalar multiple")
        out.append(chi)
    return out


def molien(g: MatGroup, up_to: int) -> list[int]:
    """dim C[X1..X3]^G_d for d = 0..up_to via the Molien sum, exactly."""
    if g.elements is None:
        raise ValueError("closure not computed")
    m = g.conductor
    # group elements by characteristic polynomial det(I - u*g) =
    # 1 - c1 u + c2 u^2 - c3 u^3
    classes: dict = {}
    for e in g.elements:
        key = (e.trace(), e.adj_trace(), e.det())
        classes[key] = classes.get(key, 0) + 1
    total = [Cyclo.zero(m) for _ in range(up_to + 1)]
    for (c1, c2, c3), count in classes.items():
        q = [Cyclo.one(m), -c1.embed(m) if c1.m != m else -c1,
             c2.embed(m) if c2.m != m else c2,
             -(c3.embed(m) if c3.m != m else c3)]
        inv = [Cyclo.one(m)]
        for k in range(1, up_to + 1):
            acc = Cyclo.zero(m)
            for j in range(1, min(3, k) + 1):
                acc = acc + q[j] * inv[k - j]
            inv.append(-acc)
        for k in range(up_to + 1):
            total[k] = total[k] + inv[k] * count
    order = len(g.elements)
    out = []
    for k, v in enumerate(total):
        assert v.is_rational(), f"Molien coefficient {k} not rational"
        r = v.to_rat() / order
        assert r.denominator == 1 and r >= 0, f"Molien coefficient {k} = {r}"
        out.append(int(r))
    return out
