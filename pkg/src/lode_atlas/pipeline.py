"""End-to-end reproduction of the worked pullback example and the
closed-form inverse-gauge construction, plus the whole-catalog report."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import intpoly as ip
from .catalog import (_example_payload, _pole_free_factors, standard_equation,
                      verify_standard)
from .diffop import LinODE, companion_step, exp_product, gauge_transform, pullback
from .errors import DegenerateGauge, FixtureError
from .exactnum import rat_from_str, rat_to_str
from .groups import GroupId, catalog_generators, closure, molien, projective_order, sl3_check
from .invariants import build_invariants, identity_report, verify_syzygy
from .ratfun import RatFun, ratfun_nth_root
from .ratsol import rational_solutions
from .serialize import linode_from_json, ratfun_from_json, ratfun_to_json
from .series import TruncSeries, ratfun_series, series_solutions, span_membership
from .sympow import symmetric_power


@dataclass
class ExampleFixture:
    operator: LinODE
    f1: RatFun
    f: RatFun
    h: RatFun
    lam: int
    standard: GroupId
    closed_form: dict
    curve_relation: dict
    p2_root: RatFun


def load_example() -> ExampleFixture:
    p = _example_payload()
    try:
        return ExampleFixture(
            operator=linode_from_json(p["operator"]),
            f1=ratfun_from_json(p["f1"]),
            f=ratfun_from_json(p["f"]),
            h=ratfun_from_json(p["h"]),
            lam=int(p["lambda"]),
            standard=GroupId(p["standard"]),
            closed_form=p["closed_form"],
            curve_relation=p["curve_relation"],
            p2_root=ratfun_from_json(p["p2_root"]),
        )
    except (KeyError, ValueError) as ex:
        raise FixtureError(f"example fixture malformed: {ex}") from ex


def example_operators(fx: ExampleFixture | None = None):
    """(L, L', M') with L' = gauge(L, [1, f1, 0]) and M' the exp-product of
    the pulled-back standard operator."""
    fx = fx or load_example()
    std = standard_equation(fx.standard)
    Lp = gauge_transform(fx.operator, [RatFun.one(), fx.f1, RatFun.zero()])
    Mp = exp_product(pullback(std.operator, fx.h), fx.f, fx.lam)
    return fx.operator, Lp, Mp


def verify_example(fx: ExampleFixture | None = None) -> dict:
    """The centerpiece identity: gauge(L, [1, f1, 0]) equals
    exp_product(pullback(standard, h), f, lambda) coefficient-for-coefficient."""
    fx = fx or load_example()
    _, Lp, Mp = example_operators(fx)
    checks = []
    mismatch = None
    for i, (a, b) in enumerate(zip(Lp.coeffs, Mp.coeffs)):
        if a != b:
            mismatch = {"coefficient": i,
                        "gauge_side": ratfun_to_json(a),
                        "pullback_side": ratfun_to_json(b)}
            break
    checks.append({"name": "gauge-equals-exp-pullback",
                   "status": "pass" if mismatch is None else "fail",
                   "witness": mismatch})
    return {"name": "verify-example", "checks": checks,
            "ok": mismatch is None}


def closed_form(fx: ExampleFixture | None = None) -> tuple[dict, list[RatFun]]:
    """Invert the derivative matrix of the gauge relation, recover the
    coefficients expressing the original solutions through the pulled-back
    standard solutions, and compare with the recorded closed form."""
    fx = fx or load_example()
    L, Lp, Mp = example_operators(fx)
    n = L.order
    rows = [[RatFun.one(), fx.f1, RatFun.zero()]]
    for _ in range(n - 1):
        rows.append(companion_step(L, rows[-1]))
    det = _det3(rows)
    if det.is_zero():
        raise DegenerateGauge("derivative matrix is singular")
    r = [_cofactor3(rows, j, 0) / det for j in range(3)]
    checks = []
    back = gauge_transform(Mp, r)
    checks.append({"name": "inverse-gauge-returns-original",
                   "status": "pass" if back == L else "fail"})
    # convert to the series-at-h presentation: x = f^(1/lam) *
    # (W0 y(h) + W1 y'(h) + W2 y''(h))
    u = fx.f.deriv() / (fx.f * fx.lam)
    hp = fx.h.deriv()
    W2 = r[2] * hp * hp
    W1 = r[1] * hp + r[2] * (2 * u * hp + hp.deriv())
    W0 = r[0] + r[1] * u + r[2] * (u * u + u.deriv())
    cf = fx.closed_form
    et = rat_from_str(cf["prefactor"]["t_exponent"])
    e1 = rat_from_str(cf["prefactor"]["t_minus_1_exponent"])
    # rational conversion factor f^(1/lam) * t^et (t-1)^e1
    lam = fx.lam
    sc = (fx.f * RatFun(1, ip.ppow((0, 1), int(et * lam)), (1,))
          * RatFun(1, ip.ppow((-1, 1), int(e1 * lam)), (1,)))
    conv = ratfun_nth_root(sc, lam)
    A2, A1, A0 = W2 * conv, W1 * conv, W0 * conv
    B2 = RatFun(1, ip.pmul((0, 1), ip.pmul(ip.ppow((-9, 1), 2),
                                           ip.ppow((3, 1), 4))), (1,))
    cubic = [rat_from_str(s) for s in cf["f_prime_cubic"]]
    inner = RatFun.from_coeffs(cubic, [Fraction(1)])
    c1 = rat_from_str(cf["f_prime_constant"])
    c0 = rat_from_str(cf["f_constant"])
    root = rat_from_str(cf["linear_factor_root"])
    B1 = RatFun(c1, ip.ppow((-1, 1), 2), (1,)) * RatFun(1, (3, 1), (1,)) * inner
    B0 = (RatFun(c1 * c0, ip.ppow((-1, 1), 4), (1,))
          * (RatFun.t() - root))
    ratios = [A2 / B2, A1 / B1, A0 / B0]
    consts = [q.as_frac() if q.is_constant() else None for q in ratios]
    all_const = all(c is not None for c in consts)
    equal = all_const and consts[0] == consts[1] == consts[2]
    checks.append({
        "name": "closed-form-single-global-scalar",
        "status": "pass" if equal else "fail",
        "ratios": [rat_to_str(c) if c is not None else "non-constant"
                   for c in consts],
        "note": ("each recorded bracket is an exact constant multiple of the "
                 "computed one, but the three constants disagree, so no "
                 "single global scalar matches the recorded form"
                 if all_const and not equal else None)})
    printed_const = rat_from_str(cf["global_constant"])
    checks.append({
        "name": "global-constant-informational",
        "status": "pass" if consts[2] == printed_const else "fail",
        "recorded": rat_to_str(printed_const),
        "computed_f_bracket_ratio": rat_to_str(consts[2]) if consts[2] is not None else None,
        "note": "informational: depends on the uncited normalization of the "
                "source fundamental system"})
    lin = (-root.numerator, root.denominator)
    divides = True
    try:
        ip.pdiv_exact(A0.num, lin)
    except ArithmeticError:
        divides = False
    checks.append({"name": "linear-factor-verbatim",
                   "status": "pass" if divides else "fail",
                   "factor": f"t - {rat_to_str(root)}"})
    ok = all(c["status"] == "pass" for c in checks
             if c["name"] != "global-constant-informational")
    return ({"name": "closed-form", "checks": checks, "ok": ok}, r)


def _det3(m):
    return (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))


def _cofactor3(m, i, j):
    sub = [[m[r][c] for c in range(3) if c != j] for r in range(3) if r != i]
    s = sub[0][0] * sub[1][1] - sub[0][1] * sub[1][0]
    return s if (i + j) % 2 == 0 else -s


def invariant_value_checks(fx: ExampleFixture | None = None) -> dict:
    """Rational-solution spans of symmetric powers of the example pair:
    the basis-free form of the printed invariant values."""
    fx = fx or load_example()
    L = fx.operator
    Lp = gauge_transform(L, [RatFun.one(), fx.f1, RatFun.zero()])
    checks = []
    S4 = symmetric_power(L, 4)
    sols = rational_solutions(S4, pole_free=_pole_free_factors(S4, L))
    expected = RatFun(1, (1,), ip.pmul((0, 0, 1), ip.ppow((-1, 1), 3)))
    checks.append({"name": "deg4-value-of-original",
                   "status": "pass" if sols == [expected] else "fail",
                   "dimension": len(sols)})
    S4p = symmetric_power(Lp, 4)
    sols4 = rational_solutions(S4p, pole_free=_pole_free_factors(S4p, Lp))
    checks.append({"name": "deg4-value-vanishes-after-gauge",
                   "status": "pass" if not sols4 else "fail",
                   "dimension": len(sols4)})
    S6p = symmetric_power(Lp, 6)
    sols6 = rational_solutions(S6p, pole_free=_pole_free_factors(S6p, Lp))
    ok6 = len(sols6) == 1 and (sols6[0] / fx.f).is_constant()
    checks.append({"name": "deg6-value-spans-f",
                   "status": "pass" if ok6 else "fail",
                   "dimension": len(sols6)})
    return {"name": "invariant-values", "checks": checks,
            "ok": all(c["status"] == "pass" for c in checks)}


def hauptmodul_membership(fx: ExampleFixture | None = None,
                          order: int = 320) -> dict:
    """Degree-14 corroboration: the exact rational cube root of
    1728 f^7 h lies in the span of the 120 degree-14 solution monomials."""
    fx = fx or load_example()
    Lp = gauge_transform(fx.operator,
                         [RatFun.one(), fx.f1, RatFun.zero()])
    v6 = RatFun.from_frac(1728) * fx.f ** 7 * fx.h
    v = ratfun_nth_root(v6, 3)
    cube_ok = v ** 3 == v6
    t0 = Fraction(2)
    sols = series_solutions(Lp, t0, order)
    from .catalog import _degree_monomial_series
    prods = _degree_monomial_series(sols, 14)
    member = span_membership(prods, ratfun_series(v, t0, order))
    return {"name": "hauptmodul-degree14", "checks": [
        {"name": "cube-root-exact", "status": "pass" if cube_ok else "fail",
         "value": ratfun_to_json(v)},
        {"name": "span-membership-120-monomials",
         "status": "pass" if member else "fail",
         "truncation": order}],
        "ok": cube_ok and member}


def curve_relation_probe(fx: ExampleFixture | None = None) -> dict:
    """Probe the degree-18 curve relation against the computed invariant
    values of the example operator.

    The rational-solution spans pin the three values up to scalars, so the
    relation c6 F6^3 + c414 F4 F14 + c436 F4^3 F6 = 0 is testable only at
    the level of the unique linear dependence among the span products; that
    dependence is computed exactly and the normalization scalars each
    transcription reading would require are reported, without asserting
    either reading."""
    fx = fx or load_example()
    L = fx.operator
    values = {}
    for name, d in (("F4", 4), ("F6", 6), ("F14", 14)):
        S = symmetric_power(L, d)
        sols = rational_solutions(S, pole_free=_pole_free_factors(S, L))
        if len(sols) != 1:
            return {"name": "curve-relation-probe", "ok": False,
                    "checks": [{"name": f"deg{d}-value", "status": "fail",
                                "dimension": len(sols)}]}
        values[name] = sols[0]
    v4, v6, v14 = values["F4"], values["F6"], values["F14"]
    prods = [v6 ** 3, v4 * v14, v4 ** 3 * v6]
    lam = _unique_relation(prods)
    checks = [{"name": "span-products-satisfy-unique-relation",
               "status": "pass" if lam is not None else "fail",
               "relation": ([rat_to_str(x) for x in lam]
                            if lam is not None else None)}]
    if lam is not None and all(x != 0 for x in lam):
        # with F4's value pinned to 7*v4 by the generic-gauge specialization,
        # each reading forces beta (F6 scale) and gamma (F14 scale)
        alpha = Fraction(7)
        for label, key in (("printed", "printed_coefficients"),
                           ("alternative", "alternative_coefficients")):
            cs = {k: rat_from_str(v) for k, v in fx.curve_relation[key].items()}
            # c6 (beta v6)^3 + c414 (alpha v4)(gamma v14)
            #   + c436 (alpha v4)^3 (beta v6) = 0 matched against lam
            beta = lam[0] * cs["F4^3*F6"] * alpha ** 3 / (lam[2] * cs["F6^3"])
            s = cs["F6^3"] * beta ** 3 / lam[0]
            gamma = s * lam[1] / (cs["F4*F14"] * alpha)
            checks.append({
                "name": f"implied-normalization-{label}",
                "status": "pass",
                "F6_scale": rat_to_str(beta),
                "F14_scale": rat_to_str(gamma)})
    return {"name": "curve-relation-probe", "checks": checks,
            "ok": all(c["status"] == "pass" for c in checks),
            "note": ("span-level data admits consistent normalizations for "
                     "both coefficient readings; "
                     + (fx.curve_relation.get("note") or ""))}


def _unique_relation(funcs: list[RatFun]):
    """Coefficients of the unique (up to scale) Q-linear relation among
    three rational functions, or None if they are independent."""
    den: tuple = (1,)
    for f in funcs:
        den = ip.plcm(den, f.den)
    cleared = []
    scale_den = 1
    from math import gcd as _g
    for f in funcs:
        scale_den = scale_den * f.c.denominator // _g(scale_den, f.c.denominator)
    for f in funcs:
        q = f.c * scale_den
        cleared.append(ip.pscale(ip.pmul(f.num, ip.pdiv_exact(den, f.den)),
                                 int(q)))
    rows = max(len(p) for p in cleared)
    A = [[p[r] if r < len(p) else 0 for p in cleared] for r in range(rows)]
    from .ratsol import _int_nullspace
    basis = _int_nullspace(A, 3)
    if len(basis) != 1:
        return None
    vec = basis[0]
    lead = next(x for x in vec if x != 0)
    return [x / lead for x in vec]


def group_report(gid: GroupId) -> dict:
    g = closure(catalog_generators(gid))
    return {"group": GroupId(gid).value, "order": g.order,
            "projective_order": projective_order(g), "sl3": sl3_check(g)}


def invariants_report(gid: GroupId, verify: str = "all") -> dict:
    invset = build_invariants(gid)
    out = {"group": GroupId(gid).value,
           "members": [{"name": n, "degree": d, "terms": p.num_terms()}
                       for n, d, p in invset.members],
           "frame_notes": invset.frame_notes,
           "invariance": True,
           "syzygies": [], "identities": identity_report(gid)}
    for rec in invset.syzygies:
        res = verify_syzygy(invset, rec["name"])
        entry = {"name": rec["name"], "residual_terms": res.num_terms()}
        if not res.is_zero():
            entry["flag"] = "transcription-ambiguity"
            entry["offending_terms"] = [
                {"exp": list(e), "coeff": repr(c)}
                for e, c in res.sorted_terms()[:8]]
            for alt in rec.get("alternatives", []):
                r2 = verify_syzygy(invset, rec["name"], alt["label"])
                entry.setdefault("alternatives", []).append(
                    {"label": alt["label"], "residual_terms": r2.num_terms(),
                     "note": alt.get("note")})
        out["syzygies"].append(entry)
    return out
