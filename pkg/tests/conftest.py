"""Shared exact fixtures; heavy symmetric powers are computed once per run."""

from __future__ import annotations

from fractions import Fraction as F
from functools import lru_cache

import pytest

from lode_atlas import intpoly as ip
from lode_atlas.diffop import LinODE, gauge_transform
from lode_atlas.ratfun import RatFun
from lode_atlas.sympow import symmetric_power

TT1 = (0, -1, 1)           # t(t-1)
T2T1 = (0, 0, -1, 1)       # t^2(t-1)
T3T1 = (0, 0, 0, -1, 1)    # t^3(t-1)


@lru_cache(maxsize=None)
def klein_std() -> LinODE:
    return LinODE([RatFun(F(-85, 74088), (1,), T2T1),
                   RatFun(F(1, 252), (-56, 387), T2T1),
                   RatFun(F(1, 2), (-4, 7), TT1)])


@lru_cache(maxsize=None)
def a5_std() -> LinODE:
    return LinODE([RatFun(F(-11, 5400), (1,), T2T1),
                   RatFun(F(1, 900), (-200, 1389), T2T1),
                   RatFun(F(1, 2), (-4, 7), TT1)])


@lru_cache(maxsize=None)
def a6_std() -> LinODE:
    return LinODE([RatFun(F(-77, 43200), (1,), T2T1),
                   RatFun(F(1, 1200), (-450, 2213), T2T1),
                   RatFun(F(3, 4), (-3, 5), TT1)])


@lru_cache(maxsize=None)
def hess_printed() -> LinODE:
    return LinODE([RatFun(F(-17, 5832), (1,), T3T1),
                   RatFun(F(1, 432), (-96, 757), T2T1),
                   RatFun(F(1, 3), (-6, 11), TT1)])


@lru_cache(maxsize=None)
def hess_corrected() -> LinODE:
    return LinODE([RatFun(F(-17, 5832), (1,), T3T1),
                   RatFun(F(1, 432), (-181, 960), T2T1),
                   RatFun(F(1, 3), (-7, 12), TT1)])


@lru_cache(maxsize=None)
def f36_std() -> LinODE:
    return LinODE([RatFun(F(-5, 864), (1,), T3T1),
                   RatFun(F(5, 48), (-5, 21), T2T1),
                   RatFun(F(1, 2), (-5, 8), TT1)])


@lru_cache(maxsize=None)
def sub_2f1() -> LinODE:
    return LinODE([RatFun(F(-11, 3600), (1,), TT1),
                   RatFun(F(1, 6), (-4, 7), TT1)])


@lru_cache(maxsize=None)
def vdpu() -> LinODE:
    t2t12 = ip.pmul((0, 0, 1), ip.ppow((-1, 1), 2))
    t3t13 = ip.pmul((0, 0, 0, 1), ip.ppow((-1, 1), 3))
    return LinODE([RatFun(F(1, 2744), (-686, 343, -5273, 6336), t3t13),
                   RatFun(F(1, 28), (-7, -161, 288), t2t12),
                   RatFun(1, (-2, 7), TT1)])


@lru_cache(maxsize=None)
def example_f1() -> RatFun:
    return RatFun(14, (0, -1, 1), (-7, 19))


@lru_cache(maxsize=None)
def example_f() -> RatFun:
    return RatFun(729, (0, 0, 0, 1),
                  ip.pmul(ip.ppow((-1, 1), 4), ip.ppow((-7, 19), 6)))


@lru_cache(maxsize=None)
def example_h() -> RatFun:
    return RatFun(F(1, 27), ip.ppow((3, 1), 3), ip.ppow((-1, 1), 2))


@lru_cache(maxsize=None)
def gauged_example() -> LinODE:
    return gauge_transform(vdpu(), [RatFun.one(), example_f1(), RatFun.zero()])


@lru_cache(maxsize=None)
def sym(which: str, d: int) -> LinODE:
    ops = {"klein": klein_std, "a5": a5_std, "a6": a6_std,
           "hess_corrected": hess_corrected, "f36": f36_std,
           "vdpu": vdpu, "gauged": gauged_example}
    return symmetric_power(ops[which](), d)


def pole_free_factors(M: LinODE, base: LinODE):
    bden = base.singular_den()
    return [g for g, _ in ip.squarefree_decomposition(M.singular_den())
            if len(ip.pgcd(g, bden)) == 1]


def pytest_configure(config):
    config.addinivalue_line(
        "markers", "slow: long-running exact computations")
    config.addinivalue_line(
        "markers", "stretch: optional checks beyond the required set")
