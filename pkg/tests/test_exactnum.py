import random
from fractions import Fraction as F

import pytest

from lode_atlas.errors import ConductorMismatch, DivisionByZero, EmbedUnsupported
from lode_atlas.exactnum import (Cyclo, cyclo_arith, cyclo_embed, cyclo_inv,
                                 cyclotomic_poly, euler_phi, sqrt5,
                                 sqrt_minus3, sqrt_minus7, sqrt_minus15, sqrt3)
from lode_atlas.serialize import cyclo_from_json, cyclo_to_json

CATALOG_CONDUCTORS = (3, 5, 7, 9, 15, 21, 36)


def test_root_of_unity_product():
    z = Cyclo.zeta(5)
    assert cyclo_arith(z, z ** 4, "mul") == 1


def test_gauss_sum_sqrt5():
    z = Cyclo.zeta(5)
    s = z ** 3 + z ** 2
    t = z ** 4 + z
    assert (t - s) ** 2 == 5


def test_gauss_sum_sqrt_minus7():
    b = Cyclo.zeta(7)
    v = b ** 6 + b ** 5 + b ** 3 - b ** 4 - b ** 2 - b
    assert v ** 2 == -7


def test_cyclotomic_poly_annihilates_zeta():
    for m in CATALOG_CONDUCTORS:
        z = Cyclo.zeta(m)
        val = Cyclo.zero(m)
        for k, c in enumerate(cyclotomic_poly(m)):
            val = val + z ** k * c
        assert val.is_zero()
        assert z ** m == 1
        assert len(z.num) == euler_phi(m)


def test_embed_examples():
    assert cyclo_embed(Cyclo.from_rat(3, 5), 15) == 3
    assert cyclo_embed(Cyclo.zeta(5), 15) == Cyclo.zeta(15, 3)
    eps = Cyclo.zeta(9)
    omega = -Cyclo.one(9) - eps ** 3
    assert cyclo_embed(Cyclo.zeta(3, 2), 9) == omega
    with pytest.raises(EmbedUnsupported):
        cyclo_embed(Cyclo.zeta(5), 9)


def test_embed_roundtrip_on_basis():
    for m, m2 in ((5, 15), (3, 9), (7, 21), (3, 36)):
        for k in range(euler_phi(m)):
            img = Cyclo.zeta(m, k).embed(m2)
            back = img  # ring map injectivity: distinct elements stay distinct
            assert (Cyclo.zeta(m, 1).embed(m2)) ** k == img or k == 0
        # multiplicativity
        x, y = Cyclo.zeta(m) + 2, Cyclo.zeta(m) ** 2 - 1
        assert (x * y).embed(m2) == x.embed(m2) * y.embed(m2)


def test_inverse_examples():
    assert cyclo_inv(Cyclo.zeta(7)) == Cyclo.zeta(7, 6)
    z = Cyclo.zeta(5)
    sq5 = z ** 4 + z - z ** 3 - z ** 2
    assert cyclo_inv(sq5) == sq5 / 5
    assert cyclo_inv(Cyclo.from_rat(2)) == F(1, 2)
    with pytest.raises(DivisionByZero):
        cyclo_inv(Cyclo.zero(5))


def test_conductor_mismatch():
    with pytest.raises(ConductorMismatch):
        cyclo_arith(Cyclo.zeta(5), Cyclo.zeta(9), "add")


def test_lambda_constants():
    lam1 = (Cyclo.from_rat(-1, 15) + sqrt_minus15()) / 4
    lam2 = (Cyclo.from_rat(-1, 15) - sqrt_minus15()) / 4
    assert lam1 * lam2 == 1
    assert lam1 + lam2 == F(-1, 2)


def test_guarded_square_roots():
    assert sqrt5() ** 2 == 5
    assert sqrt_minus7() ** 2 == -7
    assert sqrt_minus3() ** 2 == -3
    assert sqrt_minus15() ** 2 == -15
    assert sqrt3() ** 2 == 3


def test_field_axioms_randomized():
    rng = random.Random(20240817)
    ms = (5, 7, 9, 15)
    for _ in range(1000):
        m = rng.choice(ms)
        phi = euler_phi(m)

        def rand():
            return Cyclo(m, [rng.randint(-9, 9) for _ in range(phi)],
                         rng.randint(1, 6))
        x, y, z = rand(), rand(), rand()
        assert (x + y) + z == x + (y + z)
        assert x * (y + z) == x * y + x * z
        if not x.is_zero():
            assert (x * y) * x.inv() == y


def test_serialization_roundtrip():
    x = Cyclo(15, [1, -2, 0, 3, 0, 0, 5, -7], 6)
    assert cyclo_from_json(cyclo_to_json(x)) == x
    r = Cyclo.from_rat(F(-22, 7), 9)
    assert cyclo_from_json(cyclo_to_json(r)) == r
