import itertools
import random
from fractions import Fraction as F

import pytest

from lode_atlas.errors import ShapeMismatch
from lode_atlas.exactnum import Cyclo
from lode_atlas.invariants import _klein_tower, hessian_blocks
from lode_atlas.mpoly import MPoly, poly_det
from lode_atlas.groups import GroupId, catalog_generators

X1, X2, X3 = (MPoly.variable(i) for i in range(3))


def test_identity_substitution():
    F4 = X1 ** 3 * X2 + X2 ** 3 * X3 + X3 ** 3 * X1
    eye = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    assert F4.substitute_linear(eye) == F4


def test_column_action_on_permutation():
    # X_j -> sum_i X_i g[i][j] applied to the printed cyclic matrix:
    # column 1 is (0,0,1), so X1 goes to X3
    T = [[0, 1, 0], [0, 0, 1], [1, 0, 0]]
    assert X1.substitute_linear(T) == X3
    assert X2.substitute_linear(T) == X1
    assert X3.substitute_linear(T) == X2


def test_quartic_invariant_under_cycle():
    F4 = X1 * X2 ** 3 + X2 * X3 ** 3 + X3 * X1 ** 3
    T = [[0, 1, 0], [0, 0, 1], [1, 0, 0]]
    assert F4.substitute_linear(T) == F4


def test_substitution_is_ring_hom():
    z = Cyclo.zeta(5)
    g = [[z, 1, 0], [0, z ** 2, 1], [1, 0, z ** 3]]
    A = X1 * X2 + X3 ** 2
    B = X1 ** 2 - X2 * X3
    assert (A * B).substitute_linear(g) == \
        A.substitute_linear(g) * B.substitute_linear(g)


def test_action_compatibility_random():
    rng = random.Random(7)
    F4 = X1 ** 3 * X2 + X2 ** 3 * X3 + X3 ** 3 * X1
    gens = catalog_generators(GroupId.A5).generators
    for _ in range(6):
        g = rng.choice(gens)
        h = rng.choice(gens)
        gh = g * h
        assert F4.substitute_linear(gh.rows) == \
            F4.substitute_linear(h.rows).substitute_linear(g.rows)


def test_shape_mismatch():
    with pytest.raises(ShapeMismatch):
        X1.substitute_linear([[1, 0], [0, 1]])


def test_diff_examples():
    assert (X1 ** 3 * X2).diff(0) == 3 * X1 ** 2 * X2
    F2 = X1 ** 2 + X2 * X3
    assert F2.diff(1) == X3
    F4 = X1 ** 3 * X2 + X2 ** 3 * X3 + X3 ** 3 * X1
    euler = X1 * F4.diff(0) + X2 * F4.diff(1) + X3 * F4.diff(2)
    assert euler == F4 * 4


def test_eval_examples():
    F4 = X1 ** 3 * X2 + X2 ** 3 * X3 + X3 ** 3 * X1
    assert F4.eval([1, 0, 0]).is_zero()
    assert F4.eval([1, 1, 1]) == 3
    F2 = X1 ** 2 + X2 * X3
    assert F2.eval([1, 0, 0]) == 1


def test_eval_is_multiplicative_random():
    rng = random.Random(3)
    A = X1 * X2 + 2 * X3 ** 2 - X1
    B = X1 ** 2 - 3 * X2 + X3
    for _ in range(10):
        pt = [F(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(3)]
        assert (A * B).eval(pt) == A.eval(pt) * B.eval(pt)


def test_det_examples():
    one, zero = MPoly.const(1), MPoly.zero()
    assert poly_det([[one, zero], [zero, one]]) == 1
    assert poly_det([[X1, zero, zero], [zero, X2, zero], [zero, zero, X3]]) \
        == X1 * X2 * X3
    with pytest.raises(ShapeMismatch):
        poly_det([[one, zero]])


def _brute_det3(entries):
    """Independent oracle: permutation-sum determinant of evaluated entries."""
    total = None
    for perm in itertools.permutations(range(3)):
        sign = 1 if perm in ((0, 1, 2), (1, 2, 0), (2, 0, 1)) else -1
        term = entries[0][perm[0]] * entries[1][perm[1]] * entries[2][perm[2]]
        term = term * sign
        total = term if total is None else total + term
    return total


def test_hessian_cross_checked_by_point_oracle():
    F4, F6 = (_klein_tower(True)[i][2] for i in (0, 1))
    H = [[F4.diff(i).diff(j) for j in range(3)] for i in range(3)]
    for pt in ([1, 1, 1], [1, 2, 3]):
        vals = [[H[i][j].eval(pt) for j in range(3)] for i in range(3)]
        assert _brute_det3(vals) == (F6 * 54).eval(pt)
    assert poly_det(H) == F6 * 54


def test_mpoly_serialization_roundtrip():
    from lode_atlas.serialize import mpoly_from_json, mpoly_to_json
    F4 = X1 ** 3 * X2 + X2 ** 3 * X3 + X3 ** 3 * X1
    data = mpoly_to_json(F4 * F(1, 3))
    assert data[0].keys() == {"exp", "coeff"}
    assert mpoly_from_json(data) == F4 * F(1, 3)
    z = Cyclo.zeta(5)
    mixed = X1 * z + X2 ** 2 * (z ** 3 / 2)
    assert mpoly_from_json(mpoly_to_json(mixed)) == mixed


def test_catalog_invariants_homogeneous_with_named_degree():
    blocks = hessian_blocks()
    for name, deg in (("F6", 6), ("Phi6", 6), ("R", 9), ("F12", 12),
                      ("Phi12", 12), ("Psi12", 12)):
        assert blocks[name].is_homogeneous()
        assert blocks[name].degree() == deg
    for name, deg, poly in _klein_tower(True):
        assert poly.is_homogeneous() and poly.degree() == deg
