from fractions import Fraction

import pytest

from skewfield import (ArityMismatch, BadParams, DepthCap, Matrix,
                       NotInvertible, QQ, algebraic_degree_probe,
                       cyclic3_algebra, gn_eval, permutation_sign,
                       prime_field, qq_matrix, quaternion_algebra, u_eval,
                       v_eval)
from skewfield.contexts import AlgebraContext, MatrixContext
from skewfield.sampling import (derived_rng, random_invertible_matrix,
                                random_matrix, random_upper_triangular)

H = quaternion_algebra(-1, -1)


def test_permutation_sign():
    assert permutation_sign((0, 1, 2)) == 1
    assert permutation_sign((1, 0, 2)) == -1
    assert permutation_sign((2, 0, 1)) == 1


def test_g1_is_the_commutator_with_the_r_slot_first():
    a = qq_matrix([[0, 1], [0, 0]])   # E12
    r = qq_matrix([[0, 0], [1, 0]])   # E21
    assert gn_eval(a, [r]) == r * a - a * r
    assert gn_eval(a, [r]) == Matrix.diagonal(QQ, [-1, 1])


def test_g1_vanishes_on_identity():
    eye = Matrix.identity(QQ, 2)
    rng = derived_rng(1, "g1")
    for _ in range(5):
        assert gn_eval(eye, [random_matrix(rng, QQ, 2, 4)]).is_zero()


def test_g2_vanishes_for_degree_two_first_argument():
    a = Matrix.diagonal(QQ, [1, 2])
    rng = derived_rng(2, "g2")
    for _ in range(10):
        rs = [random_matrix(rng, QQ, 2, 4) for _ in range(2)]
        assert gn_eval(a, rs).is_zero()


def test_gn_forward_direction_is_deterministic():
    # if deg(min poly) <= n then gn vanishes exactly, for every sample
    rng = derived_rng(3, "fwd")
    for m in (2, 3):
        ctx = MatrixContext(QQ, m)
        for _ in range(10):
            a = random_matrix(rng, QQ, m, 3)
            n = a.min_poly().degree
            for _ in range(5):
                rs = [ctx.random_element(rng) for _ in range(n)]
                assert gn_eval(a, rs).is_zero()


def test_gn_converse_probabilistic_with_retry():
    rng = derived_rng(4, "conv")
    for m in (2, 3):
        ctx = MatrixContext(QQ, m)
        for _ in range(10):
            a = random_matrix(rng, QQ, m, 3)
            n = a.min_poly().degree - 1
            if n < 1:
                continue
            found = any(
                not gn_eval(a, [ctx.random_element(rng) for _ in range(n)]).is_zero()
                for _ in range(20))
            if not found:
                retry = derived_rng(4, "conv-retry")
                found = any(
                    not gn_eval(a, [ctx.random_element(retry) for _ in range(n)]).is_zero()
                    for _ in range(20))
            assert found


def test_gn_additive_in_each_r_slot():
    rng = derived_rng(5, "lin")
    ctx = MatrixContext(QQ, 2)
    a = ctx.random_element(rng)
    for slot in (0, 1):
        r1 = [ctx.random_element(rng) for _ in range(2)]
        r2 = list(r1)
        extra = ctx.random_element(rng)
        r2[slot] = r1[slot] + extra
        r3 = list(r1)
        r3[slot] = extra
        assert gn_eval(a, r2) == gn_eval(a, r1) + gn_eval(a, r3)


def test_gn_depth_cap_and_arity():
    a = Matrix.identity(QQ, 2)
    with pytest.raises(BadParams):
        gn_eval(a, [])
    with pytest.raises(DepthCap):
        gn_eval(a, [a] * 8)
    assert gn_eval(a, [a] * 3, cap=3).is_zero()


def test_u1_examples():
    a = qq_matrix([[1, 2], [0, 1]])
    assert u_eval(1, [a, a]).is_identity()
    i, one_plus_j = H.basis_element("i"), H.one() + H.basis_element("j")
    assert u_eval(1, [i, one_plus_j]) == -H.basis_element("j")
    assert u_eval(2, [a, a, a, a]).is_identity()


def test_u_eval_arity_and_invertibility_errors():
    a = qq_matrix([[1, 2], [0, 1]])
    with pytest.raises(ArityMismatch):
        u_eval(1, [a, a, a])
    singular = qq_matrix([[1, 1], [1, 1]])
    with pytest.raises(NotInvertible) as exc:
        u_eval(1, [a, singular])
    assert "input 2" in str(exc.value)


def test_u_eval_reports_noninvertible_intermediate():
    # additive-style zero cannot appear multiplicatively, so force one via
    # a matrix context where an intermediate u_1 value is singular: impossible
    # for invertible inputs; instead check the deep-arity error message path
    # by inverting a singular leaf inside a depth-2 word.
    a = qq_matrix([[1, 2], [0, 1]])
    singular = qq_matrix([[1, 1], [1, 1]])
    with pytest.raises(NotInvertible) as exc:
        u_eval(2, [a, singular, a, a])
    assert "input 2" in str(exc.value)


def test_v1_examples():
    a = qq_matrix([[1, 2], [3, 4]])
    assert v_eval(1, [a, a]).is_zero()
    i, j, k = (H.basis_element(n) for n in "ijk")
    assert v_eval(1, [i, j]) == k * 2


def test_v2_upper_triangular_lands_on_top_corner():
    rng = derived_rng(6, "v2")
    for _ in range(10):
        xs = [random_upper_triangular(rng, QQ, 3, invertible=False)
              for _ in range(4)]
        left = xs[0] * xs[1] - xs[1] * xs[0]
        right = xs[2] * xs[3] - xs[3] * xs[2]
        expected = left * right - right * left
        value = v_eval(2, xs)
        assert value == expected
        for r in range(3):
            for c in range(3):
                if (r, c) != (0, 2):
                    assert value[r, c] == 0


def test_solvable_vanishing_for_upper_triangular_groups():
    rng = derived_rng(7, "solv")
    for m, n in ((2, 2), (3, 3)):
        for _ in range(10):
            xs = [random_upper_triangular(rng, QQ, m, invertible=True)
                  for _ in range(2 ** n)]
            assert u_eval(n, xs).is_identity()


def test_nilpotent_vanishing_for_upper_triangular_inputs():
    rng = derived_rng(8, "nilp")
    for m, n in ((2, 2), (3, 3)):
        for _ in range(10):
            xs = [random_upper_triangular(rng, QQ, m, invertible=False)
                  for _ in range(2 ** n)]
            assert v_eval(n, xs).is_zero()


def test_u_eval_value_has_determinant_one():
    rng = derived_rng(9, "sl")
    for m in (2, 3):
        for n in (1, 2):
            xs = [random_invertible_matrix(rng, QQ, m, 3)
                  for _ in range(2 ** n)]
            assert u_eval(n, xs).det() == 1


def test_words_over_prime_field_matrices():
    F7 = prime_field(7)
    rng = derived_rng(10, "fp")
    xs = [random_invertible_matrix(rng, F7, 2) for _ in range(2)]
    assert u_eval(1, xs).det() == 1
    assert v_eval(1, xs).trace() == 0


def test_degree_probe_examples():
    ctx3 = MatrixContext(QQ, 3)
    rep = algebraic_degree_probe(ctx3, Matrix.identity(QQ, 3), trials=8, seed=0)
    assert (rep.probe_degree, rep.exact_degree) == (1, 1)
    rep = algebraic_degree_probe(ctx3, Matrix.diagonal(QQ, [1, 2, 4]),
                                 trials=8, seed=0)
    assert (rep.probe_degree, rep.exact_degree) == (3, 3)
    assert rep.agree
    ctxH = AlgebraContext(H)
    rep = algebraic_degree_probe(ctxH, H.basis_element("j"), trials=8, seed=0)
    assert (rep.probe_degree, rep.exact_degree) == (2, 2)


def test_degree_probe_on_cyclic3():
    C3 = cyclic3_algebra()
    ctx = AlgebraContext(C3)
    rep = algebraic_degree_probe(ctx, C3.basis_element("u"), trials=5, seed=1)
    assert rep.exact_degree == 3
    assert rep.probe_degree == 3
