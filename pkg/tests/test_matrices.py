from fractions import Fraction

import pytest

from skewfield import (BadParams, DescriptorMismatch, Matrix, NonSquare, QQ,
                       ShapeMismatch, Singular, number_field, prime_field,
                       qq_matrix)
from skewfield.decomp import special_matrix_T
from skewfield.sampling import (derived_rng, random_invertible_matrix,
                                random_matrix)

K7 = number_field([-1, -2, 1, 1])


def test_construction_rejects_degenerate():
    with pytest.raises(BadParams):
        Matrix(QQ, [])
    with pytest.raises(BadParams):
        Matrix(QQ, [[]])
    with pytest.raises(BadParams):
        Matrix(QQ, [[1, 2], [3]])


def test_det_examples():
    assert Matrix.identity(QQ, 3).det() == 1
    assert special_matrix_T(3, "unipotent").det() == 1
    assert Matrix.diagonal(QQ, [2, 3]).det() == 6
    with pytest.raises(NonSquare):
        Matrix(QQ, [[1, 2, 3], [4, 5, 6]]).det()


def test_trace_examples():
    assert Matrix.identity(QQ, 3).trace() == 3
    assert special_matrix_T(3, "nilpotent").trace() == 0
    assert Matrix.diagonal(QQ, [1, -1]).trace() == 0
    with pytest.raises(NonSquare):
        Matrix(QQ, [[1, 2, 3], [4, 5, 6]]).trace()


def test_inverse_examples():
    eye = Matrix.identity(QQ, 2)
    assert eye.inverse() == eye
    m = qq_matrix([[1, 1], [0, 1]])
    assert m.inverse() == qq_matrix([[1, -1], [0, 1]])
    with pytest.raises(Singular):
        qq_matrix([[1, 1], [1, 1]]).inverse()


def test_min_poly_examples():
    assert str(Matrix.diagonal(QQ, [1, 2]).min_poly()) == "x^2 - 3*x + 2"
    assert str(Matrix.identity(QQ, 3).min_poly()) == "x - 1"
    jordan = qq_matrix([[0, 1, 0], [0, 0, 1], [0, 0, 0]])
    assert str(jordan.min_poly()) == "x^3"


def test_is_scalar():
    assert Matrix.diagonal(QQ, [2, 2]).is_scalar()
    assert not qq_matrix([[0, 1], [0, 0]]).is_scalar()
    assert qq_matrix([[5]]).is_scalar()


def test_kernel_basis_examples():
    assert Matrix.identity(QQ, 2).kernel_basis() == []
    assert len(Matrix.zeros(QQ, 2).kernel_basis()) == 2
    (vec,) = qq_matrix([[1, 1], [1, 1]]).kernel_basis()
    ratio = vec[0] / vec[1]
    assert ratio == -1


def test_kernel_of_rectangular():
    m = Matrix(QQ, [[1, 2, 3]])
    basis = m.kernel_basis()
    assert len(basis) == 2
    for vec in basis:
        image = [sum((m[i, j] * vec[j] for j in range(3)), m[0, 0] * 0)
                 for i in range(1)]
        assert all(x == 0 for x in image)


def test_mismatched_operands_raise():
    a = qq_matrix([[1, 2], [3, 4]])
    b = Matrix(prime_field(5), [[1, 2], [3, 4]])
    with pytest.raises(DescriptorMismatch):
        a * b
    with pytest.raises(ShapeMismatch):
        a * Matrix(QQ, [[1, 2, 3]])
    with pytest.raises(ShapeMismatch):
        a + Matrix(QQ, [[1, 2, 3]])


def test_pow_negative_and_zero():
    m = qq_matrix([[1, 1], [0, 1]])
    assert m ** 0 == Matrix.identity(QQ, 2)
    assert m ** -1 == m.inverse()
    assert m ** 3 == m * m * m
    assert m ** -2 == (m * m).inverse()


@pytest.mark.parametrize("field", [QQ, prime_field(11), K7],
                         ids=["Q", "F11", "NF"])
def test_det_multiplicative_and_trace_commuting(field):
    rng = derived_rng(31, field.to_str())
    for _ in range(15):
        a = random_matrix(rng, field, 3, 4)
        b = random_matrix(rng, field, 3, 4)
        assert (a * b).det() == a.det() * b.det()
        assert (a * b).trace() == (b * a).trace()


@pytest.mark.parametrize("field", [QQ, prime_field(11), K7],
                         ids=["Q", "F11", "NF"])
def test_inverse_round_trip_randomized(field):
    rng = derived_rng(32, field.to_str())
    eye = Matrix.identity(field, 3)
    for _ in range(10):
        a = random_invertible_matrix(rng, field, 3, 4)
        assert a * a.inverse() == eye
        assert a.inverse() * a == eye


def test_min_poly_similarity_invariance():
    rng = derived_rng(33, "sim")
    for _ in range(10):
        a = random_matrix(rng, QQ, 3, 4)
        p = random_invertible_matrix(rng, QQ, 3, 3)
        conj = p.inverse() * a * p
        assert conj.min_poly() == a.min_poly()


def test_min_poly_annihilates_and_degree_bound():
    rng = derived_rng(34, "ann")
    for n in (2, 3, 4):
        for _ in range(6):
            a = random_matrix(rng, QQ, n, 4)
            mp = a.min_poly()
            assert 1 <= mp.degree <= n
            assert mp.is_monic()
            assert mp(a).is_zero()


def test_min_poly_divides_characteristic_style_annihilator():
    # (x - 1)^m annihilates the unipotent gadget and min poly equals it
    for m in (2, 3, 4):
        t = special_matrix_T(m, "unipotent")
        mp = t.min_poly()
        assert mp.degree == m
        assert mp(t).is_zero()


def test_matrix_over_number_field():
    alpha = (0, 1, 0)
    m = Matrix(K7, [[alpha, 1], [0, alpha]])
    assert m.det() == m[0, 0] * m[1, 1]
    assert (m * m.inverse()).is_identity()
    assert m.min_poly().degree == 2
