from fractions import Fraction

import pytest

from skewfield import (AlgebraDescriptor, BadParams, DescriptorMismatch,
                       Matrix, NotADivisionPreset, NotInvertible, QQ,
                       cyclic3_algebra, matrix_algebra, maximal_subfield_check,
                       number_field, parse_element, preset,
                       quaternion_algebra)
from skewfield.algebras import CYCLIC3_MODULUS
from skewfield.contexts import AlgebraContext
from skewfield.sampling import derived_rng

H = quaternion_algebra(-1, -1)
C3 = cyclic3_algebra()


def quat(c0=0, c1=0, c2=0, c3=0):
    return H.element([c0, c1, c2, c3])


# -- independent quaternion oracle (tuple arithmetic, no library code) --------

def quat_mul(p, q):
    a1, b1, c1, d1 = p
    a2, b2, c2, d2 = q
    return (a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2)


def test_quaternion_table_against_oracle():
    rng = derived_rng(5, "quat")
    ctx = AlgebraContext(H)
    for _ in range(25):
        x = ctx.random_element(rng, 5, 3)
        y = ctx.random_element(rng, 5, 3)
        expected = quat_mul(tuple(x.coords), tuple(y.coords))
        assert tuple((x * y).coords) == expected


def test_quaternion_defining_relations():
    i, j, k = H.basis_element("i"), H.basis_element("j"), H.basis_element("k")
    assert i * j == k
    assert j * i == -k
    assert i * i == H.scalar(-1)
    assert j * j == H.scalar(-1)
    assert k * k == H.scalar(-1)
    assert H.one() * i == i


def test_general_quaternion_parameters():
    A = quaternion_algebra(2, 3)
    i, j, k = A.basis_element("i"), A.basis_element("j"), A.basis_element("k")
    assert i * i == A.scalar(2)
    assert j * j == A.scalar(3)
    assert i * j == k
    assert k * k == A.scalar(-6)
    assert not A.division   # indefinite form: not declared division


def test_matrix_algebra_units():
    M2 = matrix_algebra(2)
    e11 = M2.basis_element("e11")
    e12 = M2.basis_element("e12")
    e21 = M2.basis_element("e21")
    assert e11 * e12 == e12
    assert e12 * e21 == e11
    assert e12 * e12 == M2.zero()
    assert M2.one() == e11 + M2.basis_element("e22")


def test_cyclic3_sigma_is_an_order3_automorphism():
    # polynomial arithmetic in Q[x]/(x^3 + x^2 - 2x - 1)
    K = number_field(CYCLIC3_MODULUS)
    alpha = K.coerce((0, 1, 0))

    def sigma(payload):
        image = K.sub(K.mul(alpha, alpha), K.coerce(2))
        acc, power = K.coerce(0), K.one
        for c in payload:
            acc = K.add(acc, K.mul(K.coerce(c), power))
            power = K.mul(power, image)
        return acc

    s1 = sigma(alpha)
    # sigma(alpha) is again a root of the modulus
    value = K.add(K.add(K.mul(K.mul(s1, s1), s1), K.mul(s1, s1)),
                  K.sub(K.neg(K.mul(K.coerce(2), s1)), K.one))
    assert K.is_zero(value)
    # order 3: sigma^3 fixes alpha, sigma itself does not
    assert s1 != alpha
    assert sigma(sigma(s1)) == alpha


def test_cyclic3_relations():
    a = C3.basis_element("a")
    u = C3.basis_element("u")
    # u^3 = 2 and u a = (a^2 - 2) u
    assert u * u * u == C3.scalar(2)
    assert u * a == (a * a - C3.scalar(2)) * u
    assert str(u.min_poly()) == "x^3 - 2"
    assert str(a.min_poly()) == "x^3 + x^2 - 2*x - 1"


def test_alg_mul_descriptor_mismatch():
    with pytest.raises(DescriptorMismatch):
        H.basis_element("i") * C3.basis_element("u")


def test_regular_representation_is_unital_homomorphism():
    rng = derived_rng(6, "rep")
    for alg in (H, C3):
        ctx = AlgebraContext(alg)
        assert alg.one().regular_representation() == Matrix.identity(alg.field, alg.dim)
        for _ in range(8):
            x = ctx.random_element(rng, 4, 2)
            y = ctx.random_element(rng, 4, 2)
            assert (x * y).regular_representation() == \
                x.regular_representation() * y.regular_representation()


def test_quaternion_i_representation_squares_to_minus_identity():
    rep = H.basis_element("i").regular_representation()
    assert rep * rep == -Matrix.identity(QQ, 4)


def test_alg_inverse_examples():
    one, j = H.one(), H.basis_element("j")
    assert (one + j).inverse() == H.element([Fraction(1, 2), 0, Fraction(-1, 2), 0])
    with pytest.raises(NotInvertible):
        H.zero().inverse()


def test_division_presets_invert_every_sampled_nonzero():
    rng = derived_rng(7, "inv")
    for alg in (H, C3):
        ctx = AlgebraContext(alg)
        for _ in range(12):
            x = ctx.random_nonzero(rng, 10, 10)
            y = x.inverse()
            assert x * y == alg.one()
            assert y * x == alg.one()


def test_min_poly_examples():
    j = H.basis_element("j")
    i = H.basis_element("i")
    assert str(j.min_poly()) == "x^2 + 1"
    assert str(H.scalar(5).min_poly()) == "x - 5"
    assert str((i + j).min_poly()) == "x^2 + 2"


def test_is_central():
    assert H.one().is_central()
    assert not H.basis_element("i").is_central()
    M1 = matrix_algebra(1)
    assert M1.element([7]).is_central()


def test_subfield_degree():
    assert H.scalar(3).subfield_degree() == 1
    assert (-H.basis_element("j")).subfield_degree() == 2
    assert C3.basis_element("u").subfield_degree() == 3


def test_maximal_subfield_check():
    rep = maximal_subfield_check(-H.basis_element("j"))
    assert rep.is_maximal and rep.element_degree == 2 == rep.algebra_degree
    assert rep.centralizer_dimension == 2 and rep.centralizer_consistent

    rep = maximal_subfield_check(H.scalar(7))
    assert not rep.is_maximal and rep.element_degree == 1

    rep = maximal_subfield_check(C3.basis_element("u"))
    assert rep.is_maximal and rep.element_degree == 3
    assert rep.centralizer_dimension == 3

    with pytest.raises(NotADivisionPreset):
        maximal_subfield_check(matrix_algebra(2).basis_element("e12"))


def test_degree_bounded_by_algebra_degree_with_centralizer_crosscheck():
    rng = derived_rng(8, "deg")
    for alg in (H, C3):
        m = alg.degree
        ctx = AlgebraContext(alg)
        for _ in range(10):
            x = ctx.random_nonzero(rng, 6, 3)
            d = x.subfield_degree()
            assert d <= m
            if d == m:
                assert x.centralizer_dimension() == m


def test_preset_parsing():
    assert preset("quaternion:-1,-1").label == "quaternion:-1,-1"
    assert preset("matrix:2").dim == 4
    assert preset("cyclic3").degree == 3
    with pytest.raises(BadParams):
        preset("octonion")
    with pytest.raises(BadParams):
        preset("quaternion:0,1")
    with pytest.raises(BadParams):
        preset("matrix:x")


def test_associativity_check_rejects_bad_table():
    # basis (1, a, b) with a*a = b, a*b = 1, b*a = 0: (aa)a = 0 but a(aa) = 1
    table = [
        [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
        [[0, 1, 0], [0, 0, 1], [1, 0, 0]],
        [[0, 0, 1], [0, 0, 0], [0, 0, 0]],
    ]
    with pytest.raises(BadParams):
        AlgebraDescriptor(QQ, table, [1, 0, 0])


def test_unit_check_rejects_bad_unit():
    M2 = matrix_algebra(2)
    with pytest.raises(BadParams):
        AlgebraDescriptor(QQ, M2.table, [1, 0, 0, 0])


def test_parse_element():
    x = parse_element(H, "1 + 2/3*i - j")
    assert x == H.element([1, Fraction(2, 3), -1, 0])
    assert parse_element(H, "-k") == -H.basis_element("k")
    assert parse_element(H, "5/2") == H.scalar(Fraction(5, 2))
    assert parse_element(C3, "a2u") == C3.basis_element("a2u")
    with pytest.raises(BadParams):
        parse_element(H, "1 + q")
    with pytest.raises(BadParams):
        parse_element(H, "2*")
