from fractions import Fraction

import pytest

from skewfield import (AddDecomposition, BadDeterminant, BadParams, BadTrace,
                       CharTooSmall, DepthArityCap, Matrix, MultDecomposition,
                       QQ, ScalarInput, SmallField, additive_commutator_decomp,
                       iterated_add_decomp, iterated_mult_decomp,
                       multiplicative_commutator_decomp, prime_field,
                       qq_matrix, special_matrix_T, u_eval, v_eval,
                       zero_diagonal_similarity)
from skewfield.sampling import (derived_rng, random_sl_matrix,
                                random_trace_zero_matrix)


def test_special_matrix_examples():
    assert special_matrix_T(3, "unipotent") == qq_matrix(
        [[1, 1, 0], [0, 1, 1], [0, 0, 1]])
    assert special_matrix_T(3, "nilpotent") == qq_matrix(
        [[0, 1, 0], [0, 0, 1], [0, 0, 0]])
    assert special_matrix_T(1, "unipotent") == qq_matrix([[1]])
    assert special_matrix_T(1, "nilpotent") == qq_matrix([[0]])
    with pytest.raises(BadParams):
        special_matrix_T(0, "unipotent")
    with pytest.raises(BadParams):
        special_matrix_T(2, "diagonal")


def test_special_matrix_invariants():
    for m in range(2, 7):
        t = special_matrix_T(m, "unipotent")
        assert t.det() == 1
        assert t.min_poly().degree == m
        n = special_matrix_T(m, "nilpotent")
        assert n.trace() == 0
        assert n.min_poly().degree == m


def test_zero_diagonal_similarity_examples():
    z = Matrix.zeros(QQ, 2)
    assert zero_diagonal_similarity(z) == Matrix.identity(QQ, 2)
    c = Matrix.diagonal(QQ, [1, -1])
    p = zero_diagonal_similarity(c)
    conj = p.inverse() * c * p
    assert all(conj[i, i] == 0 for i in range(2))
    with pytest.raises(BadTrace):
        zero_diagonal_similarity(Matrix.identity(QQ, 2))


def test_zero_diagonal_similarity_randomized():
    rng = derived_rng(11, "zd")
    for m in (2, 3, 4, 5):
        for _ in range(6):
            c = random_trace_zero_matrix(rng, QQ, m)
            p = zero_diagonal_similarity(c)
            assert not p.det().is_zero()
            conj = p.inverse() * c * p
            assert all(conj[i, i] == 0 for i in range(m))


def test_zero_diagonal_char_too_small():
    F3 = prime_field(3)
    c = Matrix(F3, [[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    with pytest.raises(CharTooSmall):
        zero_diagonal_similarity(c)


def test_additive_decomp_examples():
    c = Matrix.diagonal(QQ, [1, -1])
    a, b = additive_commutator_decomp(c)
    assert a * b - b * a == c
    assert a.trace() == 0 and b.trace() == 0

    z = Matrix.zeros(QQ, 3)
    assert additive_commutator_decomp(z) == (z, z)

    with pytest.raises(BadTrace):
        additive_commutator_decomp(Matrix.identity(QQ, 2))


def test_additive_decomp_over_prime_field_with_big_char():
    F7 = prime_field(7)
    rng = derived_rng(12, "fp-add")
    c = random_trace_zero_matrix(rng, F7, 3)
    a, b = additive_commutator_decomp(c)
    assert a * b - b * a == c
    assert a.trace() == 0 and b.trace() == 0


def test_mult_decomp_examples():
    c = Matrix.diagonal(QQ, [2, Fraction(1, 2)])
    a, b = multiplicative_commutator_decomp(c)
    assert a * b * a.inverse() * b.inverse() == c
    assert not a.is_scalar() and not b.is_scalar()
    assert a.det() == 1 and b.det() == 1

    with pytest.raises(ScalarInput):
        multiplicative_commutator_decomp(Matrix.diagonal(QQ, [3, 3]))
    with pytest.raises(BadDeterminant):
        multiplicative_commutator_decomp(Matrix.diagonal(QQ, [2, 1]))
    with pytest.raises(SmallField):
        multiplicative_commutator_decomp(
            Matrix(prime_field(5), [[1, 1], [0, 1]]))


def test_iterated_mult_decomp_on_the_unipotent_gadget():
    t = special_matrix_T(3, "unipotent")
    dec = iterated_mult_decomp(t, 2)
    assert dec.verified
    assert len(dec.factors) == 4
    assert u_eval(2, dec.factors) == t
    assert all(not f.is_scalar() for f in dec.factors)
    assert all(d == 1 for d in dec.factor_determinants)


def test_iterated_mult_base_case_and_errors():
    c = Matrix.diagonal(QQ, [2, Fraction(1, 2)])
    dec = iterated_mult_decomp(c, 1)
    assert len(dec.factors) == 2
    with pytest.raises(ScalarInput):
        iterated_mult_decomp(Matrix.diagonal(QQ, [3, 3]), 1)
    with pytest.raises(BadParams):
        iterated_mult_decomp(c, 0)
    with pytest.raises(DepthArityCap):
        iterated_mult_decomp(c, 11)


def test_iterated_add_decomp_on_the_nilpotent_gadget():
    t = special_matrix_T(3, "nilpotent")
    dec = iterated_add_decomp(t, 2)
    assert dec.verified
    assert v_eval(2, dec.factors) == t
    assert all(tr == 0 for tr in dec.factor_traces)


def test_iterated_add_zero_target_and_errors():
    z = Matrix.zeros(QQ, 2)
    dec = iterated_add_decomp(z, 3)
    assert all(f.is_zero() for f in dec.factors)
    with pytest.raises(BadTrace):
        iterated_add_decomp(Matrix.identity(QQ, 2), 1)
    with pytest.raises(DepthArityCap):
        iterated_add_decomp(z, 11)


def test_mult_round_trip_randomized():
    count = 0
    for seed in range(12):
        rng = derived_rng(seed, "mult-rt")
        for m in (2, 3, 4):
            c = random_sl_matrix(rng, QQ, m)
            for n in (1, 2, 3):
                dec = iterated_mult_decomp(c, n, seed=seed)
                assert dec.verified
                assert all(not f.is_scalar() for f in dec.factors)
                count += 1
    assert count == 108


def test_add_round_trip_randomized():
    count = 0
    for seed in range(12):
        rng = derived_rng(seed, "add-rt")
        for m in (2, 3, 4):
            c = random_trace_zero_matrix(rng, QQ, m)
            for n in (1, 2, 3):
                dec = iterated_add_decomp(c, n)
                assert dec.verified
                assert all(t == 0 for t in dec.factor_traces)
                count += 1
    assert count == 108


def test_decomposition_determinism():
    rng = derived_rng(13, "det")
    c = random_sl_matrix(rng, QQ, 3)
    d1 = iterated_mult_decomp(c, 2, seed=5)
    d2 = iterated_mult_decomp(c, 2, seed=5)
    assert d1.factors == d2.factors


def test_verified_flag_refuses_bad_factors():
    t = special_matrix_T(2, "unipotent")
    good = iterated_mult_decomp(t, 1)
    wrong = (good.factors[0], good.factors[0])
    with pytest.raises(BadParams):
        MultDecomposition(target=t, depth=1, factors=wrong, verified=True)
    # unverified records are allowed to hold anything of the right arity
    rec = MultDecomposition(target=t, depth=1, factors=wrong, verified=False)
    assert not rec.verified

    tz = special_matrix_T(2, "nilpotent")
    with pytest.raises(BadParams):
        AddDecomposition(target=tz, depth=1,
                         factors=(tz, Matrix.identity(QQ, 2)), verified=True)


def test_mult_works_over_a_number_field():
    from skewfield import number_field
    K = number_field([-1, -2, 1, 1])
    alpha = (0, 1, 0)
    c = Matrix(K, [[alpha, 1], [0, alpha]])
    c = c * Matrix(K, [[c.det().inverse().payload, 0], [0, 1]])
    assert c.det() == 1
    a, b = multiplicative_commutator_decomp(c)
    assert a * b * a.inverse() * b.inverse() == c
