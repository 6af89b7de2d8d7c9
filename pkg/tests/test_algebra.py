import random
from math import comb

import pytest

from qcapelli.algebra import GenIndex, algebra, r_matrix
from qcapelli.audits import associativity_audit, pbw_audit, random_element, relation_residuals
from qcapelli.coefficients import ONE, ZERO, q_pow

q = q_pow(1)


def test_r_matrix_table():
    assert r_matrix(1, 2, 1, 2) == q_pow(-1)
    assert r_matrix(2, 2, 2, 2) == ONE
    assert r_matrix(1, 1, 2, 2) == -(q_pow(-2) - 1)
    assert r_matrix(2, 2, 1, 1) == ZERO
    assert r_matrix(1, 2, 2, 1) == ZERO


def test_single_generator_is_normal():
    A = algebra(2)
    assert A.normal_form([GenIndex(1, 1)]) == A.z(1, 1)


def test_cross_relation_n1():
    A = algebra(1)
    got = A.normal_form([GenIndex(1, 1, True), GenIndex(1, 1)])
    assert got == A.z(1, 1) * A.zstar(1, 1) * q_pow(2) + (1 - q_pow(2))


def test_cross_relation_n2():
    A = algebra(2)
    got = A.normal_form([GenIndex(1, 1, True), GenIndex(1, 1)])
    c = q_pow(2) - 1
    expected = (
        A.z(1, 1) * A.zstar(1, 1) * q_pow(2)
        + (A.z(1, 2) * A.zstar(1, 2) + A.z(2, 1) * A.zstar(2, 1)) * c
        + A.z(2, 2) * A.zstar(2, 2) * (c * c * q_pow(-2))
        + (1 - q_pow(2))
    )
    assert got == expected


def test_multiply_examples():
    A = algebra(2)
    f = A.z(1, 2) * A.zstar(2, 1) + A.z(2, 2)
    assert A.one() * f == f
    assert A.z(1, 1) * A.z(2, 2) == A.monomial((0, 3))
    assert A.z(2, 2) * A.z(1, 1) == A.z(1, 1) * A.z(2, 2) - A.z(1, 2) * A.z(2, 1) * (q - q_pow(-1))


def test_star_examples():
    A = algebra(2)
    assert A.z(1, 1).star() == A.zstar(1, 1)
    rng = random.Random(3)
    for _ in range(20):
        f, g = random_element(A, rng), random_element(A, rng)
        assert f.star().star() == f
        assert (f * g).star() == g.star() * f.star()


def test_qminor_examples():
    A2, A3 = algebra(2), algebra(3)
    assert A2.qminor([1], [2]) == A2.z(1, 2)
    assert A2.qdet() == A2.z(1, 1) * A2.z(2, 2) - A2.z(1, 2) * A2.z(2, 1) * q
    assert A3.qminor([1, 2], [2, 3]) == A3.z(1, 2) * A3.z(2, 3) - A3.z(1, 3) * A3.z(2, 2) * q
    with pytest.raises(ValueError):
        A3.qminor([2, 1], [1, 2])
    with pytest.raises(ValueError):
        A3.qminor([1, 2], [1])


def test_qdet_is_central_in_holomorphic_part():
    A = algebra(2)
    d = A.qdet()
    for a in (1, 2):
        for al in (1, 2):
            assert d * A.z(a, al) == A.z(a, al) * d


def test_highest_weight_vectors():
    A = algebra(2)
    assert A.highest_weight_vector((1, 0)) == A.z(1, 1)
    assert A.highest_weight_vector((1, 1)) == A.qdet()
    assert A.highest_weight_vector((2, 1)) == A.qdet() * A.z(1, 1)
    assert A.highest_weight_vector((0, 0)) == A.one()


@pytest.mark.parametrize("n", [1, 2, 3])
@pytest.mark.parametrize("d", [0, 1, 2, 3])
def test_pbw_dimensions(n, d):
    assert len(algebra(n).holo_monomials(d)) == comb(n * n + d - 1, d)
    assert pbw_audit(algebra(n), d)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_relation_residuals_vanish(n):
    assert relation_residuals(algebra(n)) == []


def test_associativity_fuzz_small():
    fails = associativity_audit(algebra(2), samples=40, seed=11)
    assert fails == {"associativity": 0, "involution": 0, "anti_automorphism": 0}


def test_bidegree_bookkeeping():
    A = algebra(2)
    f = A.zstar(1, 1) * A.z(1, 1)
    assert f.bidegrees() == {(1, 1), (0, 0)}
    assert A.z(1, 2).is_holomorphic()
    assert not f.is_holomorphic()


def test_index_range():
    with pytest.raises(IndexError):
        algebra(2).z(3, 1)


def test_json_dump_shape():
    A = algebra(2)
    rec = (A.z(1, 2) * A.zstar(2, 1)).to_json()
    assert rec == [{"holo": [0, 1, 0, 0], "anti": [0, 0, 1, 0], "coeff": [[0, "1"]]}]
