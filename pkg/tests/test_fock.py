import random
from fractions import Fraction

import pytest

from qcapelli.action import weight
from qcapelli.algebra import algebra
from qcapelli.audits import random_element, random_holomorphic
from qcapelli.coefficients import ONE, ZERO, eval_q, q_pow
from qcapelli.fock import FockVector, apply, fock_form, gram, is_positive_definite, monomial_basis, vacuum
from qcapelli.linalg import bareiss_det


def test_vacuum_is_killed_by_starred_generators():
    A = algebra(2)
    f0 = vacuum(A)
    for a in (1, 2):
        for al in (1, 2):
            assert not apply(A.zstar(a, al), f0)
            assert apply(A.z(a, al), f0) == FockVector(A.z(a, al))


def test_fock_vectors_must_be_holomorphic():
    A = algebra(1)
    with pytest.raises(ValueError):
        FockVector(A.zstar(1, 1))


@pytest.mark.parametrize("m", range(1, 9))
def test_q_oscillator_n1(m):
    A = algebra(1)
    z = A.z(1, 1)
    zm = FockVector(z**m)
    assert apply(A.zstar(1, 1), zm) == FockVector(z ** (m - 1)) * (1 - q_pow(2 * m))
    expected = ONE
    for i in range(1, m + 1):
        expected = expected * (1 - q_pow(2 * i))
    assert fock_form(zm, zm) == expected


def test_gram_examples():
    A = algebra(2)
    g1 = gram(monomial_basis(A, 1))
    for i in range(4):
        for j in range(4):
            assert g1[i][j] == (1 - q_pow(2) if i == j else ZERO)
    det = FockVector(A.qdet())
    assert fock_form(det, det) * q_pow(2) == (q_pow(2) - 1) * (q_pow(4) - 1)
    assert gram([A.one()]) == [[ONE]]


def test_distinct_weights_are_orthogonal():
    A = algebra(2)
    basis = monomial_basis(A, 2)
    g = gram(basis)
    for i, u in enumerate(basis):
        for j, v in enumerate(basis):
            if weight(u.poly) != weight(v.poly):
                assert not g[i][j]


def test_grading():
    A = algebra(2)
    for d in (1, 2):
        for u in monomial_basis(A, d):
            for v in monomial_basis(A, d + 1):
                assert not fock_form(u, v)


def test_form_is_symmetric_on_monomials():
    A = algebra(2)
    g = gram(monomial_basis(A, 2))
    assert all(g[i][j] == g[j][i] for i in range(len(g)) for j in range(len(g)))


def test_adjointness():
    A = algebra(2)
    rng = random.Random(17)
    for _ in range(100):
        f = random_element(A, rng)
        u = FockVector(random_holomorphic(A, rng))
        v = FockVector(random_holomorphic(A, rng))
        assert fock_form(apply(f, u), v) == fock_form(u, apply(f.star(), v))


@pytest.mark.parametrize("n, dmax", [(1, 4), (2, 3)])
def test_positive_definite_at_half(n, dmax):
    A = algebra(n)
    for d in range(dmax + 1):
        assert is_positive_definite(gram(monomial_basis(A, d)))


def test_positivity_fails_for_indefinite_matrix():
    assert not is_positive_definite([[ONE, ZERO], [ZERO, -ONE]])


def test_gram_determinant_at_rational_q():
    A = algebra(2)
    g = gram(monomial_basis(A, 1))
    m = [[eval_q(x, Fraction(1, 3)) for x in row] for row in g]
    assert bareiss_det(m, Fraction(1)) == Fraction(8, 9) ** 4
