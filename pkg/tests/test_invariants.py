import pytest

from qcapelli.action import generate_module
from qcapelli.algebra import algebra
from qcapelli.coefficients import ONE, RationalFunction, q_pow, s_pow
from qcapelli.invariants import (
    NotProportional,
    build_y,
    commutativity_check,
    eigenvalue,
    find_invariants,
    is_invariant,
    lemma1_rank,
    prop6_check,
    theorem1_check,
    vanishing_check,
)
from qcapelli.partitions import count_partitions, enumerate_partitions
from qcapelli.symmetric import rhs_theorem1


def test_y_examples():
    A1, A2 = algebra(1), algebra(2)
    z, zs = A1.z(1, 1), A1.zstar(1, 1)
    assert build_y((1,)).element == z * zs
    for m in range(2, 5):
        assert build_y((m,)).element == z**m * zs**m
    d = A2.qdet()
    assert build_y((1, 1)).element == d * d.star()
    assert build_y((0, 0)).element == A2.one()


@pytest.mark.parametrize("nu", [(1, 0), (2, 0), (2, 1)])
def test_y_is_invariant(nu):
    assert is_invariant(build_y(nu).element)


def test_non_invariant_detected():
    A = algebra(2)
    assert not is_invariant(A.z(1, 1) * A.zstar(1, 1))
    assert not is_invariant(A.z(1, 1))


@pytest.mark.parametrize("nu", [(1, 0), (2, 0), (2, 1)])
def test_y_independent_of_basis(nu):
    A = algebra(2)
    basis = generate_module(A, nu)
    scales = [ONE, s_pow(2) + 1, q_pow(-3), -q_pow(1)]
    other = [basis[0]] + [b * scales[i % len(scales)] for i, b in enumerate(reversed(basis[1:]))]
    assert build_y(nu, basis=other).element == build_y(nu).element


def test_eigenvalue_examples():
    for m in range(0, 6):
        assert eigenvalue((1,), (m,)) == 1 - q_pow(2 * m)
    assert eigenvalue((1, 1), (1, 1)) * q_pow(2) == (q_pow(2) - 1) * (q_pow(4) - 1)
    assert eigenvalue((1, 0), (0, 0)) == 0


@pytest.mark.parametrize("nu, lam", [((1,), (3,)), ((2,), (4,)), ((1, 0), (2, 1)), ((2, 1), (2, 2)), ((1, 1, 0), (1, 1, 1))])
def test_theorem1_examples(nu, lam):
    assert theorem1_check(nu, lam)
    assert RationalFunction.coerce(eigenvalue(nu, lam)) == rhs_theorem1(nu, lam)


def test_vanishing():
    for nu in enumerate_partitions(2, 3):
        for lam in enumerate_partitions(2, nu.weight):
            if lam != nu:
                assert vanishing_check(nu, lam)
    with pytest.raises(ValueError):
        vanishing_check((1, 0), (2, 0))
    with pytest.raises(ValueError):
        vanishing_check((1, 0), (1, 0))


def test_eigenvalue_length_mismatch():
    with pytest.raises(ValueError):
        eigenvalue((1, 0), (1,))


def test_commutativity():
    for nu in enumerate_partitions(2, 2):
        for mu in enumerate_partitions(2, 2):
            assert commutativity_check(nu, mu)


@pytest.mark.parametrize("nu", [(1, 1), (2, 1), (2, 2), (3, 1), (1, 1, 1)])
def test_prop6_factorisation(nu):
    assert prop6_check(nu)


@pytest.mark.parametrize("n, j, size", [(1, 1, 1), (2, 1, 1), (2, 2, 2), (2, 3, 2)])
def test_invariant_space_dimensions(n, j, size):
    inv = find_invariants(n, j)
    assert len(inv) == size == count_partitions(j, n)
    assert all(is_invariant(f) for f in inv)


@pytest.mark.parametrize("n, j", [(2, 2), (2, 3), (3, 2)])
def test_products_of_elementary_invariants_span(n, j):
    assert lemma1_rank(n, j) == count_partitions(j, n)


def test_not_proportional_path(monkeypatch):
    import qcapelli.invariants as inv

    A = algebra(2)
    fake = inv.InvariantElement(A.z(1, 2) * A.zstar(1, 1), inv.Partition((1, 0)))
    monkeypatch.setattr(inv, "build_y", lambda nu, *a, **k: fake)
    with pytest.raises(NotProportional):
        inv.eigenvalue((1, 0), (1, 0))
