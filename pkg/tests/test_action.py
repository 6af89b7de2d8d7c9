import random
from itertools import product

import pytest

from qcapelli.action import (
    NotAWeightVector,
    UqGenerator,
    act,
    act_generator_on_z,
    act_word,
    generate_module,
    serre_audit,
    u_k_generators,
    weight,
    weyl_dimension,
)
from qcapelli.algebra import GenIndex, algebra
from qcapelli.audits import random_element
from qcapelli.coefficients import q_pow, s_pow
from qcapelli.partitions import enumerate_partitions

E = lambda j: UqGenerator("E", j)  # noqa: E731
F = lambda j: UqGenerator("F", j)  # noqa: E731
K = lambda j: UqGenerator("K", j)  # noqa: E731
Kinv = lambda j: UqGenerator("Kinv", j)  # noqa: E731


def all_generators(n):
    return [UqGenerator(k, j) for j in range(1, 2 * n) for k in ("E", "F", "K", "Kinv")]


def eq1_weight(lam):
    n = len(lam)
    diffs = [lam[i] - lam[i + 1] for i in range(n - 1)]
    return tuple(diffs + [2 * lam[-1]] + diffs[::-1])


def test_table_entries():
    A = algebra(2)
    assert act_generator_on_z(A, F(1), 1, 1) == A.z(2, 1) * s_pow(1)
    assert act_generator_on_z(A, E(1), 2, 1) == A.z(1, 1) * s_pow(-1)
    assert act_generator_on_z(A, F(2), 1, 1) == A.element()
    assert act_generator_on_z(A, F(2), 2, 2) == A.scalar(s_pow(1))
    assert act_generator_on_z(A, E(2), 1, 1) == A.z(1, 2) * A.z(2, 1) * (-s_pow(-1))
    assert act_generator_on_z(A, E(2), 2, 2) == A.z(2, 2) * A.z(2, 2) * (-s_pow(1))
    assert act_generator_on_z(A, F(3), 1, 1) == A.z(1, 2) * s_pow(1)
    assert act_generator_on_z(A, E(3), 2, 2) == A.z(2, 1) * s_pow(-1)


def test_k_action_on_product():
    A = algebra(2)
    f = A.z(1, 1) * A.z(2, 2)
    assert act(K(1), f) == f
    assert act(K(2), f) == f * q_pow(2)


def test_highest_weight_examples():
    A = algebra(2)
    assert not act(E(1), A.highest_weight_vector((1, 0)))
    assert not act(F(1), act(F(1), A.z(1, 1)))
    assert weight(A.highest_weight_vector((1, 0))) == (1, 0, 1)
    assert weight(A.highest_weight_vector((1, 1))) == (0, 2, 0)
    assert weight(A.one()) == (0, 0, 0)
    with pytest.raises(NotAWeightVector):
        weight(A.z(1, 1) + A.z(2, 2))


@pytest.mark.parametrize("n, maxw", [(1, 3), (2, 4), (3, 3)])
def test_highest_weight_vectors_are_killed_by_raising(n, maxw):
    A = algebra(n)
    for nu in enumerate_partitions(n, maxw):
        v = A.highest_weight_vector(nu)
        assert weight(v) == eq1_weight(nu)
        for j in range(1, 2 * n):
            if j != n:
                assert not act(E(j), v)


@pytest.mark.parametrize("nu, dim", [((1, 0), 4), ((1, 1), 1), ((2, 0), 9)])
def test_module_dimension_examples(nu, dim):
    A = algebra(2)
    basis = generate_module(A, nu)
    assert len(basis) == dim
    assert basis[0] == A.highest_weight_vector(nu)


def test_module_dimension_n3():
    A = algebra(3)
    for nu in enumerate_partitions(3, 2):
        assert len(generate_module(A, nu)) == weyl_dimension(nu) ** 2


@pytest.mark.parametrize("n", [1, 2])
def test_serre_audit(n):
    assert serre_audit(algebra(n), 2)


def test_module_algebra_property():
    A = algebra(2)
    rng = random.Random(5)
    for _ in range(15):
        f, h = random_element(A, rng), random_element(A, rng)
        for j in range(1, 4):
            assert act(E(j), f * h) == act(E(j), f) * h + act(K(j), f) * act(E(j), h)
            assert act(F(j), f * h) == act(F(j), f) * act(Kinv(j), h) + f * act(F(j), h)
            assert act(K(j), f * h) == act(K(j), f) * act(K(j), h)


def test_starred_action_matches_star_structure():
    # E_j(f^*) = -q^{-2} (F_j f)^* off the special node, with opposite sign at j = n
    A = algebra(2)
    f = A.z(1, 1) * A.z(2, 2) + A.z(1, 2)
    assert act(E(1), f.star()) == act(F(1), f).star() * (-q_pow(-2))
    assert act(E(2), f.star()) == act(F(2), f).star() * q_pow(-2)
    assert act(F(3), f.star()) == act(E(3), f).star() * (-q_pow(2))


@pytest.mark.parametrize("n", [1, 2])
def test_action_descends_to_relations(n):
    A = algebra(n)
    rng = range(1, n + 1)
    for b, be, a, al in product(rng, rng, rng, rng):
        for word in (
            [GenIndex(b, be, True), GenIndex(a, al)],
            [GenIndex(b, be), GenIndex(a, al)],
            [GenIndex(b, be, True), GenIndex(a, al, True)],
        ):
            nf = A.normal_form(word)
            for g in all_generators(n):
                assert act_word(A, g, word) == act(g, nf)


def test_u_k_generators_skip_middle_node():
    assert {g.index for g in u_k_generators(2)} == {1, 3}
    assert u_k_generators(1) == []
