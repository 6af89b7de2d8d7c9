from fractions import Fraction
from itertools import product

import pytest

from qcapelli.partitions import (
    Partition,
    count_partitions,
    dominance_leq,
    enumerate_partitions,
    knop_bar,
    spec_points,
)
from qcapelli.coefficients import s_pow


def brute_partitions(n, w):
    return {p for p in product(range(w + 1), repeat=n)
            if sum(p) <= w and all(p[i] >= p[i + 1] for i in range(n - 1))}


def test_dominance_examples():
    assert dominance_leq((1, 1), (2, 0))
    assert not dominance_leq((2, 0), (1, 1))
    assert dominance_leq((3, 1, 0), (3, 1, 0))


def test_enumerate_examples():
    assert enumerate_partitions(1, 2) == [(0,), (1,), (2,)]
    assert enumerate_partitions(2, 2) == [(0, 0), (1, 0), (2, 0), (1, 1)]
    assert len(enumerate_partitions(2, 4)) == 9


@pytest.mark.parametrize("n", [1, 2, 3, 4])
@pytest.mark.parametrize("w", [0, 3, 6])
def test_enumeration_against_brute_force(n, w):
    got = enumerate_partitions(n, w)
    assert len(got) == len(set(got))
    assert set(got) == brute_partitions(n, w)
    assert len(got) == sum(count_partitions(k, n) for k in range(w + 1))


@pytest.mark.parametrize("n", [2, 3])
def test_dominance_is_a_partial_order(n):
    ps = enumerate_partitions(n, 5)
    for a in ps:
        assert dominance_leq(a, a)
        for b in ps:
            if dominance_leq(a, b) and dominance_leq(b, a):
                assert a == b
            for c in ps:
                if dominance_leq(a, b) and dominance_leq(b, c):
                    assert dominance_leq(a, c)


def test_spec_points():
    assert spec_points((3,)) == [s_pow(12)]
    assert spec_points((0, 0)) == [s_pow(4), s_pow(0)]
    assert spec_points((1, 0)) == [s_pow(8), s_pow(0)]
    for lam in enumerate_partitions(3, 4):
        exps = [p.max_exp() for p in spec_points(lam)]
        assert exps == sorted(set(exps), reverse=True)


def test_knop_bar():
    h, t = Fraction(1, 2), Fraction(1, 3)
    assert knop_bar((2,), h, t) == [Fraction(1, 4)]
    assert knop_bar((0, 0), h, t) == [1, 3]
    assert knop_bar((1, 0), h, t) == [Fraction(1, 2), 3]


def test_partition_validation_and_parsing():
    with pytest.raises(ValueError):
        Partition((1, 2))
    assert Partition.parse("2,1", 3) == (2, 1, 0)
    assert str(Partition((2, 1, 0))) == "2,1,0"
    assert Partition((3, 2)).minus_ones() == (2, 1)
