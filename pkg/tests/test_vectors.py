import random
from fractions import Fraction

import pytest

from greedybench.vectors import (
    SignedSet,
    SparseVector,
    average_project,
    max_modulus_set,
    nonincreasing_rearrangement,
    project,
    support,
)

from conftest import COEFF_POOL, random_vector

e1 = SparseVector.basis(1)
f13 = SparseVector({1: 1, 2: Fraction(1, 3)})
g13 = SparseVector({1: 1, 2: Fraction(1, 3), 3: Fraction(-1, 3)})


def test_support_examples():
    assert support(f13) == {1, 2}
    assert support(SparseVector()) == set()
    assert support(g13) == {1, 2, 3}


def test_max_modulus_set_examples():
    assert max_modulus_set(f13) == {1}
    assert max_modulus_set(SparseVector({1: 1, 2: -1})) == {1, 2}
    assert max_modulus_set(SparseVector({2: Fraction(1, 3), 3: Fraction(-1, 3)})) == {2, 3}
    with pytest.raises(ValueError):
        max_modulus_set(SparseVector())


def test_rearrangement_examples():
    assert nonincreasing_rearrangement(g13) == (1, Fraction(1, 3), Fraction(1, 3))
    assert nonincreasing_rearrangement(SparseVector()) == ()
    assert nonincreasing_rearrangement(SparseVector({5: -2, 7: 1})) == (2, 1)


def test_project_examples():
    assert project(SparseVector({1: 1, 2: 1}), {1}) == e1
    assert project(g13, support(g13)) == g13
    assert project(g13, {1, 2}) == f13
    assert project(g13, {4, 9}) == SparseVector()


def test_average_project_examples():
    assert average_project(SparseVector({1: 1, 2: -1}), {1, 2}) == SparseVector()
    assert average_project(e1, {1}) == e1
    expected = SparseVector({1: Fraction(4, 3), 2: Fraction(4, 3), 3: Fraction(4, 3)})
    assert average_project(SparseVector({1: 1, 2: 3}), {1, 2, 3}) == expected
    with pytest.raises(ValueError):
        average_project(e1, set())


def test_project_composes_as_intersection():
    rng = random.Random(11)
    for _ in range(200):
        f = random_vector(rng)
        A = set(rng.sample(range(1, 12), rng.randint(0, 6)))
        B = set(rng.sample(range(1, 12), rng.randint(0, 6)))
        assert project(project(f, A), B) == project(f, A & B)


def test_rearrangement_is_permutation_invariant():
    rng = random.Random(12)
    for _ in range(200):
        f = random_vector(rng)
        perm = list(range(1, 13))
        rng.shuffle(perm)
        g = SparseVector({perm[j - 1]: v for j, v in f.items()})
        assert nonincreasing_rearrangement(g) == nonincreasing_rearrangement(f)


def test_average_project_preserves_sum():
    rng = random.Random(13)
    for _ in range(200):
        f = random_vector(rng)
        A = set(rng.sample(range(1, 12), rng.randint(1, 6)))
        avg = average_project(f, A)
        assert sum((avg[j] for j in A), Fraction(0)) == sum((f[j] for j in A), Fraction(0))


def test_arithmetic_and_immutability():
    assert f13 - f13 == SparseVector()
    assert (f13 + g13)[3] == Fraction(-1, 3)
    assert (Fraction(3) * f13)[2] == 1
    assert -g13 == SparseVector({1: -1, 2: Fraction(-1, 3), 3: Fraction(1, 3)})
    with pytest.raises(AttributeError):
        f13._entries = {}
    with pytest.raises(ValueError):
        SparseVector({0: 1})


def test_signed_set():
    s = SignedSet([2, 5, 9], [1, -1, 1])
    assert s.to_vector() == SparseVector({2: 1, 5: -1, 9: 1})
    with pytest.raises(ValueError):
        SignedSet([5, 2], [1, 1])
    with pytest.raises(ValueError):
        SignedSet([1, 2], [1])
    with pytest.raises(ValueError):
        SignedSet([1], [2])


def test_json_round_trip():
    assert SparseVector.from_json(g13.to_json()) == g13
    assert g13.to_json() == {"entries": {"1": "1", "2": "1/3", "3": "-1/3"}}


def test_indicator_builders():
    assert SparseVector.indicator([1, 2]) == SparseVector({1: 1, 2: 1})
    v = SparseVector.signed_indicator([1, 2], [1, -1])
    assert v == SparseVector({1: 1, 2: -1})
