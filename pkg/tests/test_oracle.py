"""Oracle gates: the closed forms are only trusted because these pass.

phi2_bruteforce enumerates injective slot placements with no rearrangement
reasoning; dw_norm_bruteforce scans every E inside a window, not just the
sets between the max-modulus set and the support.  Agreement on randomized
instances validates both reductions.
"""

import random
from fractions import Fraction

import pytest

from greedybench.norms import dw_norm, phi2
from greedybench.oracle import OracleConfig, dw_norm_bruteforce, min_horizon, phi2_bruteforce
from greedybench.vectors import SparseVector
from greedybench.weights import Weight

from conftest import RATIONAL_WEIGHTS, random_vector

w13 = RATIONAL_WEIGHTS[0]


def test_phi2_bruteforce_trivial_cases():
    f = SparseVector({1: 1, 2: Fraction(1, 3)})
    assert phi2_bruteforce(w13, {1, 2}, f) == 0  # support swallowed
    assert phi2_bruteforce(w13, set(), f) == Fraction(10, 9)
    # nonnegative vector at E empty: rearrangement against the leading weights
    pos = SparseVector({3: Fraction(1, 2), 8: 1})
    assert phi2_bruteforce(w13, set(), pos) == 1 + Fraction(1, 2) * Fraction(1, 3)


def test_phi2_closed_matches_bruteforce_with_sweep(rng):
    for _ in range(150):
        w = rng.choice(RATIONAL_WEIGHTS)
        f = random_vector(rng, max_support=5, window=8)
        E = set(rng.sample(range(1, 9), rng.randint(0, 2)))
        closed = phi2(w, E, f)
        n = len(E)
        k = len(set(j for j, _ in f.items()) - E)
        prev = None
        stab = min_horizon(w, E, f)
        for h in range(n + k, stab + 3):
            val = phi2_bruteforce(w, E, f, h)
            if prev is not None:
                assert val >= prev  # nondecreasing in the horizon
            prev = val
        assert prev == closed


def test_phi2_bruteforce_monotone_then_stable():
    f = SparseVector({1: 1, 2: Fraction(2, 3), 5: Fraction(-1, 2)})
    E = {2}
    stab = min_horizon(w13, E, f)
    stable_value = phi2_bruteforce(w13, E, f, stab)
    for h in range(stab, stab + 6):
        assert phi2_bruteforce(w13, E, f, h) == stable_value


def test_dw_bruteforce_examples():
    f13 = SparseVector({1: 1, 2: Fraction(1, 3)})
    g13 = SparseVector({1: 1, 2: Fraction(1, 3), 3: Fraction(-1, 3)})
    assert dw_norm_bruteforce(w13, f13) == Fraction(10, 9)
    assert dw_norm_bruteforce(w13, g13) == 1  # E beyond the support never wins
    assert dw_norm_bruteforce(w13, SparseVector.indicator([1, 2])) == Fraction(4, 3)


def test_dw_matches_bruteforce(rng):
    for _ in range(150):
        w = rng.choice(RATIONAL_WEIGHTS)
        f = random_vector(rng, max_support=5, window=10)
        assert dw_norm(w, f) == dw_norm_bruteforce(w, f, OracleConfig(e_window=12))


def test_dw_bruteforce_padding_changes_nothing(rng):
    for _ in range(20):
        w = rng.choice(RATIONAL_WEIGHTS)
        f = random_vector(rng, max_support=4, window=8)
        base = dw_norm_bruteforce(w, f, OracleConfig(e_window=10))
        padded = dw_norm_bruteforce(w, f, OracleConfig(e_window=10, pad=2))
        assert base == padded


def test_oracle_preconditions():
    big = SparseVector({j: Fraction(1, j) for j in range(1, 11)})
    with pytest.raises(ValueError):
        phi2_bruteforce(w13, set(), big)  # off-E support > 8
    with pytest.raises(ValueError):
        dw_norm_bruteforce(w13, SparseVector({25: 1}), OracleConfig(e_window=12))
    with pytest.raises(ValueError):
        dw_norm_bruteforce(w13, SparseVector({1: 1}), OracleConfig(e_window=24))
    gen = Weight.from_generator("sqrt_primitive", 0)
    with pytest.raises(ValueError):
        phi2_bruteforce(gen, set(), SparseVector({1: 1}))


def test_horizon_too_small_rejected():
    f = SparseVector({1: 1, 2: Fraction(1, 2), 3: Fraction(1, 4)})
    with pytest.raises(ValueError):
        phi2_bruteforce(w13, set(), f, horizon=2)
