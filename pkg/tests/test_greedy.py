from fractions import Fraction

import mpmath
import pytest

from greedybench.greedy import (
    best_greedy_residual,
    greedy_approx,
    greedy_ordering,
    greedy_residual,
    sigma,
    sigma_tilde,
    sigma_tilde_witness,
    threshold_tie_levels,
    trace,
)
from greedybench.norms import NormSpec, norm_of
from greedybench.rationals import to_mpf
from greedybench.polyhedral import hexagon_family
from greedybench.vectors import SparseVector
from greedybench.witnesses import flat_tail_weight

from conftest import RATIONAL_WEIGHTS, random_vector, tie_free_vector

w13 = flat_tail_weight(Fraction(1, 3))
DW = NormSpec("dw", weight=w13)
f13 = SparseVector({1: 1, 2: Fraction(1, 3)})


def test_greedy_ordering_examples():
    x = SparseVector({1: Fraction(1, 2), 2: -1, 3: Fraction(1, 2)})
    assert greedy_ordering(x) == (2, 1, 3)
    assert greedy_ordering(SparseVector.indicator([3, 1, 2])) == (1, 2, 3)
    assert greedy_ordering(SparseVector.basis(5)) == (5,)
    assert greedy_ordering(SparseVector()) == ()


def test_greedy_approx_examples():
    x = SparseVector({1: Fraction(1, 2), 2: -1, 3: Fraction(1, 2)})
    assert greedy_approx(x, 0) == SparseVector()
    assert greedy_approx(x, 1) == SparseVector({2: -1})
    assert greedy_approx(x, 3) == x
    assert greedy_approx(x, 99) == x
    assert greedy_residual(x, 1) == SparseVector({1: Fraction(1, 2), 3: Fraction(1, 2)})


def test_threshold_ties():
    assert threshold_tie_levels(SparseVector({1: 1, 2: Fraction(1, 3), 3: Fraction(-1, 3)})) == {2}
    assert threshold_tie_levels(f13) == set()


def test_sigma_tilde_examples():
    assert sigma_tilde(f13, 1, DW) == Fraction(1, 3)
    assert sigma_tilde(f13, 0, DW) == Fraction(10, 9)
    assert sigma_tilde(f13, 2, DW) == 0
    value, A = sigma_tilde_witness(f13, 1, DW)
    assert value == Fraction(1, 3) and A == (1,)


def test_sigma_tilde_allows_smaller_sets():
    # on a norm without lattice monotonicity, removing fewer can be better
    hexa = NormSpec("polyhedral", family=hexagon_family(Fraction(1, 2)))
    x = SparseVector({1: 2, 2: -2})
    # removing either coordinate doubles the norm; removing nothing is best
    assert norm_of(hexa, x) == 1
    assert sigma_tilde(x, 1, hexa) == 1


def test_trace_examples():
    t = trace(SparseVector.basis(1), DW)
    assert t.residual_norms == (1, 0)
    t = trace(f13, DW)
    assert t.residual_norms == (Fraction(10, 9), Fraction(1, 3), 0)
    assert t.ordering == (1, 2)
    t = trace(SparseVector(), DW)
    assert t.residual_norms == (0,)
    as_json = trace(f13, DW).to_json()
    assert as_json[1] == {"m": 1, "residual": "1/3", "support": [1]}


def test_trace_endpoint_invariants(rng):
    for _ in range(25):
        w = rng.choice(RATIONAL_WEIGHTS)
        spec = NormSpec("dw", weight=w)
        x = random_vector(rng)
        t = trace(x, spec)
        assert t.residual_norms[0] == norm_of(spec, x)
        assert t.residual_norms[-1] == 0


def test_sigma_trivial_cases():
    res = sigma(f13, 2, DW)
    assert res.value == 0 and res.support == (1, 2)
    assert res.coefficients == (1, Fraction(1, 3))
    res = sigma(f13, 0, DW)
    assert res.value == Fraction(10, 9) and res.support == ()


def test_sigma_upper_bounds_sigma_tilde(rng):
    tol = Fraction(1, 10**9)
    for _ in range(8):
        w = rng.choice(RATIONAL_WEIGHTS)
        spec = NormSpec("dw", weight=w)
        x = random_vector(rng, max_support=4, window=6)
        m = rng.randint(0, len(list(x.items())))
        res = sigma(x, m, spec, tol=tol)
        st = sigma_tilde(x, m, spec)
        assert to_mpf(res.value) <= to_mpf(st + tol)
        assert res.value >= 0


def test_sigma_improves_on_projection():
    # free coefficients undercut projections once lattice monotonicity fails
    hexa = NormSpec("polyhedral", family=hexagon_family(Fraction(1, 2)))
    x = SparseVector({1: 2, 2: 2})
    st = sigma_tilde(x, 1, hexa)
    assert st == 2
    res = sigma(x, 1, hexa, tol=Fraction(1, 10**6))
    assert res.value < to_mpf(st)
    # the |b|/2 face pins the optimum at exactly 1
    assert abs(res.value - 1) < to_mpf(Fraction(1, 10**4))


def test_best_greedy_residual_on_ties():
    g13 = SparseVector({1: 1, 2: Fraction(1, 3), 3: Fraction(-1, 3)})
    natural = norm_of(DW, greedy_residual(g13, 2))
    best = best_greedy_residual(g13, 2, DW)
    assert best <= natural
    assert best <= sigma_tilde(g13, 2, DW)


def test_almost_greedy_inequality_tie_free(rng):
    for _ in range(40):
        w = rng.choice(RATIONAL_WEIGHTS)
        spec = NormSpec("dw", weight=w)
        x = tie_free_vector(rng, max_support=5)
        for m in range(len(list(x.items())) + 1):
            assert norm_of(spec, greedy_residual(x, m)) <= sigma_tilde(x, m, spec)
