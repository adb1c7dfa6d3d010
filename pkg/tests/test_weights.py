import random
from fractions import Fraction

import mpmath
import pytest

from greedybench.rationals import to_mpf, workprec
from greedybench.weights import Weight, flat_tail_weight, primitive_weight, tail_limit


def test_primitive_weight_examples():
    w = flat_tail_weight(Fraction(1, 3))
    assert primitive_weight(w, 1) == 1
    assert primitive_weight(w, 3) == Fraction(5, 3)
    # s_n/n = (n+2)/(3n) is the concentration coefficient of this weight
    for n in range(1, 30):
        assert primitive_weight(w, n) / n == Fraction(n + 2, 3 * n)


def test_tail_limit():
    assert tail_limit(flat_tail_weight(Fraction(1, 3))) == Fraction(1, 3)
    assert tail_limit(Weight([1], 1)) == 1
    g = Weight.from_generator("sqrt_primitive", 0)
    assert tail_limit(g) == 0


def test_constructor_invariants():
    with pytest.raises(ValueError):
        Weight([Fraction(1, 2)], Fraction(1, 3))  # w_1 != 1
    with pytest.raises(ValueError):
        Weight([1, Fraction(1, 3), Fraction(1, 2)], Fraction(1, 4))  # increasing step
    with pytest.raises(ValueError):
        Weight([1], Fraction(0))  # zero tail
    with pytest.raises(ValueError):
        Weight([1, Fraction(1, 2)], Fraction(2, 3))  # tail above last entry
    with pytest.raises(ValueError):
        Weight([], Fraction(1))


def test_entry_increment_matches_psum():
    rng = random.Random(5)
    for _ in range(20):
        p = rng.randint(1, 4)
        entries = sorted(
            (Fraction(rng.randint(1, 12), 12) for _ in range(p)), reverse=True
        )
        w = Weight([Fraction(1)] + entries, entries[-1] if entries else Fraction(1, 2))
        horizon = 200
        for n in range(1, horizon):
            assert w.entry(n + 1) == w.psum(n + 1) - w.psum(n)
            # entries never exceed the running average
            assert w.entry(n + 1) <= w.psum(n + 1) / (n + 1) <= w.psum(n) / n


def test_average_converges_to_tail():
    w = Weight([1, Fraction(2, 3)], Fraction(1, 3))
    prev = None
    for n in range(1, 2000):
        gap = w.psum(n) / n - tail_limit(w)
        assert gap >= 0
        if prev is not None:
            assert gap <= prev
        prev = gap


def test_generator_weight_sqrt():
    g = Weight.from_generator("sqrt_primitive", 0)
    with workprec():
        assert abs(g.psum(4) - 2) < mpmath.mpf(10) ** -70
        assert abs(g.entry(1) - 1) < mpmath.mpf(10) ** -70
        # sampled averages decrease toward the declared limit 0
        prev = None
        for n in (1, 10, 100, 1000, 10000):
            avg = g.psum(n) / n
            assert avg > 0
            if prev is not None:
                assert avg < prev
            prev = avg


def test_generator_weight_rejects_unknown_rule():
    with pytest.raises(ValueError):
        Weight.from_generator("no_such_rule", 0)


def test_json_round_trip():
    w = Weight([1, Fraction(2, 3)], Fraction(1, 3))
    assert Weight.from_json(w.to_json()) == w
    assert w.to_json() == {"prefix": ["1", "2/3"], "tail": "1/3"}
    g = Weight.from_generator("sqrt_primitive", 0)
    assert g.to_json() == {"generator": "sqrt_primitive", "limit": "0"}
    assert Weight.from_json(g.to_json()) == g


def test_inexact_weight_goes_mpf():
    with workprec():
        w = Weight([1], to_mpf(Fraction(1, 3)))
    assert not w.is_exact
    with pytest.raises(ValueError):
        w.to_json()


def test_weight_is_immutable():
    w = flat_tail_weight(Fraction(1, 2))
    with pytest.raises(AttributeError):
        w.tail = Fraction(1, 3)
