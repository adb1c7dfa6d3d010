import random
from fractions import Fraction

import pytest

from greedybench.vectors import SparseVector
from greedybench.weights import Weight
from greedybench.witnesses import flat_tail_weight

COEFF_POOL = [
    Fraction(1), Fraction(-1),
    Fraction(2, 3), Fraction(-2, 3),
    Fraction(1, 2), Fraction(-1, 2),
    Fraction(1, 3), Fraction(-1, 3),
    Fraction(1, 4), Fraction(-1, 4),
    Fraction(3, 4), Fraction(-3, 4),
]

RATIONAL_WEIGHTS = [
    flat_tail_weight(Fraction(1, 3)),
    flat_tail_weight(Fraction(1, 2)),
    flat_tail_weight(Fraction(2, 3)),
    Weight([Fraction(1), Fraction(2, 3)], Fraction(1, 3)),
    Weight([Fraction(1), Fraction(3, 4), Fraction(1, 2)], Fraction(1, 4)),
]


def random_vector(rng, max_support=5, window=10, pool=COEFF_POOL):
    size = rng.randint(1, max_support)
    supp = rng.sample(range(1, window + 1), size)
    return SparseVector({j: rng.choice(pool) for j in supp})


def tie_free_vector(rng, max_support=5, window=12):
    """All coordinate moduli pairwise distinct."""
    size = rng.randint(1, max_support)
    supp = rng.sample(range(1, window + 1), size)
    nums = rng.sample(range(1, 40), size)
    return SparseVector(
        {j: Fraction(rng.choice((1, -1)) * num, 40) for j, num in zip(supp, nums)}
    )


@pytest.fixture
def rng():
    return random.Random(20260810)
