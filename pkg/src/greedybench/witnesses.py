"""Canonical witness vectors and closed-form reference values.

The suppression-constant witnesses over the weight (1, w, w, ...) are a unit
spike plus one plateau of height w:

    plateau(n, w)     = e_1 + w * (e_2 + ... + e_{n+1})
    two_block(n, w)   = e_1 + w * (e_2 + ... + e_{n+1}) - w * (e_{n+2} + ... + e_{2n+1})
    two_block_pos     = same with both blocks positive

whose combined-norm values have the closed forms

    |plateau|   = 1 + n w^2
    |two_block| = max{ 1, (1 + n w)^2 / (n+1) + n w^2 }.

The tail value balancing the two branches of the two_block norm is
    balanced_tail(n) = 1 / (1 + sqrt(2n + 2)),
and at that value the suppression ratio |plateau| / |two_block| equals
    1 + (1 - 2 w) n / (2n + 1)
which increases with n toward 3/2, while the sign-flip (lattice) ratio
|two_block_pos| / |two_block| equals 1 + (1 - 2 w) 2n / (2n + 1), toward 2.
"""

from fractions import Fraction

import mpmath

from .rationals import is_exact, to_mpf, workprec
from .vectors import SparseVector
from .weights import Weight


def flat_tail_weight(omega):
    """The weight (1, omega, omega, ...)."""
    return Weight([Fraction(1)], omega)


def plateau_vector(n, omega):
    """Unit spike plus a height-omega plateau on {2, ..., n+1}."""
    entries = {1: Fraction(1)}
    for j in range(2, n + 2):
        entries[j] = omega
    return SparseVector(entries)


def two_block_vector(n, omega):
    """Spike, positive plateau on {2..n+1}, negative plateau on {n+2..2n+1}."""
    entries = {1: Fraction(1)}
    for j in range(2, n + 2):
        entries[j] = omega
    for j in range(n + 2, 2 * n + 2):
        entries[j] = -omega
    return SparseVector(entries)


def two_block_vector_pos(n, omega):
    """Both plateaus positive (the sign-flipped partner of two_block)."""
    entries = {1: Fraction(1)}
    for j in range(2, 2 * n + 2):
        entries[j] = omega
    return SparseVector(entries)


def plateau_norm_formula(n, omega):
    """Closed form 1 + n omega^2 for the plateau vector's combined norm."""
    return 1 + n * omega * omega


def two_block_norm_formula(n, omega):
    """Closed form max{1, (1+n omega)^2/(n+1) + n omega^2}."""
    one = Fraction(1) if is_exact(omega) else to_mpf(1)
    branch = (1 + n * omega) ** 2 / (n + 1) + n * omega * omega
    return branch if branch > one else one


def balanced_tail(n):
    """The tail value 1/(1 + sqrt(2n+2)) balancing the two_block branches."""
    with workprec():
        return 1 / (1 + mpmath.sqrt(2 * n + 2))


def suppression_curve_value(n):
    """1 + (1 - 2 w) n/(2n+1) at w = balanced_tail(n)."""
    with workprec():
        w = balanced_tail(n)
        return 1 + (1 - 2 * w) * mpmath.mpf(n) / (2 * n + 1)


def lattice_curve_value(n):
    """1 + (1 - 2 w) 2n/(2n+1) at w = balanced_tail(n)."""
    with workprec():
        w = balanced_tail(n)
        return 1 + (1 - 2 * w) * mpmath.mpf(2 * n) / (2 * n + 1)
