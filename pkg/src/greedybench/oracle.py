"""Independent brute-force evaluators gating the closed forms.

Nothing here reuses the rearrangement or tail-pushing reasoning behind the
production evaluators: the off-E supremum is maximized by enumerating every
injective placement of the off-E coordinates into slots up to a horizon,
and the norm by scanning every finite E inside a window (not just sets
squeezed between the max-modulus set and the support).  The test suite
compares these against the closed forms on randomized instances; they also
back the hidden --oracle flag of the command line for auditing.

Exact rational weights only (the placement supremum of a generator-rule
weight is a limit and need not be attained at any finite horizon).
"""

from dataclasses import dataclass

from . import kernel
from .vectors import support

BRUTE_SUPPORT_MAX = 8
E_WINDOW_MAX = 20


@dataclass(frozen=True)
class OracleConfig:
    """Enumeration bounds: slot horizon for placements, index window for E."""

    horizon: int = None  # default: stabilization horizon |E| + k + prefix
    e_window: int = 12
    pad: int = 0


def min_horizon(w, E, f):
    """Smallest horizon at which the placement supremum stabilizes."""
    k = len(support(f) - set(E))
    return len(E) + k + w.prefix_len


def phi2_bruteforce(w, E, f, horizon=None):
    """Max |weighted sum| over injective placements into slots <= horizon.

    Nondecreasing in the horizon; for eventually-constant weights it
    stabilizes once the horizon reaches |E| + (off-E support) + prefix.
    """
    if not w.is_exact or not f.is_exact:
        raise ValueError("the brute-force oracle needs exact inputs")
    E = set(E)
    off = [v for j, v in f.items() if j not in E]
    if len(off) > BRUTE_SUPPORT_MAX:
        raise ValueError("off-E support too large for injection enumeration")
    n = len(E)
    if horizon is None:
        horizon = n + len(off) + w.prefix_len
    return kernel.phi2_brute_exact(w, off, n, horizon)


def dw_norm_bruteforce(w, f, cfg=OracleConfig()):
    """Max of the two-part functional over every E inside {1..e_window}.

    Must agree with the production evaluator, which only scans sets between
    the max-modulus set and the support; the agreement is the computational
    validation of that restriction.
    """
    if not w.is_exact or not f.is_exact:
        raise ValueError("the brute-force oracle needs exact inputs")
    if cfg.e_window > E_WINDOW_MAX:
        raise ValueError("window too large for subset enumeration")
    items = sorted(f.items())
    if len(items) > BRUTE_SUPPORT_MAX:
        raise ValueError("support too large for injection enumeration")
    if items and items[-1][0] > cfg.e_window:
        raise ValueError("window must cover the support")
    return kernel.dw_brute_exact(w, items, cfg.e_window, cfg.pad)
