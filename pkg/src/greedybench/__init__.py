"""greedybench: exact-arithmetic laboratory for weighted sequence norms,
the thresholding greedy algorithm, and greedy-type constants.

The hot kernels run on a compiled extension when available, with a
bit-identical pure-Python fallback; `kernel_backend()` reports which one is
active.
"""

from .certify import (
    Certificate,
    SearchGrid,
    almost_greedy_margin,
    ks_lower_bound,
    lattice_ratio,
    property_a_check,
    quasi_greedy_ratio,
    superdemocracy_report,
    suppression_ratio,
    ucc_growth,
)
from .greedy import (
    GreedyTrace,
    best_greedy_residual,
    greedy_approx,
    greedy_ordering,
    greedy_residual,
    sigma,
    sigma_tilde,
    threshold_tie_levels,
    trace,
)
from .kernel import backend_name as kernel_backend
from .norms import (
    NormSpec,
    PhiBreakdown,
    dw_norm,
    lorentz_norm,
    marcinkiewicz_norm,
    norm_of,
    phi1,
    phi2,
    phi_breakdown,
    signedsup_is_seminorm,
    signedsup_norm,
)
from .oracle import OracleConfig, dw_norm_bruteforce, phi2_bruteforce
from .polyhedral import (
    FunctionalFamily,
    bad_dual_family,
    dual_norm,
    family_for,
    hexagon_family,
    pa_finite_family,
    polyhedral_norm,
)
from .vectors import (
    SignedSet,
    SparseVector,
    average_project,
    max_modulus_set,
    nonincreasing_rearrangement,
    project,
    support,
)
from .weights import Weight, primitive_weight, tail_limit
from .witnesses import (
    balanced_tail,
    flat_tail_weight,
    lattice_curve_value,
    plateau_norm_formula,
    plateau_vector,
    suppression_curve_value,
    two_block_norm_formula,
    two_block_vector,
    two_block_vector_pos,
)

__version__ = "0.1.0"
