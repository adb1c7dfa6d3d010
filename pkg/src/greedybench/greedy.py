"""Thresholding greedy approximation and its theoretical error functionals.

The natural greedy ordering ranks support indices by decreasing modulus,
breaking ties toward the smaller index; the m-th greedy approximation keeps
the first m coordinates of that ordering.  Against any norm this module
computes the full residual curve, the best m-term projection error (exact,
by enumeration), and an upper bound on the best m-term approximation error
with free coefficients (cyclic coordinate descent with golden-section line
searches; the result is always a valid upper bound).
"""

import itertools
from dataclasses import dataclass
from fractions import Fraction

import mpmath

from .norms import norm_of
from .rationals import to_mpf, workprec
from .vectors import SparseVector, project, support


def greedy_ordering(x):
    """Support indices by decreasing modulus, ties toward the smaller index."""
    return tuple(sorted(support(x), key=lambda j: (abs(x[j]), -j), reverse=True))


def greedy_approx(x, m):
    """The m-th greedy approximation (projection on the top-m indices)."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    rho = greedy_ordering(x)
    return project(x, rho[: min(m, len(rho))])


def greedy_residual(x, m):
    """x minus its m-th greedy approximation."""
    rho = greedy_ordering(x)
    return project(x, rho[min(m, len(rho)):])


def threshold_tie_levels(x):
    """Levels m at which the greedy cut falls inside a modulus tie."""
    rho = greedy_ordering(x)
    return {
        m
        for m in range(1, len(rho))
        if abs(x[rho[m - 1]]) == abs(x[rho[m]])
    }


@dataclass(frozen=True)
class GreedyTrace:
    """Residual curve of the greedy algorithm on one vector."""

    x: SparseVector
    ordering: tuple
    residual_norms: tuple

    def to_json(self):
        from .rationals import decimal_str, format_rational, is_exact

        rho = self.ordering
        out = []
        for m, r in enumerate(self.residual_norms):
            out.append(
                {
                    "m": m,
                    "residual": format_rational(r) if is_exact(r) else decimal_str(r),
                    "support": sorted(rho[:m]),
                }
            )
        return out


def trace(x, N):
    """Full residual curve m -> |x - G_m(x)| for m = 0 .. support size."""
    rho = greedy_ordering(x)
    norms = tuple(norm_of(N, project(x, rho[m:])) for m in range(len(rho) + 1))
    return GreedyTrace(x, rho, norms)


def _kept_sets(supp, m):
    """Complements of the candidate removal sets A with |A| <= m."""
    s = len(supp)
    seen = set()
    for size in range(min(m, s) + 1):
        for removed in itertools.combinations(supp, size):
            kept = tuple(j for j in supp if j not in removed)
            if kept not in seen:
                seen.add(kept)
                yield removed, kept


def sigma_tilde(x, m, N):
    """Exact best m-term projection error min{|x - S_A(x)| : |A| <= m}."""
    value, _ = sigma_tilde_witness(x, m, N)
    return value


def sigma_tilde_witness(x, m, N):
    """As sigma_tilde, also returning the lexicographically smallest arg-min A."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    supp = sorted(support(x))
    best = None
    best_A = None
    for removed, kept in _kept_sets(supp, m):
        val = norm_of(N, project(x, kept))
        if best is None or val < best or (val == best and removed < best_A):
            best = val
            best_A = removed
    return best, best_A


@dataclass(frozen=True)
class SigmaResult:
    """Upper bound on the best m-term error with free coefficients."""

    value: object
    support: tuple
    coefficients: tuple
    tolerance: object

    @property
    def lower_bound(self):
        return Fraction(0)


def _golden():
    with workprec():
        return (mpmath.sqrt(5) - 1) / 2


def _line_search(f, lo, hi, tol):
    """Golden-section minimization of a unimodal f over [lo, hi]."""
    g = _golden()
    a, b = lo, hi
    c = b - g * (b - a)
    d = a + g * (b - a)
    fc, fd = f(c), f(d)
    while b - a > tol:
        if fc <= fd:
            b, d, fd = d, c, fc
            c = b - g * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + g * (b - a)
            fd = f(d)
    mid = (a + b) / 2
    return mid, f(mid)


def sigma(x, m, N, tol=Fraction(1, 10**9), candidates=None, max_cycles=200):
    """Upper bound on the best m-term approximation error, with a witness.

    For each candidate support A (subsets of supp(x) of size m by default;
    pass `candidates` to widen the search window), the convex coefficient
    map is minimized by cyclic coordinate descent: each coordinate gets a
    golden-section line search on [-2|x|, 2|x|] to tol/10, and the cycle
    loop stops once a full sweep improves by less than tol.  The returned
    value always dominates the true infimum; sanity bounds: 0 <= sigma and
    sigma <= sigma_tilde (the projection coefficients are a feasible start).
    """
    if m < 0:
        raise ValueError("m must be nonnegative")
    supp = sorted(support(x))
    if m >= len(supp):
        return SigmaResult(Fraction(0), tuple(supp), tuple(x[j] for j in supp), tol)
    if m == 0:
        return SigmaResult(norm_of(N, x), (), (), tol)
    if candidates is None:
        candidates = itertools.combinations(supp, m)
    with workprec():
        tol = to_mpf(tol)
        radius = 2 * to_mpf(norm_of(N, x))
        best = None
        best_A = None
        best_alpha = None
        for A in candidates:
            A = tuple(A)
            alpha = {j: to_mpf(x[j]) for j in A}

            def objective(coeffs):
                return to_mpf(norm_of(N, x - SparseVector(coeffs)))

            current = objective(alpha)
            for _ in range(max_cycles):
                improved = current
                for j in A:
                    others = dict(alpha)

                    def fj(t, _j=j, _others=others):
                        _others[_j] = t
                        return objective(_others)

                    tj, vj = _line_search(fj, -radius, radius, tol / 10)
                    if vj < current:
                        alpha[j] = tj
                        current = vj
                if improved - current < tol:
                    break
            if best is None or current < best:
                best = current
                best_A = A
                best_alpha = tuple(alpha[j] for j in A)
        return SigmaResult(best, best_A, best_alpha, tol)


def best_greedy_residual(x, m, N):
    """min |x - S_G(x)| over all greedy sets G of size m.

    A greedy set of size m contains every index whose modulus exceeds the
    m-th threshold and fills up with threshold-tied indices; with ties the
    natural ordering picks just one of them.
    """
    rho = greedy_ordering(x)
    s = len(rho)
    m = min(m, s)
    if m == 0 or m == s:
        return norm_of(N, greedy_residual(x, m))
    theta = abs(x[rho[m - 1]])
    above = [j for j in rho if abs(x[j]) > theta]
    tied = [j for j in rho if abs(x[j]) == theta]
    need = m - len(above)
    best = None
    for extra in itertools.combinations(tied, need):
        kept = [j for j in support(x) if j not in above and j not in extra]
        val = norm_of(N, project(x, kept))
        if best is None or val < best:
            best = val
    return best
