"""Certified computations of greedy-type constants.

Every search over an instance family returns a Certificate packaging the
extremal value together with the witness realizing it and a description of
the family searched.  Values over infinite families are lower bounds by
construction; a certificate is re-verified at build time by evaluating its
witness through the norm evaluators.
"""

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .greedy import greedy_approx, greedy_residual, sigma_tilde
from .norms import norm_of, signedsup_norm
from .polyhedral import dual_norm
from .rationals import decimal_str, format_rational, is_exact
from .vectors import SparseVector, project, support
from .weights import tail_limit


@dataclass(frozen=True)
class Certificate:
    """A computed constant with its witness and search-family description."""

    constant_kind: str
    value: object
    witness: dict
    family: object
    exact: bool
    bound_kind: str  # "lower_bound" | "exact_over_family"
    citations: tuple = field(default_factory=tuple)

    def to_json(self):
        def render(v):
            if isinstance(v, SparseVector):
                return v.to_json()
            if is_exact(v):
                return format_rational(v)
            if isinstance(v, (tuple, list, set, frozenset)):
                return [render(u) for u in v]
            if isinstance(v, dict):
                return {str(k): render(u) for k, u in v.items()}
            if isinstance(v, str):
                return v
            return decimal_str(v)

        return {
            "kind": self.constant_kind,
            "value": format_rational(self.value) if is_exact(self.value) else decimal_str(self.value),
            "witness": render(self.witness),
            "family": render(self.family),
            "exact": self.exact,
            "bound_kind": self.bound_kind,
            "citations": list(self.citations),
        }


def suppression_ratio(N, f, A):
    """|S_A f| / |f| for nonzero f."""
    if not f:
        raise ValueError("suppression ratio of the zero vector is undefined")
    return norm_of(N, project(f, A)) / norm_of(N, f)


def lattice_ratio(N, f, g):
    """|f| / |g| for vectors with identical coordinate moduli."""
    if not g:
        raise ValueError("ratio against the zero vector is undefined")
    if support(f) != support(g) or any(abs(f[j]) != abs(g[j]) for j in support(g)):
        raise ValueError("f and g must share their modulus pattern")
    return norm_of(N, f) / norm_of(N, g)


def property_a_check(N, f, A, B, eps, delta):
    """Exact symmetry-for-largest-coefficients test on one instance.

    Requires max |f_j| <= 1, |A| <= |B| finite, and A, B, supp(f) pairwise
    disjoint.  Returns (passed, margin) for
        |sum_eps e_A + f|  <=  |sum_delta e_B + f|,
    margin = right side minus left side.
    """
    A = sorted(set(A))
    B = sorted(set(B))
    eps = list(eps)
    delta = list(delta)
    supp = support(f)
    if f.linf() > 1:
        raise ValueError("invalid instance: coefficients of f must be <= 1 in modulus")
    if len(A) > len(B):
        raise ValueError("invalid instance: need |A| <= |B|")
    if set(A) & set(B) or set(A) & supp or set(B) & supp:
        raise ValueError("invalid instance: A, B, supp(f) must be disjoint")
    lhs = norm_of(N, SparseVector.signed_indicator(A, eps) + f)
    rhs = norm_of(N, SparseVector.signed_indicator(B, delta) + f)
    margin = rhs - lhs
    return margin >= 0, margin


DEFAULT_GRID_VALUES = (
    Fraction(1), Fraction(-1),
    Fraction(2, 3), Fraction(-2, 3),
    Fraction(1, 2), Fraction(-1, 2),
    Fraction(1, 3), Fraction(-1, 3),
    Fraction(1, 4), Fraction(-1, 4),
)


@dataclass(frozen=True)
class SearchGrid:
    """Finite family of (vector, projection set) suppression instances.

    Supports of size up to `max_support` inside `window`, coordinates drawn
    from `values`, all projection subsets of the support.
    """

    max_support: int = 3
    window: tuple = tuple(range(1, 9))
    values: tuple = DEFAULT_GRID_VALUES

    def instances(self):
        for size in range(1, self.max_support + 1):
            for supp in itertools.combinations(self.window, size):
                for coords in itertools.product(self.values, repeat=size):
                    f = SparseVector(dict(zip(supp, coords)))
                    for r in range(size + 1):
                        for A in itertools.combinations(supp, r):
                            yield f, A

    def describe(self):
        return {
            "kind": "grid",
            "max_support": self.max_support,
            "window": list(self.window),
            "values": [format_rational(v) for v in self.values],
        }


def ks_lower_bound(N, family):
    """Best suppression ratio over a finite family, as a certificate.

    `family` is a SearchGrid or an explicit iterable of (f, A) pairs.  The
    true suppression constant is a sup over the whole space, so the result
    is a lower bound.
    """
    if isinstance(family, SearchGrid):
        instances = family.instances()
        description = family.describe()
    else:
        instances = list(family)
        if not instances:
            raise ValueError("empty instance family")
        description = {"kind": "explicit", "count": len(instances)}
    best = None
    best_f = best_A = None
    exact = True
    for f, A in instances:
        ratio = suppression_ratio(N, f, A)
        exact = exact and is_exact(ratio)
        if best is None or ratio > best:
            best = ratio
            best_f, best_A = f, tuple(sorted(A))
    if best is None:
        raise ValueError("empty instance family")
    # self-verification: the witness must reproduce the value
    again = suppression_ratio(N, best_f, best_A)
    assert again == best
    return Certificate(
        constant_kind="suppression_unconditionality",
        value=best,
        witness={"vector": best_f, "projection_set": best_A},
        family=description,
        exact=exact,
        bound_kind="lower_bound",
        citations=("suppression ratio of a coordinate projection",),
    )


def _sign_patterns(m):
    """Sign tuples of length m with leading +1 (global flips are isometric)."""
    if m == 0:
        yield ()
        return
    for rest in itertools.product((1, -1), repeat=m - 1):
        yield (1,) + rest


def superdemocracy_report(N, m_max=8):
    """Extremal ratio of signed-indicator norms across equal sizes.

    Scans sizes m <= m_max with all sign patterns (canonical index windows;
    every norm here is invariant under support permutations).  For
    polyhedral norms the dual-basis ratio via dual_norm is scanned as well.
    """
    if m_max < 1:
        raise ValueError("m_max must be >= 1")
    is_poly = getattr(N, "kind", None) == "polyhedral"
    best = None
    best_wit = None
    exact = True
    sizes = range(1, m_max + 1)
    for m in sizes:
        norms_seen = []
        if is_poly:
            d = N.family.dimension
            if m > d:
                break
            supports = itertools.combinations(range(1, d + 1), m)
        else:
            supports = [tuple(range(1, m + 1))]
        for supp in supports:
            for signs in _sign_patterns(m):
                v = SparseVector.signed_indicator(supp, signs)
                val = norm_of(N, v)
                exact = exact and is_exact(val)
                norms_seen.append((val, supp, signs, "primal"))
        if is_poly:
            d = N.family.dimension
            for supp in itertools.combinations(range(1, d + 1), m):
                for signs in _sign_patterns(m):
                    coords = [Fraction(0)] * d
                    for j, s in zip(supp, signs):
                        coords[j - 1] = Fraction(s)
                    val = dual_norm(N.family, coords)
                    norms_seen.append((val, supp, signs, "dual"))
        for side in ("primal", "dual"):
            group = [t for t in norms_seen if t[3] == side]
            if not group:
                continue
            hi = max(group, key=lambda t: t[0])
            lo = min(group, key=lambda t: t[0])
            ratio = hi[0] / lo[0]
            if best is None or ratio > best:
                best = ratio
                best_wit = {
                    "m": m,
                    "side": side,
                    "numerator": {"support": hi[1], "signs": hi[2], "norm": hi[0]},
                    "denominator": {"support": lo[1], "signs": lo[2], "norm": lo[0]},
                }
    return Certificate(
        constant_kind="superdemocracy",
        value=best,
        witness=best_wit,
        family={"kind": "signed_indicators", "m_max": m_max},
        exact=exact,
        bound_kind="exact_over_family",
        citations=("ratio of signed indicator norms across equal sizes",),
    )


def ucc_growth(w, m_max):
    """Sign-flip growth ratios under the signed-sup norm.

    r_m = |indicator of {1..2m}| / |alternating indicator of {1..2m}|;
    unbounded growth witnesses failure of unconditionality for constant
    coefficients.  Needs a nonconstant weight with positive tail limit.
    """
    if w.is_constant:
        raise ValueError("constant weight: the alternating norm degenerates")
    if not tail_limit(w) > 0:
        raise ValueError("needs a positive tail limit")
    out = []
    for m in range(1, m_max + 1):
        plain = SparseVector.indicator(range(1, 2 * m + 1))
        alt = SparseVector.signed_indicator(
            range(1, 2 * m + 1), [1 if j % 2 else -1 for j in range(1, 2 * m + 1)]
        )
        out.append(signedsup_norm(w, plain) / signedsup_norm(w, alt))
    return out


def quasi_greedy_ratio(N, x):
    """max over m of |G_m(x)| / |x| for nonzero x."""
    if not x:
        raise ValueError("quasi-greedy ratio of the zero vector is undefined")
    total = norm_of(N, x)
    best = None
    for m in range(1, len(support(x)) + 1):
        val = norm_of(N, greedy_approx(x, m)) / total
        if best is None or val > best:
            best = val
    return best


def almost_greedy_margin(N, x):
    """sigma_tilde_m(x) - |x - G_m(x)| for m = 0 .. support size."""
    if not x:
        raise ValueError("almost-greedy margins of the zero vector are undefined")
    s = len(support(x))
    return [
        sigma_tilde(x, m, N) - norm_of(N, greedy_residual(x, m))
        for m in range(s + 1)
    ]
