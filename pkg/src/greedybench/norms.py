"""The weighted sequence norms.

For a weight w with primitive sums s_n and a finitely supported f, the
central quantity is, for each finite index set E with |E| = n,

    concentration part   (s_n/n) * sum_{j in E} |f_j|        (0 for E empty)
    off-part supremum    sup over injective placements of the remaining
                         coordinates on slots n+1, n+2, ... of the absolute
                         weighted sum

and the combined norm is the sup of their sum over all finite E.  The sup
can be restricted to sets squeezed between the max-modulus set and the
support (validated computationally against the unrestricted brute force in
the oracle tests).  Alongside it live the classical rearrangement norms:

    lorentz        sum_j b_j w_j
    marcinkiewicz  max_n (s_n/n) * (b_1 + ... + b_n)

with (b_j) the nonincreasing rearrangement, and the signed-sup seminorm:
the off-part supremum at E = empty, which for a constant weight degenerates
to |sum of coordinates| (a seminorm with nontrivial kernel).

Exact inputs (rational weight and coordinates) give Fractions; any mpf
input switches the evaluation to high-precision floats.
"""

from dataclasses import dataclass
from fractions import Fraction

from . import kernel
from .polyhedral import FunctionalFamily, polyhedral_norm
from .rationals import to_mpf, workprec
from .vectors import SparseVector, nonincreasing_rearrangement
from .weights import Weight


def _is_exact_pair(w, f):
    return w.is_exact and f.is_exact


def _validate_E(E):
    E = frozenset(int(j) for j in E)
    if any(j < 1 for j in E):
        raise ValueError("indices are 1-based")
    return E


def phi1(w, E, f):
    """Concentration part (s_n/n) * sum_{j in E} |f_j|; 0 for empty E."""
    E = _validate_E(E)
    n = len(E)
    if n == 0:
        return Fraction(0)
    total = sum((abs(f[j]) for j in E), Fraction(0))
    if _is_exact_pair(w, f):
        return w.psum(n) * total / n
    with workprec():
        return to_mpf(w.psum(n)) * to_mpf(total) / n


def phi2(w, E, f):
    """Off-E supremum over injective slot placements (closed form)."""
    E = _validate_E(E)
    off = [v for j, v in f.items() if j not in E]
    if _is_exact_pair(w, f):
        return kernel.phi2_exact(w, off, len(E))
    return kernel.phi2_approx(w, off, len(E))


@dataclass(frozen=True)
class PhiBreakdown:
    """One E's contribution: concentration + off-part, and their sum."""

    E: frozenset
    phi1: object
    phi2: object

    @property
    def phi(self):
        return self.phi1 + self.phi2


def phi_breakdown(w, E, f):
    E = _validate_E(E)
    return PhiBreakdown(E, phi1(w, E, f), phi2(w, E, f))


def dw_norm(w, f, method="auto"):
    """The combined norm: sup over finite E of the two-part functional.

    `method` picks the search over admissible E: "enumerate" scans every set
    between the max-modulus set and the support, "signature" scans only
    per-sign-class prefixes (equivalent; cross-checked in tests), "auto"
    chooses by support size.
    """
    values = list(f.values())
    if _is_exact_pair(w, f):
        return kernel.dw_exact(w, values, method)
    return kernel.dw_approx(w, values, method)


def lorentz_norm(w, f):
    """Sum of the nonincreasing rearrangement against the weight entries."""
    b = nonincreasing_rearrangement(f)
    if _is_exact_pair(w, f):
        return sum((bj * w.entry(j + 1) for j, bj in enumerate(b)), Fraction(0))
    with workprec():
        acc = to_mpf(0)
        for j, bj in enumerate(b):
            acc += to_mpf(bj) * to_mpf(w.entry(j + 1))
        return acc


def marcinkiewicz_norm(w, f):
    """max over n of (s_n/n) times the n largest moduli summed."""
    b = nonincreasing_rearrangement(f)
    if not b:
        return Fraction(0)
    exact = _is_exact_pair(w, f)
    best = None
    acc = Fraction(0)
    with workprec():
        for n, bj in enumerate(b, start=1):
            acc = acc + (bj if exact else to_mpf(bj))
            sn = w.psum(n) if exact else to_mpf(w.psum(n))
            cand = sn * acc / n
            if best is None or cand > best:
                best = cand
    return best


def signedsup_norm(w, f):
    """The off-part supremum at E = empty (the symmetric seminorm).

    For a constant weight this is a genuine seminorm (it vanishes on
    mean-zero vectors); see signedsup_is_seminorm.
    """
    return phi2(w, (), f)


def signedsup_is_seminorm(w):
    """True when the signed-sup functional has a nontrivial kernel."""
    return w.is_constant


DW = "dw"
LORENTZ = "lorentz"
MARCINKIEWICZ = "marcinkiewicz"
SIGNEDSUP = "signedsup"
POLYHEDRAL = "polyhedral"

_WEIGHT_KINDS = (DW, LORENTZ, MARCINKIEWICZ, SIGNEDSUP)


@dataclass(frozen=True)
class NormSpec:
    """Tagged description of which norm to evaluate."""

    kind: str
    weight: Weight = None
    family: FunctionalFamily = None

    def __post_init__(self):
        if self.kind in _WEIGHT_KINDS:
            if self.weight is None:
                raise ValueError("%s norm needs a weight" % self.kind)
        elif self.kind == POLYHEDRAL:
            if self.family is None:
                raise ValueError("polyhedral norm needs a functional family")
        else:
            raise ValueError("unknown norm kind %r" % (self.kind,))

    def evaluate(self, f, method="auto"):
        if self.kind == DW:
            return dw_norm(self.weight, f, method)
        if self.kind == LORENTZ:
            return lorentz_norm(self.weight, f)
        if self.kind == MARCINKIEWICZ:
            return marcinkiewicz_norm(self.weight, f)
        if self.kind == SIGNEDSUP:
            return signedsup_norm(self.weight, f)
        return polyhedral_norm(self.family, f.coords(self.family.dimension))

    @property
    def is_seminorm(self):
        return self.kind == SIGNEDSUP and signedsup_is_seminorm(self.weight)

    def to_json(self):
        if self.kind == POLYHEDRAL:
            return {"kind": self.kind, "family": self.family.to_json()}
        return {"kind": self.kind, "weight": self.weight.to_json()}

    @classmethod
    def from_json(cls, obj):
        kind = obj["kind"]
        if kind == POLYHEDRAL:
            return cls(kind, family=FunctionalFamily.from_json(obj["family"]))
        return cls(kind, weight=Weight.from_json(obj["weight"]))


def norm_of(spec, f, method="auto"):
    """Evaluate a NormSpec (or a Weight, meaning the combined norm) on f."""
    if isinstance(spec, Weight):
        return dw_norm(spec, f, method)
    return spec.evaluate(f, method)
