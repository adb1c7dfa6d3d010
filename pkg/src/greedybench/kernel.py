"""Backend selection and scaling for the norm kernels.

The hot routines (subset enumeration for the combined norm, injection
enumeration for the brute-force oracles) exist twice: compiled Cython over
C integers (`greedybench._kernel`) and pure Python over arbitrary-precision
ints (`greedybench._kernel_py`).  Results are bit-identical; the compiled
core is picked at import when available and its integer caps allow, with a
per-call fallback otherwise.  Set GREEDYBENCH_PURE_PYTHON=1 to force the
pure backend.

Exact inputs are scaled to integers here (values by the lcm of their
denominators, weights likewise) and results are returned as Fractions.
Approximate (mpf) inputs always run on the pure backend, which is
duck-typed.
"""

import math
import os
from fractions import Fraction

from . import _kernel_py
from .rationals import to_mpf, workprec

try:
    from . import _kernel as _compiled
except ImportError:
    _compiled = None

if os.environ.get("GREEDYBENCH_PURE_PYTHON"):
    _compiled = None

# Caps under which the compiled kernel's 64-bit intermediates cannot overflow.
_MAG_LIMIT = 1 << 20
_COUNT_LIMIT = 32
_BRUTE_LIMIT = 12
_WINDOW_LIMIT = 20
_SLOT_LIMIT = 64

# Above this many non-forced support entries, dw_exact's "auto" method
# switches from exhaustive E-enumeration to the signature scan.
FULL_ENUM_MAX_FREE = 14


def backend_name():
    return "compiled" if _compiled is not None else "python"


def has_compiled():
    return _compiled is not None


def _scale_values(values):
    den = math.lcm(*(v.denominator for v in values)) if values else 1
    return [int(v * den) for v in values], den


def _scale_weight(w):
    dens = [x.denominator for x in w.prefix] + [w.tail.denominator]
    den = math.lcm(*dens)
    return [int(x * den) for x in w.prefix], int(w.tail * den), den


def _fits(ints, wpre, wtail, nslots=0):
    if _compiled is None:
        return False
    if len(ints) > _COUNT_LIMIT or len(wpre) > _COUNT_LIMIT:
        return False
    if nslots > _SLOT_LIMIT:
        return False
    if any(v > _MAG_LIMIT or v < -_MAG_LIMIT for v in ints):
        return False
    if wtail > _MAG_LIMIT or any(x > _MAG_LIMIT for x in wpre):
        return False
    return True


def _mpf_weight_table(w, length):
    """(wpre, wtail, winf) as mpf covering slots 1..length."""
    if w.is_generator:
        pre = [w.entry(j) for j in range(1, length + 1)]
        winf = to_mpf(w.limit)
        return pre, winf, winf
    pre = [to_mpf(x) for x in w.prefix]
    tail = to_mpf(w.tail)
    return pre, tail, tail


# -- exact entry points (Fractions in and out) ------------------------------


def phi2_exact(w, off_values, n):
    wpre, wtail, dw = _scale_weight(w)
    vals, dv = _scale_values(off_values)
    impl = _compiled if _fits(vals, wpre, wtail, nslots=n + len(vals)) and n <= _SLOT_LIMIT else _kernel_py
    raw = impl.phi2_closed(vals, n, wpre, wtail, wtail)
    return Fraction(raw, dw * dv)


def dw_exact(w, values, method="auto"):
    if not values:
        return Fraction(0)
    wpre, wtail, dw = _scale_weight(w)
    vals, dv = _scale_values(values)
    if method == "auto":
        maxabs = max(abs(v) for v in vals)
        free = sum(1 for v in vals if abs(v) < maxabs)
        method = "enumerate" if free <= FULL_ENUM_MAX_FREE else "signature"
    impl = _compiled if _fits(vals, wpre, wtail) else _kernel_py
    if method == "enumerate":
        num, den = impl.dw_full(vals, wpre, wtail, wtail)
    elif method == "signature":
        num, den = impl.dw_signature(vals, wpre, wtail, wtail)
    else:
        raise ValueError("unknown method %r" % (method,))
    return Fraction(num, den * dw * dv)


def phi2_brute_exact(w, off_values, n, horizon):
    wpre, wtail, dw = _scale_weight(w)
    vals, dv = _scale_values(off_values)
    use_compiled = (
        _fits(vals, wpre, wtail, nslots=horizon)
        and len(vals) <= _BRUTE_LIMIT
    )
    impl = _compiled if use_compiled else _kernel_py
    raw = impl.phi2_brute(vals, n, wpre, wtail, horizon)
    return Fraction(raw, dw * dv)


def dw_brute_exact(w, items, e_window, pad=0):
    idxs = [i for i, _ in items]
    wpre, wtail, dw = _scale_weight(w)
    vals, dv = _scale_values([v for _, v in items])
    use_compiled = (
        _fits(vals, wpre, wtail, nslots=len(vals) + len(wpre) + pad + e_window)
        and len(vals) <= _BRUTE_LIMIT
        and e_window <= _WINDOW_LIMIT
    )
    impl = _compiled if use_compiled else _kernel_py
    num, den = impl.dw_brute(idxs, vals, e_window, wpre, wtail, pad)
    return Fraction(num, den * dw * dv)


# -- approximate entry points (mpf in and out) -------------------------------


def phi2_approx(w, off_values, n):
    with workprec():
        vals = [to_mpf(v) for v in off_values]
        wpre, wtail, winf = _mpf_weight_table(w, n + len(vals))
        return _kernel_py.phi2_closed(vals, n, wpre, wtail, winf)


def dw_approx(w, values, method="auto"):
    with workprec():
        vals = [to_mpf(v) for v in values]
        if not vals:
            return to_mpf(0)
        wpre, wtail, winf = _mpf_weight_table(w, len(vals))
        if method == "auto":
            maxabs = max(abs(v) for v in vals)
            free = sum(1 for v in vals if abs(v) < maxabs)
            method = "enumerate" if free <= FULL_ENUM_MAX_FREE else "signature"
        if method == "enumerate":
            num, den = _kernel_py.dw_full(vals, wpre, wtail, winf)
        elif method == "signature":
            num, den = _kernel_py.dw_signature(vals, wpre, wtail, winf)
        else:
            raise ValueError("unknown method %r" % (method,))
        return num / den
