"""Scalar plumbing shared by the whole package.

Two kinds of scalars circulate here:

  * exact rationals (``fractions.Fraction``), used for every number the
    package certifies exactly, and
  * high-precision binary floats (``mpmath.mpf``), used on the "approximate"
    paths where the inputs themselves are irrational (square-root tail
    values, generator-rule weights).

Rationals serialize as "p/q" strings (plain "p" when q == 1).  The working
precision of the approximate paths is controlled by the environment variable
GREEDYBENCH_PRECISION_BITS (default 256).
"""

import os
from fractions import Fraction

import mpmath

DEFAULT_PRECISION_BITS = 256


def precision_bits():
    """Working precision for irrational paths, from the environment."""
    raw = os.environ.get("GREEDYBENCH_PRECISION_BITS", "")
    try:
        bits = int(raw)
    except ValueError:
        bits = DEFAULT_PRECISION_BITS
    if bits <= 0:
        bits = DEFAULT_PRECISION_BITS
    return bits


def workprec():
    """Context manager pinning mpmath to the configured precision."""
    return mpmath.workprec(precision_bits())


def parse_rational(text):
    """Parse "p/q" or "p" into a Fraction.  Accepts ints unchanged."""
    if isinstance(text, int):
        return Fraction(text)
    if isinstance(text, Fraction):
        return text
    s = str(text).strip()
    if "/" in s:
        num, den = s.split("/", 1)
        return Fraction(int(num.strip()), int(den.strip()))
    return Fraction(int(s))


def format_rational(x):
    """Render a Fraction (or int) as "p/q", or "p" for integers."""
    f = Fraction(x)
    if f.denominator == 1:
        return str(f.numerator)
    return "%d/%d" % (f.numerator, f.denominator)


def is_exact(x):
    """True for scalars that take the exact-arithmetic path."""
    return isinstance(x, (int, Fraction))


def to_mpf(x):
    """Convert Fraction/int/mpf to mpf at the current working precision."""
    if isinstance(x, Fraction):
        return mpmath.mpf(x.numerator) / x.denominator
    return mpmath.mpmathify(x)


def as_scalar(x):
    """Normalize a user-supplied coordinate: int -> Fraction, else as-is."""
    if isinstance(x, bool):
        raise TypeError("bool is not a coordinate value")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, (Fraction, mpmath.mpf)):
        return x
    raise TypeError("expected Fraction, int, or mpf, got %r" % (type(x),))


def decimal_str(x, digits=15):
    """Decimal rendering at the given number of significant digits."""
    if isinstance(x, (int, Fraction)):
        return mpmath.nstr(to_mpf(x), digits)
    return mpmath.nstr(x, digits)
