"""Nonincreasing weight sequences w = (w_1, w_2, ...) with w_1 = 1.

A weight carries its primitive sums s_n = w_1 + ... + w_n and a tail limit
w_inf = lim_j w_j.  Two representations are supported:

  * eventually constant: an explicit prefix (w_1, ..., w_p) followed by a
    constant tail t, so w_j = t for j > p and w_inf = t.  When the prefix
    and tail are rational this is the exact form used everywhere a number
    is certified exactly.  Irrational entries (mpf) are allowed and switch
    every evaluation to the high-precision approximate path.

  * generator rule: the primitive function n -> s_n is supplied as a named
    closed-form evaluator together with a declared limit for w_j.  These
    always evaluate approximately and are validated at construction by
    sampling monotonicity and positivity up to a horizon.
"""

from fractions import Fraction

import mpmath

from .rationals import (
    as_scalar,
    format_rational,
    is_exact,
    parse_rational,
    to_mpf,
    workprec,
)

GENERATOR_VALIDATION_HORIZON = 10_000

# Named primitive-weight rules available to generator weights.  Each maps a
# positive integer n to s_n; entries w_j are recovered as s_j - s_{j-1}.
GENERATOR_RULES = {
    "sqrt_primitive": lambda n: mpmath.sqrt(n),
}


class Weight:
    """A nonincreasing positive weight sequence with w_1 = 1."""

    __slots__ = ("prefix", "tail", "generator", "limit", "_psums")

    def __init__(self, prefix, tail):
        """Eventually-constant weight: entries `prefix`, then constant `tail`.

        `prefix` must be nonempty with prefix[0] == 1, nonincreasing, and
        positive; `tail` must satisfy 0 < tail <= prefix[-1].
        """
        prefix = tuple(as_scalar(x) for x in prefix)
        tail = as_scalar(tail)
        if not prefix:
            raise ValueError("weight prefix must be nonempty")
        # mixed Fraction/mpf entries would break ordering comparisons, so an
        # inexact entry anywhere turns the whole weight into mpf
        if not (all(is_exact(x) for x in prefix) and is_exact(tail)):
            with workprec():
                prefix = tuple(to_mpf(x) for x in prefix)
                tail = to_mpf(tail)
        if prefix[0] != 1:
            raise ValueError("weights are normalized to w_1 = 1")
        for a, b in zip(prefix, prefix[1:]):
            if b > a:
                raise ValueError("weight must be nonincreasing")
        if tail > prefix[-1]:
            raise ValueError("tail exceeds last prefix entry")
        if tail <= 0 or any(x <= 0 for x in prefix):
            raise ValueError("weight entries must be positive")
        # Drop prefix entries already equal to the tail; canonical form makes
        # equality and serialization predictable.
        p = len(prefix)
        while p > 1 and prefix[p - 1] == tail:
            p -= 1
        object.__setattr__(self, "prefix", prefix[:p])
        object.__setattr__(self, "tail", tail)
        object.__setattr__(self, "generator", None)
        object.__setattr__(self, "limit", tail)
        psums = []
        acc = prefix[0] * 0
        for x in self.prefix:
            acc = acc + x
            psums.append(acc)
        object.__setattr__(self, "_psums", tuple(psums))

    def __setattr__(self, name, value):
        raise AttributeError("Weight is immutable")

    @classmethod
    def from_generator(cls, name, limit, horizon=GENERATOR_VALIDATION_HORIZON):
        """Weight given by a named primitive rule s_n, with a declared limit.

        Validated by sampling: entries must be positive and nonincreasing up
        to `horizon`, and w_1 must equal 1.
        """
        if name not in GENERATOR_RULES:
            raise ValueError("unknown generator rule %r" % (name,))
        self = object.__new__(cls)
        object.__setattr__(self, "prefix", None)
        object.__setattr__(self, "tail", None)
        object.__setattr__(self, "generator", name)
        object.__setattr__(self, "limit", as_scalar(limit))
        object.__setattr__(self, "_psums", None)
        rule = GENERATOR_RULES[name]
        with workprec():
            if abs(rule(1) - 1) > mpmath.mpf(2) ** (-40):
                raise ValueError("generator weight must have w_1 = 1")
            prev = None
            step = max(1, horizon // 512)
            checkpoints = list(range(1, min(horizon, 64) + 1))
            checkpoints += list(range(64 + step, horizon + 1, step))
            s_prev = mpmath.mpf(0)
            n_prev = 0
            for n in checkpoints:
                s_n = rule(n)
                w_avg = (s_n - s_prev) / (n - n_prev)
                if w_avg <= 0:
                    raise ValueError("generator weight not positive near n=%d" % n)
                if prev is not None and w_avg > prev * (1 + mpmath.mpf(2) ** (-30)):
                    raise ValueError("generator weight not nonincreasing near n=%d" % n)
                prev = w_avg
                s_prev, n_prev = s_n, n
            if prev < to_mpf(self.limit) * (1 - mpmath.mpf(2) ** (-30)):
                raise ValueError("sampled entries fall below the declared limit")
        return self

    # -- basic queries ----------------------------------------------------

    @property
    def is_generator(self):
        return self.generator is not None

    @property
    def is_exact(self):
        """True when every evaluation of this weight is exact rational."""
        if self.is_generator:
            return False
        return all(is_exact(x) for x in self.prefix) and is_exact(self.tail)

    @property
    def is_constant(self):
        return not self.is_generator and len(self.prefix) == 1 and self.tail == 1

    @property
    def prefix_len(self):
        return 1 if self.is_generator else len(self.prefix)

    def entry(self, j):
        """w_j (1-based)."""
        if j < 1:
            raise ValueError("indices are 1-based")
        if self.is_generator:
            rule = GENERATOR_RULES[self.generator]
            with workprec():
                return rule(j) - (rule(j - 1) if j > 1 else 0)
        if j <= len(self.prefix):
            return self.prefix[j - 1]
        return self.tail

    def psum(self, n):
        """Primitive weight s_n = w_1 + ... + w_n; s_0 = 0."""
        if n < 0:
            raise ValueError("n must be nonnegative")
        if n == 0:
            return Fraction(0)
        if self.is_generator:
            with workprec():
                return GENERATOR_RULES[self.generator](n)
        p = len(self.prefix)
        if n <= p:
            return self._psums[n - 1]
        return self._psums[p - 1] + (n - p) * self.tail

    # -- serialization ----------------------------------------------------

    def to_json(self):
        if self.is_generator:
            return {"generator": self.generator, "limit": format_rational(self.limit)}
        if not self.is_exact:
            raise ValueError("only exact or generator-rule weights serialize to JSON")
        return {
            "prefix": [format_rational(x) for x in self.prefix],
            "tail": format_rational(self.tail),
        }

    @classmethod
    def from_json(cls, obj):
        if "generator" in obj:
            return cls.from_generator(obj["generator"], parse_rational(obj["limit"]))
        return cls([parse_rational(x) for x in obj["prefix"]], parse_rational(obj["tail"]))

    def __eq__(self, other):
        if not isinstance(other, Weight):
            return NotImplemented
        return (self.prefix, self.tail, self.generator, self.limit) == (
            other.prefix,
            other.tail,
            other.generator,
            other.limit,
        )

    def __hash__(self):
        return hash((self.prefix, self.tail, self.generator, self.limit))

    def __repr__(self):
        if self.is_generator:
            return "Weight.from_generator(%r, %s)" % (self.generator, self.limit)
        return "Weight(%s, tail=%s)" % (list(self.prefix), self.tail)


def primitive_weight(w, n):
    """s_n = sum of the first n entries of w (n >= 1)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return w.psum(n)


def tail_limit(w):
    """The declared limit w_inf of the weight entries."""
    return w.limit


def flat_tail_weight(omega):
    """The weight (1, omega, omega, ...)."""
    return Weight([Fraction(1)], omega)
