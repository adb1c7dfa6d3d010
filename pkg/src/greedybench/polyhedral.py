"""Polyhedral norms on R^d: max of finitely many linear functionals in
absolute value, exact dual norms via linear programming, and the named
finite-dimensional families used by the reproduction scenarios:

  * bad_dual(d): the norm max over permutations pi of
        |a_{pi(1)} + a_{pi(d)}/3| + |a_{pi(2)}| + ... + |a_{pi(d-1)}|,
    whose supporting functionals have one coordinate of modulus 1/3 tied in
    sign to a modulus-1 partner coordinate.
  * hexagon(alpha): max{alpha|a_1|, alpha|a_2|, |a_1 + a_2|}, whose unit
    ball is a hexagon with suppression constant 1/alpha.
  * pa_finite(d, w): the restriction of the combined weighted norm to
    vectors supported in {1..d}, expressed as an explicit functional family.

The dual norm of x* is computed as the gauge of the family's symmetric
convex hull:  min sum |lambda| s.t. sum lambda_i u_i = x*,  which by LP
duality equals max{ x*(x) : |u(x)| <= 1 for all u }.  Infeasibility of the
gauge program is exactly unboundedness of that maximum, i.e. a family that
fails to span.
"""

import itertools
from dataclasses import dataclass
from fractions import Fraction

from . import simplex
from .rationals import format_rational, is_exact, parse_rational, to_mpf


def _canonical_sign(vec):
    for x in vec:
        if x > 0:
            return vec
        if x < 0:
            return tuple(-y for y in vec)
    return vec


def _rank(rows, d):
    """Rank of a list of length-d rational vectors (Gaussian elimination)."""
    mat = [list(r) for r in rows]
    rank = 0
    for col in range(d):
        pivot = None
        for i in range(rank, len(mat)):
            if mat[i][col] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        prow = mat[rank]
        for i in range(len(mat)):
            if i != rank and mat[i][col] != 0:
                factor = mat[i][col] / prow[col]
                mat[i] = [a - factor * b for a, b in zip(mat[i], prow)]
        rank += 1
        if rank == len(mat):
            break
    return rank


@dataclass(frozen=True)
class FunctionalFamily:
    """A finite set of supporting functionals defining a polyhedral norm.

    Functionals are stored deduplicated up to global sign (evaluation takes
    absolute values, so u and -u are the same constraint).  The family must
    span the dual, i.e. have rank equal to the dimension; this makes the
    induced max positive on every nonzero vector.
    """

    dimension: int
    functionals: tuple

    def __init__(self, dimension, functionals):
        d = int(dimension)
        if d < 1:
            raise ValueError("dimension must be positive")
        seen = set()
        cleaned = []
        for u in functionals:
            vec = tuple(Fraction(x) for x in u)
            if len(vec) != d:
                raise ValueError("functional has wrong length")
            vec = _canonical_sign(vec)
            if all(x == 0 for x in vec):
                continue
            if vec not in seen:
                seen.add(vec)
                cleaned.append(vec)
        if not cleaned:
            raise ValueError("family must be nonempty")
        cleaned.sort()
        if _rank(cleaned, d) != d:
            raise ValueError("family does not span the dual (rank < d)")
        object.__setattr__(self, "dimension", d)
        object.__setattr__(self, "functionals", tuple(cleaned))

    def __len__(self):
        return len(self.functionals)

    def to_json(self):
        return {
            "d": self.dimension,
            "functionals": [[format_rational(x) for x in u] for u in self.functionals],
        }

    @classmethod
    def from_json(cls, obj):
        return cls(obj["d"], [[parse_rational(x) for x in u] for u in obj["functionals"]])


def polyhedral_norm(family, coords):
    """max_u |<u, x>| over the family.

    Exact coordinates give a Fraction; any inexact coordinate switches the
    whole evaluation to mpf.
    """
    coords = list(coords)
    if len(coords) != family.dimension:
        raise ValueError(
            "vector has dimension %d, family needs %d" % (len(coords), family.dimension)
        )
    if all(is_exact(x) for x in coords):
        zero = Fraction(0)
    else:
        coords = [to_mpf(x) for x in coords]
        zero = to_mpf(0)
    best = zero
    for u in family.functionals:
        val = sum((c * x for c, x in zip(u, coords)), zero)
        if val < 0:
            val = -val
        if val > best:
            best = val
    return best


def dual_norm(family, coords):
    """Exact dual norm of the functional with the given coordinates.

    Value of max{ <coords, x> : |<u, x>| <= 1 for all u in the family },
    computed through the equivalent gauge program over the family.
    """
    coords = [Fraction(x) for x in coords]
    d = family.dimension
    if len(coords) != d:
        raise ValueError("functional has dimension %d, family needs %d" % (len(coords), d))
    funcs = family.functionals
    nf = len(funcs)
    A = [[funcs[i][r] for i in range(nf)] + [-funcs[i][r] for i in range(nf)] for r in range(d)]
    b = coords
    c = [Fraction(1)] * (2 * nf)
    status, value, _ = simplex.solve_lp(A, b, c)
    if status != simplex.OPTIMAL:
        raise ValueError("family does not span: the polytope maximum is unbounded")
    return value


# -- named families ----------------------------------------------------------


def bad_dual_raw_functionals(d):
    """Raw generator for the bad_dual family, duplicates included.

    One coordinate pair (partner, third-coordinate) carries (e, e/3) for a
    shared sign e; every other coordinate carries a free sign.
    """
    if d < 3:
        raise ValueError("bad_dual needs d >= 3")
    third = Fraction(1, 3)
    for partner, small in itertools.permutations(range(d), 2):
        middles = [j for j in range(d) if j != partner and j != small]
        for signs in itertools.product((1, -1), repeat=d - 1):
            vec = [Fraction(0)] * d
            e1 = signs[0]
            vec[partner] = Fraction(e1)
            vec[small] = e1 * third
            for s, j in zip(signs[1:], middles):
                vec[j] = Fraction(s)
            yield tuple(vec)


def bad_dual_family(d):
    return FunctionalFamily(d, bad_dual_raw_functionals(d))


def hexagon_family(alpha):
    alpha = Fraction(alpha)
    if not 0 < alpha < 1:
        raise ValueError("alpha must lie in (0, 1)")
    return FunctionalFamily(2, [(alpha, Fraction(0)), (Fraction(0), alpha), (Fraction(1), Fraction(1))])


def pa_finite_family(d, w):
    """Functional family reproducing the combined weighted norm on R^d.

    Enumerates every nonempty E inside {1..d}: coordinates in E carry
    +-(s_n/n), coordinates outside carry one global sign times an injective
    assignment of the slot weights after n (the constant tail value may
    repeat).
    """
    if d < 3:
        raise ValueError("pa_finite needs d >= 3")
    if not w.is_exact:
        raise ValueError("pa_finite needs an exact weight")
    indices = range(d)
    funcs = []
    p = w.prefix_len
    for n in range(1, d + 1):
        scale = w.psum(n) / n
        for E in itertools.combinations(indices, n):
            comp = [j for j in indices if j not in E]
            slot_values = [w.entry(j) for j in range(n + 1, p + 1)]
            for assigned in _tail_assignments(len(comp), slot_values, w.tail):
                for sigma in (1, -1):
                    base = [Fraction(0)] * d
                    for c, val in zip(comp, assigned):
                        base[c] = sigma * val
                    for signs in itertools.product((1, -1), repeat=n):
                        vec = list(base)
                        for s, j in zip(signs, E):
                            vec[j] = s * scale
                        funcs.append(tuple(vec))
    return FunctionalFamily(d, funcs)


def _tail_assignments(m, slot_values, tail):
    """All value tuples for m coordinates: distinct listed slots or the tail."""
    if m == 0:
        yield ()
        return
    options = list(range(len(slot_values) + 1))  # index len() means "tail"
    for combo in itertools.product(options, repeat=m):
        used = [c for c in combo if c < len(slot_values)]
        if len(used) != len(set(used)):
            continue
        yield tuple(slot_values[c] if c < len(slot_values) else tail for c in combo)


def family_for(kind, **params):
    """Build one of the named families: bad_dual(d), hexagon(alpha),
    pa_finite(d, weight)."""
    if kind == "bad_dual":
        return bad_dual_family(params["d"])
    if kind == "hexagon":
        return hexagon_family(params["alpha"])
    if kind == "pa_finite":
        return pa_finite_family(params["d"], params["weight"])
    raise ValueError("unknown family kind %r" % (kind,))
