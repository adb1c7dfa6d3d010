"""Finitely supported vectors with exact coordinates, and the combinatorial
utilities the norm evaluators need: support, max-modulus set, nonincreasing
rearrangement, coordinate projections, signed indicator sums, averaging
projection.

Indices are 1-based.  Coordinates are Fractions on the exact path; mpf
coordinates are accepted and route every consumer to the approximate path.
"""

from fractions import Fraction

from .rationals import as_scalar, format_rational, is_exact, parse_rational


class SparseVector:
    """Immutable finitely supported vector, stored as index -> nonzero value."""

    __slots__ = ("_entries",)

    def __init__(self, entries=()):
        data = {}
        items = entries.items() if hasattr(entries, "items") else entries
        for idx, val in items:
            idx = int(idx)
            if idx < 1:
                raise ValueError("indices are 1-based")
            val = as_scalar(val)
            if val != 0:
                data[idx] = val
        # mixed Fraction/mpf coordinates would break ordering comparisons,
        # so one inexact coordinate turns the whole vector into mpf
        if not all(is_exact(v) for v in data.values()):
            from .rationals import to_mpf, workprec

            with workprec():
                data = {j: to_mpf(v) for j, v in data.items()}
        object.__setattr__(self, "_entries", dict(sorted(data.items())))

    def __setattr__(self, name, value):
        raise AttributeError("SparseVector is immutable")

    @classmethod
    def basis(cls, j):
        return cls({j: Fraction(1)})

    @classmethod
    def indicator(cls, indices):
        return cls({j: Fraction(1) for j in indices})

    @classmethod
    def signed_indicator(cls, indices, signs):
        indices = list(indices)
        signs = list(signs)
        if len(indices) != len(signs):
            raise ValueError("one sign per index")
        if any(s not in (1, -1) for s in signs):
            raise ValueError("signs must be +1 or -1")
        return cls({j: Fraction(s) for j, s in zip(indices, signs)})

    # -- queries ------------------------------------------------------------

    def __getitem__(self, idx):
        return self._entries.get(idx, Fraction(0))

    def __iter__(self):
        return iter(self._entries.items())

    def __len__(self):
        return len(self._entries)

    def __bool__(self):
        return bool(self._entries)

    @property
    def is_exact(self):
        return all(is_exact(v) for v in self._entries.values())

    def items(self):
        return self._entries.items()

    def values(self):
        return self._entries.values()

    def linf(self):
        return max((abs(v) for v in self._entries.values()), default=Fraction(0))

    def l1(self):
        return sum((abs(v) for v in self._entries.values()), Fraction(0))

    def coords(self, dimension):
        """Dense coordinate list (x_1, ..., x_d); support must fit."""
        if self._entries and max(self._entries) > dimension:
            raise ValueError("support exceeds dimension %d" % dimension)
        return [self[j] for j in range(1, dimension + 1)]

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, SparseVector):
            return NotImplemented
        data = dict(self._entries)
        for j, v in other.items():
            data[j] = data.get(j, 0) + v
        return SparseVector(data)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return SparseVector({j: -v for j, v in self._entries.items()})

    def __mul__(self, scalar):
        scalar = as_scalar(scalar)
        return SparseVector({j: v * scalar for j, v in self._entries.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, SparseVector):
            return NotImplemented
        return self._entries == other._entries

    def __hash__(self):
        return hash(tuple(self._entries.items()))

    def __repr__(self):
        body = ", ".join("%d: %s" % (j, v) for j, v in self._entries.items())
        return "SparseVector({%s})" % body

    # -- serialization ----------------------------------------------------------

    def to_json(self):
        from .rationals import decimal_str

        return {
            "entries": {
                str(j): format_rational(v) if is_exact(v) else decimal_str(v)
                for j, v in self._entries.items()
            }
        }

    @classmethod
    def from_json(cls, obj):
        return cls({int(j): parse_rational(v) for j, v in obj["entries"].items()})


class SignedSet:
    """A finite ordered index set with one sign in {+1, -1} per index."""

    __slots__ = ("indices", "signs")

    def __init__(self, indices, signs):
        indices = tuple(int(j) for j in indices)
        signs = tuple(int(s) for s in signs)
        if any(a >= b for a, b in zip(indices, indices[1:])):
            raise ValueError("indices must be strictly increasing")
        if indices and indices[0] < 1:
            raise ValueError("indices are 1-based")
        if len(indices) != len(signs):
            raise ValueError("one sign per index")
        if any(s not in (1, -1) for s in signs):
            raise ValueError("signs must be +1 or -1")
        object.__setattr__(self, "indices", indices)
        object.__setattr__(self, "signs", signs)

    def __setattr__(self, name, value):
        raise AttributeError("SignedSet is immutable")

    def __len__(self):
        return len(self.indices)

    def to_vector(self):
        return SparseVector.signed_indicator(self.indices, self.signs)

    def __repr__(self):
        return "SignedSet(%r, %r)" % (self.indices, self.signs)


def support(f):
    """The set of indices with a nonzero coordinate."""
    return set(f._entries)


def max_modulus_set(f):
    """Indices attaining max |coordinate|; rejects the zero vector."""
    if not f:
        raise ValueError("max-modulus set of the zero vector is undefined")
    top = f.linf()
    return {j for j, v in f.items() if abs(v) == top}


def nonincreasing_rearrangement(f):
    """Sorted |coordinates|, descending; length equals the support size."""
    return tuple(sorted((abs(v) for v in f.values()), reverse=True))


def project(f, indices):
    """Coordinate projection: keep entries with index in `indices`."""
    keep = set(indices)
    return SparseVector({j: v for j, v in f.items() if j in keep})


def average_project(f, indices):
    """Replace every coordinate in `indices` by their average over it.

    Coordinates off `indices` are zeroed; zero coordinates inside count
    toward the average.
    """
    idx = sorted(set(int(j) for j in indices))
    if not idx:
        raise ValueError("averaging set must be nonempty")
    if idx[0] < 1:
        raise ValueError("indices are 1-based")
    total = sum((f[j] for j in idx), Fraction(0))
    mean = total / len(idx)
    return SparseVector({j: mean for j in idx})
