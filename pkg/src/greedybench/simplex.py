"""Dense two-phase simplex over exact rationals.

Solves  min c.x  subject to  A x = b, x >= 0  with Bland's anti-cycling
rule, so termination is guaranteed and there are no numerical pivoting
concerns.  Sized for the small dense programs produced by the dual-norm
computation (a handful of rows, up to a few hundred columns).
"""

from fractions import Fraction

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


def _pivot(T, z, basis, r, col):
    piv = T[r][col]
    T[r] = [x / piv for x in T[r]]
    row_r = T[r]
    for i in range(len(T)):
        if i != r and T[i][col] != 0:
            factor = T[i][col]
            T[i] = [a - factor * b for a, b in zip(T[i], row_r)]
    if z[col] != 0:
        factor = z[col]
        for j in range(len(z)):
            z[j] = z[j] - factor * row_r[j]
    basis[r] = col


def _run(T, z, basis, allowed):
    """Bland's rule iterations until optimal or unbounded."""
    m = len(T)
    while True:
        col = -1
        for j in allowed:
            if z[j] < 0:
                col = j
                break
        if col < 0:
            return OPTIMAL
        row = -1
        best = None
        for i in range(m):
            if T[i][col] > 0:
                ratio = T[i][-1] / T[i][col]
                if best is None or ratio < best or (ratio == best and basis[i] < basis[row]):
                    best = ratio
                    row = i
        if row < 0:
            return UNBOUNDED
        _pivot(T, z, basis, row, col)


def solve_lp(A, b, c):
    """min c.x s.t. A x = b, x >= 0; returns (status, value, x)."""
    m = len(A)
    n = len(c)
    T = []
    rhs = []
    for i in range(m):
        row = [Fraction(x) for x in A[i]]
        bi = Fraction(b[i])
        if bi < 0:
            row = [-x for x in row]
            bi = -bi
        rhs.append(bi)
        T.append(row)
    # Phase I: artificial basis, minimize the artificial mass.
    total_cols = n + m
    for i in range(m):
        T[i] = T[i] + [Fraction(1) if j == i else Fraction(0) for j in range(m)] + [rhs[i]]
    basis = [n + i for i in range(m)]
    z = [Fraction(0)] * (total_cols + 1)
    for j in range(total_cols):
        col_sum = sum(T[i][j] for i in range(m))
        z[j] = (Fraction(1) if n <= j else Fraction(0)) - col_sum
    z[-1] = -sum(rhs)
    status = _run(T, z, basis, range(n))
    assert status == OPTIMAL  # bounded below by 0
    if -z[-1] != 0:
        return INFEASIBLE, None, None
    # Drive leftover artificials out of the basis; drop redundant rows.
    i = 0
    while i < len(T):
        if basis[i] >= n:
            col = -1
            for j in range(n):
                if T[i][j] != 0:
                    col = j
                    break
            if col < 0:
                del T[i]
                del basis[i]
                continue
            _pivot(T, z, basis, i, col)
        i += 1
    m = len(T)
    # Phase II on the original columns.
    c = [Fraction(x) for x in c]
    z = [Fraction(0)] * (total_cols + 1)
    for j in range(n):
        z[j] = c[j] - sum(c[basis[i]] * T[i][j] for i in range(m) if basis[i] < n)
    z[-1] = -sum(c[basis[i]] * T[i][-1] for i in range(m) if basis[i] < n)
    status = _run(T, z, basis, range(n))
    if status == UNBOUNDED:
        return UNBOUNDED, None, None
    x = [Fraction(0)] * n
    for i in range(m):
        if basis[i] < n:
            x[basis[i]] = T[i][-1]
    return OPTIMAL, -z[-1], x
