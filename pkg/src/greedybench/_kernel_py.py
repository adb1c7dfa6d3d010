"""Pure-Python kernels for the weighted-norm evaluators and their oracles.

This module is the fallback backend: `greedybench._kernel` (compiled) mirrors
these routines one-for-one over C integers.  Everything here is duck-typed
over the scalar type of the inputs, so the same code serves

  * the exact path: values and weights pre-scaled to plain ints (the caller
    divides the returned numerators by its scale factors), and
  * the approximate path: mpf values and weights, unscaled.

Inputs describe a weight by a finite table plus a constant tail:

  wpre   entries w_1 .. w_p (the table),
  wtail  value of w_j for every j > p,
  winf   limit of the entries (equals wtail for eventually constant
         weights; generator-rule weights pass a table long enough that the
         tail is never touched together with their declared limit).

The two-branch closed form for the off-E supremum places the descending
positive part on the slots right after |E| and charges the opposing part at
the tail limit; its correctness is not assumed here but gated by the
brute-force enumerations below (see tests).
"""


def _psum(n, wpre_sums, wtail):
    """s_n from the table prefix sums, extended by the constant tail."""
    p = len(wpre_sums)
    if n <= 0:
        return 0
    if n <= p:
        return wpre_sums[n - 1]
    return wpre_sums[p - 1] + (n - p) * wtail


def _prefix_sums(arr):
    out = []
    acc = 0
    for x in arr:
        acc = acc + x
        out.append(acc)
    return out


def _weight_at(j, wpre, wtail):
    """w_j, 1-based."""
    if j <= len(wpre):
        return wpre[j - 1]
    return wtail


def _dot_slots(gains, start, n, wpre, wtail):
    """Sum of gains[start:] placed on slots n+1, n+2, ... in order."""
    acc = 0
    p = len(wpre)
    for k in range(start, len(gains)):
        j = n + 1 + (k - start)
        if j > p:
            # all remaining slots carry the constant tail value
            rest = 0
            for t in range(k, len(gains)):
                rest = rest + gains[t]
            return acc + wtail * rest
        acc = acc + gains[k] * wpre[j - 1]
    return acc


def phi2_closed(off_vals, n, wpre, wtail, winf):
    """Two-branch closed form for the off-E supremum, |E| = n.

    Branch for global sign s: descending list of the s-positive values on
    slots n+1, n+2, ..., minus winf times the total mass of the s-negative
    values.  Returns the larger branch (never below 0).
    """
    pos = sorted((v for v in off_vals if v > 0), reverse=True)
    neg = sorted((-v for v in off_vals if v < 0), reverse=True)
    pos_total = sum(pos) if pos else 0
    neg_total = sum(neg) if neg else 0
    b_plus = _dot_slots(pos, 0, n, wpre, wtail) - winf * neg_total
    b_minus = _dot_slots(neg, 0, n, wpre, wtail) - winf * pos_total
    best = b_plus if b_plus >= b_minus else b_minus
    return best if best >= 0 else 0


def dw_full(vals, wpre, wtail, winf):
    """Exhaustive E-enumeration of the combined norm over the support.

    `vals` are the nonzero coordinates (order irrelevant).  Enumerates every
    E between the max-modulus set and the full support and returns the best
    Phi value as a pair (num, den) meaning num/den.
    """
    if not vals:
        return 0, 1
    maxabs = max(abs(v) for v in vals)
    forced = [v for v in vals if abs(v) == maxabs]
    free = [v for v in vals if abs(v) < maxabs]
    k = len(free)
    nf = len(forced)
    sa_forced = sum(abs(v) for v in forced)
    sel_forced = sum(forced)
    total_signed = sel_forced + (sum(free) if free else 0)
    p = len(wpre)
    wsums = _prefix_sums(wpre)
    flat = wtail == winf
    best_num = None
    best_den = 1
    for mask in range(1 << k):
        n = nf
        sa = sa_forced
        sel = sel_forced
        off = []
        for t in range(k):
            if mask >> t & 1:
                v = free[t]
                n += 1
                sa = sa + (v if v > 0 else -v)
                sel = sel + v
            else:
                off.append(free[t])
        if flat and n >= p:
            d = total_signed - sel
            p2 = wtail * (d if d >= 0 else -d)
        else:
            p2 = phi2_closed(off, n, wpre, wtail, winf)
        num = _psum(n, wsums, wtail) * sa + n * p2
        if best_num is None or num * best_den > best_num * n:
            best_num, best_den = num, n
    return best_num, best_den


def dw_signature(vals, wpre, wtail, winf):
    """Fast path for the same supremum via sign-class signatures.

    For a fixed number of positive and negative coordinates inside E, the
    best E keeps the largest moduli of each sign; so only (i, j) signatures
    need scanning.  Equivalent to dw_full (cross-checked in tests, and both
    gated by dw_brute).
    """
    if not vals:
        return 0, 1
    pos = sorted((v for v in vals if v > 0), reverse=True)
    neg = sorted((-v for v in vals if v < 0), reverse=True)
    maxabs = 0
    if pos and pos[0] > maxabs:
        maxabs = pos[0]
    if neg and neg[0] > maxabs:
        maxabs = neg[0]
    pmin = sum(1 for v in pos if v == maxabs)
    mmin = sum(1 for v in neg if v == maxabs)
    pp = [0] + _prefix_sums(pos)
    np_ = [0] + _prefix_sums(neg)
    ptot = pp[-1]
    ntot = np_[-1]
    p = len(wpre)
    wsums = _prefix_sums(wpre)
    flat = wtail == winf
    best_num = None
    best_den = 1
    for i in range(pmin, len(pos) + 1):
        for j in range(mmin, len(neg) + 1):
            n = i + j
            if n == 0:
                continue
            sa = pp[i] + np_[j]
            gain_p = ptot - pp[i]
            gain_n = ntot - np_[j]
            if flat and n >= p:
                d = gain_p - gain_n
                p2 = wtail * (d if d >= 0 else -d)
            else:
                b_plus = _dot_slots(pos, i, n, wpre, wtail) - winf * gain_n
                b_minus = _dot_slots(neg, j, n, wpre, wtail) - winf * gain_p
                p2 = b_plus if b_plus >= b_minus else b_minus
                if p2 < 0:
                    p2 = 0
            num = _psum(n, wsums, wtail) * sa + n * p2
            if best_num is None or num * best_den > best_num * n:
                best_num, best_den = num, n
    return best_num, best_den


def phi2_brute(off_vals, n, wpre, wtail, horizon):
    """Brute-force off-E supremum over injective slot placements.

    Places each value on a distinct slot in n+1 .. horizon and maximizes the
    absolute weighted sum.  Independent of the closed form above: no
    rearrangement or tail-pushing reasoning, just enumeration.
    """
    k = len(off_vals)
    m = horizon - n
    if m < k:
        raise ValueError("horizon %d leaves fewer than %d slots" % (horizon, k))
    ws = [_weight_at(n + 1 + t, wpre, wtail) for t in range(m)]
    best = 0

    def rec(i, used, acc):
        nonlocal best
        if i == k:
            a = acc if acc >= 0 else -acc
            if a > best:
                best = a
            return
        v = off_vals[i]
        for t in range(m):
            if not used >> t & 1:
                rec(i + 1, used | (1 << t), acc + v * ws[t])

    rec(0, 0, 0)
    return best


def dw_brute(idxs, vals, e_window, wpre, wtail, pad=0):
    """Brute-force norm: scan every E inside {1..e_window}.

    `idxs` are the 1-based support positions of the values in `vals`.  Each
    E's off-part supremum comes from phi2_brute at a horizon that covers the
    whole weight table (plus `pad` extra slots).  Repeated (|E|, E-inside-
    support) configurations are cached; the scan itself stays exhaustive.
    """
    if e_window < 0 or (idxs and max(idxs) > e_window):
        raise ValueError("window must cover the support")
    if len(idxs) != len(vals):
        raise ValueError("positions and values must align")
    p = len(wpre)
    wsums = _prefix_sums(wpre)
    supp_mask = 0
    bit_of = {}
    for i, idx in enumerate(idxs):
        supp_mask |= 1 << (idx - 1)
        bit_of[idx - 1] = i
    cache = {}
    best_num = None
    best_den = 1
    for mask in range(1 << e_window):
        n = bin(mask).count("1")
        inter = mask & supp_mask
        key = (n, inter)
        hit = cache.get(key)
        if hit is None:
            sa = 0
            off = []
            for bit, i in bit_of.items():
                v = vals[i]
                if inter >> bit & 1:
                    sa = sa + (v if v > 0 else -v)
                else:
                    off.append(v)
            h = n + len(off) + p + pad
            p2 = phi2_brute(off, n, wpre, wtail, h)
            if n == 0:
                hit = (p2, 1)
            else:
                hit = (_psum(n, wsums, wtail) * sa + n * p2, n)
            cache[key] = hit
        num, den = hit
        if best_num is None or num * best_den > best_num * den:
            best_num, best_den = num, den
    return best_num, best_den
