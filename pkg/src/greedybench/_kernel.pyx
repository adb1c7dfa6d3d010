# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled integer kernels, mirroring greedybench._kernel_py one-for-one.

Exact-path inputs only: values and weights arrive pre-scaled to machine
integers.  The caps below keep every intermediate product inside 63 bits
(worst case: psum*sa <= 2^50, n*p2 <= 2^51, cross-comparison <= 2^57).
Callers exceeding the caps get a ValueError and are expected to fall back
to the pure backend, which runs on arbitrary-precision ints.
"""

cdef enum:
    MAXN = 64
    WINDOW_BITS = 20

VAL_LIMIT = 1 << 20
COUNT_LIMIT = 32
WINDOW_LIMIT = 20
BRUTE_SUPPORT_LIMIT = 12

cdef long long _VLIM = 1 << 20
cdef unsigned long long ONE = 1


cdef int _load_checked(object seq, long long* buf, int cap, bint signed_vals) except -1:
    cdef int k = 0
    cdef long long v
    for item in seq:
        if k >= cap:
            raise ValueError("kernel input longer than %d" % cap)
        v = item
        if v > _VLIM or v < -_VLIM:
            raise ValueError("kernel input exceeds magnitude cap")
        if not signed_vals and v <= 0:
            raise ValueError("weights must be positive")
        buf[k] = v
        k += 1
    return k


cdef bint _any_zero(long long* a, int k) noexcept nogil:
    cdef int i
    for i in range(k):
        if a[i] == 0:
            return True
    return False


cdef void _sort_desc(long long* a, int k) noexcept nogil:
    cdef int i, j
    cdef long long key
    for i in range(1, k):
        key = a[i]
        j = i - 1
        while j >= 0 and a[j] < key:
            a[j + 1] = a[j]
            j -= 1
        a[j + 1] = key


cdef long long _psum_c(int n, long long* wsums, int p, long long wtail) noexcept nogil:
    if n <= 0:
        return 0
    if n <= p:
        return wsums[n - 1]
    return wsums[p - 1] + (n - p) * wtail


cdef long long _dot_slots_c(long long* gains, int start, int glen, int n,
                            long long* wpre, int p, long long wtail) noexcept nogil:
    cdef long long acc = 0, rest = 0
    cdef int k, j, t
    for k in range(start, glen):
        j = n + 1 + (k - start)
        if j > p:
            rest = 0
            for t in range(k, glen):
                rest += gains[t]
            return acc + wtail * rest
        acc += gains[k] * wpre[j - 1]
    return acc


cdef long long _phi2_closed_c(long long* off, int k, int n,
                              long long* wpre, int p, long long wtail,
                              long long winf) noexcept nogil:
    cdef long long pos[MAXN]
    cdef long long neg[MAXN]
    cdef int npos = 0, nneg = 0, i
    cdef long long pos_total = 0, neg_total = 0
    cdef long long b_plus, b_minus, best
    for i in range(k):
        if off[i] > 0:
            pos[npos] = off[i]
            pos_total += off[i]
            npos += 1
        else:
            neg[nneg] = -off[i]
            neg_total += -off[i]
            nneg += 1
    _sort_desc(pos, npos)
    _sort_desc(neg, nneg)
    b_plus = _dot_slots_c(pos, 0, npos, n, wpre, p, wtail) - winf * neg_total
    b_minus = _dot_slots_c(neg, 0, nneg, n, wpre, p, wtail) - winf * pos_total
    best = b_plus if b_plus >= b_minus else b_minus
    return best if best >= 0 else 0


cdef void _brute_rec(long long* vals, int k, int i, long long* ws, int m,
                     unsigned long long used, long long acc,
                     long long* best) noexcept nogil:
    cdef long long a
    cdef int t
    if i == k:
        a = acc if acc >= 0 else -acc
        if a > best[0]:
            best[0] = a
        return
    for t in range(m):
        if not used >> t & 1:
            _brute_rec(vals, k, i + 1, ws, m, used | (ONE << t),
                       acc + vals[i] * ws[t], best)


def phi2_closed(off_vals, n, wpre, wtail, winf):
    """Two-branch closed form for the off-E supremum, |E| = n."""
    cdef long long off[MAXN]
    cdef long long wp[MAXN]
    cdef int k = _load_checked(off_vals, off, COUNT_LIMIT, True)
    cdef int p = _load_checked(wpre, wp, COUNT_LIMIT, False)
    cdef long long wt = wtail
    cdef long long wi = winf
    cdef int nn = n
    if wt > _VLIM or wi > _VLIM or wt <= 0 or wi < 0:
        raise ValueError("weight tail out of range")
    if nn < 0 or nn > MAXN:
        raise ValueError("bad E size")
    return _phi2_closed_c(off, k, nn, wp, p, wt, wi)


def dw_full(vals, wpre, wtail, winf):
    """Exhaustive E-enumeration of the combined norm; returns (num, den)."""
    cdef long long buf[MAXN]
    cdef long long wp[MAXN]
    cdef long long wsums[MAXN]
    cdef long long forced_v[MAXN]
    cdef long long free_v[MAXN]
    cdef long long off[MAXN]
    cdef int kt = _load_checked(vals, buf, COUNT_LIMIT, True)
    cdef int p = _load_checked(wpre, wp, COUNT_LIMIT, False)
    cdef long long wt = wtail
    cdef long long wi = winf
    if wt > _VLIM or wi > _VLIM or wt <= 0 or wi < 0:
        raise ValueError("weight tail out of range")
    if kt == 0:
        return 0, 1
    if _any_zero(buf, kt):
        raise ValueError("values must be nonzero")
    cdef int i
    for i in range(p):
        wsums[i] = (wsums[i - 1] if i else 0) + wp[i]
    cdef long long maxabs = 0, a
    for i in range(kt):
        a = buf[i] if buf[i] > 0 else -buf[i]
        if a > maxabs:
            maxabs = a
    cdef int nf = 0, k = 0
    cdef long long sa_forced = 0, sel_forced = 0, total_signed = 0
    for i in range(kt):
        a = buf[i] if buf[i] > 0 else -buf[i]
        total_signed += buf[i]
        if a == maxabs:
            forced_v[nf] = buf[i]
            sa_forced += a
            sel_forced += buf[i]
            nf += 1
        else:
            free_v[k] = buf[i]
            k += 1
    cdef bint flat = wt == wi
    cdef long long best_num = -1, best_den = 1
    cdef long long num, p2, d, sa, sel
    cdef unsigned long long mask, top = ONE << k
    cdef int n, t, noff
    with nogil:
        mask = 0
        while mask < top:
            n = nf
            sa = sa_forced
            sel = sel_forced
            noff = 0
            for t in range(k):
                if mask >> t & 1:
                    n += 1
                    sa += free_v[t] if free_v[t] > 0 else -free_v[t]
                    sel += free_v[t]
                else:
                    off[noff] = free_v[t]
                    noff += 1
            if flat and n >= p:
                d = total_signed - sel
                p2 = wt * (d if d >= 0 else -d)
            else:
                p2 = _phi2_closed_c(off, noff, n, wp, p, wt, wi)
            num = _psum_c(n, wsums, p, wt) * sa + n * p2
            if best_num < 0 or num * best_den > best_num * n:
                best_num = num
                best_den = n
            mask += 1
    return best_num, best_den


def dw_signature(vals, wpre, wtail, winf):
    """Sign-class signature scan for the same supremum; returns (num, den)."""
    cdef long long buf[MAXN]
    cdef long long wp[MAXN]
    cdef long long wsums[MAXN]
    cdef long long pos[MAXN]
    cdef long long neg[MAXN]
    cdef long long pp[MAXN + 1]
    cdef long long np_[MAXN + 1]
    cdef int kt = _load_checked(vals, buf, COUNT_LIMIT, True)
    cdef int p = _load_checked(wpre, wp, COUNT_LIMIT, False)
    cdef long long wt = wtail
    cdef long long wi = winf
    if wt > _VLIM or wi > _VLIM or wt <= 0 or wi < 0:
        raise ValueError("weight tail out of range")
    if kt == 0:
        return 0, 1
    if _any_zero(buf, kt):
        raise ValueError("values must be nonzero")
    cdef int i
    for i in range(p):
        wsums[i] = (wsums[i - 1] if i else 0) + wp[i]
    cdef int npos = 0, nneg = 0
    for i in range(kt):
        if buf[i] > 0:
            pos[npos] = buf[i]
            npos += 1
        else:
            neg[nneg] = -buf[i]
            nneg += 1
    _sort_desc(pos, npos)
    _sort_desc(neg, nneg)
    cdef long long maxabs = 0
    if npos and pos[0] > maxabs:
        maxabs = pos[0]
    if nneg and neg[0] > maxabs:
        maxabs = neg[0]
    cdef int pmin = 0, mmin = 0
    for i in range(npos):
        if pos[i] != maxabs:
            break
        pmin += 1
    for i in range(nneg):
        if neg[i] != maxabs:
            break
        mmin += 1
    pp[0] = 0
    for i in range(npos):
        pp[i + 1] = pp[i] + pos[i]
    np_[0] = 0
    for i in range(nneg):
        np_[i + 1] = np_[i] + neg[i]
    cdef long long ptot = pp[npos], ntot = np_[nneg]
    cdef bint flat = wt == wi
    cdef long long best_num = -1, best_den = 1
    cdef long long sa, gain_p, gain_n, p2, b_plus, b_minus, num, d
    cdef int j, n
    with nogil:
        for i in range(pmin, npos + 1):
            for j in range(mmin, nneg + 1):
                n = i + j
                if n == 0:
                    continue
                sa = pp[i] + np_[j]
                gain_p = ptot - pp[i]
                gain_n = ntot - np_[j]
                if flat and n >= p:
                    d = gain_p - gain_n
                    p2 = wt * (d if d >= 0 else -d)
                else:
                    b_plus = _dot_slots_c(pos, i, npos, n, wp, p, wt) - wi * gain_n
                    b_minus = _dot_slots_c(neg, j, nneg, n, wp, p, wt) - wi * gain_p
                    p2 = b_plus if b_plus >= b_minus else b_minus
                    if p2 < 0:
                        p2 = 0
                num = _psum_c(n, wsums, p, wt) * sa + n * p2
                if best_num < 0 or num * best_den > best_num * n:
                    best_num = num
                    best_den = n
    return best_num, best_den


def phi2_brute(off_vals, n, wpre, wtail, horizon):
    """Brute-force off-E supremum over injective slot placements."""
    cdef long long off[MAXN]
    cdef long long wp[MAXN]
    cdef long long ws[MAXN]
    cdef long long best = 0
    cdef int k = _load_checked(off_vals, off, BRUTE_SUPPORT_LIMIT, True)
    cdef int p = _load_checked(wpre, wp, COUNT_LIMIT, False)
    cdef long long wt = wtail
    cdef int nn = n, h = horizon
    cdef int m = h - nn
    cdef int t, j
    if wt > _VLIM or wt <= 0:
        raise ValueError("weight tail out of range")
    if m < k:
        raise ValueError("horizon %d leaves fewer than %d slots" % (h, k))
    if h > MAXN or nn < 0:
        raise ValueError("horizon exceeds kernel cap %d" % MAXN)
    for t in range(m):
        j = nn + 1 + t
        ws[t] = wp[j - 1] if j <= p else wt
    with nogil:
        _brute_rec(off, k, 0, ws, m, 0, 0, &best)
    return best


def dw_brute(idxs, vals, e_window, wpre, wtail, pad=0):
    """Brute-force norm: scan every E inside {1..e_window}; returns (num, den)."""
    cdef long long buf[MAXN]
    cdef long long wp[MAXN]
    cdef long long wsums[MAXN]
    cdef long long off[MAXN]
    cdef long long ws[MAXN]
    cdef int bits[MAXN]
    cdef int kt = _load_checked(vals, buf, BRUTE_SUPPORT_LIMIT, True)
    cdef int p = _load_checked(wpre, wp, COUNT_LIMIT, False)
    cdef long long wt = wtail
    cdef int win = e_window
    cdef int padn = pad
    if wt > _VLIM or wt <= 0:
        raise ValueError("weight tail out of range")
    if win < 0 or win > WINDOW_LIMIT:
        raise ValueError("window exceeds kernel cap %d" % WINDOW_LIMIT)
    if _any_zero(buf, kt):
        raise ValueError("values must be nonzero")
    cdef int i
    for i in range(p):
        wsums[i] = (wsums[i - 1] if i else 0) + wp[i]
    cdef unsigned long long supp_mask = 0
    cdef int idx
    i = 0
    for item in idxs:
        idx = item
        if idx < 1 or idx > win:
            raise ValueError("window must cover the support")
        if i >= kt:
            raise ValueError("positions and values must align")
        supp_mask |= ONE << (idx - 1)
        bits[i] = idx - 1
        i += 1
    if i != kt:
        raise ValueError("positions and values must align")
    cache = {}
    cdef long long best_num = -1, best_den = 1, num, den, sa, p2
    cdef unsigned long long mask, inter, scratch, top = ONE << win
    cdef int n, t, noff, h, j, m
    cdef object key, hit
    mask = 0
    while mask < top:
        scratch = mask
        n = 0
        while scratch:
            scratch &= scratch - 1
            n += 1
        inter = mask & supp_mask
        key = (n << WINDOW_BITS) | inter
        hit = cache.get(key)
        if hit is None:
            sa = 0
            noff = 0
            for t in range(kt):
                if inter >> bits[t] & 1:
                    sa += buf[t] if buf[t] > 0 else -buf[t]
                else:
                    off[noff] = buf[t]
                    noff += 1
            h = n + noff + p + padn
            if h > MAXN:
                raise ValueError("horizon exceeds kernel cap %d" % MAXN)
            m = h - n
            for t in range(m):
                j = n + 1 + t
                ws[t] = wp[j - 1] if j <= p else wt
            p2 = 0
            with nogil:
                _brute_rec(off, noff, 0, ws, m, 0, 0, &p2)
            if n == 0:
                num = p2
                den = 1
            else:
                num = _psum_c(n, wsums, p, wt) * sa + n * p2
                den = n
            hit = (num, den)
            cache[key] = hit
        num = hit[0]
        den = hit[1]
        if best_num < 0 or num * best_den > best_num * den:
            best_num = num
            best_den = den
        mask += 1
    return best_num, best_den
