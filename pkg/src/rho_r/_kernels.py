"""Compiled inner loops for the minimal-profile search.

Everything here operates on plain int64 arrays so numba can compile it in
nopython mode.  Set ``NUMBA_DISABLE_JIT=1`` to run the same code as Python.
"""

import numpy as np
from numba import njit

PATH = 0
CYCLE = 1

# result flags written next to each emitted profile
CERTAIN = 0
NEEDS_EXACT_CHI = 1


@njit(cache=True, nogil=True)
def path_ok(seq, length):
    """True iff no threshold t admits more than t pickable positions.

    A position set is pickable at threshold t when every member is <= t and
    every chosen adjacent pair sums to <= t.
    """
    for t in range(1, length):
        excl = 0
        incl = -1
        prev = 0
        for i in range(length):
            v = seq[i]
            new_excl = excl if excl > incl else incl
            new_incl = -1
            if v <= t:
                new_incl = excl + 1
                if incl >= 0 and prev + v <= t and incl + 1 > new_incl:
                    new_incl = incl + 1
            excl = new_excl
            incl = new_incl
            prev = v
        best = excl if excl > incl else incl
        if best > t:
            return False
    return True


@njit(cache=True, nogil=True)
def _cycle_status(vals, n, buf):
    # proper subsets: every cyclic window of length n - 1 must be path-feasible
    for j in range(n):
        for i in range(n - 1):
            buf[i] = vals[(j + 1 + i) % n]
        if not path_ok(buf, n - 1):
            return -1
    pair = 0
    total = 0
    for i in range(n):
        s = vals[i] + vals[(i + 1) % n]
        if s > pair:
            pair = s
        total += vals[i]
    if n % 2 == 0:
        return CERTAIN if pair >= n else -1
    k = n // 2
    lower = (total + k - 1) // k
    if pair > lower:
        lower = pair
    if lower >= n:
        return CERTAIN
    return NEEDS_EXACT_CHI


@njit(cache=True, nogil=True)
def _completion_cost(cum, ex, inc, n, r, cycle, use_floor, use_scan):
    """Least possible sum of ``r`` further orders.

    Each source caps how many further orders may be <= k.  The sorted-floor
    source allows ``2k - cum[k]`` where ``cum[k]`` counts assigned orders
    <= k.  The scan source uses the threshold state (``ex``, ``inc``) of the
    prefix: further orders <= k extend the best pickable set at thresholds 2k
    and 2k + 1, losing at most one pick next to the prefix end.  Returns -1
    when some cap is already negative.  For cycles the caps only bind proper
    subsets, so one remaining order is exempt and bounded by its predecessor.
    """
    big = 1 << 40
    sm = np.empty(n + 2, dtype=np.int64)
    sm[n + 1] = big
    for k in range(n, 0, -1):
        f = big
        if use_floor:
            f = 2 * k - cum[k]
        if use_scan:
            for t in range(2 * k, 2 * k + 2):
                if t < n:
                    b = ex[t]
                    if inc[t] - 1 > b:
                        b = inc[t] - 1
                    if t - b < f:
                        f = t - b
        if f < 0:
            return -1
        sm[k] = f if f < sm[k + 1] else sm[k + 1]
    sm[0] = 0
    bound = r - 1 if cycle else r
    cost = 0
    v = 1
    last = 1
    for j in range(1, bound + 1):
        while v <= n and sm[v] < j:
            v += 1
        cost += v
        last = v
    if cycle and r > 0:
        cost += last
    return cost


@njit(cache=True, nogil=True)
def search_level(n, total, prefix, family, use_prefix, use_floor, use_lm1,
                 out, flags, counters):
    """Enumerate every feasible profile of length ``n`` summing to ``total``.

    Profiles start with ``prefix``.  Paths emit only profiles that are
    lexicographically <= their reverse; cycles emit only profiles whose first
    order is a minimum (callers canonicalize).  Returns the number of rows
    written to ``out``, or -1 if ``out`` overflowed.
    """
    cycle = family == CYCLE
    k_fixed = prefix.shape[0]
    vals = np.zeros(n, dtype=np.int64)
    cand = np.zeros(n, dtype=np.int64)
    hi = np.zeros(n, dtype=np.int64)
    psum = np.zeros(n + 1, dtype=np.int64)
    esum = np.zeros(n + 1, dtype=np.int64)
    excl = np.zeros((n + 1, n), dtype=np.int64)
    incl = np.full((n + 1, n), -1, dtype=np.int64)
    bad = np.zeros(n + 1, dtype=np.bool_)
    cum = np.zeros(n + 1, dtype=np.int64)
    buf = np.zeros(n, dtype=np.int64)
    half_tri = n * (n + 1) // 2
    capacity = out.shape[0]
    found = 0
    nodes = 0

    if n == 0:
        return 0

    d = 0
    # entering depth 0
    if k_fixed > 0:
        cand[0] = prefix[0]
        hi[0] = prefix[0]
    else:
        cand[0] = 1
        hi[0] = total - (n - 1)
        if n == 1:
            cand[0] = total
    while d >= 0:
        if cand[d] > hi[d]:
            d -= 1
            if d >= 0:
                v_old = vals[d]
                if v_old <= n:
                    for k in range(v_old, n + 1):
                        cum[k] -= 1
                cand[d] += 1
            continue
        v = cand[d]
        nodes += 1
        vals[d] = v
        psum[d + 1] = psum[d] + v
        if d > 0:
            pv = vals[d - 1]
            esum[d + 1] = esum[d] + (pv if pv < v else v)
        else:
            pv = 0
            esum[d + 1] = 0
        if v <= n:
            for k in range(v, n + 1):
                cum[k] += 1
        remaining = total - psum[d + 1]
        left = n - 1 - d
        pruned = False

        # prefix threshold scan; for cycles only proper prefixes are paths
        broken = bad[d]
        if not (cycle and d == n - 1):
            for t in range(1, n):
                e0 = excl[d, t]
                i0 = incl[d, t]
                ne = e0 if e0 > i0 else i0
                ni = -1
                if v <= t:
                    ni = e0 + 1
                    if d > 0 and i0 >= 0 and pv + v <= t and i0 + 1 > ni:
                        ni = i0 + 1
                excl[d + 1, t] = ne
                incl[d + 1, t] = ni
                if (ne if ne > ni else ni) > t:
                    broken = True
        bad[d + 1] = broken
        if broken and use_prefix:
            pruned = True

        if not pruned and (use_floor or use_prefix) and left > 0:
            cost = _completion_cost(cum, excl[d + 1], incl[d + 1], n, left,
                                    cycle, use_floor, use_prefix)
            if cost < 0 or cost > remaining:
                pruned = True

        if not pruned and use_lm1 and not cycle:
            if total + esum[d + 1] + remaining < half_tri:
                pruned = True

        if pruned:
            if v <= n:
                for k in range(v, n + 1):
                    cum[k] -= 1
            cand[d] += 1
            continue

        if d == n - 1:
            emit = True
            status = CERTAIN
            if cycle:
                status = _cycle_status(vals, n, buf)
                emit = status >= 0
            else:
                if bad[n]:
                    emit = False
                else:
                    # lexicographically <= reverse
                    for i in range(n // 2):
                        a = vals[i]
                        b = vals[n - 1 - i]
                        if a < b:
                            break
                        if a > b:
                            emit = False
                            break
            if emit:
                if found >= capacity:
                    counters[0] += nodes
                    return -1
                for i in range(n):
                    out[found, i] = vals[i]
                flags[found] = status
                found += 1
            if v <= n:
                for k in range(v, n + 1):
                    cum[k] -= 1
            cand[d] += 1
            continue

        # descend
        d += 1
        left = n - 1 - d
        low = 1
        if cycle:
            low = vals[0]
        if d < k_fixed:
            cand[d] = prefix[d]
            hi[d] = prefix[d]
        elif left == 0:
            cand[d] = remaining
            hi[d] = remaining
            if remaining < low:
                hi[d] = remaining - 1
        else:
            cand[d] = low
            hi[d] = remaining - left * low
    counters[0] += nodes
    return found


@njit(cache=True, nogil=True)
def clique_prefix_ok(i, vals, clique_masks):
    """Every vertex set ``S`` with ``i`` in ``S`` and ``S <= {0..i}`` has a
    clique of weight >= ``|S|``.

    ``clique_masks`` lists the host's maximal cliques as bitmasks; the
    heaviest clique inside ``S`` is the heaviest intersection ``Q & S``.
    """
    top = np.int64(1) << i
    nq = clique_masks.shape[0]
    for rest in range(top):
        s = rest | top
        size = 0
        x = s
        while x:
            x &= x - 1
            size += 1
        best = 0
        for q in range(nq):
            inter = clique_masks[q] & s
            w = 0
            v = 0
            while inter:
                if inter & 1:
                    w += vals[v]
                inter >>= 1
                v += 1
            if w > best:
                best = w
                if best >= size:
                    break
        if best < size:
            return False
    return True
