from __future__ import annotations

import numpy as np
from numba import njit

_JIT = dict(cache=True, nogil=True)


@njit(**_JIT)
def _inverse(q, p):
    # extended Euclid on (p, q); returns (q^-1 mod p, gcd)
    r0, r1 = p, q
    s0, s1 = 0, 1
    while r1 != 0:
        t = r0 // r1
        r0, r1 = r1, r0 - t * r1
        s0, s1 = s1, s0 - t * s1
    return s0 % p, r0


@njit(**_JIT)
def _closed_form(p, m, direction):
    # hit times of labels 1, 2, -1 for the walk t -> direction * t * q
    m2 = (2 * m) % p
    if direction > 0:
        t0, t1, t2 = m, m2, p - m
    else:
        t0, t1, t2 = p - m, p - m2, m
    if t0 < t1 and t0 < t2:
        return t0, 0
    if t1 < t2:
        return t1, 1
    return t2, 2


@njit(**_JIT)
def _walk(p, q, direction):
    step = q if direction > 0 else p - q
    x = 0
    for t in range(1, p):
        x += step
        if x >= p:
            x -= p
        if x == 1:
            return t, 0
        if x == 2:
            return t, 1
        if x == p - 1:
            return t, 2
    return -1, -1


@njit(**_JIT)
def _prefix_ok(p, step, stop, target, forbid_a, forbid_b):
    # t * step avoids forbid_a/forbid_b for t < stop and equals target at t = stop
    x = 0
    for t in range(1, stop):
        x += step
        if x >= p:
            x -= p
        if x == forbid_a or x == forbid_b:
            return False
    x += step
    if x >= p:
        x -= p
    return x == target


@njit(**_JIT)
def _search(p, step, target, forbid_a, forbid_b):
    # first t < p with t * step == target, aborting if a forbidden residue comes first
    x = 0
    for t in range(1, p):
        x += step
        if x >= p:
            x -= p
        if x == target:
            return t
        if x == forbid_a or x == forbid_b:
            return -1
    return -1


@njit(**_JIT)
def _push(records, n_rec, p, q, code):
    if n_rec < records.shape[0]:
        records[n_rec, 0] = p
        records[n_rec, 1] = q
        records[n_rec, 2] = code
    return n_rec + 1


@njit(**_JIT)
def scan_range(p_lo, p_hi, cross_check, stats, case_search, max_records):
    """Scan all coprime 0 < q < p for p in [p_lo, p_hi].

    Returns (pairs, hist[3, 3], counts[7], records[:, 3], n_records).
    """
    hist = np.zeros((3, 3), dtype=np.int64)
    counts = np.zeros(7, dtype=np.int64)
    records = np.zeros((max_records, 3), dtype=np.int64)
    n_rec = 0
    pairs = 0
    for p in range(p_lo, p_hi + 1):
        for q in range(1, p):
            m, g = _inverse(q, p)
            if g != 1:
                continue
            pairs += 1
            s1, c1 = _closed_form(p, m, 1)
            s2, c2 = _closed_form(p, m, -1)
            hist[c1, c2] += 1
            if c1 != 0 and c2 != 0:
                counts[1] += 1
                n_rec = _push(records, n_rec, p, q, 1)
            if cross_check:
                w1, d1 = _walk(p, q, 1)
                w2, d2 = _walk(p, q, -1)
                if w1 != s1 or d1 != c1 or w2 != s2 or d2 != c2:
                    counts[2] += 1
                    n_rec = _push(records, n_rec, p, q, 2)
            if stats:
                ok = True
                if c1 == 1:
                    ok = _prefix_ok(p, q, s1, 2, 1, p - 1)
                if ok and c2 == 1:
                    ok = _prefix_ok(p, p - q, s2, 2, 1, p - 1)
                if not ok:
                    counts[3] += 1
                    n_rec = _push(records, n_rec, p, q, 3)
            if c1 == 0 and c2 == 0:
                counts[4] += 1
                n_rec = _push(records, n_rec, p, q, 4)
            if case_search:
                # (*): q-walk hits 2 before 1, -1; (-q)-walk hits -1 before 1, 2
                k = _search(p, q, 2, 1, p - 1)
                if k > 0:
                    j = _search(p, p - q, p - 1, 1, 2)
                    if j > 0:
                        counts[5] += 1
                        n_rec = _push(records, n_rec, p, q, 5)
                # (**): q-walk hits -1 before 1, 2; (-q)-walk hits 2 before 1, -1
                k = _search(p, q, p - 1, 1, 2)
                if k > 0:
                    j = _search(p, p - q, 2, 1, p - 1)
                    if j > 0:
                        counts[6] += 1
                        n_rec = _push(records, n_rec, p, q, 6)
    return pairs, hist, counts, records, n_rec


@njit(**_JIT)
def _find(parent, x):
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


@njit(**_JIT)
def bracket_counts(pd):
    """Histogram of smoothing states by (number of A-smoothings, number of loops).

    ``pd`` is an (n, 4) array of zero-based arc labels. Bit c of a state set
    means crossing c takes the B-smoothing, which joins ends (0, 3) and (1, 2);
    the A-smoothing joins (0, 1) and (2, 3).
    """
    n = pd.shape[0]
    n_arcs = 2 * n
    out = np.zeros((n + 1, n_arcs + 1), dtype=np.int64)
    parent = np.empty(n_arcs, dtype=np.int64)
    for state in range(1 << n):
        for v in range(n_arcs):
            parent[v] = v
        n_b = 0
        for c in range(n):
            if (state >> c) & 1:
                n_b += 1
                u1, v1, u2, v2 = pd[c, 0], pd[c, 3], pd[c, 1], pd[c, 2]
            else:
                u1, v1, u2, v2 = pd[c, 0], pd[c, 1], pd[c, 2], pd[c, 3]
            a = _find(parent, u1)
            b = _find(parent, v1)
            if a != b:
                parent[a] = b
            a = _find(parent, u2)
            b = _find(parent, v2)
            if a != b:
                parent[a] = b
        loops = 0
        for v in range(n_arcs):
            if parent[v] == v:
                loops += 1
        out[n - n_b, loops] += 1
    return out
