from __future__ import annotations

import numpy as np

_STATE_CHUNK = 1 << 15


def _inverse(q, p):
    """Vectorized extended Euclid: (q^-1 mod p, gcd(q, p)) for an array q."""
    r0 = np.full_like(q, p)
    r1 = q.copy()
    s0 = np.zeros_like(q)
    s1 = np.ones_like(q)
    live = r1 != 0
    while live.any():
        t = np.zeros_like(q)
        t[live] = r0[live] // r1[live]
        r0, r1 = np.where(live, r1, r0), np.where(live, r0 - t * r1, r1)
        s0, s1 = np.where(live, s1, s0), np.where(live, s0 - t * s1, s1)
        live = r1 != 0
    return s0 % p, r0


def _closed_form(p, m, direction):
    m2 = (2 * m) % p
    if direction > 0:
        times = np.stack([m, m2, p - m])
    else:
        times = np.stack([p - m, p - m2, m])
    code = np.argmin(times, axis=0)
    return np.take_along_axis(times, code[None, :], axis=0)[0], code


def _walk(p, q, direction):
    step = q if direction > 0 else p - q
    x = np.zeros_like(q)
    steps = np.full_like(q, -1)
    code = np.full_like(q, -1)
    live = np.ones(q.shape, dtype=bool)
    for t in range(1, p):
        x += step
        x[x >= p] -= p
        for c, lab in enumerate((1, 2, p - 1)):
            hit = live & (x == lab)
            steps[hit] = t
            code[hit] = c
            live &= ~hit
        if not live.any():
            break
    return steps, code


def _prefix_ok(p, step, stop, target, forbid_a, forbid_b):
    ok = np.ones(step.shape, dtype=bool)
    if step.size == 0:
        return ok
    x = np.zeros_like(step)
    for t in range(1, int(stop.max())):
        x += step
        x[x >= p] -= p
        ok &= ~((t < stop) & ((x == forbid_a) | (x == forbid_b)))
    return ok & ((stop * step) % p == target)


def _search(p, step, target, forbid_a, forbid_b):
    found = np.full(step.shape, -1, dtype=np.int64)
    live = np.ones(step.shape, dtype=bool)
    x = np.zeros_like(step)
    for t in range(1, p):
        if not live.any():
            break
        x += step
        x[x >= p] -= p
        hit = live & (x == target)
        found[hit] = t
        live &= ~hit & (x != forbid_a) & (x != forbid_b)
    return found


def scan_range(p_lo, p_hi, cross_check, stats, case_search, max_records):
    hist = np.zeros((3, 3), dtype=np.int64)
    counts = np.zeros(7, dtype=np.int64)
    chunks = []
    pairs = 0
    for p in range(p_lo, p_hi + 1):
        q = np.arange(1, p, dtype=np.int64)
        m, g = _inverse(q, p)
        keep = g == 1
        q, m = q[keep], m[keep]
        if q.size == 0:
            continue
        pairs += q.size
        s1, c1 = _closed_form(p, m, 1)
        s2, c2 = _closed_form(p, m, -1)
        np.add.at(hist, (c1, c2), 1)
        flags = {}
        flags[1] = (c1 != 0) & (c2 != 0)
        if cross_check:
            w1, d1 = _walk(p, q, 1)
            w2, d2 = _walk(p, q, -1)
            flags[2] = (w1 != s1) | (d1 != c1) | (w2 != s2) | (d2 != c2)
        if stats:
            ok = np.ones(q.shape, dtype=bool)
            sel = c1 == 1
            ok[sel] = _prefix_ok(p, q[sel], s1[sel], 2, 1, p - 1)
            sel = (c2 == 1) & ok
            ok[sel] = _prefix_ok(p, p - q[sel], s2[sel], 2, 1, p - 1)
            flags[3] = ~ok
        flags[4] = (c1 == 0) & (c2 == 0)
        if case_search:
            k = _search(p, q, 2, 1, p - 1)
            j = np.full_like(q, -1)
            sel = k > 0
            j[sel] = _search(p, p - q[sel], p - 1, 1, 2)
            flags[5] = j > 0
            k = _search(p, q, p - 1, 1, 2)
            j = np.full_like(q, -1)
            sel = k > 0
            j[sel] = _search(p, p - q[sel], 2, 1, p - 1)
            flags[6] = j > 0
        rows = []
        for code, mask in flags.items():
            counts[code] += int(mask.sum())
            if mask.any():
                qs = q[mask]
                rows.append(np.stack([np.full_like(qs, p), qs, np.full_like(qs, code)], axis=1))
        if rows:
            r = np.concatenate(rows)
            chunks.append(r[np.lexsort((r[:, 2], r[:, 1]))])
    n_rec = sum(len(c) for c in chunks)
    records = np.zeros((max_records, 3), dtype=np.int64)
    if chunks:
        allr = np.concatenate(chunks)[:max_records]
        records[: len(allr)] = allr
    return pairs, hist, counts, records, n_rec


def bracket_counts(pd):
    pd = np.asarray(pd, dtype=np.int64).reshape(-1, 4)
    n = pd.shape[0]
    n_arcs = 2 * n
    out = np.zeros((n + 1, n_arcs + 1), dtype=np.int64)
    if n == 0:
        out[0, 0] = 1
        return out
    # each arc appears at two crossing slots; its neighbour through a slot
    # depends on that crossing's smoothing
    partner_a = np.array([1, 0, 3, 2])
    partner_b = np.array([3, 2, 1, 0])
    occ = [[] for _ in range(n_arcs)]
    for c in range(n):
        for s in range(4):
            occ[pd[c, s]].append((c, s))
    cross = np.empty((2, n_arcs), dtype=np.int64)
    nbr_a = np.empty((2, n_arcs), dtype=np.int64)
    nbr_b = np.empty((2, n_arcs), dtype=np.int64)
    for v, pair in enumerate(occ):
        for i, (c, s) in enumerate(pair):
            cross[i, v] = c
            nbr_a[i, v] = pd[c, partner_a[s]]
            nbr_b[i, v] = pd[c, partner_b[s]]
    shifts = np.arange(n, dtype=np.int64)
    ids = np.arange(n_arcs, dtype=np.int64)
    for lo in range(0, 1 << n, _STATE_CHUNK):
        states = np.arange(lo, min(lo + _STATE_CHUNK, 1 << n), dtype=np.int64)
        bits = ((states[:, None] >> shifts) & 1).astype(bool)
        n1 = np.where(bits[:, cross[0]], nbr_b[0], nbr_a[0])
        n2 = np.where(bits[:, cross[1]], nbr_b[1], nbr_a[1])
        lab = np.broadcast_to(ids, n1.shape).copy()
        while True:
            new = np.minimum(lab, np.minimum(np.take_along_axis(lab, n1, 1), np.take_along_axis(lab, n2, 1)))
            new = np.take_along_axis(new, new, 1)
            if np.array_equal(new, lab):
                break
            lab = new
        loops = (lab == ids).sum(axis=1)
        n_a = n - bits.sum(axis=1)
        np.add.at(out, (n_a, loops), 1)
    return out
