"""Brute-force reference computations, kept independent of the package kernels."""
from __future__ import annotations

from itertools import product


def bracket_bruteforce(crossings) -> dict[int, int]:
    """Kauffman bracket as {A-exponent: coeff}, loops found by walking the smoothed diagram."""
    n = len(crossings)
    if n == 0:
        return {0: 1}
    total: dict[int, int] = {}
    for state in product((0, 1), repeat=n):
        adj: dict[int, list[int]] = {}
        for x, bit in zip(crossings, state):
            a, b, c, d = x
            pairs = [(a, b), (c, d)] if bit == 0 else [(a, d), (b, c)]
            for u, v in pairs:
                adj.setdefault(u, []).append(v)
                adj.setdefault(v, []).append(u)
        seen = set()
        loops = 0
        for start in adj:
            if start in seen:
                continue
            loops += 1
            stack = [start]
            while stack:
                u = stack.pop()
                if u in seen:
                    continue
                seen.add(u)
                stack.extend(adj[u])
        n_a = state.count(0)
        term = {n_a - (n - n_a): 1}
        # multiply by delta^(loops-1), delta = -A^2 - A^-2
        for _ in range(loops - 1):
            nxt: dict[int, int] = {}
            for e, k in term.items():
                for de in (2, -2):
                    nxt[e + de] = nxt.get(e + de, 0) - k
            term = nxt
        for e, k in term.items():
            total[e] = total.get(e, 0) + k
    return {e: k for e, k in total.items() if k}


def first_hit_bruteforce(p: int, q: int, direction: int) -> tuple[int, int]:
    """(steps, canonical label) by listing every multiple of the step."""
    seq = [(direction * t * q) % p for t in range(1, p)]
    for t, x in enumerate(seq, start=1):
        if x in (1, 2, p - 1):
            return t, x
    raise AssertionError("no hit")
