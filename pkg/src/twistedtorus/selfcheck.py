"""Quick end-to-end consistency suite behind ``twistedtorus selfcheck``."""
from __future__ import annotations

import random
from dataclasses import dataclass
from math import gcd
from typing import Callable

from .braid import (
    BraidWord,
    TwistedTorusKnot,
    conjugate,
    crossing_count,
    full_twist,
    is_knot,
    pd_code_of_closure,
    permutation_of,
    random_knot_braid,
    stabilize,
    twisted_torus_braid,
    twisted_torus_word,
    writhe,
)
from .invariants import alexander_torus_closed_form, compare_up_to_mirror, jones, jones_torus_closed_form
from .tunnel import classify_tunnel, first_hit, scan_theorem


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'}  {self.name}" + (f"  ({self.detail})" if self.detail else "")


def _golden() -> str | None:
    k = TwistedTorusKnot(17, 7, -2)
    cert = classify_tunnel(k)
    b = twisted_torus_braid(k)
    got = (cert.chosen, cert.p1.steps, cert.p1.signed, len(b), writhe(b))
    want = ("gamma1", 5, 1, 124, 100)
    return None if got == want else f"got {got}, want {want}"


def _scan(p_max: int) -> str | None:
    rep = scan_theorem(p_max, cross_check_walk=True, collect_stats=True, case_search=True, timing=False)
    bad = rep.counterexamples + (rep.witnesses or [])
    if bad:
        return f"{len(bad)} failures, first {bad[0]}"
    if rep.histogram_count(2, -1) or rep.histogram_count(-1, 2):
        return "excluded label pair observed"
    return None


def _duality(p_max: int) -> str | None:
    for p in range(4, p_max + 1):
        for q in range(1, p):
            if gcd(p, q) != 1:
                continue
            a = first_hit(p, q, -1)
            b = first_hit(p, p - q, 1)
            if (a.steps, a.label) != (b.steps, b.label):
                return f"({p}, {q})"
    return None


def _oracles() -> str | None:
    for p, q in [(3, 2), (4, 3), (5, 2), (5, 3), (7, 2)]:
        verdict = compare_up_to_mirror(jones(twisted_torus_word(p, q, 0)), jones_torus_closed_form(p, q))
        if verdict == "mismatch":
            return f"T({p},{q})"
    return None


def _markov(seed: int, trials: int) -> str | None:
    rng = random.Random(seed)
    for i in range(trials):
        b = random_knot_braid(rng, max_crossings=12)
        if rng.random() < 0.5 and b.strands > 1:
            g = rng.choice((1, -1)) * rng.randint(1, b.strands - 1)
            moved = conjugate(b, g)
        else:
            moved = stabilize(b, rng.choice((1, -1)))
        if jones(b) != jones(moved):
            return f"trial {i}: {b} -> {moved}"
    return None


def _structure() -> str | None:
    for s in range(-3, 4):
        if not permutation_of(BraidWord(3, full_twist(3, s))).is_identity():
            return f"full twist s={s} is not pure"
    for p in range(4, 51):
        for q in range(1, p):
            for s in (-2, 0, 2):
                b = twisted_torus_word(p, q, s)
                if is_knot(b) != (gcd(p, q) == 1):
                    return f"is_knot mismatch at ({p},{q},{s})"
                if crossing_count(b) != (p - 1) * q + 6 * abs(s):
                    return f"crossing count at ({p},{q},{s})"
                if p <= 20 and gcd(p, q) == 1:
                    pd_code_of_closure(b)  # validates arc degrees
    for p in range(2, 13):
        for q in range(1, p):
            if gcd(p, q) == 1 and not alexander_torus_closed_form(p, q).is_symmetric_up_to_unit():
                return f"Alexander asymmetric at ({p},{q})"
    return None


def run_selfcheck(seed: int = 0, p_max: int = 300, markov_trials: int = 100) -> list[CheckResult]:
    checks: list[tuple[str, Callable[[], str | None]]] = [
        ("golden T(17,7,3,-2)", _golden),
        (f"scan p<={p_max} (walk cross-check, stats, case search)", lambda: _scan(p_max)),
        (f"first-hit duality p<={p_max}", lambda: _duality(p_max)),
        ("Jones state sum vs torus closed form", _oracles),
        (f"Markov invariance ({markov_trials} trials, seed {seed})", lambda: _markov(seed, markov_trials)),
        ("structural invariants", _structure),
    ]
    out = []
    for name, fn in checks:
        try:
            err = fn()
        except Exception as exc:  # noqa: BLE001 - report, keep going
            err = f"{type(exc).__name__}: {exc}"
        out.append(CheckResult(name, err is None, err or ""))
    return out
