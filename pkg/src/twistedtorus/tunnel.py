"""Strand labels, the +-q first-hit walk, tunnel certificates and the exhaustive scanner.

Labels are stored as residues ``0..p-1``; "-1" is ``p - 1``. Walker ``P1`` moves
by ``+q`` per pass through the braided part, ``P2`` by ``-q``. A certificate
names the copy of the tunnel arc (``gamma1`` above the twist region, ``gamma2``
below) whose walker reaches label 1 before labels 2 and -1.
"""
from __future__ import annotations

import json
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from math import gcd
from typing import Literal

import numpy as np

from . import kernels
from .braid import TwistedTorusKnot
from .errors import ParameterError, TheoremViolation

__all__ = [
    "StrandLabeling",
    "FirstHit",
    "TunnelCertificate",
    "CaseWitness",
    "ScanReport",
    "strand_labels",
    "first_hit",
    "first_hit_closed_form",
    "first_hit_walk",
    "walk_transcript",
    "classify_tunnel",
    "find_case_witness",
    "scan_theorem",
    "signed_label",
]

Direction = Literal[1, -1]


def signed_label(label: int, p: int) -> int:
    """Canonical residue to the signed form used in reports (``p - 1`` -> ``-1``)."""
    return -1 if label == p - 1 else label


@dataclass(frozen=True)
class StrandLabeling:
    p: int
    labels: tuple[int, ...]

    def position_of(self, label: int) -> int:
        return self.labels.index(label % self.p)


def strand_labels(p: int) -> StrandLabeling:
    """Position ``i`` carries ``(i - 1) mod p``: the middle twisted strand is 0."""
    if p <= 3:
        raise ParameterError(f"p must exceed 3, got {p}")
    return StrandLabeling(p, tuple((i - 1) % p for i in range(p)))


@dataclass(frozen=True)
class FirstHit:
    endpoint: Literal["P1", "P2"]
    steps: int
    label: int  # canonical residue: 1, 2 or p - 1
    p: int

    @property
    def signed(self) -> int:
        return signed_label(self.label, self.p)

    def to_dict(self) -> dict:
        return {"steps": self.steps, "label": self.signed}


def _check_walk_args(p: int, q: int, direction: int) -> None:
    if p <= 3:
        raise ParameterError(f"p must exceed 3, got {p}")
    if not 0 < q < p:
        raise ParameterError(f"q must satisfy 0 < q < p, got q = {q}, p = {p}")
    if gcd(p, q) != 1:
        raise ParameterError(f"p and q must be coprime, gcd({p}, {q}) = {gcd(p, q)}")
    if direction not in (1, -1):
        raise ParameterError(f"direction must be +1 or -1, got {direction}")


def _endpoint(direction: int) -> Literal["P1", "P2"]:
    return "P1" if direction > 0 else "P2"


def first_hit_closed_form(p: int, q: int, direction: Direction) -> FirstHit:
    _check_walk_args(p, q, direction)
    m = pow(q, -1, p)
    # label x is reached at t = direction * x * m (mod p)
    candidates = [((direction * x * m) % p, x % p) for x in (1, 2, -1)]
    steps, label = min(candidates)
    return FirstHit(_endpoint(direction), steps, label, p)


def first_hit_walk(p: int, q: int, direction: Direction) -> FirstHit:
    _check_walk_args(p, q, direction)
    targets = {1, 2, p - 1}
    x = 0
    for t in range(1, p):
        x = (x + direction * q) % p
        if x in targets:
            return FirstHit(_endpoint(direction), t, x, p)
    raise AssertionError(f"walk for ({p}, {q}, {direction}) never hit a target")


def first_hit(p: int, q: int, direction: Direction, method: str = "closed_form") -> FirstHit:
    if method == "closed_form":
        return first_hit_closed_form(p, q, direction)
    if method == "walk":
        return first_hit_walk(p, q, direction)
    raise ParameterError(f"unknown first_hit method {method!r}")


def walk_transcript(p: int, q: int, direction: int, steps: int | None = None) -> list[int]:
    """Signed labels visited at t = 1..steps (default a full period)."""
    n = p - 1 if steps is None else steps
    return [signed_label((direction * t * q) % p, p) for t in range(1, n + 1)]


@dataclass(frozen=True)
class TunnelCertificate:
    knot: TwistedTorusKnot
    chosen: Literal["gamma1", "gamma2"]
    p1: FirstHit
    p2: FirstHit
    anomaly: bool = False

    def to_dict(self) -> dict:
        return {
            "p": self.knot.p,
            "q": self.knot.q,
            "r": self.knot.r,
            "s": self.knot.s,
            "tunnel": self.chosen,
            "p1": self.p1.to_dict(),
            "p2": self.p2.to_dict(),
            "anomaly": self.anomaly,
        }

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)


def classify_tunnel(k: TwistedTorusKnot) -> TunnelCertificate:
    """Pick the unknotting tunnel copy for ``T(p, q, 3, s)``; ``s`` is carried but unused."""
    if not isinstance(k, TwistedTorusKnot):
        raise ParameterError(f"expected TwistedTorusKnot, got {type(k).__name__}")
    h1 = first_hit(k.p, k.q, 1)
    h2 = first_hit(k.p, k.q, -1)
    if h1.label == 1:
        return TunnelCertificate(k, "gamma1", h1, h2, anomaly=h2.label == 1)
    if h2.label == 1:
        return TunnelCertificate(k, "gamma2", h1, h2)
    raise TheoremViolation(
        k.p,
        k.q,
        {
            "P1": walk_transcript(k.p, k.q, 1, h1.steps),
            "P2": walk_transcript(k.p, k.q, -1, h2.steps),
        },
    )


@dataclass(frozen=True)
class CaseWitness:
    case: Literal["star", "doublestar"]
    k: int
    j: int


def _solve_system(p: int, step: int, target: int, forbidden: tuple[int, int]) -> int | None:
    """Smallest t < p with ``t*step = target`` whose prefix avoids ``forbidden``."""
    x = 0
    for t in range(1, p):
        x = (x + step) % p
        if x == target:
            return t
        if x in forbidden:
            return None
    return None


def find_case_witness(p: int, q: int, case: Literal["star", "doublestar"]) -> CaseWitness | None:
    """Search k, j < p solving the equation pair for case (*) or (**).

    (*):  tq avoids {1, -1} for t < k and kq = 2;   -tq avoids {1, 2} for t < j and -jq = -1.
    (**): tq avoids {1, 2} for t < k and kq = -1;   -tq avoids {1, -1} for t < j and -jq = 2.
    A returned witness would contradict the tunnel-number-one argument.
    """
    _check_walk_args(p, q, 1)
    minus1 = p - 1
    if case == "star":
        k = _solve_system(p, q, 2, (1, minus1))
        j = None if k is None else _solve_system(p, -q, minus1, (1, 2))
    elif case == "doublestar":
        k = _solve_system(p, q, minus1, (1, 2))
        j = None if k is None else _solve_system(p, -q, 2, (1, minus1))
    else:
        raise ParameterError(f"case must be 'star' or 'doublestar', got {case!r}")
    if k is None or j is None:
        return None
    return CaseWitness(case, k, j)


_REASONS = {
    kernels.NO_CERTIFICATE: "no_certificate",
    kernels.WALK_MISMATCH: "walk_mismatch",
    kernels.PREFIX_VIOLATION: "prefix_violation",
    kernels.ANOMALY: "anomaly",
    kernels.STAR_WITNESS: "star_witness",
    kernels.DOUBLESTAR_WITNESS: "doublestar_witness",
}


@dataclass
class ScanReport:
    p_max: int
    pairs: int
    counterexamples: list[dict]
    pair_histogram: dict[str, int]
    elapsed_ms: float | None
    anomalies: list[dict] = field(default_factory=list)
    witnesses: list[dict] | None = None
    counts: dict[str, int] = field(default_factory=dict)
    options: dict[str, bool] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.counterexamples and not self.witnesses

    def histogram_count(self, l1: int, l2: int) -> int:
        return self.pair_histogram.get(f"({l1},{l2})", 0)

    def to_dict(self) -> dict:
        d = {
            "p_max": self.p_max,
            "pairs": self.pairs,
            "counterexamples": self.counterexamples,
            "pair_histogram": self.pair_histogram,
            "elapsed_ms": self.elapsed_ms,
            "anomalies": self.anomalies,
            "counts": self.counts,
            "options": self.options,
        }
        if self.witnesses is not None:
            d["witnesses"] = self.witnesses
        return d

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)


def _split(p_lo: int, p_hi: int, parts: int) -> list[tuple[int, int]]:
    """Contiguous p-ranges with roughly equal sum of p^2 (the work per range)."""
    if parts <= 1 or p_hi - p_lo < parts:
        return [(p_lo, p_hi)]
    weights = np.arange(p_lo, p_hi + 1, dtype=np.float64) ** 2
    cum = np.cumsum(weights)
    cuts = np.searchsorted(cum, cum[-1] * np.arange(1, parts) / parts)
    bounds = sorted(set(int(c) for c in cuts))
    out, lo = [], p_lo
    for c in bounds:
        hi = p_lo + c
        if lo <= hi < p_hi:
            out.append((lo, hi))
            lo = hi + 1
    out.append((lo, p_hi))
    return out


def scan_theorem(
    p_max: int,
    cross_check_walk: bool = False,
    collect_stats: bool = False,
    case_search: bool = False,
    workers: int = 1,
    max_records: int = 1000,
    timing: bool = True,
) -> ScanReport:
    """Check every coprime pair 0 < q < p <= p_max.

    Failures become report entries; nothing is raised. The result is independent
    of ``workers``: ranges are merged in ascending p.
    """
    if p_max < 4:
        raise ParameterError(f"p_max must be at least 4, got {p_max}")
    t0 = time.perf_counter()
    ranges = _split(4, p_max, workers)
    args = (bool(cross_check_walk), bool(collect_stats), bool(case_search), int(max_records))
    if len(ranges) == 1:
        results = [kernels.scan_range(ranges[0][0], ranges[0][1], *args)]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(lambda r: kernels.scan_range(r[0], r[1], *args), ranges))

    pairs = 0
    hist = np.zeros((3, 3), dtype=np.int64)
    counts = np.zeros(kernels.N_CODES, dtype=np.int64)
    rows: list[tuple[int, int, int]] = []
    for n_pairs, h, c, recs, n_rec in results:
        pairs += int(n_pairs)
        hist += h
        counts += c
        rows.extend(tuple(int(v) for v in r) for r in recs[: min(n_rec, max_records)])
    rows = rows[:max_records]

    counterexamples, anomalies, witnesses = [], [], []
    for p, q, code in rows:
        entry = {"p": p, "q": q, "reason": _REASONS[code]}
        if code == kernels.ANOMALY:
            anomalies.append(entry)
        elif code in (kernels.STAR_WITNESS, kernels.DOUBLESTAR_WITNESS):
            witnesses.append(entry)
        else:
            counterexamples.append(entry)

    histogram = {}
    if collect_stats:
        for i, l1 in enumerate(kernels.LABELS_SIGNED):
            for j, l2 in enumerate(kernels.LABELS_SIGNED):
                histogram[f"({l1},{l2})"] = int(hist[i, j])

    elapsed = round((time.perf_counter() - t0) * 1000.0, 3) if timing else None
    return ScanReport(
        p_max=p_max,
        pairs=pairs,
        counterexamples=counterexamples,
        pair_histogram=histogram,
        elapsed_ms=elapsed,
        anomalies=anomalies,
        witnesses=witnesses if case_search else None,
        counts={_REASONS[code]: int(counts[code]) for code in sorted(_REASONS)},
        options={
            "cross_check_walk": bool(cross_check_walk),
            "collect_stats": bool(collect_stats),
            "case_search": bool(case_search),
        },
    )
