"""Braid words for torus and twisted torus knots, their closures and diagram codes.

Conventions
-----------
A letter ``g`` stands for the Artin generator ``sigma_|g|`` (``g > 0``) or its
inverse (``g < 0``). Strands are drawn top to bottom and a positive letter is a
positive (right-handed) crossing: the strand entering from the right passes over.

``T(p, q, r, s)`` is the closure of ``(s_1 ... s_{p-1})^q (s_1 ... s_{r-1})^{r s}``
on ``p`` strands, the twist block sitting on the first ``r`` strands.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Sequence

from .errors import ParameterError

__all__ = [
    "BraidWord",
    "TwistedTorusKnot",
    "Permutation",
    "PDCode",
    "torus_braid",
    "twisted_torus_braid",
    "twisted_torus_word",
    "full_twist",
    "permutation_of",
    "is_knot",
    "pd_code_of_closure",
    "gauss_code",
    "writhe",
    "crossing_count",
    "conjugate",
    "stabilize",
    "random_knot_braid",
]


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.strands < 1:
            raise ParameterError(f"a braid needs at least one strand, got {self.strands}")
        object.__setattr__(self, "letters", tuple(int(g) for g in self.letters))
        for g in self.letters:
            if not 1 <= abs(g) <= self.strands - 1:
                raise ParameterError(
                    f"letter {g} is not a generator of the braid group on {self.strands} strands"
                )

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return " ".join(str(g) for g in self.letters)


@dataclass(frozen=True)
class TwistedTorusKnot:
    """Parameters of ``T(p, q, 3, s)``; ``p > 3``, ``0 < q < p``, ``gcd(p, q) = 1``."""

    p: int
    q: int
    s: int = 0
    r: int = 3

    def __post_init__(self):
        if self.r != 3:
            raise ParameterError(f"only r = 3 is supported, got r = {self.r}")
        if self.p <= self.r:
            raise ParameterError(f"p must exceed r = {self.r}, got p = {self.p}")
        if not 0 < self.q < self.p:
            raise ParameterError(f"q must satisfy 0 < q < p, got q = {self.q}, p = {self.p}")
        if gcd(self.p, self.q) != 1:
            raise ParameterError(
                f"p and q must be coprime, gcd({self.p}, {self.q}) = {gcd(self.p, self.q)}"
            )


@dataclass(frozen=True)
class Permutation:
    """``images[i]`` is the bottom position of the strand starting at top position ``i``."""

    images: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(self.images))
        if sorted(self.images) != list(range(len(self.images))):
            raise ParameterError(f"not a bijection: {self.images}")

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        seen = [False] * len(self.images)
        out = []
        for start in range(len(self.images)):
            if seen[start]:
                continue
            cyc = []
            i = start
            while not seen[i]:
                seen[i] = True
                cyc.append(i)
                i = self.images[i]
            out.append(tuple(cyc))
        return out


@dataclass(frozen=True)
class PDCode:
    """Planar diagram of a braid closure.

    Each crossing lists its four arc labels counterclockwise starting from the
    incoming under-strand (arcs ``1..2n``). ``signs`` holds the crossing signs.
    """

    crossings: tuple[tuple[int, int, int, int], ...]
    signs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "crossings", tuple(tuple(int(a) for a in x) for x in self.crossings))
        object.__setattr__(self, "signs", tuple(int(e) for e in self.signs))
        if len(self.signs) != len(self.crossings):
            raise ParameterError("one sign per crossing required")
        if any(e not in (1, -1) for e in self.signs):
            raise ParameterError(f"crossing signs must be +1/-1: {self.signs}")
        n_arcs = 2 * len(self.crossings)
        degree = [0] * (n_arcs + 1)
        for x in self.crossings:
            if len(x) != 4:
                raise ParameterError(f"crossing {x} does not have four arc ends")
            for a in x:
                if not 1 <= a <= n_arcs:
                    raise ParameterError(f"arc label {a} outside 1..{n_arcs}")
                degree[a] += 1
        bad = [a for a in range(1, n_arcs + 1) if degree[a] != 2]
        if bad:
            raise ParameterError(f"arc labels {bad} do not appear exactly twice")

    def __len__(self) -> int:
        return len(self.crossings)

    def lines(self) -> list[str]:
        return [f"X[{a},{b},{c},{d}]" for a, b, c, d in self.crossings]


def torus_braid(p: int, q: int) -> BraidWord:
    """``(s_1 s_2 ... s_{p-1})^q`` on ``p`` strands."""
    if p <= 1:
        raise ParameterError(f"torus braid needs p > 1, got p = {p}")
    if not 0 < q < p:
        raise ParameterError(f"torus braid needs 0 < q < p, got q = {q}, p = {p}")
    return BraidWord(p, tuple(range(1, p)) * q)


def full_twist(r: int, s: int) -> tuple[int, ...]:
    """Letters of ``(s_1 ... s_{r-1})^{r s}``; letter signs follow ``s``."""
    sign = 1 if s >= 0 else -1
    return tuple(sign * g for g in range(1, r)) * (r * abs(s))


def twisted_torus_word(p: int, q: int, s: int, r: int = 3) -> BraidWord:
    """Braid of ``T(p, q, r, s)`` without checking coprimality or ``r < p``.

    Used for sweeps that deliberately include illegal parameters.
    """
    base = torus_braid(p, q)
    if not 1 < r <= p:
        raise ParameterError(f"twist block on {r} strands does not fit in {p} strands")
    return BraidWord(p, base.letters + full_twist(r, s))


def twisted_torus_braid(k: TwistedTorusKnot) -> BraidWord:
    if not isinstance(k, TwistedTorusKnot):
        raise ParameterError(f"expected TwistedTorusKnot, got {type(k).__name__}")
    return twisted_torus_word(k.p, k.q, k.s, k.r)


def permutation_of(b: BraidWord) -> Permutation:
    at = list(range(b.strands))  # at[position] = strand index (top position)
    for g in b.letters:
        i = abs(g) - 1
        at[i], at[i + 1] = at[i + 1], at[i]
    images = [0] * b.strands
    for pos, strand in enumerate(at):
        images[strand] = pos
    return Permutation(tuple(images))


def is_knot(b: BraidWord) -> bool:
    return len(permutation_of(b).cycles()) == 1


def writhe(b: BraidWord) -> int:
    return sum(1 if g > 0 else -1 for g in b.letters)


def crossing_count(b: BraidWord) -> int:
    return len(b.letters)


def conjugate(b: BraidWord, i: int) -> BraidWord:
    """``s_i b s_i^{-1}``; a negative ``i`` conjugates by the inverse generator."""
    if not 1 <= abs(i) <= b.strands - 1:
        raise ParameterError(f"generator index {i} invalid on {b.strands} strands")
    return BraidWord(b.strands, (i,) + b.letters + (-i,))


def stabilize(b: BraidWord, sign: int = 1) -> BraidWord:
    """Add one strand and append ``s_n^{sign}`` (Markov stabilization)."""
    if sign not in (1, -1):
        raise ParameterError(f"stabilization sign must be +1 or -1, got {sign}")
    return BraidWord(b.strands + 1, b.letters + (sign * b.strands,))


def _passages(b: BraidWord) -> list[tuple[int, bool]]:
    """Walk the closure from the top of strand 1: (crossing index, entered from left)."""
    out = []
    pos = 0
    while True:
        for k, g in enumerate(b.letters):
            i = abs(g) - 1
            if pos == i:
                out.append((k, True))
                pos = i + 1
            elif pos == i + 1:
                out.append((k, False))
                pos = i
        if pos == 0:
            return out


def pd_code_of_closure(b: BraidWord) -> PDCode:
    if not is_knot(b):
        raise ParameterError("closure has more than one component; only knots are supported")
    n = len(b.letters)
    passages = _passages(b)
    assert len(passages) == 2 * n
    # arc entering passage m is m + 1, the arc leaving it is m + 2 (mod 2n)
    ends: dict[tuple[int, bool], tuple[int, int]] = {}
    for m, key in enumerate(passages):
        ends[key] = (m + 1, (m + 1) % (2 * n) + 1)
    crossings = []
    signs = []
    for k, g in enumerate(b.letters):
        in_l, out_l = ends[(k, True)]
        in_r, out_r = ends[(k, False)]
        if g > 0:
            # left strand under, right strand over
            crossings.append((in_l, out_r, out_l, in_r))
            signs.append(1)
        else:
            crossings.append((in_r, in_l, out_r, out_l))
            signs.append(-1)
    return PDCode(tuple(crossings), tuple(signs))


def gauss_code(d: PDCode) -> list[str]:
    """Signed Gauss code ``O+k`` / ``U-k`` along the orientation, starting at arc 1."""
    n = len(d.crossings)
    if n == 0:
        return []
    incoming: dict[int, tuple[int, str]] = {}
    for k, ((a, b, c, dd), e) in enumerate(zip(d.crossings, d.signs)):
        incoming[a] = (k, "U")
        incoming[dd if e > 0 else b] = (k, "O")
    out = []
    for arc in range(1, 2 * n + 1):
        k, kind = incoming[arc]
        out.append(f"{kind}{'+' if d.signs[k] > 0 else '-'}{k + 1}")
    return out


def random_knot_braid(rng, max_crossings: int = 12, max_strands: int = 4) -> BraidWord:
    """Draw random words until the closure is a knot. ``rng`` is a ``random.Random``."""
    while True:
        n = rng.randint(1, max_strands)
        if n == 1:
            return BraidWord(1, ())
        length = rng.randint(n - 1, max_crossings)
        letters = tuple(rng.choice((1, -1)) * rng.randint(1, n - 1) for _ in range(length))
        b = BraidWord(n, letters)
        if is_knot(b):
            return b
