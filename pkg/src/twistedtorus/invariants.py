"""Diagram-level oracles: Kauffman bracket / Jones state sum and torus-knot closed forms."""
from __future__ import annotations

from math import gcd
from typing import Literal

import numpy as np

from . import kernels
from .braid import BraidWord, PDCode, is_knot, pd_code_of_closure, writhe
from .errors import CrossingCapExceeded, ParameterError
from .laurent import LaurentPolynomial

__all__ = [
    "DEFAULT_CROSSING_CAP",
    "kauffman_bracket",
    "jones",
    "jones_torus_closed_form",
    "alexander_torus_closed_form",
    "compare_up_to_mirror",
]

DEFAULT_CROSSING_CAP = 20


def _delta() -> LaurentPolynomial:
    return LaurentPolynomial({2: -1, -2: -1}, "A")


def kauffman_bracket(d: PDCode, max_crossings: int = DEFAULT_CROSSING_CAP) -> LaurentPolynomial:
    """Sum over all 2^n smoothings of ``A^(#A - #B) * delta^(loops - 1)``."""
    n = len(d.crossings)
    if n > max_crossings:
        raise CrossingCapExceeded(n, max_crossings)
    if n == 0:
        return LaurentPolynomial.constant(1, "A")
    pd = np.asarray(d.crossings, dtype=np.int64) - 1
    table = kernels.bracket_counts(pd)
    delta = _delta()
    result = LaurentPolynomial({}, "A")
    for n_a, loops in zip(*np.nonzero(table)):
        term = delta ** int(loops - 1) * LaurentPolynomial.monomial(int(2 * n_a - n), int(table[n_a, loops]), "A")
        result = result + term
    return result


def jones(b: BraidWord, max_crossings: int = DEFAULT_CROSSING_CAP) -> LaurentPolynomial:
    """Jones polynomial of the braid closure: ``(-A^3)^(-w) <K>`` at ``t = A^-4``."""
    if not is_knot(b):
        raise ParameterError("Jones polynomial is only computed for knot closures")
    if len(b.letters) > max_crossings:
        raise CrossingCapExceeded(len(b.letters), max_crossings)
    bracket = kauffman_bracket(pd_code_of_closure(b), max_crossings)
    w = writhe(b)
    norm = LaurentPolynomial.monomial(-3 * w, (-1) ** (w % 2), "A")
    return (norm * bracket).substitute_power(-4, "t")


def _check_torus(p: int, q: int) -> None:
    if not p > q > 0:
        raise ParameterError(f"need p > q > 0, got ({p}, {q})")
    if gcd(p, q) != 1:
        raise ParameterError(f"({p}, {q}) not coprime")


def jones_torus_closed_form(p: int, q: int) -> LaurentPolynomial:
    """``t^((p-1)(q-1)/2) (1 - t^(p+1) - t^(q+1) + t^(p+q)) / (1 - t^2)``."""
    _check_torus(p, q)
    num = LaurentPolynomial({0: 1}) - LaurentPolynomial.monomial(p + 1) - LaurentPolynomial.monomial(q + 1)
    num = num + LaurentPolynomial.monomial(p + q)
    den = LaurentPolynomial({0: 1, 2: -1})
    return num.exact_div(den).shift((p - 1) * (q - 1) // 2)


def alexander_torus_closed_form(p: int, q: int) -> LaurentPolynomial:
    """``(t^(pq) - 1)(t - 1) / ((t^p - 1)(t^q - 1))``."""
    _check_torus(p, q)

    def tm1(k):
        return LaurentPolynomial({k: 1, 0: -1})

    return (tm1(p * q) * tm1(1)).exact_div(tm1(p) * tm1(q))


def compare_up_to_mirror(
    computed: LaurentPolynomial, expected: LaurentPolynomial
) -> Literal["match", "mirror match", "mismatch"]:
    if computed == expected:
        return "match"
    if computed.mirror() == expected:
        return "mirror match"
    return "mismatch"


