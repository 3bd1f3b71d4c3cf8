import random
from math import gcd

import pytest

from oracles import bracket_bruteforce
from twistedtorus import (
    BraidWord,
    CrossingCapExceeded,
    LaurentPolynomial,
    ParameterError,
    TwistedTorusKnot,
    alexander_torus_closed_form,
    compare_up_to_mirror,
    conjugate,
    jones,
    jones_torus_closed_form,
    kauffman_bracket,
    pd_code_of_closure,
    stabilize,
    torus_braid,
    twisted_torus_braid,
    twisted_torus_word,
)
from twistedtorus.braid import PDCode, random_knot_braid


def t(d):
    return LaurentPolynomial(d, "t")


def A(d):
    return LaurentPolynomial(d, "A")


def test_bracket_unknot():
    assert kauffman_bracket(PDCode((), ())) == A({0: 1})


def test_bracket_kink():
    assert kauffman_bracket(pd_code_of_closure(BraidWord(2, (1,)))) == A({3: -1})
    assert kauffman_bracket(pd_code_of_closure(BraidWord(2, (-1,)))) == A({-3: -1})


# frozen from tests/oracles.bracket_bruteforce
def test_bracket_trefoil_and_figure_eight():
    assert kauffman_bracket(pd_code_of_closure(torus_braid(3, 2))) == A({-4: -1, 0: 1, 8: 1})
    fig8 = pd_code_of_closure(BraidWord(3, (1, -2, 1, -2)))
    assert kauffman_bracket(fig8) == A({-8: 1, -4: -1, 0: 1, 4: -1, 8: 1})


def test_bracket_matches_bruteforce_random():
    rng = random.Random(7)
    for _ in range(40):
        b = random_knot_braid(rng, max_crossings=9, max_strands=4)
        d = pd_code_of_closure(b)
        assert kauffman_bracket(d).coefficients == bracket_bruteforce(d.crossings), b


def test_bracket_cap():
    d = pd_code_of_closure(torus_braid(7, 4))
    with pytest.raises(CrossingCapExceeded):
        kauffman_bracket(d)
    with pytest.raises(CrossingCapExceeded):
        jones(torus_braid(3, 2), max_crossings=3)


def test_jones_examples():
    assert jones(BraidWord(1, ())) == t({0: 1})
    assert jones(torus_braid(3, 2)) == t({1: 1, 3: 1, 4: -1})
    assert jones(torus_braid(2, 1)) == t({0: 1})
    assert jones(BraidWord(3, (1, -2, 1, -2))) == t({-2: 1, -1: -1, 0: 1, 1: -1, 2: 1})


def test_jones_left_trefoil_is_mirror():
    left = jones(BraidWord(2, (-1, -1, -1)))
    right = jones(BraidWord(2, (1, 1, 1)))
    assert left == right.mirror()
    assert compare_up_to_mirror(left, jones_torus_closed_form(3, 2)) == "mirror match"
    assert compare_up_to_mirror(right, jones_torus_closed_form(3, 2)) == "match"
    assert compare_up_to_mirror(right, jones_torus_closed_form(5, 2)) == "mismatch"


def test_jones_rejects_links():
    with pytest.raises(ParameterError):
        jones(BraidWord(2, (1, 1)))


def test_jones_closed_form_examples():
    assert jones_torus_closed_form(3, 2) == t({1: 1, 3: 1, 4: -1})
    assert jones_torus_closed_form(5, 2) == t({2: 1, 4: 1, 5: -1, 6: 1, 7: -1})
    assert jones_torus_closed_form(2, 1) == t({0: 1})
    with pytest.raises(ParameterError):
        jones_torus_closed_form(6, 4)


def test_alexander_closed_form_examples():
    assert alexander_torus_closed_form(3, 2) == t({2: 1, 1: -1, 0: 1})
    assert alexander_torus_closed_form(5, 2) == t({4: 1, 3: -1, 2: 1, 1: -1, 0: 1})
    for p in range(2, 10):
        assert alexander_torus_closed_form(p, 1) == t({0: 1})


def test_alexander_symmetry_and_normalization():
    for p in range(2, 13):
        for q in range(1, p):
            if gcd(p, q) != 1:
                continue
            delta = alexander_torus_closed_form(p, q)
            assert delta.is_symmetric_up_to_unit()
            # Delta(1) = 1 and degree (p-1)(q-1) for torus knots
            assert sum(delta.coefficients.values()) == 1
            assert delta.max_degree() == (p - 1) * (q - 1)


@pytest.mark.parametrize("p, q", [(3, 2), (4, 3), (5, 2), (5, 3), (7, 2)])
def test_state_sum_matches_torus_closed_form(p, q):
    b = twisted_torus_word(p, q, 0)
    assert len(b) <= 20
    assert jones(b) == jones_torus_closed_form(p, q)


@pytest.mark.parametrize("p", [3, 5, 7, 9, 11])
def test_span_of_two_bridge_torus_knots(p):
    assert jones_torus_closed_form(p, 2).span() == p
    if p <= 11:
        assert jones(torus_braid(p, 2)).span() == p


# twisting all q strands of T(p, q) gives T(p + s q, q); here q = r = 3
@pytest.mark.parametrize("p, s", [(4, 1), (5, 1), (5, -1), (4, -1), (4, 2)])
def test_twist_block_on_three_strand_torus_knots(p, s):
    b = twisted_torus_braid(TwistedTorusKnot(p, 3, s))
    n = p + 3 * s
    expected = jones_torus_closed_form(max(abs(n), 3), min(abs(n), 3))
    got = jones(b, max_crossings=21)
    if n > 0:
        assert got == expected
    else:
        assert got == expected.mirror()


# with r = p the twists wrap the whole braid: T(3, q, 3, s) = T(3, q + 3 s)
@pytest.mark.parametrize("q, s", [(1, 1), (2, 1), (1, 2)])
def test_full_twist_on_all_strands(q, s):
    b = twisted_torus_word(3, q, s)
    n = q + 3 * s
    assert jones(b) == jones_torus_closed_form(max(n, 3), min(n, 3))


def test_markov_invariance_seeded():
    rng = random.Random(2024)
    for _ in range(30):
        b = random_knot_braid(rng, max_crossings=10)
        v = jones(b)
        assert jones(stabilize(b, rng.choice((1, -1)))) == v
        if b.strands > 1:
            g = rng.choice((1, -1)) * rng.randint(1, b.strands - 1)
            assert jones(conjugate(b, g)) == v
