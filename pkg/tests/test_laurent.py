import pytest
from hypothesis import given, strategies as st

from twistedtorus import InexactDivision, LaurentPolynomial

polys = st.dictionaries(st.integers(-6, 6), st.integers(-5, 5), max_size=5).map(LaurentPolynomial)


def test_zero_coefficients_dropped():
    f = LaurentPolynomial({1: 2, 3: 0, -1: 0})
    assert f.coefficients == {1: 2}
    assert (f - f).is_zero()


def test_text_form():
    f = LaurentPolynomial({1: 1, 3: 1, 4: -1})
    assert f.to_text() == "t^1 + t^3 - t^4"
    assert LaurentPolynomial({0: 1}).to_text() == "1"
    assert LaurentPolynomial({-4: -1, 0: 3, 2: -2}, "A").to_text() == "-A^-4 + 3 - 2*A^2"
    assert LaurentPolynomial().to_text() == "0"


def test_json_roundtrip():
    f = LaurentPolynomial({-3: 2, 5: -1})
    assert f.to_json() == {"-3": 2, "5": -1}
    assert LaurentPolynomial.from_json(f.to_json()) == f


def test_variable_tags_do_not_mix():
    with pytest.raises(TypeError):
        LaurentPolynomial({1: 1}, "A") + LaurentPolynomial({1: 1}, "t")


def test_exact_division():
    num = LaurentPolynomial({0: 1, 3: -1})
    assert num.exact_div(LaurentPolynomial({0: 1, 1: -1})) == LaurentPolynomial({0: 1, 1: 1, 2: 1})
    with pytest.raises(InexactDivision):
        LaurentPolynomial({0: 1, 3: 1}).exact_div(LaurentPolynomial({0: 1, 1: -1}))


def test_substitute_power():
    f = LaurentPolynomial({-4: 1, 8: -2}, "A")
    assert f.substitute_power(-4, "t") == LaurentPolynomial({1: 1, -2: -2}, "t")
    with pytest.raises(InexactDivision):
        LaurentPolynomial({2: 1}, "A").substitute_power(-4, "t")


def test_unit_inverse():
    m = LaurentPolynomial({3: -1}, "A")
    assert m ** -1 * m == LaurentPolynomial({0: 1}, "A")


@given(polys, polys, polys)
def test_ring_axioms(f, g, h):
    assert f * (g + h) == f * g + f * h
    assert (f * g) * h == f * (g * h)
    assert f + g == g + f


@given(polys, polys)
def test_division_inverts_multiplication(f, g):
    if g.is_zero():
        return
    assert (f * g).exact_div(g) == f


@given(polys, st.integers(-5, 5))
def test_symmetric_products(f, k):
    sym = (f * f.mirror()).shift(k)
    assert sym.is_symmetric_up_to_unit()
