"""Exact Laurent polynomials with integer coefficients in a single tagged variable."""
from __future__ import annotations

from typing import Mapping

from .errors import InexactDivision


class LaurentPolynomial:
    """Sparse ``{exponent: coefficient}`` map; zero coefficients are never stored.

    The variable tag (``"A"`` or ``"t"``) guards against mixing bracket and Jones
    variables; arithmetic between different tags raises ``TypeError``.
    """

    __slots__ = ("_c", "var")

    def __init__(self, coefficients: Mapping[int, int] | None = None, var: str = "t"):
        c = {}
        for e, a in (coefficients or {}).items():
            a = int(a)
            if a:
                c[int(e)] = c.get(int(e), 0) + a
        self._c = {e: a for e, a in c.items() if a}
        self.var = var

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1, var: str = "t") -> LaurentPolynomial:
        return cls({exponent: coefficient}, var)

    @classmethod
    def constant(cls, value: int, var: str = "t") -> LaurentPolynomial:
        return cls({0: value}, var)

    @property
    def coefficients(self) -> dict[int, int]:
        return dict(self._c)

    def is_zero(self) -> bool:
        return not self._c

    def min_degree(self) -> int:
        return min(self._c)

    def max_degree(self) -> int:
        return max(self._c)

    def span(self) -> int:
        return self.max_degree() - self.min_degree() if self._c else 0

    def _coerce(self, other) -> LaurentPolynomial:
        if isinstance(other, LaurentPolynomial):
            if other.var != self.var:
                raise TypeError(f"cannot combine polynomials in {self.var} and {other.var}")
            return other
        if isinstance(other, int):
            return LaurentPolynomial.constant(other, self.var)
        return NotImplemented

    def __eq__(self, other):
        o = self._coerce(other) if isinstance(other, (int, LaurentPolynomial)) else NotImplemented
        if o is NotImplemented:
            return NotImplemented
        return self._c == o._c

    def __hash__(self):
        return hash((self.var, frozenset(self._c.items())))

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        c = dict(self._c)
        for e, a in o._c.items():
            c[e] = c.get(e, 0) + a
        return LaurentPolynomial(c, self.var)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial({e: -a for e, a in self._c.items()}, self.var)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        c: dict[int, int] = {}
        for e1, a1 in self._c.items():
            for e2, a2 in o._c.items():
                c[e1 + e2] = c.get(e1 + e2, 0) + a1 * a2
        return LaurentPolynomial(c, self.var)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if len(self._c) == 1:
                (e, a), = self._c.items()
                if a in (1, -1):
                    return LaurentPolynomial({e * n: a ** (-n)}, self.var)
            raise InexactDivision("only unit monomials have Laurent inverses")
        result = LaurentPolynomial.constant(1, self.var)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> LaurentPolynomial:
        return LaurentPolynomial({e + k: a for e, a in self._c.items()}, self.var)

    def mirror(self) -> LaurentPolynomial:
        """Substitute ``x -> 1/x``."""
        return LaurentPolynomial({-e: a for e, a in self._c.items()}, self.var)

    def substitute_power(self, factor: int, var: str) -> LaurentPolynomial:
        """Rewrite in a new variable ``y`` with ``x = y^(1/factor)``: exponent ``e`` maps to ``e / factor``.

        ``A -> t`` with ``t = A^-4`` is ``substitute_power(-4, "t")``.
        """
        c = {}
        for e, a in self._c.items():
            if e % factor:
                raise InexactDivision(f"exponent {e} is not divisible by {factor}")
            c[e // factor] = a
        return LaurentPolynomial(c, var)

    def exact_div(self, other: LaurentPolynomial) -> LaurentPolynomial:
        """Long division that must leave no remainder."""
        o = self._coerce(other)
        if o.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return LaurentPolynomial({}, self.var)
        num = dict(self._c)
        d_hi = o.max_degree()
        d_lead = o._c[d_hi]
        d_lo = o.min_degree()
        quotient: dict[int, int] = {}
        while num:
            hi = max(num)
            if hi - d_hi < min(num) - d_lo:
                break
            a = num[hi]
            if a % d_lead:
                raise InexactDivision(f"leading coefficient {a} not divisible by {d_lead}")
            qe, qa = hi - d_hi, a // d_lead
            quotient[qe] = qa
            for e, b in o._c.items():
                v = num.get(e + qe, 0) - qa * b
                if v:
                    num[e + qe] = v
                else:
                    num.pop(e + qe, None)
        if num:
            raise InexactDivision(f"nonzero remainder {LaurentPolynomial(num, self.var)}")
        return LaurentPolynomial(quotient, self.var)

    def is_symmetric_up_to_unit(self) -> bool:
        """True when ``f(1/x) = +-x^k f(x)`` for some integer ``k``."""
        if self.is_zero():
            return True
        m = self.mirror()
        k = self.min_degree() - m.min_degree()
        shifted = m.shift(k)
        return shifted == self or shifted == -self

    def to_text(self) -> str:
        if not self._c:
            return "0"
        parts = []
        for i, e in enumerate(sorted(self._c)):
            a = self._c[e]
            sign = "-" if a < 0 else "+"
            mag = abs(a)
            if e == 0:
                body = str(mag)
            elif mag == 1:
                body = f"{self.var}^{e}"
            else:
                body = f"{mag}*{self.var}^{e}"
            if i == 0:
                parts.append(body if a > 0 else f"-{body}")
            else:
                parts.append(f"{sign} {body}")
        return " ".join(parts)

    def to_json(self) -> dict[str, int]:
        return {str(e): self._c[e] for e in sorted(self._c)}

    @classmethod
    def from_json(cls, data: Mapping[str, int], var: str = "t") -> LaurentPolynomial:
        return cls({int(e): a for e, a in data.items()}, var)

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"LaurentPolynomial({self.to_text()!r}, var={self.var!r})"
