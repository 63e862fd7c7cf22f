"""Exact Laurent polynomials in one variable with integer coefficients."""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping

__all__ = ["LaurentPolynomial", "interpolate"]


class LaurentPolynomial:
    """Immutable element of ``Z[x, x^-1]``.

    Coefficients are stored sparsely as ``{exponent: coefficient}`` with no
    zero entries.  Python ints give arbitrary precision.  ``var`` only
    affects printing.
    """

    __slots__ = ("_c", "var", "_hash")

    def __init__(self, coefficients: Mapping[int, int] | None = None, var: str = "t"):
        c = {}
        if coefficients:
            for e, v in coefficients.items():
                v = int(v)
                if v:
                    c[int(e)] = v
        self._c = c
        self.var = var
        self._hash = None

    # -- constructors -------------------------------------------------
    @classmethod
    def monomial(cls, coeff: int = 1, exp: int = 1, var: str = "t") -> "LaurentPolynomial":
        return cls({exp: coeff}, var)

    @classmethod
    def constant(cls, value: int, var: str = "t") -> "LaurentPolynomial":
        return cls({0: value}, var)

    @classmethod
    def from_coefficients(cls, coeffs: Iterable[int], low: int = 0, var: str = "t"):
        """Build from a dense list, ``coeffs[i]`` being the coefficient of ``x^(low+i)``."""
        return cls({low + i: c for i, c in enumerate(coeffs)}, var)

    @classmethod
    def parse(cls, text: str, var: str | None = None) -> "LaurentPolynomial":
        """Inverse of :meth:`__str__` (also accepts missing ``1*`` and ``^1``)."""
        s = text.replace(" ", "")
        if var is None:
            m = re.search(r"[A-Za-z]", s)
            var = m.group(0) if m else "t"
        if s in ("", "0"):
            return cls({}, var)
        if s[0] not in "+-":
            s = "+" + s
        s = s.replace("^-", "^~")
        terms = re.findall(r"([+-])([^+-]+)", s)
        out: dict[int, int] = {}
        for sign, body in terms:
            if var in body:
                coeff_part, _, exp_part = body.partition(var)
                coeff_part = coeff_part.rstrip("*")
                coeff = int(coeff_part) if coeff_part else 1
                exp = int(exp_part[1:].replace("~", "-")) if exp_part.startswith("^") else 1
            else:
                coeff, exp = int(body), 0
            if sign == "-":
                coeff = -coeff
            out[exp] = out.get(exp, 0) + coeff
        return cls(out, var)

    # -- basic queries ------------------------------------------------
    @property
    def coefficients(self) -> dict[int, int]:
        return dict(self._c)

    def coefficient(self, exp: int) -> int:
        return self._c.get(exp, 0)

    def is_zero(self) -> bool:
        return not self._c

    @property
    def max_degree(self) -> int:
        return max(self._c)

    @property
    def min_degree(self) -> int:
        return min(self._c)

    @property
    def span(self) -> int:
        return self.max_degree - self.min_degree if self._c else 0

    def terms(self) -> list[tuple[int, int]]:
        """``(exponent, coefficient)`` pairs, highest exponent first."""
        return sorted(self._c.items(), reverse=True)

    def is_unit(self) -> bool:
        """True for ``+-x^k``, the invertible elements."""
        return len(self._c) == 1 and abs(next(iter(self._c.values()))) == 1

    # -- arithmetic ---------------------------------------------------
    def _coerce(self, other) -> "LaurentPolynomial":
        if isinstance(other, LaurentPolynomial):
            return other
        if isinstance(other, int):
            return LaurentPolynomial({0: other}, self.var)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        c = dict(self._c)
        for e, v in other._c.items():
            c[e] = c.get(e, 0) + v
        return LaurentPolynomial(c, self.var)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial({e: -v for e, v in self._c.items()}, self.var)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        c: dict[int, int] = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                e = e1 + e2
                c[e] = c.get(e, 0) + v1 * v2
        return LaurentPolynomial(c, self.var)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if not self.is_unit():
                raise ValueError("only units have negative powers")
            (e, v), = self._c.items()
            return LaurentPolynomial({e * k: v ** (-k)}, self.var)
        result = LaurentPolynomial({0: 1}, self.var)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> "LaurentPolynomial":
        """Multiply by ``x^k``."""
        return LaurentPolynomial({e + k: v for e, v in self._c.items()}, self.var)

    def unit_inverse(self) -> "LaurentPolynomial":
        if not self.is_unit():
            raise ValueError(f"{self} is not a unit")
        (e, v), = self._c.items()
        return LaurentPolynomial({-e: v}, self.var)

    def substitute_power(self, k: int, var: str | None = None) -> "LaurentPolynomial":
        """Replace ``x`` by ``y^k``; ``k`` may be negative."""
        return LaurentPolynomial({e * k: v for e, v in self._c.items()}, var or self.var)

    def exponents_divided(self, d: int, var: str | None = None) -> "LaurentPolynomial":
        """Replace ``x^e`` by ``y^(e/d)``; every exponent must be divisible by ``d``."""
        if any(e % d for e in self._c):
            raise ValueError(f"exponents of {self} not divisible by {d}")
        return LaurentPolynomial({e // d: v for e, v in self._c.items()}, var or self.var)

    def evaluate(self, x: int | Fraction):
        """Exact value at ``x``; an int whenever the result is integral."""
        total = Fraction(0)
        for e, v in self._c.items():
            total += v * Fraction(x) ** e
        return int(total) if total.denominator == 1 else total

    def canonical(self) -> "LaurentPolynomial":
        """Representative of ``self * (+-x^k)``: lowest exponent 0, positive constant."""
        if not self._c:
            return self
        low = self.min_degree
        sign = 1 if self._c[low] > 0 else -1
        return LaurentPolynomial({e - low: sign * v for e, v in self._c.items()}, self.var)

    def is_palindromic(self) -> bool:
        """Symmetric coefficient list, up to a global sign."""
        if not self._c:
            return True
        lo, hi = self.min_degree, self.max_degree
        plus = all(self.coefficient(lo + i) == self.coefficient(hi - i) for i in range(hi - lo + 1))
        minus = all(self.coefficient(lo + i) == -self.coefficient(hi - i) for i in range(hi - lo + 1))
        return plus or minus

    def reflect(self) -> "LaurentPolynomial":
        """``x -> x^-1``."""
        return self.substitute_power(-1)

    # -- comparison / display ------------------------------------------
    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPolynomial({0: other})
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    def __bool__(self):
        return bool(self._c)

    def __str__(self) -> str:
        if not self._c:
            return "0"
        parts = []
        for i, (e, v) in enumerate(self.terms()):
            mag = f"{abs(v)}*{self.var}^{e}"
            if i == 0:
                parts.append(mag if v > 0 else "-" + mag)
            else:
                parts.append(("+ " if v > 0 else "- ") + mag)
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPolynomial({str(self)!r})"


def interpolate(points: list[int], values: list[int], var: str = "t") -> LaurentPolynomial:
    """Exact polynomial through ``(points[i], values[i])`` (Newton form).

    Raises ``ValueError`` if the interpolant does not have integer
    coefficients.
    """
    n = len(points)
    coef = [Fraction(v) for v in values]
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (points[i] - points[i - j])
    # expand Newton form into monomial coefficients
    poly = [Fraction(0)] * n
    for k in range(n - 1, -1, -1):
        # poly = poly * (x - points[k]) + coef[k]
        new = [Fraction(0)] * n
        for i in range(n - 1):
            new[i + 1] += poly[i]
        for i in range(n):
            new[i] -= points[k] * poly[i]
        new[0] += coef[k]
        poly = new
    out = {}
    for i, c in enumerate(poly):
        if c.denominator != 1:
            raise ValueError("interpolant has non-integer coefficients")
        out[i] = int(c)
    return LaurentPolynomial(out, var)


T = LaurentPolynomial.monomial(1, 1, "t")
