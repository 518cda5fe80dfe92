"""Rational functions in one variable with exact rational coefficients.

Every value is kept in a canonical form that makes equality a structural
comparison of coefficient tuples:

  * numerator and denominator share no polynomial factor (gcd = 1),
  * both are scaled so their coefficients are coprime integers,
  * the lowest-degree nonzero denominator coefficient is positive.

Power-series coefficients are extracted through the linear recurrence
encoded by the denominator, so expansion is exact to any order.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as _int_gcd
from typing import Union

from .polys import Poly

Operand = Union["RatFun", Poly, int, Fraction]


class RatFun:
    """Immutable quotient of two polynomials, always in canonical form."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        num = _poly_of(num)
        den = _poly_of(den)
        if den.is_zero:
            raise ZeroDivisionError("zero denominator")
        if num.is_zero:
            num, den = Poly(), Poly([1])
        else:
            g = num.gcd(den)
            if g.degree > 0:
                num, den = num // g, den // g
            scale = _joint_content(num, den)
            num = Poly([c / scale for c in num.coeffs])
            den = Poly([c / scale for c in den.coeffs])
            if _lowest_nonzero(den) < 0:
                num, den = -num, -den
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RatFun is immutable")

    # -- queries -------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def __bool__(self) -> bool:
        return not self.num.is_zero

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    # -- field arithmetic ------------------------------------------------

    def __add__(self, other) -> "RatFun":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RatFun(self.num * other.den + other.num * self.den,
                      self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "RatFun":
        return RatFun(-self.num, self.den)

    def __sub__(self, other) -> "RatFun":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "RatFun":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other) -> "RatFun":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RatFun(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RatFun":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero:
            raise ZeroDivisionError("zero divisor")
        return RatFun(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other) -> "RatFun":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    # -- series extraction -------------------------------------------------

    def series(self, order: int) -> list[Fraction]:
        """Maclaurin coefficients of t^0 .. t^order.

        The coefficients c_k are produced by the denominator recurrence
        sum_j den_j * c_{k-j} = num_k, which requires den(0) != 0.
        """
        if order < 0:
            raise ValueError("negative series order")
        d0 = self.den[0]
        if d0 == 0:
            raise ValueError("no Maclaurin expansion")
        dcs = self.den.coeffs
        out: list[Fraction] = []
        for k in range(order + 1):
            acc = self.num[k]
            for j in range(1, min(k, len(dcs) - 1) + 1):
                acc -= dcs[j] * out[k - j]
            out.append(acc / d0)
        return out

    # -- presentation --------------------------------------------------------

    def __repr__(self) -> str:
        return f"RatFun({self.num!r}, {self.den!r})"

    def __str__(self) -> str:
        if self.den == Poly([1]):
            return str(self.num)
        return f"({self.num}) / ({self.den})"

    # -- serialization ---------------------------------------------------------

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, data: dict) -> "RatFun":
        return cls(Poly.from_json(data["num"]), Poly.from_json(data["den"]))


def series_expand(f: RatFun, order: int) -> list[Fraction]:
    """Coefficients of t^0 .. t^order of f; exact, needs den(0) != 0."""
    return f.series(order)


def _poly_of(x) -> Poly:
    if isinstance(x, Poly):
        return x
    if isinstance(x, (int, Fraction)):
        return Poly([x])
    raise TypeError(f"cannot build a polynomial from {type(x).__name__}")


def _coerce(x) -> "RatFun":
    if isinstance(x, RatFun):
        return x
    if isinstance(x, (Poly, int, Fraction)):
        return RatFun(x)
    return NotImplemented


def _lowest_nonzero(p: Poly) -> Fraction:
    for c in p.coeffs:
        if c:
            return c
    return Fraction(0)


def _joint_content(num: Poly, den: Poly) -> Fraction:
    # positive scale making all coefficients of both polynomials coprime ints
    n = 0
    d = 1
    for c in num.coeffs + den.coeffs:
        n = _int_gcd(n, abs(c.numerator))
        d = d * c.denominator // _int_gcd(d, c.denominator)
    return Fraction(n, d)
