"""Canonical quotients of exact polynomials.

A RatFun is always stored in reduced canonical form: numerator and denominator
coprime, denominator a primitive integral polynomial with positive leading
coefficient.  Equality of values is therefore structural equality, and a value
is a polynomial exactly when its denominator is the constant 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .poly import IntPoly, Var, _div, poly_gcd


@dataclass(frozen=True)
class RatFun:
    num: IntPoly
    den: IntPoly

    def __post_init__(self):
        num, den = self.num, self.den
        num._check_var(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            den = IntPoly.one(den.var)
        else:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num = num.exact_div(g)
                den = den.exact_div(g)
            scale = den.content() * (1 if den.lead > 0 else -1)
            den = den.normalized()
            num = num * _div(1, scale)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    # -- constructors ------------------------------------------------------

    @classmethod
    def of_poly(cls, p: IntPoly) -> RatFun:
        return cls(p, IntPoly.one(p.var))

    @classmethod
    def one(cls, var: Var = Var.Z) -> RatFun:
        return cls(IntPoly.one(var), IntPoly.one(var))

    @classmethod
    def zero(cls, var: Var = Var.Z) -> RatFun:
        return cls(IntPoly.zero(var), IntPoly.one(var))

    # -- arithmetic ---------------------------------------------------------

    @property
    def var(self) -> Var:
        return self.num.var

    def _coerce(self, other) -> RatFun:
        if isinstance(other, RatFun):
            return other
        if isinstance(other, IntPoly):
            return RatFun.of_poly(other)
        if isinstance(other, (int, Fraction)):
            return RatFun.of_poly(IntPoly.const(other, self.var))
        return NotImplemented

    def __add__(self, other) -> RatFun:
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return RatFun(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self) -> RatFun:
        return RatFun(-self.num, self.den)

    def __sub__(self, other) -> RatFun:
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __mul__(self, other) -> RatFun:
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return RatFun(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> RatFun:
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if o.num.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RatFun(self.num * o.den, self.den * o.num)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    # -- polynomiality ------------------------------------------------------

    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def polynomial_part(self) -> tuple[bool, IntPoly | None]:
        """(True, the exact polynomial) iff the reduced denominator is constant."""
        if self.is_polynomial():
            return True, self.num
        return False, None

    def __str__(self) -> str:
        if self.is_polynomial():
            return self.num.to_text()
        return f"({self.num.to_text()}) / ({self.den.to_text()})"


def ratfun_add(a: RatFun, b: RatFun) -> RatFun:
    return a + b


def ratfun_polynomial_part(a: RatFun) -> tuple[bool, IntPoly | None]:
    return a.polynomial_part()
