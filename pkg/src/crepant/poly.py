"""Exact dense univariate polynomials with rational coefficients.

Coefficients are arbitrary-precision (`int`, promoted to `fractions.Fraction`
only when a division forces it); nothing in this module ever touches floating
point.  Every polynomial carries a variable tag so that quantities living in z
and quantities living in t = z^2 cannot be mixed silently: binary operations
reject mismatched tags, and `to_t` / `to_z` perform the explicit re-indexing.

The zero polynomial is the empty coefficient tuple and has degree -inf, so
that degree(p*q) = degree(p) + degree(q) holds without special cases.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, inf, lcm

NEG_INF = -inf

Coeff = int | Fraction


class Var(enum.Enum):
    """Variable tag.  T semantically denotes z^2 (= uv on the Hodge side)."""

    Z = "z"
    T = "t"


def _exact(c) -> Coeff:
    """Normalize a coefficient: Fractions with denominator 1 collapse to int."""
    if isinstance(c, bool):
        raise TypeError("bool is not a polynomial coefficient")
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    raise TypeError(f"coefficient must be int or Fraction, got {type(c).__name__}")


def _div(a: Coeff, b: Coeff) -> Coeff:
    """Exact division of two coefficients."""
    if isinstance(a, int) and isinstance(b, int):
        return _exact(Fraction(a, b))
    return _exact(Fraction(a) / Fraction(b))


@dataclass(frozen=True)
class IntPoly:
    """Dense univariate polynomial; coeffs[k] is the coefficient of x^k."""

    coeffs: tuple[Coeff, ...]
    var: Var = Var.Z

    def __post_init__(self):
        cs = tuple(_exact(c) for c in self.coeffs)
        while cs and cs[-1] == 0:
            cs = cs[:-1]
        object.__setattr__(self, "coeffs", cs)
        if not isinstance(self.var, Var):
            raise TypeError("var must be a Var tag")

    # -- constructors ------------------------------------------------------

    @classmethod
    def of(cls, coeffs, var: Var = Var.Z) -> IntPoly:
        return cls(tuple(coeffs), var)

    @classmethod
    def zero(cls, var: Var = Var.Z) -> IntPoly:
        return cls((), var)

    @classmethod
    def const(cls, c, var: Var = Var.Z) -> IntPoly:
        return cls((c,), var)

    @classmethod
    def one(cls, var: Var = Var.Z) -> IntPoly:
        return cls((1,), var)

    @classmethod
    def monomial(cls, k: int, c=1, var: Var = Var.Z) -> IntPoly:
        if k < 0:
            raise ValueError("exponent must be nonnegative")
        return cls((0,) * k + (c,), var)

    @classmethod
    def one_minus_pow(cls, m: int, var: Var = Var.Z) -> IntPoly:
        """1 - x^m."""
        if m < 1:
            raise ValueError("power must be positive")
        return cls((1,) + (0,) * (m - 1) + (-1,), var)

    @classmethod
    def geometric(cls, m: int, var: Var = Var.Z) -> IntPoly:
        """1 + x + ... + x^(m-1) = (1 - x^m)/(1 - x)."""
        if m < 0:
            raise ValueError("length must be nonnegative")
        return cls((1,) * m, var)

    # -- basic queries -----------------------------------------------------

    @property
    def degree(self) -> int | float:
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def coeff(self, k: int) -> Coeff:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    @property
    def lead(self) -> Coeff:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.coeffs)

    def assert_integral(self) -> IntPoly:
        """Debug gate: all quantities of geometric meaning here are integral."""
        assert self.is_integral(), f"non-integer coefficients leaked: {self}"
        return self

    def _check_var(self, other: IntPoly) -> None:
        if self.var is not other.var:
            raise ValueError(f"variable mismatch: {self.var.value} vs {other.var.value}")

    # -- ring operations ---------------------------------------------------

    def __add__(self, other) -> IntPoly:
        if isinstance(other, (int, Fraction)):
            other = IntPoly.const(other, self.var)
        if not isinstance(other, IntPoly):
            return NotImplemented
        self._check_var(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(tuple(out), self.var)

    __radd__ = __add__

    def __neg__(self) -> IntPoly:
        return IntPoly(tuple(-c for c in self.coeffs), self.var)

    def __sub__(self, other) -> IntPoly:
        return self + (-other)

    def __rsub__(self, other) -> IntPoly:
        return (-self) + other

    def __mul__(self, other) -> IntPoly:
        if isinstance(other, (int, Fraction)):
            return IntPoly(tuple(c * other for c in self.coeffs), self.var)
        if not isinstance(other, IntPoly):
            return NotImplemented
        self._check_var(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly.zero(self.var)
        out = [0] * (len(a) + len(b) - 1)
        for i, c in enumerate(a):
            if c:
                for j, d in enumerate(b):
                    out[i + j] += c * d
        return IntPoly(tuple(out), self.var)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> IntPoly:
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = IntPoly.one(self.var)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __call__(self, x):
        """Evaluate by Horner's rule; exact for int/Fraction arguments."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return _exact(acc) if isinstance(acc, (int, Fraction)) else acc

    # -- division, gcd, content --------------------------------------------

    def divrem(self, d: IntPoly) -> tuple[IntPoly, IntPoly]:
        """Quotient and remainder over the rationals: self = q*d + r, deg r < deg d."""
        self._check_var(d)
        if d.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        if self.degree < d.degree:
            return IntPoly.zero(self.var), self
        rem = list(self.coeffs)
        dc = d.coeffs
        dn = len(dc)
        lead = dc[-1]
        monic_unit = lead == 1 or lead == -1
        q = [0] * (len(rem) - dn + 1)
        for k in range(len(rem) - dn, -1, -1):
            top = rem[k + dn - 1]
            if top == 0:
                continue
            c = top * lead if monic_unit else _div(top, lead)
            q[k] = c
            for i in range(dn):
                rem[k + i] -= c * dc[i]
        return IntPoly(tuple(q), self.var), IntPoly(tuple(rem[: dn - 1]), self.var)

    def exact_div(self, d: IntPoly) -> IntPoly:
        q, r = self.divrem(d)
        if not r.is_zero():
            raise ValueError(f"not divisible: remainder {r}")
        return q

    def divides(self, other: IntPoly) -> bool:
        return other.divrem(self)[1].is_zero()

    def content(self) -> Fraction:
        """Positive rational c with self = c * primitive integral polynomial."""
        if not self.coeffs:
            return Fraction(0)
        nums = [c if isinstance(c, int) else c.numerator for c in self.coeffs]
        dens = [1 if isinstance(c, int) else c.denominator for c in self.coeffs]
        return Fraction(gcd(*nums), lcm(*dens))

    def primitive(self) -> IntPoly:
        """Integer coefficients with content 1, keeping the sign of the lead."""
        if self.is_zero():
            return self
        c = self.content()
        return IntPoly(tuple(_div(a, c) for a in self.coeffs), self.var)

    def normalized(self) -> IntPoly:
        """Canonical associate: primitive integral with positive leading coefficient."""
        if self.is_zero():
            return self
        p = self.primitive()
        return -p if p.lead < 0 else p

    # -- substitutions -----------------------------------------------------

    def stretch(self, k: int) -> IntPoly:
        """Substitute x -> x^k (exponent dilation), same variable tag."""
        if k < 1:
            raise ValueError("stretch factor must be positive")
        if self.is_zero() or k == 1:
            return self
        out = [0] * (k * (len(self.coeffs) - 1) + 1)
        for i, c in enumerate(self.coeffs):
            out[k * i] = c
        return IntPoly(tuple(out), self.var)

    def to_z(self) -> IntPoly:
        """Re-index a polynomial in t as the even polynomial in z with t = z^2."""
        if self.var is not Var.T:
            raise ValueError("to_z expects a t-polynomial")
        return IntPoly(self.stretch(2).coeffs if self.coeffs else (), Var.Z)

    def to_t(self) -> IntPoly:
        """Inverse of to_z; rejects polynomials with odd-degree terms."""
        if self.var is not Var.Z:
            raise ValueError("to_t expects a z-polynomial")
        if any(c for i, c in enumerate(self.coeffs) if i % 2):
            raise ValueError("polynomial has odd-degree terms, not a function of z^2")
        return IntPoly(self.coeffs[::2], Var.T)

    # -- serialization -----------------------------------------------------

    def __str__(self) -> str:
        return self.to_text()

    def to_text(self) -> str:
        """Canonical text form: ascending exponents, exact coefficients."""
        if self.is_zero():
            return "0"
        x = self.var.value
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                xp = x if i == 1 else f"{x}^{i}"
                body = xp if mag == 1 else f"{mag}*{xp}"
            parts.append(("-" if c < 0 else "+", body))
        sign0, body0 = parts[0]
        text = ("-" if sign0 == "-" else "") + body0
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    _TERM_RE = re.compile(
        r"^(?P<coeff>-?\d+(?:/\d+)?)?(?:(?<=\d)\*)?(?P<var>[a-z])?(?:\^(?P<exp>\d+))?$"
    )

    @classmethod
    def from_text(cls, text: str, var: Var | None = None) -> IntPoly:
        """Parse the canonical text form (also accepts '+ -c*x^k' style terms)."""
        s = text.strip()
        if not s:
            raise ValueError("empty polynomial text")
        s = s.replace("-", "+-").replace(" ", "")
        if s.startswith("+"):
            s = s[1:]
        coeffs: dict[int, Fraction] = {}
        seen_var = None
        for chunk in s.split("+"):
            if not chunk:
                continue
            neg = chunk.startswith("-")
            m = cls._TERM_RE.match(chunk.lstrip("-"))
            if not m:
                raise ValueError(f"cannot parse term {chunk!r}")
            c = Fraction(m["coeff"]) if m["coeff"] else Fraction(1)
            if neg:
                c = -c
            exp = 0
            if m["var"]:
                seen_var = m["var"]
                exp = int(m["exp"]) if m["exp"] else 1
            coeffs[exp] = coeffs.get(exp, Fraction(0)) + c
        if var is None:
            var = Var(seen_var) if seen_var else Var.Z
        deg = max(coeffs) if coeffs else 0
        return cls(tuple(coeffs.get(i, 0) for i in range(deg + 1)), var)

    def to_coeff_strings(self) -> list[str]:
        """Exponent-indexed coefficient strings (arbitrary precision survives JSON)."""
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_coeff_strings(cls, strings, var: Var = Var.Z) -> IntPoly:
        return cls(tuple(Fraction(s) for s in strings), var)


def poly_divrem(p: IntPoly, d: IntPoly) -> tuple[IntPoly, IntPoly]:
    return p.divrem(d)


def poly_mul(p: IntPoly, q: IntPoly) -> IntPoly:
    return p * q


def _pseudo_rem(a: IntPoly, b: IntPoly) -> IntPoly:
    """Pseudo-remainder of integral a by b: lead(b)^(deg a - deg b + 1) * a mod b."""
    scale = IntPoly.const(b.lead ** (a.degree - b.degree + 1), a.var)
    return (scale * a).divrem(b)[1]


def poly_gcd(p: IntPoly, q: IntPoly) -> IntPoly:
    """Greatest common divisor, canonically normalized.

    Subresultant polynomial remainder sequence over the integers; exact and
    with controlled coefficient growth.  The result is primitive with positive
    leading coefficient, so gcd(1 - t^3, 1 - t^5) comes back as t - 1.
    """
    if p.var is not q.var:
        raise ValueError("variable mismatch in gcd")
    if p.is_zero() and q.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    if p.is_zero():
        return q.normalized()
    if q.is_zero():
        return p.normalized()
    a, b = p.primitive(), q.primitive()
    if a.degree < b.degree:
        a, b = b, a
    g, h = 1, 1
    while True:
        delta = int(a.degree - b.degree)
        r = _pseudo_rem(a, b)
        if r.is_zero():
            return b.normalized()
        if b.degree == 0:
            return IntPoly.one(p.var)
        scale = g * h**delta
        a, b = b, IntPoly(tuple(c // scale for c in r.coeffs), r.var)
        g = a.lead
        h = g**delta // h ** (delta - 1) if delta > 0 else h


def poly_gcd_monic(p: IntPoly, q: IntPoly) -> IntPoly:
    """Alternate gcd via the monic Euclidean algorithm over the rationals.

    Kept as an independent route for cross-checking poly_gcd; both must agree
    on the normalized result.
    """
    if p.var is not q.var:
        raise ValueError("variable mismatch in gcd")
    if p.is_zero() and q.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    a, b = p, q
    while not b.is_zero():
        a, b = b, a.divrem(b)[1]
    return a.normalized()


def poly_ext_gcd(p: IntPoly, q: IntPoly) -> tuple[IntPoly, IntPoly, IntPoly]:
    """Extended Euclid over the rationals: returns (g, s, t) with s*p + t*q = g.

    g is normalized like poly_gcd; the cofactors are scaled to match.
    """
    if p.var is not q.var:
        raise ValueError("variable mismatch in extended gcd")
    var = p.var
    old_r, r = p, q
    old_s, s = IntPoly.one(var), IntPoly.zero(var)
    old_t, t = IntPoly.zero(var), IntPoly.one(var)
    while not r.is_zero():
        quo, rem = old_r.divrem(r)
        old_r, r = r, rem
        old_s, s = s, old_s - quo * s
        old_t, t = t, old_t - quo * t
    if old_r.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    norm = old_r.normalized()
    scale = _div(norm.lead, old_r.lead)
    return norm, old_s * scale, old_t * scale
