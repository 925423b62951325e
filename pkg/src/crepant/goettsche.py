"""Goettsche's generating function for Hilbert schemes of points on a surface.

For a smooth projective surface X with Betti numbers b_0..b_4, the signed
Poincare polynomials P(X^[n]; z) = sum_i (-1)^i b_i(X^[n]) z^i are produced by
the infinite product

    sum_n P(X^[n]; z) t^n
        = prod_{k>=1} prod_{i=0..4} (1 - z^(2k-2+i) t^k)^((-1)^(i+1) b_i).

Note the sign convention: odd-degree coefficients come out negative.  Only
factors with k <= n contribute to the coefficient of t^n, so truncating the
product in t makes everything finite and exact: negative exponents expand by
the geometric series, positive ones by the binomial theorem.

The case of interest is the abelian surface (b = 1,4,6,4,1); the K3 surface
(b = 1,0,22,0,1) is kept around as a cross-check because its Hilbert-scheme
Betti numbers are tabulated in the literature.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from .poly import IntPoly, Var


@dataclass(frozen=True)
class SurfaceBetti:
    """Betti numbers of a smooth projective surface."""

    b0: int
    b1: int
    b2: int
    b3: int
    b4: int

    def __post_init__(self):
        if self.b0 != 1 or self.b4 != 1:
            raise ValueError("connected surface needs b0 = b4 = 1")
        if self.b1 != self.b3:
            raise ValueError("Poincare duality needs b1 = b3")
        if min(self.b0, self.b1, self.b2, self.b3, self.b4) < 0:
            raise ValueError("Betti numbers are nonnegative")

    @property
    def betti(self) -> tuple[int, int, int, int, int]:
        return (self.b0, self.b1, self.b2, self.b3, self.b4)


ABELIAN = SurfaceBetti(1, 4, 6, 4, 1)
K3 = SurfaceBetti(1, 0, 22, 0, 1)


@dataclass(frozen=True)
class TruncSeries:
    """Power series in t truncated at t^order, coefficients IntPoly in z."""

    coeffs: tuple[IntPoly, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("series needs at least the constant coefficient")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def one(cls, order: int) -> TruncSeries:
        return cls((IntPoly.one(Var.Z),) + (IntPoly.zero(Var.Z),) * order)

    def coeff(self, k: int) -> IntPoly:
        return self.coeffs[k]

    def __add__(self, other: TruncSeries) -> TruncSeries:
        order = min(self.order, other.order)
        return TruncSeries(
            tuple(self.coeffs[k] + other.coeffs[k] for k in range(order + 1))
        )

    def __mul__(self, other: TruncSeries) -> TruncSeries:
        order = min(self.order, other.order)
        out = [IntPoly.zero(Var.Z) for _ in range(order + 1)]
        for i, a in enumerate(self.coeffs[: order + 1]):
            if a.is_zero():
                continue
            for j in range(order + 1 - i):
                b = other.coeffs[j]
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return TruncSeries(tuple(out))

    def inverse(self) -> TruncSeries:
        """Multiplicative inverse; exists iff the constant term is a nonzero
        constant polynomial."""
        c0 = self.coeffs[0]
        if c0.degree != 0:
            raise ValueError("series is invertible only for constant c0 != 0")
        u = Fraction(1) / Fraction(c0.coeff(0))
        inv = [IntPoly.const(u, Var.Z)]
        for k in range(1, self.order + 1):
            acc = IntPoly.zero(Var.Z)
            for j in range(1, k + 1):
                acc = acc + self.coeffs[j] * inv[k - j]
            inv.append(acc * (-u))
        return TruncSeries(tuple(inv))


def _product_factor(a: int, k: int, e: int, order: int) -> TruncSeries:
    """(1 - z^a t^k)^e truncated at t^order; e may be negative."""
    coeffs = [IntPoly.zero(Var.Z) for _ in range(order + 1)]
    if e >= 0:
        jmax = min(e, order // k)
        for j in range(jmax + 1):
            coeffs[k * j] = IntPoly.monomial(a * j, comb(e, j) * (-1) ** j, Var.Z)
    else:
        for j in range(order // k + 1):
            coeffs[k * j] = IntPoly.monomial(a * j, comb(j - e - 1, j), Var.Z)
    return TruncSeries(tuple(coeffs))


def goettsche_series(surface: SurfaceBetti, order: int) -> TruncSeries:
    """Truncation to t^order of the Hilbert-scheme generating product."""
    if order < 1:
        raise ValueError("truncation order must be >= 1")
    acc = TruncSeries.one(order)
    for k in range(1, order + 1):
        for i, b in enumerate(surface.betti):
            if b == 0:
                continue
            e = b if i % 2 == 1 else -b
            acc = acc * _product_factor(2 * k - 2 + i, k, e, order)
    return acc


@lru_cache(maxsize=None)
def _abelian_coeffs(order: int) -> tuple[IntPoly, ...]:
    return goettsche_series(ABELIAN, order).coeffs


def hilb_poincare(n: int) -> IntPoly:
    """Signed Poincare polynomial of the Hilbert scheme of n points on the
    abelian surface: degree 4n, palindromic, coefficients (-1)^i b_i."""
    if n < 1:
        raise ValueError("need n >= 1")
    return _abelian_coeffs(n)[n].assert_integral()


def hilb_times_dual_poincare(n: int) -> IntPoly:
    """Signed Poincare polynomial of (Hilbert scheme) x (dual abelian surface).

    The dual surface contributes (1-z)^4, so the product has degree 4n + 4 and
    vanishes at z = 1 to order at least 4.
    """
    return (hilb_poincare(n) * IntPoly.of([1, -1], Var.Z) ** 4).assert_integral()
