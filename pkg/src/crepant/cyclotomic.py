"""Cyclotomic polynomials, cyclotomic trial-division factoring, and arithmetic
in the quotient ring Q[x]/(Phi_d).

The quotient-ring operations are what make root-of-unity arguments exact: to
evaluate an expression at a primitive d-th root of unity alpha, reduce it
modulo Phi_d and use the extended Euclidean inverse for any division.  The
expression vanishes at alpha iff its reduction is the zero polynomial, since
Phi_d is irreducible over Q.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .poly import IntPoly, Var, poly_ext_gcd


@lru_cache(maxsize=None)
def _cyclotomic_coeffs(d: int) -> tuple[int, ...]:
    # Phi_d = (x^d - 1) / prod of Phi_e over proper divisors e of d.
    poly = IntPoly.of([-1] + [0] * (d - 1) + [1], Var.T)
    for e in range(1, d):
        if d % e == 0:
            poly = poly.exact_div(IntPoly.of(_cyclotomic_coeffs(e), Var.T))
    return poly.coeffs


def cyclotomic(d: int, var: Var = Var.T) -> IntPoly:
    """The d-th cyclotomic polynomial Phi_d, monic with integer coefficients."""
    if d < 1:
        raise ValueError("cyclotomic index must be positive")
    return IntPoly.of(_cyclotomic_coeffs(d), var)


@dataclass(frozen=True)
class CycloFactorization:
    """p = remainder * prod over d of Phi_d^multiplicity."""

    factors: dict[int, int]
    remainder: IntPoly

    def reconstruct(self, var: Var | None = None) -> IntPoly:
        var = var or self.remainder.var
        out = self.remainder
        for d, mult in self.factors.items():
            out = out * cyclotomic(d, var) ** mult
        return out

    def multiplicity(self, d: int) -> int:
        return self.factors.get(d, 0)


def cyclo_factor(p: IntPoly) -> CycloFactorization:
    """Peel off every cyclotomic factor Phi_d with index d up to degree(p).

    The remainder is the cyclotomic-free cofactor (relative to that index
    bound); the factorization reconstructs the input exactly.
    """
    if p.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    factors: dict[int, int] = {}
    rem = p
    bound = int(p.degree)
    for d in range(1, bound + 1):
        phi = cyclotomic(d, p.var)
        if phi.degree > rem.degree:
            continue
        while True:
            q, r = rem.divrem(phi)
            if not r.is_zero():
                break
            factors[d] = factors.get(d, 0) + 1
            rem = q
            if phi.degree > rem.degree:
                break
    return CycloFactorization(factors, rem)


def eval_mod_cyclotomic(p: IntPoly, d: int) -> IntPoly:
    """Canonical representative of p in Q[x]/(Phi_d); degree < phi(d)."""
    if d < 2:
        raise ValueError("need d >= 2 for a nontrivial quotient ring")
    return p.divrem(cyclotomic(d, p.var))[1]


def invert_mod_cyclotomic(p: IntPoly, d: int) -> IntPoly:
    """Inverse of p in Q[x]/(Phi_d) via extended Euclid.

    Raises ValueError when p is not coprime to Phi_d (i.e. p vanishes at a
    primitive d-th root of unity).
    """
    if d < 2:
        raise ValueError("need d >= 2 for a nontrivial quotient ring")
    phi = cyclotomic(d, p.var)
    g, s, _ = poly_ext_gcd(p, phi)
    if g.degree != 0:
        raise ValueError(f"not invertible modulo Phi_{d}: shares factor {g}")
    inv = s * (Fraction(1) / Fraction(g.coeff(0)))
    return inv.divrem(phi)[1]


def divide_mod_cyclotomic(num: IntPoly, den: IntPoly, d: int) -> IntPoly:
    """num / den in Q[x]/(Phi_d)."""
    return eval_mod_cyclotomic(num * invert_mod_cyclotomic(den, d), d)
