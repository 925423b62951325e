"""E-polynomials of the exceptional strata of the desingularized moduli space.

The moduli space M of semistable rank-2 sheaves with trivial determinant and
second Chern class 2n on an abelian surface (n >= 2) has a desingularization
by three blow-ups, with normal-crossing exceptional divisors D1, D2, D3.  Each
divisor fibers in towers of projective bundles and isotropic Grassmannian
bundles over J^[n] x Jhat (Hilbert scheme of n points times the dual surface),
so its Hodge-Deligne polynomial specialized at u = v = z factors as

    (fiber polynomial in q) x (Grassmannian polynomial in q) x P(J^[n] x Jhat; z)

with q = uv = z^2.  This module transcribes those closed forms, derives the
locally closed (open) strata by inclusion-exclusion, and handles the one
genuinely different stratum: the open part of D2, a free involution quotient
of an incidence-variety bundle over (J^[n] x Jhat)^2 minus the diagonal.

Everything is exact; q-polynomials live in the T variable tag and are
re-indexed to z before mixing with genuinely odd polynomials.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .goettsche import hilb_poincare, hilb_times_dual_poincare
from .poly import IntPoly, Var


class StratumId(enum.Enum):
    """The seven closed intersections and eight locally closed strata.

    SMOOTH stands for the stable locus, whose E-polynomial is unknown here; it
    is carried symbolically and never evaluated (it is a polynomial, so it
    cannot affect any polynomiality verdict).
    """

    D1 = "D1"
    D2 = "D2"
    D3 = "D3"
    D12 = "D12"
    D13 = "D13"
    D23 = "D23"
    D123 = "D123"
    D1_OPEN = "D1o"
    D2_OPEN = "D2o"
    D3_OPEN = "D3o"
    D12_OPEN = "D12o"
    D13_OPEN = "D13o"
    D23_OPEN = "D23o"
    D123_OPEN = "D123o"
    SMOOTH = "smooth"

    @property
    def is_open(self) -> bool:
        return self.value.endswith("o") or self is StratumId.SMOOTH

    @property
    def indices(self) -> frozenset[int]:
        """Which of the three divisors cut out this stratum."""
        if self is StratumId.SMOOTH:
            return frozenset()
        return frozenset(int(ch) for ch in self.value.strip("Do"))

    @property
    def closure(self) -> StratumId:
        if self is StratumId.SMOOTH:
            raise ValueError("the smooth stratum is dense, not a divisor stratum")
        return StratumId(self.value.rstrip("o"))

    @property
    def open_part(self) -> StratumId:
        if self.is_open:
            return self
        return StratumId(self.value + "o")


CLOSED_STRATA = (
    StratumId.D1,
    StratumId.D2,
    StratumId.D3,
    StratumId.D12,
    StratumId.D13,
    StratumId.D23,
    StratumId.D123,
)
OPEN_STRATA = tuple(s.open_part for s in CLOSED_STRATA)


def isotropic_grassmannian(k: int, n: int) -> IntPoly:
    """Hodge-Deligne polynomial (in q) of the Grassmannian of isotropic
    k-planes in a 2n-dimensional symplectic vector space:

        prod_{1 <= i <= k} (1 - q^(2n-2k+2i)) / (1 - q^i).

    Palindromic, positive, of degree k(2n-2k) + k(k+1)/2 = the complex
    dimension.  Callers working inside a symplectic space of dimension 2n+2
    pass n+1 here.
    """
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    num = IntPoly.one(Var.T)
    den = IntPoly.one(Var.T)
    for i in range(1, k + 1):
        num = num * IntPoly.one_minus_pow(2 * n - 2 * k + 2 * i, Var.T)
        den = den * IntPoly.one_minus_pow(i, Var.T)
    return num.exact_div(den).assert_integral()


def incidence_poincare(n: int) -> tuple[IntPoly, IntPoly, IntPoly]:
    """Signed Poincare polynomial (in z) of the incidence variety
    {(p, H) : p in H} in P^(2n-1) x (P^(2n-1))*, plus the formal splitting
    obtained by pairing monomial representatives across the defining relation:
    P = (1+z^2) P+ and P- = z^2 P+.

    Both halves of this splitting are divisible by (1-(z^2)^(2n-1))/(1-z^2),
    which is what the classical middle-stratum shortcut rests on.  Beware:
    this is NOT the eigenspace decomposition of the geometric swap involution
    (that one is incidence_swap_split, and it is not divisible); the top
    cohomology class here lands in the minus part, which no holomorphic
    involution allows.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    p = (IntPoly.geometric(2 * n, Var.T) * IntPoly.geometric(2 * n - 1, Var.T)).to_z()
    p_plus = p.exact_div(IntPoly.of([1, 0, 1], Var.Z))
    p_minus = p_plus * IntPoly.monomial(2, 1, Var.Z)
    return p, p_plus, p_minus


def incidence_swap_split(n: int) -> tuple[IntPoly, IntPoly]:
    """Eigenspace decomposition (in z) of the swap involution acting on the
    cohomology of the incidence variety.

    The incidence pairing between the two projective factors is alternating
    (it comes from a symplectic form), so the involution fixes the full
    diagonal P^(2n-1) and the cohomology relation carries alternating signs:
    b^(2n-1) = sum_{k>=1} (-1)^(k+1) a^k b^(2n-1-k).  Diagonalizing the swap
    on the resulting monomial basis gives, with h_k = (1-z^(4k))/(1-z^4),

        P+ = (1+z^2) h_n^2,        P- = z^2 (1+z^2) h_(n-1) h_n.

    Checks: P+ + P- reproduces the full Poincare polynomial; the fundamental
    class sits in P+; and the equivariant Euler characteristic
    P+(1) - P-(1) = 2n matches the fixed-locus count chi(P^(2n-1)) = 2n.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    h = lambda k: IntPoly.geometric(k, Var.T).stretch(2)
    one_plus = IntPoly.of([1, 1], Var.T)
    p_plus = (one_plus * h(n) * h(n)).to_z()
    p_minus = (IntPoly.monomial(1, 1, Var.T) * one_plus * h(n - 1) * h(n)).to_z()
    return p_plus, p_minus


def _fiber_factor(stratum: StratumId, n: int) -> IntPoly:
    """The projective-bundle part of a closed stratum's E-polynomial, in q.

    D1's fiber is P^5 blown up along a Veronese P^2, accounting for the
    E(P^5) - E(P^2) + E(P^2)^2 shape of its factor.
    """
    g = lambda m: IntPoly.geometric(m, Var.T)
    if stratum is StratumId.D1:
        return g(6) - g(3) + g(3) * g(3)
    if stratum is StratumId.D3:
        return g(2 * n - 1) * g(3)
    if stratum is StratumId.D12:
        return g(3) * g(3)
    if stratum is StratumId.D23:
        return g(2 * n - 1) * g(2)
    if stratum is StratumId.D13:
        return g(3) * g(2 * n - 2)
    if stratum is StratumId.D123:
        return g(2) * g(2 * n - 2)
    raise ValueError(f"no closed-form fiber factor for {stratum}")


def _grassmannian_factor(stratum: StratumId, n: int) -> IntPoly:
    if stratum in (StratumId.D1, StratumId.D12):
        return isotropic_grassmannian(3, n + 1)
    return isotropic_grassmannian(2, n + 1)


def closed_stratum_poly(stratum: StratumId, n: int) -> IntPoly:
    """E-polynomial at u = v = z of a closed stratum (D2 excluded: only its
    open part has a usable closed form; see d2_open_poly)."""
    if n < 2:
        raise ValueError("strata formulas require n >= 2")
    if stratum is StratumId.D2:
        raise ValueError("closed D2 has no closed-form E-polynomial here")
    if stratum not in CLOSED_STRATA:
        raise ValueError(f"{stratum} is not a closed stratum")
    fiber = _fiber_factor(stratum, n) * _grassmannian_factor(stratum, n)
    return (fiber.to_z() * hilb_times_dual_poincare(n)).assert_integral()


def swap_split(x: IntPoly) -> tuple[IntPoly, IntPoly]:
    """E-polynomials of the +/- eigenspaces of the swap action on X x X,
    given x = E(X; z, z):

        E+ = (x(z)^2 + x(z^2)) / 2,    E- = (x(z)^2 - x(z^2)) / 2.

    The sign bookkeeping of compactly-supported cohomology makes both exact
    integral polynomials; E+ + E- = x^2 and E+ - E- = x(z^2) identically.
    """
    square = x * x
    diag = x.stretch(2)
    half = Fraction(1, 2)
    return (square + diag) * half, (square - diag) * half


def _d2_open_from_split(n: int, p_plus: IntPoly, p_minus: IntPoly) -> IntPoly:
    x = hilb_times_dual_poincare(n)
    plus, minus = swap_split(x)
    return ((plus - x) * p_plus + minus * p_minus).assert_integral()


def d2_open_poly(n: int) -> IntPoly:
    """The classical shortcut value for the open part of D2.

    The open part is a free involution quotient of an incidence-variety bundle
    over (J^[n] x Jhat)^2 minus the diagonal, the involution swapping the two
    base factors and the two projective factors of the fiber.  Its cohomology
    is the invariant part, so with x = P(J^[n] x Jhat; z):

        E+(base) P+(fiber) + E-(base) P-(fiber)

    where E+/-(base) come from swap_split(x) with the diagonal (pointwise
    fixed, hence fully invariant) removed from the + part.  This function
    feeds the fiber split of incidence_poincare into that formula; both of
    its halves are divisible by (1-(z^2)^(2n-1))/(1-z^2), so the same holds
    for the result.  That split is formal, not the involution's eigenspace
    decomposition -- d2_open_swap_poly computes the actual E-polynomial, and
    only that variant makes the assembled closed D2 palindromic of degree
    2(8n+1) as a projective divisor must be.
    """
    if n < 2:
        raise ValueError("strata formulas require n >= 2")
    _, p_plus, p_minus = incidence_poincare(n)
    return _d2_open_from_split(n, p_plus, p_minus)


def d2_open_swap_poly(n: int) -> IntPoly:
    """E-polynomial at u = v = z of the open part of D2, using the swap
    involution's true eigenspace split of the incidence fiber.

    This is the value that enters polynomiality decisions.  Unlike the
    shortcut variant it is not divisible by (1-(z^2)^(2n-1))/(1-z^2), so the
    D2 term of the stringy E-function genuinely contributes poles.
    """
    if n < 2:
        raise ValueError("strata formulas require n >= 2")
    p_plus, p_minus = incidence_swap_split(n)
    return _d2_open_from_split(n, p_plus, p_minus)


def open_strata(n: int, *, swap_d2: bool = False) -> dict[StratumId, IntPoly]:
    """E-polynomials of all seven locally closed divisor strata.

    The divisors are normal crossing, so each open stratum is its closure
    minus the deeper intersections and additivity of E-polynomials gives the
    inclusion-exclusion below.  The dense smooth stratum stays symbolic.

    swap_d2 selects the D2 variant: False (default) uses the divisible
    shortcut value d2_open_poly, True the swap-equivariant d2_open_swap_poly.
    The polynomiality verdict always uses the latter.
    """
    if n < 2:
        raise ValueError("strata formulas require n >= 2")
    e = {s: closed_stratum_poly(s, n) for s in CLOSED_STRATA if s is not StratumId.D2}
    out = {
        StratumId.D1_OPEN: e[StratumId.D1]
        - e[StratumId.D12]
        - e[StratumId.D13]
        + e[StratumId.D123],
        StratumId.D2_OPEN: d2_open_swap_poly(n) if swap_d2 else d2_open_poly(n),
        StratumId.D3_OPEN: e[StratumId.D3]
        - e[StratumId.D13]
        - e[StratumId.D23]
        + e[StratumId.D123],
        StratumId.D12_OPEN: e[StratumId.D12] - e[StratumId.D123],
        StratumId.D13_OPEN: e[StratumId.D13] - e[StratumId.D123],
        StratumId.D23_OPEN: e[StratumId.D23] - e[StratumId.D123],
        StratumId.D123_OPEN: e[StratumId.D123],
    }
    return out


@dataclass(frozen=True)
class FiberLayer:
    name: str
    dim: int


@dataclass(frozen=True)
class StratumTower:
    """Fiber-tower description of a stratum with dimension bookkeeping."""

    stratum: StratumId
    layers: tuple[FiberLayer, ...]

    @property
    def total_dim(self) -> int:
        return sum(layer.dim for layer in self.layers)


def _iso_dim(k: int, two_m: int) -> int:
    return k * (two_m - 2 * k) + k * (k + 1) // 2


def bundle_structure_report(n: int) -> tuple[StratumTower, ...]:
    """Fiber towers of the divisor strata, for dimension cross-checking.

    Every divisor must have total dimension dim M - 1 = 8n + 1, and each
    extra intersection drops the dimension by one (normal crossings).
    """
    if n < 2:
        raise ValueError("strata formulas require n >= 2")
    base = FiberLayer(f"J^[{n}] x dual surface", 2 * n + 2)
    pairs_base = FiberLayer(f"(J^[{n}] x dual surface)^2 - diagonal", 4 * n + 4)
    gr3 = FiberLayer(f"isotropic Gr(3, {2 * n + 2})", _iso_dim(3, 2 * n + 2))
    gr2 = FiberLayer(f"isotropic Gr(2, {2 * n + 2})", _iso_dim(2, 2 * n + 2))
    towers = (
        StratumTower(
            StratumId.D1, (FiberLayer("P^5 blown up along P^2", 5), gr3, base)
        ),
        StratumTower(
            StratumId.D2_OPEN,
            (FiberLayer(f"incidence variety in (P^{2 * n - 1})^2", 4 * n - 3), pairs_base),
        ),
        StratumTower(
            StratumId.D3,
            (
                FiberLayer(f"P^{2 * n - 2}", 2 * n - 2),
                FiberLayer("P^2", 2),
                gr2,
                base,
            ),
        ),
        StratumTower(StratumId.D12, (FiberLayer("P^2 x P^2", 4), gr3, base)),
        StratumTower(StratumId.D13, (FiberLayer("P^2 x P^2", 4), gr3, base)),
        StratumTower(
            StratumId.D23,
            (
                FiberLayer(f"P^{2 * n - 2}", 2 * n - 2),
                FiberLayer("P^1", 1),
                gr2,
                base,
            ),
        ),
        StratumTower(StratumId.D123, (FiberLayer("P^1 x P^2", 3), gr3, base)),
    )
    return towers


def expected_stratum_dim(stratum: StratumId, n: int) -> int:
    """dim M - (number of divisors containing the stratum); dim M = 8n + 2."""
    return 8 * n + 2 - len(stratum.indices)
