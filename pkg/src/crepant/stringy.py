"""Assembly of the singular contribution to the stringy E-function and the
polynomiality verdict.

For a normal projective variety with log-terminal singularities, the stringy
E-function is a resolution-independent rational function built from a
normal-crossing resolution: each locally closed exceptional stratum
contributes its E-polynomial weighted by prod_j (1-uv)/(1-(uv)^(a_j+1)) over
the divisors containing it, where a_j are the discrepancies.  A crepant
resolution forces the whole thing to be a polynomial, so a denominator that
survives reduction proves no crepant resolution exists.

Here the discrepancies are (6n-1, 2n-2, 4n-2), hence the denominators are
1 - t^(6n), 1 - t^(2n-1), 1 - t^(4n-1) with t = z^2.  Since the dense smooth
stratum contributes a polynomial, polynomiality of the stringy E-function is
equivalent to polynomiality of the weighted sum over the seven exceptional
strata; that sum is `full_singular_part`, and `full_numerator` is its exact
numerator over the unreduced product of the three denominators.

Two partial quantities are kept alongside because the classical divisibility
argument is phrased through them: `singular_contribution` (optionally
including the D2 term in its shortcut form, which is a polynomial and thus
never changes polynomiality of the partial sum) and `singular_numerator`
(the D2-free numerator).  The shortcut D2 split is NOT the geometric one --
see strata.incidence_swap_split -- and with the true split the D2 term
carries poles of its own; at n = 2 it is the only source of
non-polynomiality, via a doubly-needed cyclotomic shared by two denominator
factors.

Three independent routes decide polynomiality of the full singular part:

  direct      -- normalize the exact rational function (one subresultant-gcd
                 reduction), inspect the denominator;
  cyclotomic  -- compare cyclotomic multiplicities of the exact numerator
                 against the unreduced denominator (the three 1 - t^m share
                 factors, so per-factor division would miscount; multiplicity
                 comparison is unambiguous);
  structured  -- targeted residues: for n >= 3 the D2-free part already fails
                 modulo 1 - t^(2n-1) (four-term reduction, closed-form root
                 analysis of the cofactor, coefficient obstruction from the
                 Hilbert scheme), and the D2 term is checked not to cancel
                 the residue; for n = 2 that route degenerates and the D2
                 stratum alone carries the obstruction.

A verdict is only issued when all three routes agree.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .cyclotomic import cyclo_factor, cyclotomic, eval_mod_cyclotomic
from .goettsche import hilb_poincare, hilb_times_dual_poincare
from .poly import IntPoly, Var, poly_gcd
from .ratfun import RatFun
from .strata import (
    OPEN_STRATA,
    StratumId,
    d2_open_swap_poly,
    isotropic_grassmannian,
    open_strata,
)

METHODS = ("direct", "cyclotomic", "structured")


class MethodDisagreement(RuntimeError):
    """Raised when the verdict routes do not coincide; always a bug."""

    def __init__(self, n: int, diagnostics: dict):
        self.n = n
        self.diagnostics = diagnostics
        super().__init__(f"verdict methods disagree at n={n}: {diagnostics}")


@dataclass(frozen=True)
class Discrepancies:
    """Coefficients of the three exceptional divisors in the discrepancy
    divisor of the desingularization; (a_j + 1) are the denominator exponents
    of the stringy E-function."""

    n: int
    a1: int
    a2: int
    a3: int

    @property
    def exponents(self) -> dict[int, int]:
        """Divisor index -> a_j + 1."""
        return {1: self.a1 + 1, 2: self.a2 + 1, 3: self.a3 + 1}

    def is_terminal(self) -> bool:
        return min(self.a1, self.a2, self.a3) > 0


def discrepancies(n: int) -> Discrepancies:
    """(6n-1, 2n-2, 4n-2) for n >= 2; terminal, in particular log-terminal.

    Cross-checked against the two-step contraction bookkeeping
    (2n-2)*(3,1,2) + (5,0,2), which must give the same triple.
    """
    if n < 2:
        raise ValueError("discrepancy formulas require n >= 2")
    d = Discrepancies(n, 6 * n - 1, 2 * n - 2, 4 * n - 2)
    contraction = tuple(
        (2 * n - 2) * base + extra for base, extra in zip((3, 1, 2), (5, 0, 2))
    )
    assert contraction == (d.a1, d.a2, d.a3), "contraction identity failed"
    assert min(d.a1, d.a2, d.a3) > -1, "stringy E-function needs log-terminal"
    return d


@dataclass(frozen=True)
class SingularContribution:
    """A weighted stratum sum of the stringy E-function at u = v = z."""

    n: int
    value: RatFun
    includes_d2: bool


def _stratum_weight(exponents: dict[int, int], indices) -> RatFun:
    """prod over j in indices of (1 - t) / (1 - t^(a_j+1)), as z-polynomials."""
    out = RatFun.one(Var.Z)
    for j in sorted(indices):
        out = out * RatFun(
            IntPoly.one_minus_pow(2, Var.Z),
            IntPoly.one_minus_pow(2 * exponents[j], Var.Z),
        )
    return out


def standard_denominator(n: int) -> IntPoly:
    """(1 - t^(2n-1)) (1 - t^(4n-1)) (1 - t^(6n)) with t = z^2, as a
    z-polynomial."""
    exps = discrepancies(n).exponents
    out = IntPoly.one(Var.Z)
    for m in sorted(exps.values()):
        out = out * IntPoly.one_minus_pow(2 * m, Var.Z)
    return out


def _numerator_over_standard_denominator(n: int, strata: dict) -> IntPoly:
    """Clear the weighted stratum sum to the unreduced common denominator."""
    exps = discrepancies(n).exponents
    total = IntPoly.zero(Var.Z)
    for sid, poly in strata.items():
        term = poly
        for j, m in exps.items():
            if j in sid.indices:
                term = term * IntPoly.one_minus_pow(2, Var.Z)
            else:
                term = term * IntPoly.one_minus_pow(2 * m, Var.Z)
        total = total + term
    return total.assert_integral()


def singular_contribution(n: int, include_d2: bool = False) -> SingularContribution:
    """Weighted sum over the open exceptional strata, in the classical
    bookkeeping: the D2 term is optional and, when included, uses the
    divisible shortcut value (making it a polynomial, so the flag never
    changes polynomiality of this partial sum).  The full stringy singular
    part is full_singular_part."""
    strata = open_strata(n)
    if not include_d2:
        strata = {s: p for s, p in strata.items() if s is not StratumId.D2_OPEN}
    num = _numerator_over_standard_denominator(n, strata)
    value = RatFun(num, standard_denominator(n))
    return SingularContribution(n, value, include_d2)


def singular_numerator(n: int) -> IntPoly:
    """Exact numerator of the D2-free singular contribution over the
    unreduced standard denominator."""
    strata = open_strata(n)
    del strata[StratumId.D2_OPEN]
    return _numerator_over_standard_denominator(n, strata)


def full_numerator(n: int) -> IntPoly:
    """Exact numerator, over the unreduced standard denominator, of the full
    singular part: all seven open strata with the swap-equivariant D2
    polynomial."""
    return _numerator_over_standard_denominator(n, open_strata(n, swap_d2=True))


def full_singular_part(n: int) -> RatFun:
    """The complete singular contribution to the stringy E-function at
    u = v = z, normalized.  The stringy E-function is a polynomial iff this
    value is."""
    return RatFun(full_numerator(n), standard_denominator(n))


def reduced_numerator_cofactor(n: int) -> IntPoly:
    """The t-polynomial cofactor of the D2-free numerator's reduction modulo
    1 - t^(2n-1).

    Modulo 1 - t^(2n-1), every numerator term carrying that factor drops, and
    the D23 term drops too because its stratum polynomial contains
    (1-t^(2n-1))/(1-t) against a spare (1-t).  What survives is

        (1-t)^2 (1-t^(4n-1)) * [D12 fiber part]
      - (1-t)^2 (1-t^(4n-1)) * [D123 fiber part]
      - (1-t)^2 (1-t^(6n))   * [D123 fiber part]
      + (1-t)^3              * [D123 fiber part]

    with the common P(J^[n] x Jhat; z) stripped off; that polynomial is what
    this function returns (in t).
    """
    if n < 2:
        raise ValueError("need n >= 2")
    g = lambda m: IntPoly.geometric(m, Var.T)
    one_minus = lambda m: IntPoly.one_minus_pow(m, Var.T)
    iso3 = isotropic_grassmannian(3, n + 1)
    iso2 = isotropic_grassmannian(2, n + 1)
    d12_fiber = g(3) * g(3) * iso3
    d123_fiber = g(2) * g(2 * n - 2) * iso2
    om2 = one_minus(1) * one_minus(1)
    return (
        om2 * one_minus(4 * n - 1) * d12_fiber
        - om2 * one_minus(4 * n - 1) * d123_fiber
        - om2 * one_minus(6 * n) * d123_fiber
        + om2 * one_minus(1) * d123_fiber
    ).assert_integral()


def reduced_numerator(n: int) -> IntPoly:
    """Canonical remainder modulo 1 - t^(2n-1) (t = z^2) of the four-term
    expression cofactor * P(J^[n] x Jhat; z); congruent to the D2-free
    numerator."""
    expr = reduced_numerator_cofactor(n).to_z() * hilb_times_dual_poincare(n)
    modulus = IntPoly.one_minus_pow(2 * (2 * n - 1), Var.Z)
    return expr.divrem(modulus)[1]


def cofactor_vanishes_at_root(n: int, d: int) -> bool:
    """Evaluate the reduction cofactor at a primitive d-th root of unity
    alpha (d a divisor > 1 of 2n-1), exactly, in Q[t]/(Phi_d).

    First verifies the closed-form identity

        cofactor(alpha) * (1 + alpha) + alpha (1 - alpha^-1)(1 - alpha^3)^2 = 0

    (valid because alpha^(2n-1) = 1), then reports whether cofactor(alpha)
    is zero -- which happens exactly for d = 3.
    """
    if d <= 1 or (2 * n - 1) % d != 0:
        raise ValueError("d must be a divisor > 1 of 2n-1")
    assert d % 2 == 1, "divisors of the odd number 2n-1 are odd"
    s_bar = eval_mod_cyclotomic(reduced_numerator_cofactor(n), d)
    t = IntPoly.monomial(1, 1, Var.T)
    alpha_inv = IntPoly.monomial(d - 1, 1, Var.T)  # alpha^-1 = alpha^(d-1)
    one = IntPoly.one(Var.T)
    identity = s_bar * (one + t) + t * (one - alpha_inv) * (one - t**3) ** 2
    if not eval_mod_cyclotomic(identity, d).is_zero():
        raise ArithmeticError(f"closed-form identity failed at n={n}, d={d}")
    return s_bar.is_zero()


def coefficient_obstruction(n: int, case: int) -> bool:
    """The coefficient test that blocks divisibility of P(J^[n]; z) by the
    surviving denominator factor.

    Writing P(J^[n]; z) = sum a_i z^i (signed Betti coefficients, degree 4n),
    folding the would-be divisibility down with Poincare duality leaves a
    single linear coefficient that must vanish for divisibility to hold:

        case 1 (3 does not divide n+1):  a_1 - a_(4n-3) + a_(4n-1) = 2 a_1 - a_3
        case 2 (3 divides n+1):          a_1 - a_(4n-7) + a_(4n-1) = 2 a_1 - a_7

    Returns True when the value is nonzero, i.e. the obstruction is present.
    """
    if case not in (1, 2):
        raise ValueError("case must be 1 or 2")
    if n < 3:
        raise ValueError("coefficient obstruction applies for n >= 3")
    if case == 1 and (n + 1) % 3 == 0:
        raise ValueError("case 1 requires 3 not dividing n+1")
    if case == 2 and (n + 1) % 3 != 0:
        raise ValueError("case 2 requires 3 dividing n+1")
    a = hilb_poincare(n).coeff
    k = 3 if case == 1 else 7
    assert a(4 * n - k) == a(k) and a(4 * n - 1) == a(1), "Poincare duality failed"
    return 2 * a(1) - a(k) != 0


@dataclass(frozen=True)
class Witness:
    """Concrete non-divisibility certificate for the full numerator N.

    Phi_d(z) (d = cyclotomic_index) divides the unreduced denominator with
    multiplicity `multiplicity_needed` but divides N only
    `multiplicity_found` times; `residue` is the nonzero remainder of
    N / Phi_d^multiplicity_found modulo Phi_d.  The deficient cyclotomic is
    attributed to the denominator factor 1 - t^factor_exponent, the largest
    exponent m with d | 2m: once every other factor has consumed a copy of
    Phi_d, that factor is the one left not dividing N.
    """

    factor_exponent: int
    cyclotomic_index: int
    multiplicity_found: int
    multiplicity_needed: int
    residue: IntPoly


@dataclass(frozen=True)
class Verdict:
    n: int
    is_polynomial: bool
    witness: Witness | None
    methods: tuple[str, ...]
    timings: dict[str, float]

    def __post_init__(self):
        if not self.is_polynomial and self.witness is None:
            raise ValueError("a negative verdict requires a witness")


def _divisors(m: int) -> list[int]:
    return [d for d in range(1, m + 1) if m % d == 0]


def _denominator_multiplicities(n: int) -> dict[int, int]:
    """Cyclotomic multiplicities (z-convention) of the standard denominator,
    by explicit factoring."""
    fac = cyclo_factor(standard_denominator(n))
    assert fac.remainder.degree == 0, "denominator is a pure cyclotomic product"
    return fac.factors


def _phi_multiplicity(p: IntPoly, d: int) -> tuple[int, IntPoly]:
    """(multiplicity of Phi_d(z) in p, cofactor after dividing them out)."""
    phi = cyclotomic(d, p.var)
    mult = 0
    while True:
        q, r = p.divrem(phi)
        if not r.is_zero():
            return mult, p
        mult += 1
        p = q


def _build_witness(n: int, numerator: IntPoly, d: int, needed: int) -> Witness:
    found, cofactor = _phi_multiplicity(numerator, d)
    assert found < needed, "not actually deficient"
    residue = eval_mod_cyclotomic(cofactor, d)
    assert not residue.is_zero()
    factor = max(m for m in discrepancies(n).exponents.values() if (2 * m) % d == 0)
    return Witness(factor, d, found, needed, residue)


def _method_direct(n: int) -> bool:
    return full_singular_part(n).is_polynomial()


def _method_cyclotomic(n: int, numerator: IntPoly):
    """Multiplicity comparison; returns (is_polynomial, deficiencies) where
    deficiencies lists (d, have, need) sorted by d."""
    have = cyclo_factor(numerator)
    need = _denominator_multiplicities(n)
    deficiencies = [
        (d, have.multiplicity(d), mult)
        for d, mult in sorted(need.items())
        if have.multiplicity(d) < mult
    ]
    return not deficiencies, deficiencies


def _method_structured(n: int, numerator: IntPoly):
    """Targeted residue argument; returns (is_polynomial, Witness).

    n >= 3: the divisor-root analysis of the reduction cofactor (zero exactly
    at third roots of unity), the gcd case split, and the coefficient
    obstruction force the D2-free numerator to a nonzero residue modulo
    Phi_(2(2n-1))(z); the full numerator is then checked to keep that residue
    (the D2 term cannot cancel it).

    n = 2: the route above degenerates -- 2n-1 = 3, the cofactor vanishes
    modulo 1 - t^3, and the D2-free part is an honest polynomial.  The
    obstruction is the D2 stratum itself: its polynomial is not divisible by
    Phi_6(z) while its weight denominator is, and no other stratum
    contributes a Phi_6 pole, so one of the two copies of Phi_6 demanded by
    the denominator pair (1-t^3)(1-t^12) is missing from the numerator.
    """
    d_obstruction = 2 * (2 * n - 1)
    if n == 2:
        for d in _divisors(2 * n - 1):
            if d > 1 and not cofactor_vanishes_at_root(n, d):
                raise ArithmeticError("cofactor should vanish at all roots for n=2")
        if eval_mod_cyclotomic(d2_open_swap_poly(n), 6).is_zero():
            raise ArithmeticError("expected Phi_6 obstruction in the D2 stratum")
        no_d2_mult, _ = _phi_multiplicity(singular_numerator(n), 6)
        if no_d2_mult < 2:
            raise ArithmeticError("D2-free part unexpectedly contributes a pole")
        return False, _build_witness(n, numerator, 6, 2)

    case = 2 if (n + 1) % 3 == 0 else 1
    root_checks = {
        d: cofactor_vanishes_at_root(n, d) for d in _divisors(2 * n - 1) if d > 1
    }
    if any(vanished != (d == 3) for d, vanished in root_checks.items()):
        raise ArithmeticError(f"unexpected cofactor roots at n={n}: {root_checks}")
    expected_gcd = IntPoly.one_minus_pow(3 if case == 2 else 1, Var.T).normalized()
    actual_gcd = poly_gcd(
        IntPoly.one_minus_pow(2 * n - 1, Var.T), reduced_numerator_cofactor(n)
    )
    if actual_gcd != expected_gcd:
        raise ArithmeticError(f"gcd mismatch at n={n}: got {actual_gcd}")
    if not coefficient_obstruction(n, case):
        raise ArithmeticError(f"coefficient obstruction absent at n={n}")
    if eval_mod_cyclotomic(singular_numerator(n), d_obstruction).is_zero():
        raise ArithmeticError(f"expected nonzero D2-free residue at n={n}")
    if eval_mod_cyclotomic(numerator, d_obstruction).is_zero():
        raise ArithmeticError(f"D2 term cancelled the residue at n={n}")
    return False, _build_witness(n, numerator, d_obstruction, 1)


def verdict(n: int) -> Verdict:
    """Decide polynomiality of the stringy E-function by all three routes and
    require agreement.

    Raises MethodDisagreement (never returns a verdict) if the routes differ
    or a structured-route premise fails; both would signal an implementation
    bug, not a mathematical outcome.
    """
    if n < 2:
        raise ValueError("verdicts are defined for n >= 2")
    disc = discrepancies(n)
    assert disc.is_terminal()

    timings: dict[str, float] = {}
    start = time.perf_counter()
    numerator = full_numerator(n)
    timings["numerator"] = time.perf_counter() - start

    start = time.perf_counter()
    poly_direct = _method_direct(n)
    timings["direct"] = time.perf_counter() - start

    start = time.perf_counter()
    poly_cyclo, deficiencies = _method_cyclotomic(n, numerator)
    timings["cyclotomic"] = time.perf_counter() - start

    start = time.perf_counter()
    try:
        poly_structured, witness = _method_structured(n, numerator)
    except ArithmeticError as exc:
        raise MethodDisagreement(n, {"structured_failure": str(exc)}) from exc
    timings["structured"] = time.perf_counter() - start

    answers = {
        "direct": poly_direct,
        "cyclotomic": poly_cyclo,
        "structured": poly_structured,
    }
    if len(set(answers.values())) != 1:
        raise MethodDisagreement(n, {"answers": answers, "deficiencies": deficiencies})
    if not poly_cyclo:
        entry = (witness.cyclotomic_index, witness.multiplicity_found,
                 witness.multiplicity_needed)
        if entry not in deficiencies:
            raise MethodDisagreement(
                n, {"witness": entry, "deficiencies": deficiencies}
            )
    is_poly = poly_direct
    return Verdict(n, is_poly, None if is_poly else witness, METHODS, timings)
