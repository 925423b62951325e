"""Command-line front end.

Subcommands:
  goettsche  -- signed Poincare polynomials of Hilbert schemes of points
  stratum    -- E-polynomial of one exceptional stratum, or the fiber towers
  numerator  -- exact numerator over the standard denominator + factorization
  verdict    -- polynomiality decision for one n
  sweep      -- verdicts over a range of n

All output is UTF-8 text or JSON (schema 1, polynomials as exponent-indexed
coefficient strings so arbitrary precision survives).  Exit codes: 0 success,
2 invalid arguments, 3 internal method disagreement.

CREPANT_JOBS controls sweep parallelism (default 1).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .cyclotomic import cyclo_factor
from .goettsche import ABELIAN, K3, goettsche_series, hilb_poincare
from .poly import IntPoly
from .strata import (
    StratumId,
    bundle_structure_report,
    closed_stratum_poly,
    d2_open_swap_poly,
    expected_stratum_dim,
    open_strata,
)
from .stringy import (
    MethodDisagreement,
    Verdict,
    full_numerator,
    singular_numerator,
    verdict,
)

SCHEMA = 1


def _poly_json(p: IntPoly) -> dict:
    return {"var": p.var.value, "coeffs": p.to_coeff_strings(), "text": p.to_text()}


def _verdict_json(v: Verdict) -> dict:
    out = {
        "schema": SCHEMA,
        "n": v.n,
        "is_polynomial": v.is_polynomial,
        "witness": None,
        "methods": list(v.methods),
        "timings": {k: round(t, 6) for k, t in v.timings.items()},
    }
    if v.witness is not None:
        w = v.witness
        out["witness"] = {
            "factor": f"1 - t^{w.factor_exponent}",
            "factor_exponent": w.factor_exponent,
            "cyclotomic_index": w.cyclotomic_index,
            "multiplicity_found": w.multiplicity_found,
            "multiplicity_needed": w.multiplicity_needed,
            "residue": _poly_json(w.residue),
        }
    return out


def _verdict_line(v: Verdict) -> str:
    if v.is_polynomial:
        return f"n={v.n}: POLYNOMIAL"
    w = v.witness
    return (
        f"n={v.n}: not a polynomial "
        f"(witness: 1 - t^{w.factor_exponent} fails at Phi_{w.cyclotomic_index}(z), "
        f"multiplicity {w.multiplicity_found} < {w.multiplicity_needed})"
    )


def _emit(args, payload):
    text = json.dumps(payload, indent=2) + "\n" if args.format == "json" else payload
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cmd_goettsche(args) -> int:
    surface = K3 if args.surface == "k3" else ABELIAN
    series = goettsche_series(surface, args.n)
    if args.format == "json":
        payload = {
            "schema": SCHEMA,
            "command": "goettsche",
            "surface": args.surface,
            "results": [
                {"n": k, **_poly_json(series.coeff(k))}
                for k in range(1, args.n + 1)
            ],
        }
        _emit(args, payload)
    else:
        lines = [
            f"P[{k}] = {series.coeff(k).to_text()}" for k in range(1, args.n + 1)
        ]
        _emit(args, "\n".join(lines) + "\n")
    return 0


def _stratum_value(sid: StratumId, n: int) -> IntPoly:
    if sid.is_open:
        if sid is StratumId.SMOOTH:
            raise ValueError("the smooth stratum is symbolic; it has no value here")
        return open_strata(n, swap_d2=True)[sid]
    if sid is StratumId.D2:
        raise ValueError(
            "closed D2 has no closed form here; its open part is D2o"
        )
    return closed_stratum_poly(sid, n)


def _cmd_stratum(args) -> int:
    if args.towers:
        towers = bundle_structure_report(args.n)
        if args.format == "json":
            payload = {
                "schema": SCHEMA,
                "command": "towers",
                "n": args.n,
                "towers": [
                    {
                        "stratum": t.stratum.value,
                        "layers": [{"name": l.name, "dim": l.dim} for l in t.layers],
                        "total_dim": t.total_dim,
                        "expected_dim": expected_stratum_dim(t.stratum, args.n),
                    }
                    for t in towers
                ],
            }
            _emit(args, payload)
        else:
            lines = []
            for t in towers:
                expected = expected_stratum_dim(t.stratum, args.n)
                tower = " over ".join(f"{l.name} ({l.dim})" for l in t.layers)
                mark = "ok" if t.total_dim == expected else "MISMATCH"
                lines.append(
                    f"{t.stratum.value:6s} dim {t.total_dim} (expected {expected}, {mark}): {tower}"
                )
            _emit(args, "\n".join(lines) + "\n")
        return 0
    try:
        sid = StratumId(args.id)
    except ValueError:
        print(f"unknown stratum id {args.id!r}", file=sys.stderr)
        return 2
    try:
        value = _stratum_value(sid, args.n)
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return 2
    if args.format == "json":
        _emit(args, {"schema": SCHEMA, "command": "stratum", "n": args.n,
                     "id": sid.value, **_poly_json(value)})
    else:
        _emit(args, f"E({sid.value}; n={args.n}) = {value.to_text()}\n")
    return 0


def _cmd_numerator(args) -> int:
    num = full_numerator(args.n) if args.with_d2 else singular_numerator(args.n)
    fac = cyclo_factor(num)
    if args.format == "json":
        payload = {
            "schema": SCHEMA,
            "command": "numerator",
            "n": args.n,
            "with_d2": args.with_d2,
            "numerator": _poly_json(num),
            "cyclotomic_factors": {str(d): m for d, m in sorted(fac.factors.items())},
            "cofactor": _poly_json(fac.remainder),
        }
        _emit(args, payload)
    else:
        factors = " * ".join(f"Phi_{d}^{m}" if m > 1 else f"Phi_{d}"
                             for d, m in sorted(fac.factors.items()))
        _emit(args, (f"N = {num.to_text()}\n"
                     f"  = ({factors}) * ({fac.remainder.to_text()})\n"))
    return 0


def _cmd_verdict(args) -> int:
    v = verdict(args.n)
    if args.format == "json":
        _emit(args, _verdict_json(v))
    else:
        _emit(args, _verdict_line(v) + "\n")
    return 0


def _sweep_one(n: int) -> Verdict:
    return verdict(n)


def _cmd_sweep(args) -> int:
    ns = list(range(args.start, args.stop + 1))
    jobs = int(os.environ.get("CREPANT_JOBS", "1"))
    if jobs > 1:
        import multiprocessing

        with multiprocessing.Pool(jobs) as pool:
            verdicts = pool.map(_sweep_one, ns)
    else:
        verdicts = [_sweep_one(n) for n in ns]
    polynomial = [v.n for v in verdicts if v.is_polynomial]
    if args.format == "json":
        payload = {
            "schema": SCHEMA,
            "command": "sweep",
            "from": args.start,
            "to": args.stop,
            "verdicts": [_verdict_json(v) for v in verdicts],
            "all_non_polynomial": not polynomial,
        }
        _emit(args, payload)
    else:
        lines = [_verdict_line(v) for v in verdicts]
        if polynomial:
            lines.append(f"summary: POLYNOMIAL at n in {polynomial}")
        else:
            lines.append(
                f"summary: stringy E-function is not a polynomial for any "
                f"n in {args.start}..{args.stop} -- no crepant resolution there"
            )
        _emit(args, "\n".join(lines) + "\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="crepant",
        description=(
            "Exact stringy E-function computations for moduli of rank-2 "
            "sheaves on an abelian surface."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--output", metavar="PATH", default=None)

    p = sub.add_parser("goettsche", help="Hilbert-scheme Poincare polynomials")
    p.add_argument("--n", type=int, required=True, help="expand up to t^n")
    p.add_argument("--surface", choices=("abelian", "k3"), default="abelian")
    common(p)
    p.set_defaults(func=_cmd_goettsche, min_n=1)

    p = sub.add_parser("stratum", help="stratum E-polynomial or fiber towers")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--id", default=None,
                   help="stratum id (D1, D3, D12, D13, D23, D123, "
                        "D1o, D2o, D3o, D12o, D13o, D23o, D123o)")
    p.add_argument("--towers", action="store_true",
                   help="emit the fiber-tower dimension table instead")
    common(p)
    p.set_defaults(func=_cmd_stratum, min_n=2)

    p = sub.add_parser("numerator", help="numerator over the standard denominator")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--with-d2", action="store_true", dest="with_d2",
                   help="include the swap-equivariant D2 term")
    common(p)
    p.set_defaults(func=_cmd_numerator, min_n=2)

    p = sub.add_parser("verdict", help="polynomiality decision for one n")
    p.add_argument("--n", type=int, required=True)
    common(p)
    p.set_defaults(func=_cmd_verdict, min_n=2)

    p = sub.add_parser("sweep", help="verdicts over a range of n")
    p.add_argument("--from", dest="start", type=int, required=True)
    p.add_argument("--to", dest="stop", type=int, required=True)
    common(p)
    p.set_defaults(func=_cmd_sweep, min_n=2)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    n_to_check = getattr(args, "n", None)
    if n_to_check is None and args.command == "sweep":
        n_to_check = min(args.start, args.stop)
        if args.start > args.stop:
            print("empty range: --from exceeds --to", file=sys.stderr)
            return 2
    if n_to_check is not None and n_to_check < args.min_n:
        print(f"need n >= {args.min_n} for {args.command}", file=sys.stderr)
        return 2
    if args.command == "stratum" and not args.towers and args.id is None:
        print("stratum needs --id or --towers", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except MethodDisagreement as exc:
        print(f"internal method disagreement: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
