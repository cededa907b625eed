"""cuspgate command-line interface.

Every subcommand prints a single JSON record {subcommand, input, result,
version} with sorted keys, so reruns are byte-identical.  Integers of
magnitude >= 2^53 and all exact rationals are rendered as decimal strings
to survive JSON consumers with double-precision ints.  Domain errors
(ValueError from the library) exit 1; usage errors exit 2 (argparse).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction

from . import __version__
from .arith import factor
from .atkin_lehner import ALElement, admissible_sign_assignments, al_fixed_point_exists
from .cusps import (
    CuspDivisor,
    SquarefreeLevel,
    apply_2_old_projection,
    cuspidal_group_structure,
    divisor_order,
    is_principal,
    ogg_order,
)
from .curves import Transform, WeierstrassModel, apply_transform, two_torsion_structure
from .eta import EtaExponents, divisor_of_eta_quotient, ligozat_check
from .gates import gate_nonsemistable, gate_pq_refined, gate_squarefree
from .searches import (
    search_2p_family,
    search_4pq_family,
    search_8p_family,
    search_neumann_setzer,
    verify_z2z4_classification,
)
from .tate import conductor, tate_algorithm

_BIG = 2**53


def _encode(x):
    """Make a value JSON-safe: big ints and all Fractions become strings."""
    if isinstance(x, bool) or x is None or isinstance(x, str):
        return x
    if isinstance(x, int):
        return str(x) if abs(x) >= _BIG else x
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, dict):
        return {str(k): _encode(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_encode(v) for v in x]
    raise TypeError(f"cannot encode {type(x).__name__}")


def _parse_fractions(text: str, expected: int, what: str) -> tuple[Fraction, ...]:
    try:
        vals = tuple(Fraction(tok.strip()) for tok in text.split(","))
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"cannot parse {what}: {exc}") from None
    if len(vals) != expected:
        raise ValueError(f"{what} needs {expected} comma-separated entries, got {len(vals)}")
    return vals


def _parse_curve(text: str) -> WeierstrassModel:
    toks = [tok.strip() for tok in text.split(",")]
    if len(toks) not in (2, 5):
        raise ValueError("curve must be a1,a2,a3,a4,a6 (or the short a4,a6)")
    try:
        return WeierstrassModel.from_coefficients([Fraction(t) for t in toks])
    except ZeroDivisionError as exc:
        raise ValueError(f"cannot parse curve: {exc}") from None


def _parse_signs(text: str, level: SquarefreeLevel) -> tuple[int, ...]:
    if any(ch not in "+-" for ch in text):
        raise ValueError("signs must be a string over '+' and '-'")
    if len(text) != level.t:
        raise ValueError(f"level {level.n} needs {level.t} signs, got {len(text)}")
    return tuple(1 if ch == "+" else -1 for ch in text)


def _model_list(e: WeierstrassModel | None):
    return None if e is None else list(e.coefficients())


def _divisor_pairs(w) -> list[list]:
    return [[str(d), w.coeffs[k]] for k, d in enumerate(w.level.divisors)]


# -- subcommand handlers -----------------------------------------------------


def _cmd_cusp_order(args) -> dict:
    level = SquarefreeLevel.of(args.level)
    if args.signs is not None:
        if args.project_2_old:
            raise ValueError("--project-2-old needs an explicit --divisor")
        signs = _parse_signs(args.signs, level)
        return {"order": ogg_order(level, signs)}
    coeffs = _parse_fractions(args.divisor, len(level.divisors), "--divisor")
    w = CuspDivisor(level, coeffs)
    if args.project_2_old:
        w = apply_2_old_projection(w)
        return {
            "order": divisor_order(w),
            "principal": is_principal(w),
            "projected_coefficients": _divisor_pairs(w),
            "projected_level": w.level.n,
        }
    return {"order": divisor_order(w), "principal": is_principal(w)}


def _cmd_cusp_group(args) -> dict:
    level = SquarefreeLevel.of(args.level)
    invariants = cuspidal_group_structure(level)
    order = 1
    for d in invariants:
        order *= d
    return {"invariants": list(invariants), "order": order}


def _cmd_eta_check(args) -> dict:
    level = SquarefreeLevel.of(args.level)
    r = EtaExponents(level, _parse_fractions(args.exponents, len(level.divisors), "--exponents"))
    verdict = ligozat_check(r)
    return {"failed_conditions": list(verdict.failed), "ok": verdict.ok}


def _cmd_eta_divisor(args) -> dict:
    level = SquarefreeLevel.of(args.level)
    r = EtaExponents(level, _parse_fractions(args.exponents, len(level.divisors), "--exponents"))
    return {"coefficients": _divisor_pairs(divisor_of_eta_quotient(r))}


def _cmd_al_fixed(args) -> dict:
    level = SquarefreeLevel.of(args.level)
    w = ALElement(level, args.r)
    return {"fixed_points": al_fixed_point_exists(w)}


def _cmd_al_signs(args) -> dict:
    level = SquarefreeLevel.of(args.level)
    assignments = admissible_sign_assignments(level, composite_rule=args.composite_rule)
    return {
        "assignments": [
            [{"prime": p, "sign": s} for p, s in zip(level.primes, a.signs)]
            for a in assignments
        ],
        "count": len(assignments),
    }


def _cmd_gate(args) -> dict:
    n = args.level
    if n >= 2 and not factor(n).is_squarefree():
        verdict = gate_nonsemistable(n)
        which = "nonsemistable"
    else:
        verdict = gate_squarefree(n)
        which = "squarefree"
    return {
        "data": dict(verdict.data),
        "gate": which,
        "passed": verdict.passed,
        "reasons": list(verdict.reasons),
    }


def _cmd_gate_pq(args) -> dict:
    verdict = gate_pq_refined(args.p, args.q)
    return {
        "data": dict(verdict.data),
        "passed": verdict.passed,
        "reasons": list(verdict.reasons),
    }


_SEARCHES = {
    "neumann-setzer": lambda args: search_neumann_setzer(args.bound, jobs=args.jobs),
    "2p": lambda args: search_2p_family(args.bound, jobs=args.jobs),
    "8p": lambda args: search_8p_family(args.bound, jobs=args.jobs),
    "4pq": lambda args: search_4pq_family(args.bound, difference=args.difference, jobs=args.jobs),
    "z2z4": lambda args: verify_z2z4_classification(args.bound, jobs=args.jobs),
}


def _hit_dict(h) -> dict:
    return {
        "conductor": h.conductor,
        "curve": _model_list(h.curve),
        "family": h.family,
        "params": dict(h.params),
        "tags": list(h.tags),
    }


def _cmd_search(args):
    out = _SEARCHES[args.family](args)
    if args.family == "z2z4":
        result = {
            "bound": out.bound,
            "conductors": list(out.conductors),
            "hits": [_hit_dict(h) for h in out.hits],
            "two_prime_case_empty": out.two_prime_case_empty,
        }
        hits = out.hits
    else:
        result = [_hit_dict(h) for h in out]
        hits = out
    if args.csv:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["family", "params", "tags", "curve", "conductor"])
        for h in hits:
            writer.writerow(
                [
                    h.family,
                    ";".join(f"{k}={v}" for k, v in h.params),
                    ";".join(h.tags),
                    "" if h.curve is None else ",".join(str(a) for a in h.curve.coefficients()),
                    "" if h.conductor is None else str(h.conductor),
                ]
            )
        return buf.getvalue()
    return result


def _cmd_tate(args) -> dict:
    e = _parse_curve(args.curve)
    if not e.is_integral():
        raise ValueError("tate needs an integral model; clear denominators first")
    res = tate_algorithm(e, args.p)
    return {
        "c": res.c,
        "f": res.f,
        "kodaira": res.kodaira,
        "m": res.m,
        "minimal": res.minimal,
        "minimal_model": _model_list(res.model),
        "n": res.n,
        "p": res.p,
        "split": res.split,
        "transform": [res.transform.u, res.transform.r, res.transform.s, res.transform.t],
        "v_disc": res.v_disc,
    }


def _cmd_conductor(args) -> dict:
    e = _parse_curve(args.curve)
    e = e.integral_model()[0]
    local = []
    n = 1
    for p in factor(abs(int(e.disc))).primes():
        res = tate_algorithm(e, p)
        n *= p**res.f
        if res.f:
            local.append({"f": res.f, "kodaira": res.kodaira, "p": p})
    assert n == conductor(e)
    return {"conductor": n, "local": local}


def _cmd_torsion2(args) -> dict:
    tor = two_torsion_structure(_parse_curve(args.curve))
    return {"label": tor.label, "roots": [str(r) for r in tor.roots]}


def _cmd_curve_transform(args) -> dict:
    e = _parse_curve(args.curve)
    t = Transform(Fraction(args.u), Fraction(args.r), Fraction(args.s), Fraction(args.t))
    out = apply_transform(e, t)
    return {"discriminant": Fraction(out.disc), "model": _model_list(out)}


# -- parser ------------------------------------------------------------------


def _build_parser(default_jobs: int) -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cuspgate",
        description="cuspidal divisor groups, eta quotients, reduction types "
        "and parity gates for modular degrees",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add(name, handler, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(handler=handler)
        return p

    p = add("cusp-order", _cmd_cusp_order, "order of a degree-zero cuspidal divisor")
    p.add_argument("--level", type=int, required=True)
    which = p.add_mutually_exclusive_group(required=True)
    which.add_argument("--signs", help="one of +/- per prime factor, ascending")
    which.add_argument("--divisor", help="comma list of coefficients, divisors ascending")
    p.add_argument("--project-2-old", action="store_true", dest="project_2_old")

    p = add("cusp-group", _cmd_cusp_group, "invariant factors of the cuspidal group")
    p.add_argument("--level", type=int, required=True)

    p = add("eta-check", _cmd_eta_check, "test an eta exponent family for modularity")
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--exponents", required=True, help="comma list, divisors ascending")

    p = add("eta-divisor", _cmd_eta_divisor, "cuspidal divisor of an eta quotient")
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--exponents", required=True, help="comma list, divisors ascending")

    p = add("al-fixed", _cmd_al_fixed, "does w_r fix a point of X0(N)?")
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--r", type=int, required=True)

    p = add("al-signs", _cmd_al_signs, "sign patterns not excluded at this level")
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--composite-rule", action="store_true", dest="composite_rule")

    p = add("gate", _cmd_gate, "parity gate for a level (dispatches on square-freeness)")
    p.add_argument("--level", type=int, required=True)

    p = add("gate-pq", _cmd_gate_pq, "refined gate for odd pq levels")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)

    p = add("search", _cmd_search, "run a family scan")
    p.add_argument("--family", choices=sorted(_SEARCHES), required=True)
    p.add_argument("--bound", type=int, required=True, help="k_max for 2p, p_max for 8p")
    p.add_argument("--difference", type=int, default=8, help="4pq only: gap 4 or 8")
    p.add_argument("--jobs", type=int, default=default_jobs)
    p.add_argument("--csv", action="store_true", help="emit CSV rows instead of JSON")

    p = add("tate", _cmd_tate, "reduction type of an integral model at p")
    p.add_argument("--curve", required=True, help="a1,a2,a3,a4,a6")
    p.add_argument("--p", type=int, required=True)

    p = add("conductor", _cmd_conductor, "conductor with per-prime exponents")
    p.add_argument("--curve", required=True)

    p = add("torsion2", _cmd_torsion2, "rational 2-torsion structure")
    p.add_argument("--curve", required=True)

    p = add("curve-transform", _cmd_curve_transform, "apply (u,r,s,t) to a model")
    p.add_argument("--curve", required=True)
    p.add_argument("--u", default="1")
    p.add_argument("--r", default="0")
    p.add_argument("--s", default="0")
    p.add_argument("--t", default="0")

    return parser


def main(argv=None) -> int:
    try:
        default_jobs = int(os.environ.get("CUSPGATE_JOBS", "1"))
    except ValueError:
        default_jobs = 1
    parser = _build_parser(default_jobs)
    args = parser.parse_args(argv)
    handler = args.handler
    try:
        result = handler(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if isinstance(result, str):  # CSV mode writes raw text
        sys.stdout.write(result)
        return 0
    record = {
        "input": {
            k: v
            for k, v in sorted(vars(args).items())
            if k not in ("handler",) and v is not None
        },
        "result": _encode(result),
        "subcommand": args.subcommand,
        "version": __version__,
    }
    print(json.dumps(record, indent=2, sort_keys=True))
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
