"""Command-line interface.

Every subcommand prints a human-readable text report, or with --json a
single JSON object with the fixed shape

    {command, params, result, certificates, diagnostics, claim_checks}

where every number is a decimal string so arbitrary precision survives
serialization. Output is deterministic: identical invocations produce
identical bytes. Exit codes: 0 for any successfully computed answer
(including DISCREPANT claim checks and absent certificates), 1 for
invalid input, 2 for an internal invariant violation or a failed
verification suite.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import verify as verify_mod
from .cohomology import (CohomologyPresentation, InvariantViolation,
                         StiefelParams, check_presentation_invariants,
                         poincare_polynomial, presentation_mod2,
                         presentation_odd)
from .geometry import (ClaimCheck, ImmersionCertificate, LensParams,
                       RankBoundReport, SpanCertificate, best_immersion_bound,
                       best_span_bound, check_immersion_theorem,
                       check_span_theorem, cp_complement_min_rank,
                       immersion_certificate, lens_rank_bound,
                       lens_sq2_criterion, normal_pontrjagin,
                       span_certificate, tangent_pontrjagin)
from .weights import WeightTuple, complement_chern, total_chern

NUMBER = {"type": "string", "pattern": "^-?[0-9]+$"}

REPORT_SCHEMA = {
    "type": "object",
    "required": ["command", "params", "result", "certificates",
                 "diagnostics", "claim_checks"],
    "additionalProperties": False,
    "properties": {
        "command": {"type": "string"},
        "params": {"type": "object"},
        "result": {"type": "object"},
        "certificates": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["prime", "index", "witness", "bound", "basis"],
                "properties": {
                    "prime": NUMBER,
                    "index": NUMBER,
                    "witness": NUMBER,
                    "bound": NUMBER,
                    "claimed": NUMBER,
                    "basis": {"const": "direct-series"},
                },
                "additionalProperties": False,
            },
        },
        "diagnostics": {"type": "array", "items": {"type": "string"}},
        "claim_checks": {"type": "array", "items": {"type": "object"}},
    },
}


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on bad flags by default; the contract here is 1
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _parse_weights(text: str) -> WeightTuple:
    try:
        raw = [int(part) for part in text.split(",")]
    except ValueError:
        raise ValueError(
            f"weights must be comma-separated integers, got {text!r}") from None
    return WeightTuple(raw)


def _stringify(obj):
    """Numbers to decimal strings, recursively; booleans stay booleans."""
    if isinstance(obj, bool):
        return obj
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, dict):
        return {k: _stringify(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_stringify(v) for v in obj]
    return obj


def _report(command: str, params: dict, result: dict,
            certificates=(), diagnostics=(), claim_checks=()) -> dict:
    return {
        "command": command,
        "params": _stringify(params),
        "result": _stringify(result),
        "certificates": [_stringify(c) for c in certificates],
        "diagnostics": list(diagnostics),
        "claim_checks": [_stringify(c) for c in claim_checks],
    }


def _series_payload(series) -> dict:
    return {
        "coefficients": list(series.coeffs),
        "truncation": series.truncation,
        "modulus": series.modulus,
    }


def _span_cert_payload(cert: SpanCertificate) -> dict:
    return {
        "prime": cert.prime,
        "index": cert.index,
        "witness": cert.witness.value,
        "bound": cert.span_bound,
        "basis": "direct-series",
    }


def _imm_cert_payload(cert: ImmersionCertificate) -> dict:
    return {
        "prime": cert.prime,
        "index": cert.index,
        "witness": cert.witness.value,
        "bound": cert.certified_dim,
        "claimed": cert.claimed_dim,
        "basis": "direct-series",
    }


def _claim_check_payload(check: ClaimCheck) -> list[dict]:
    out = []
    for inst in check.instances:
        entry = {
            "kind": check.kind,
            "prime": inst.prime,
            "part": inst.part,
            "hypotheses": {name: ok for name, ok in inst.hypotheses},
            "index": inst.index,
            "admissible": inst.admissible,
            "coefficient": None if inst.coefficient is None
            else inst.coefficient.value,
            "claimed": inst.claimed,
            "verdict": inst.verdict,
            "notes": list(inst.notes),
        }
        if check.kind == "immersion" and inst.claimed is not None:
            entry["certified"] = inst.claimed - 1
        out.append(entry)
    return out


def _rank_report_payload(report: RankBoundReport) -> dict:
    return {
        "space": report.space,
        "lower_bound": report.lower_bound,
        "achievable": report.achievable,
        "reason": {
            "kind": report.reason_kind,
            "index": report.reason_index,
            "value": report.reason_value,
        },
    }


def _emit(report: dict, lines: list[str], as_json: bool) -> None:
    if as_json:
        print(json.dumps(report, indent=2, sort_keys=True))
    else:
        for line in lines:
            print(line)


def _cmd_cohomology(args) -> int:
    ell = _parse_weights(args.weights)
    params = StiefelParams(args.n, args.k, ell)
    if args.prime == 2:
        if args.k != 2:
            raise ValueError(
                "mod-2 presentations are only available for two-frame "
                "quotients (k = 2)")
        pres = presentation_mod2(args.n, ell)
    else:
        pres = presentation_odd(params, args.prime)
    check = check_presentation_invariants(pres, params)
    if not check.passed:
        raise InvariantViolation(
            f"presentation invariants failed for {params}: {check}")
    poincare = poincare_polynomial(pres)
    result = {
        "prime": pres.prime,
        "nilpotency_order": pres.nilpotency_order,
        "generator_degree": CohomologyPresentation.generator_degree,
        "relation": f"x^{pres.nilpotency_order}",
        "exterior_degrees": list(pres.exterior_degrees),
        "mod2_square_relations": pres.mod2_square_relations,
        "presentation": pres.describe(),
        "poincare_coefficients": poincare,
        "invariants": {
            "top_degree": check.top_degree,
            "expected_top_degree": check.expected_top_degree,
            "total_rank": check.total_rank,
            "expected_rank": check.expected_rank,
            "palindromic": check.palindromic,
            "passed": check.passed,
        },
    }
    report = _report(
        "cohomology",
        {"n": args.n, "k": args.k, "weights": list(ell.weights),
         "prime": args.prime},
        result)
    lines = [
        pres.describe(),
        f"nilpotency order {pres.nilpotency_order}; "
        f"exterior degrees {list(pres.exterior_degrees)}",
        f"top degree {check.top_degree}, total rank {check.total_rank}, "
        f"invariants {'ok' if check.passed else 'FAILED'}",
    ]
    _emit(report, lines, args.json)
    return 0


def _cmd_chern(args) -> int:
    ell = _parse_weights(args.weights)
    if args.truncation is not None:
        T = args.truncation
    elif args.n is not None:
        T = args.n + 1
    else:
        raise ValueError("chern needs --truncation or --n")
    total = total_chern(ell, T)
    comp = complement_chern(ell, T)
    report = _report(
        "chern",
        {"weights": list(ell.weights), "truncation": T},
        {"total": _series_payload(total), "complement": _series_payload(comp)})
    lines = [f"total:      {total!r}", f"complement: {comp!r}"]
    _emit(report, lines, args.json)
    return 0


def _cmd_pontrjagin(args) -> int:
    ell = _parse_weights(args.weights)
    T = args.truncation if args.truncation is not None else args.n
    tangent = tangent_pontrjagin(args.n, ell, args.modulus, T)
    normal = normal_pontrjagin(args.n, ell, args.modulus, T)
    report = _report(
        "pontrjagin",
        {"n": args.n, "weights": list(ell.weights), "modulus": args.modulus,
         "truncation": T},
        {"tangent": _series_payload(tangent),
         "normal": _series_payload(normal)})
    lines = [f"tangent: {tangent!r}", f"normal:  {normal!r}"]
    _emit(report, lines, args.json)
    return 0


def _cmd_span(args) -> int:
    ell = _parse_weights(args.weights)
    params = {"n": args.n, "weights": list(ell.weights)}
    diagnostics = []
    if args.prime is not None:
        cert = span_certificate(args.n, ell, args.prime)
        params["prime"] = args.prime
        certs = [cert] if cert else []
        if cert:
            result = {"span_bound": cert.span_bound}
            lines = [f"span <= {cert.span_bound}, certificate "
                     f"p={cert.prime} i={cert.index} w={cert.witness.value}"]
        else:
            result = {"span_bound": None}
            diagnostics.append(
                f"no admissible nonzero coefficient mod {args.prime}")
            lines = [f"no span certificate mod {args.prime}"]
    else:
        bound = args.prime_bound if args.prime_bound is not None else 4 * args.n
        sweep = best_span_bound(args.n, ell, bound)
        params["prime_bound"] = bound
        certs = list(sweep.certificates)
        best = sweep.best
        result = {"span_bound": best.span_bound if best else None,
                  "best_prime": best.prime if best else None}
        lines = [f"p={c.prime}: span <= {c.span_bound} "
                 f"(i={c.index}, w={c.witness.value})" for c in certs]
        if best:
            lines.append(f"best: span <= {best.span_bound} (p={best.prime})")
        else:
            diagnostics.append("no certificate found in the prime sweep")
            lines.append("no span certificate found")
    report = _report("span", params, result,
                     certificates=[_span_cert_payload(c) for c in certs],
                     diagnostics=diagnostics)
    _emit(report, lines, args.json)
    return 0


def _cmd_immersion(args) -> int:
    ell = _parse_weights(args.weights)
    params = {"n": args.n, "weights": list(ell.weights)}
    diagnostics = []
    if args.prime is not None:
        cert = immersion_certificate(args.n, ell, args.prime)
        params["prime"] = args.prime
        certs = [cert] if cert else []
        if cert:
            result = {"certified_non_immersion_dim": cert.certified_dim,
                      "claimed_dim": cert.claimed_dim}
            lines = [f"no immersion into R^{cert.certified_dim} (certified); "
                     f"claimed-form dimension {cert.claimed_dim}; certificate "
                     f"p={cert.prime} j={cert.index} w={cert.witness.value}"]
        else:
            result = {"certified_non_immersion_dim": None, "claimed_dim": None}
            diagnostics.append(
                f"no admissible nonzero coefficient mod {args.prime}")
            lines = [f"no immersion certificate mod {args.prime}"]
    else:
        bound = args.prime_bound if args.prime_bound is not None else 4 * args.n
        sweep = best_immersion_bound(args.n, ell, bound)
        params["prime_bound"] = bound
        certs = list(sweep.certificates)
        best = sweep.best
        result = {
            "certified_non_immersion_dim":
                best.certified_dim if best else None,
            "claimed_dim": best.claimed_dim if best else None,
            "best_prime": best.prime if best else None,
        }
        lines = [f"p={c.prime}: no immersion into R^{c.certified_dim} "
                 f"(j={c.index}, w={c.witness.value})" for c in certs]
        if best:
            lines.append(
                f"best: no immersion into R^{best.certified_dim} "
                f"(p={best.prime})")
        else:
            diagnostics.append("no certificate found in the prime sweep")
            lines.append("no immersion certificate found")
    report = _report("immersion", params, result,
                     certificates=[_imm_cert_payload(c) for c in certs],
                     diagnostics=diagnostics)
    _emit(report, lines, args.json)
    return 0


def _cmd_complement(args) -> int:
    ell = _parse_weights(args.weights)
    rep = cp_complement_min_rank(args.n, ell)
    result = _rank_report_payload(rep)
    report = _report(
        "complement",
        {"n": args.n, "weights": list(ell.weights)},
        result, diagnostics=list(rep.notes))
    reason = rep.reason_kind
    if rep.reason_index is not None:
        reason += f" (index {rep.reason_index}, value {rep.reason_value})"
    lines = [f"{rep.space}: complement rank >= {rep.lower_bound} forced "
             f"[{reason}]; rank {rep.achievable} achievable"]
    lines += list(rep.notes)
    _emit(report, lines, args.json)
    return 0


def _cmd_lens(args) -> int:
    l1, l2 = _parse_lens_weights(args.weights)
    params = LensParams(args.d, args.m, l1, l2)
    rep = lens_rank_bound(params)
    crit = lens_sq2_criterion(params)
    diagnostics = list(rep.notes)
    if crit.diagnostic and crit.diagnostic not in diagnostics:
        diagnostics.append(crit.diagnostic)
    result = _rank_report_payload(rep)
    result["criterion"] = {
        "satisfied": crit.satisfied,
        "hypotheses": {name: ok for name, ok in crit.hypotheses},
        "value": crit.value,
    }
    report = _report(
        "lens",
        {"d": args.d, "m": args.m, "weights": [l1, l2]},
        result, diagnostics=diagnostics)
    reason = rep.reason_kind
    if rep.reason_index is not None:
        reason += f" (index {rep.reason_index}, value {rep.reason_value})"
    lines = [f"{rep.space}: complement rank >= {rep.lower_bound} forced "
             f"[{reason}]; rank {rep.achievable} achievable",
             f"secondary criterion "
             f"{'satisfied' if crit.satisfied else 'unsatisfied'}: "
             + ", ".join(f"{name}={ok}" for name, ok in crit.hypotheses)]
    lines += diagnostics
    _emit(report, lines, args.json)
    return 0


def _parse_lens_weights(text: str) -> tuple[int, int]:
    try:
        parts = [int(p) for p in text.split(",")]
    except ValueError:
        raise ValueError(
            f"weights must be comma-separated integers, got {text!r}") from None
    if len(parts) != 2:
        raise ValueError(f"lens spaces take exactly two weights, got {parts}")
    return parts[0], parts[1]


def _cmd_check_claims(args) -> int:
    ell = _parse_weights(args.weights)
    span_check = check_span_theorem(args.n, ell)
    imm_check = check_immersion_theorem(args.n, ell)
    claim_payload = (_claim_check_payload(span_check)
                     + _claim_check_payload(imm_check))
    diagnostics = []
    if span_check.vacuous:
        diagnostics.append("span claim vacuous: no qualifying prime")
    if imm_check.vacuous:
        diagnostics.append("immersion claim vacuous: no qualifying prime")
    result = {
        "span_verdicts": list(span_check.verdicts),
        "immersion_verdicts": list(imm_check.verdicts),
        "span_vacuous": span_check.vacuous,
        "immersion_vacuous": imm_check.vacuous,
    }
    report = _report(
        "check-claims",
        {"n": args.n, "weights": list(ell.weights)},
        result, diagnostics=diagnostics, claim_checks=claim_payload)
    lines = []
    for entry in claim_payload:
        desc = f"{entry['kind']} part {entry['part']} p={entry['prime']}: " \
               f"{entry['verdict']}"
        if entry["verdict"] != "NOT_APPLICABLE":
            desc += (f" (index {entry['index']}, "
                     f"coefficient {entry['coefficient']}, "
                     f"claimed {entry['claimed']})")
        lines.append(desc)
    lines += diagnostics
    if not lines:
        lines = ["both claims vacuous: no qualifying primes"]
    _emit(report, lines, args.json)
    return 0


def _cmd_verify(args) -> int:
    results = verify_mod.run_all(quick=args.quick)
    suites_payload = [
        {"name": r.name, "checked": r.checked, "failures": list(r.failures)}
        for r in results
    ]
    report = _report(
        "verify", {"quick": args.quick},
        {"suites": suites_payload,
         "passed": all(r.passed for r in results)})
    lines = []
    for r in results:
        status = "ok" if r.passed else f"FAIL ({r.failures[0]})"
        lines.append(f"{r.name}: {r.checked} checks, {status}")
    _emit(report, lines, args.json)
    if not all(r.passed for r in results):
        first = next(r for r in results if not r.passed)
        print(f"verification failed: {first.failures[0]}", file=sys.stderr)
        return 2
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="pstiefel",
        description="Exact mod-p topology of circle quotients of complex "
                    "Stiefel manifolds: presentations, certificates, bounds.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=func)
        p.add_argument("--json", action="store_true",
                       help="emit a JSON report on stdout")
        return p

    p = add("cohomology", _cmd_cohomology,
            "mod-p cohomology presentation of a quotient")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--weights", required=True,
                   help="comma-separated integer weights, e.g. 1,2")
    p.add_argument("--prime", type=int, required=True)

    p = add("chern", _cmd_chern,
            "total and complement Chern series of a weighted line bundle sum")
    p.add_argument("--weights", required=True)
    p.add_argument("--truncation", type=int)
    p.add_argument("--n", type=int,
                   help="projective space dimension (truncation n+1)")

    p = add("pontrjagin", _cmd_pontrjagin,
            "tangent and normal Pontrjagin series (two weights)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--weights", required=True)
    p.add_argument("--modulus", type=int, default=0)
    p.add_argument("--truncation", type=int)

    p = add("span", _cmd_span, "span upper-bound certificates")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--weights", required=True)
    p.add_argument("--prime", type=int)
    p.add_argument("--prime-bound", type=int,
                   help="sweep odd primes up to this bound (default 4n)")

    p = add("immersion", _cmd_immersion, "non-immersion certificates")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--weights", required=True)
    p.add_argument("--prime", type=int)
    p.add_argument("--prime-bound", type=int)

    p = add("complement", _cmd_complement,
            "complement rank bound over complex projective space")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--weights", required=True)

    p = add("lens", _cmd_lens, "complement rank bound over a lens space")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--weights", required=True, help="two coprime weights")

    p = add("check-claims", _cmd_check_claims,
            "closed-form span/immersion claims vs direct computation")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--weights", required=True)

    p = add("verify", _cmd_verify, "run the self-verification suites")
    p.add_argument("--quick", action="store_true",
                   help="smaller grids for a fast smoke run")

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"pstiefel: error: {exc}", file=sys.stderr)
        return 1
    except InvariantViolation as exc:
        print(f"pstiefel: internal invariant violation: {exc}",
              file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
