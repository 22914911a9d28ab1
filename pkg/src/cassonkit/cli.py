"""Command line front end.

Exit codes: 0 success, 2 invalid input, 3 Alexander root at a required root
of unity, 4 internal consistency failure, 5 property failure in ``verify``.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from .arith import DEFAULT_TOL
from .errors import CassonKitError, ValidationError
from .knots import (
    RootOfUnity,
    SeifertMatrix,
    knot_from_json,
    knot_from_name,
    signature_sum,
    tristram_levine_signature,
)
from .lens import LensSpace, casson_walker_lens, casson_walker_lens_float, rho_sum_lens
from .mapping_tori import (
    BranchedMappingTorusInput,
    FreeMappingTorusInput,
    InvariantReport,
    branched_report,
    lambda_sw_free,
    lambda_sw_product,
)
from .seifert import SeifertHS, conjugation_torus_invariants, mu_bar, plumbing_graph, seifert_presentation, wu_class
from .verify import SUITES, run_suites

EXIT_PROPERTY_FAILURE = 5


def format_rational(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def report_to_json(report: InvariantReport) -> dict:
    out = {
        "lambda_sw": None if report.lambda_sw is None else format_rational(report.lambda_sw),
        "lambda_fo": None if report.lambda_fo is None else format_rational(report.lambda_fo),
        "integral": report.integral,
        "rohlin_mod2": report.rohlin_mod2,
        "breakdown": {k: format_rational(v) for k, v in report.breakdown.items()},
        "warnings": list(report.warnings),
    }
    if report.notes:
        out["notes"] = list(report.notes)
    out.update(report.diagnostics)
    return out


def _read_json(path: str):
    try:
        return json.loads(Path(path).read_text())
    except OSError as exc:
        raise ValidationError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ValidationError(f"{path} is not valid JSON: {exc}") from exc


def _require(args, *names):
    for name in names:
        if getattr(args, name) is None:
            raise ValidationError(f"--{name} is required")


def _int_field(obj: dict, key: str) -> int:
    if key not in obj:
        raise ValidationError(f'missing field "{key}"')
    value = obj[key]
    if not isinstance(value, int) or isinstance(value, bool):
        raise ValidationError(f'field "{key}" must be an integer')
    return value


def _knot_arg(args) -> SeifertMatrix:
    if args.input is not None:
        return knot_from_json(_read_json(args.input))
    if args.knot is not None:
        return knot_from_name(args.knot)
    raise ValidationError("give a knot with --input <file> or --knot <name>")


def torus_input_from_json(obj):
    if not isinstance(obj, dict):
        raise ValidationError("input must be a JSON object")
    kind = obj.get("type")
    if kind == "free_mapping_torus":
        return FreeMappingTorusInput(
            _int_field(obj, "ambient_casson"),
            knot_from_json(obj.get("knot")),
            _int_field(obj, "n"),
            _int_field(obj, "q"),
        )
    if kind == "branched_mapping_torus":
        return BranchedMappingTorusInput(
            _int_field(obj, "quotient_casson"),
            knot_from_json(obj.get("branch_knot")),
            _int_field(obj, "n"),
        )
    raise ValidationError(f'unknown input type {kind!r}; expected "free_mapping_torus" or "branched_mapping_torus"')


# ---------------------------------------------------------------------------
# subcommands


def cmd_knot(args) -> dict:
    V = _knot_arg(args)
    if args.action == "alexander":
        delta = V.alexander
        return {
            "alexander": str(delta),
            "coefficients": list(delta.coefficients),
            "second_derivative_at_1": delta.second_derivative_at_1(),
        }
    if args.action == "signature":
        _require(args, "at")
        w = RootOfUnity.parse(args.at)
        return {"at": f"{w.m}/{w.n}", "signature": tristram_levine_signature(V, w, args.tol)}
    _require(args, "n")
    return {"n": args.n, "signature_sum": signature_sum(V, args.n, args.tol)}


def cmd_lens(args) -> dict:
    _require(args, "n", "q")
    L = LensSpace(args.n, args.q)
    return {
        "lambda_w": format_rational(casson_walker_lens(L)),
        "rho_sum_eighth": format_rational(rho_sum_lens(L)),
        "float_lambda_w_cotangent": casson_walker_lens_float(L),
    }


def cmd_torus(args) -> dict:
    # --input holds either a full torus object (with "type") or just the knot
    doc = _read_json(args.input) if args.input is not None else None
    if isinstance(doc, dict) and "type" in doc:
        inp = torus_input_from_json(doc)
        expected = FreeMappingTorusInput if args.kind == "free" else BranchedMappingTorusInput
        if not isinstance(inp, expected):
            raise ValidationError(f"input type does not match subcommand 'torus {args.kind}'")
    else:
        knot = knot_from_json(doc) if doc is not None else _knot_arg(args)
        if args.kind == "free":
            _require(args, "casson", "n", "q")
            inp = FreeMappingTorusInput(args.casson, knot, args.n, args.q)
        else:
            _require(args, "casson", "n")
            inp = BranchedMappingTorusInput(args.casson, knot, args.n)
    if isinstance(inp, FreeMappingTorusInput):
        return report_to_json(lambda_sw_free(inp))
    return report_to_json(branched_report(inp))


def cmd_product(args) -> dict:
    _require(args, "casson")
    return {
        "casson": args.casson,
        "lambda_sw": format_rational(lambda_sw_product(args.casson)),
        "lambda_fo": format_rational(args.casson),
    }


def parse_multiplicities(text: str) -> SeifertHS:
    try:
        a = tuple(int(x) for x in text.split(","))
    except ValueError as exc:
        raise ValidationError(f"--a expects comma-separated integers, got {text!r}") from exc
    return SeifertHS(a)


def cmd_seifert(args) -> dict:
    _require(args, "a")
    S = parse_multiplicities(args.a)
    report = conjugation_torus_invariants(S)
    out = {
        "mu_bar": format_rational(mu_bar(S)),
        "lambda_sw": format_rational(report.lambda_sw),
        "lambda_fo": format_rational(report.lambda_fo),
        "rohlin": report.rohlin_mod2,
    }
    if S.exceptional:
        G = plumbing_graph(seifert_presentation(S))
        out["plumbing_weights"] = list(G.weights)
        out["plumbing_arms"] = G.arms
        out["wu_class"] = [int(x) for x in wu_class(G)]
    return out


def cmd_verify(args) -> dict:
    return run_suites(args.suite, args.samples, args.seed)


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", metavar="PATH")
    common.add_argument("--knot", metavar="NAME", help="catalog knot: unknot, trefoil, figure8, torus(p,q)")
    common.add_argument("--n", type=int)
    common.add_argument("--q", type=int)
    common.add_argument("--a", metavar="A1,A2,...")
    common.add_argument("--at", metavar="M/N")
    common.add_argument("--casson", type=int)
    common.add_argument("--format", choices=("json", "table"), default="json")
    common.add_argument("--seed", type=int, default=42)
    common.add_argument("--samples", type=int, default=1000)
    common.add_argument("--tol", type=float, default=DEFAULT_TOL)

    parser = argparse.ArgumentParser(prog="cassonkit", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("knot", parents=[common])
    p.add_argument("action", choices=("alexander", "signature", "signature-sum"))
    p.set_defaults(func=cmd_knot)

    p = sub.add_parser("lens", parents=[common])
    p.set_defaults(func=cmd_lens)

    p = sub.add_parser("torus", parents=[common])
    p.add_argument("kind", choices=("free", "branched"))
    p.set_defaults(func=cmd_torus)

    p = sub.add_parser("product", parents=[common])
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("seifert", parents=[common])
    p.add_argument("action", choices=("mubar",))
    p.set_defaults(func=cmd_seifert)

    p = sub.add_parser("verify", parents=[common])
    p.add_argument("suite", nargs="?", default="all", choices=SUITES + ("all",))
    p.set_defaults(func=cmd_verify)
    return parser


def _table_rows(obj, prefix=""):
    if isinstance(obj, dict):
        for k, v in obj.items():
            yield from _table_rows(v, f"{prefix}{k}.")
    else:
        yield prefix[:-1], json.dumps(obj) if not isinstance(obj, str) else obj


def render(obj, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(obj, indent=2)
    rows = list(_table_rows(obj))
    width = max((len(k) for k, _ in rows), default=0)
    return "\n".join(f"{k:<{width}}  {v}" for k, v in rows)


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = build_parser().parse_args(argv)
    if args.samples < 1:
        print("error [validation]: --samples must be positive", file=stderr)
        return ValidationError.exit_code
    if not 0 <= args.seed < 2**64:
        print("error [validation]: --seed must be an unsigned 64-bit integer", file=stderr)
        return ValidationError.exit_code
    try:
        result = args.func(args)
    except CassonKitError as exc:
        print(json.dumps({"error": exc.code, "message": str(exc)}), file=stderr)
        return exc.exit_code
    print(render(result, args.format), file=stdout)
    if args.command == "verify" and not result["passed"]:
        return EXIT_PROPERTY_FAILURE
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
