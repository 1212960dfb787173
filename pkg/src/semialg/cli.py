"""Command-line front end: deterministic text and JSON output for scripting.

Exit codes: 0 success, 2 domain precondition violated, 3 expression parse
error. All randomized checking lives in the test suite; every command here
is a pure deterministic function of its arguments.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from . import bivariate_algebra as biv
from . import gap_polynomials as gp
from . import graded_hilbert as gh
from . import semigroup_core as sc

EXIT_OK = 0
EXIT_DOMAIN = 2
EXIT_PARSE = 3


def _emit(args, command: str, inputs: dict, result: dict, text_lines: list[str]) -> int:
    if args.json:
        print(json.dumps({"command": command, "inputs": inputs, "result": result}, sort_keys=True))
    else:
        for line in text_lines:
            print(line)
    return EXIT_OK


def _cmd_frobenius(args) -> int:
    A = sc.validate_generators(args.generators)
    table = sc.build_table(A)
    result = {
        "generators": list(A.elements),
        "frobenius": table.frobenius,
        "genus": table.genus,
        "gap_count": len(table.gaps),
    }
    lines = [f"frobenius={table.frobenius} genus={table.genus} gap_count={len(table.gaps)}"]
    if args.gaps:
        result["gaps"] = list(table.gaps)
        lines.append("gaps: " + (" ".join(str(g) for g in table.gaps) if table.gaps else "(none)"))
    if args.witness is not None:
        rep = sc.represent_from_table(args.witness, table)
        if rep is None:
            result["witness"] = None
            lines.append(f"witness({args.witness}): none (gap)")
        else:
            result["witness"] = list(rep.coefficients)
            terms = " + ".join(f"{r}*{a}" for a, r in zip(A.elements, rep.coefficients))
            lines.append(f"witness({args.witness}): r={list(rep.coefficients)} [{terms}]")
    return _emit(args, "frobenius", {"generators": args.generators}, result, lines)


def _cmd_gaps(args) -> int:
    A = sc.validate_generators(args.generators)
    table = sc.build_table(A)
    result = {"generators": list(A.elements), "gaps": list(table.gaps), "genus": table.genus}
    lines = [" ".join(str(g) for g in table.gaps) if table.gaps else "(none)"]
    return _emit(args, "gaps", {"generators": args.generators}, result, lines)


def _cmd_gap_poly(args) -> int:
    A = sc.validate_generators(args.generators)
    f = gp.gap_polynomial(A)
    result = {"generators": list(A.elements), "terms": gp.poly_to_json(f)}
    return _emit(args, "gap-poly", {"generators": args.generators}, result, [str(f)])


def _pair_checks(a: int, b: int) -> dict[str, bool]:
    ab = a * b
    return {
        "functional_equation": gp.verify_functional_equation(a, b),
        "reciprocal_duality": gp.reciprocal_duality(a, b),
        "series_identity": gh.series_identity_check(a, b, ab + 10),
        "rank_nullity": gh.rank_nullity_check(a, b, 3 * ab),
    }


def _cmd_verify(args) -> int:
    if args.sweep is not None:
        pairs = [
            (a, b)
            for a in range(2, args.sweep + 1)
            for b in range(a + 1, args.sweep + 1)
            if math.gcd(a, b) == 1
        ]
        passed = sum(1 for a, b in pairs if all(_pair_checks(a, b).values()))
        result = {"sweep": args.sweep, "pairs": len(pairs), "passed": passed}
        lines = [f"{len(pairs)} pairs, {passed} PASS"]
        code = _emit(args, "verify", {"sweep": args.sweep}, result, lines)
        return code if passed == len(pairs) else 1
    if args.a is None or args.b is None:
        raise ValueError("verify needs a pair a b, or --sweep B")
    checks = _pair_checks(args.a, args.b)
    lines = [f"{name}: {'PASS' if ok else 'FAIL'}" for name, ok in checks.items()]
    code = _emit(args, "verify", {"a": args.a, "b": args.b}, checks, lines)
    return code if all(checks.values()) else 1


def _cmd_divide(args) -> int:
    g = biv.parse_bivariate(args.expr)
    divisor = biv.BivariatePolynomial.binomial_xb_minus_ya(args.a, args.b)
    q, r = biv.divide(g, divisor)
    verdicts = {
        "evaluate": biv.in_kernel(g, args.a, args.b, "evaluate"),
        "divide": r.is_zero(),
    }
    result = {
        "quotient": biv.bivariate_to_json(q),
        "remainder": biv.bivariate_to_json(r),
        "in_kernel": verdicts,
    }
    lines = [
        f"divisor: {divisor}",
        f"quotient: {q}",
        f"remainder: {r}",
        f"in_kernel(evaluate)={str(verdicts['evaluate']).lower()} in_kernel(divide)={str(verdicts['divide']).lower()}",
    ]
    return _emit(args, "divide", {"expr": args.expr, "a": args.a, "b": args.b}, result, lines)


def _cmd_kernel(args) -> int:
    g = biv.parse_bivariate(args.expr)
    verdicts = {
        "evaluate": biv.in_kernel(g, args.a, args.b, "evaluate"),
        "divide": biv.in_kernel(g, args.a, args.b, "divide"),
    }
    lines = [
        f"in_kernel(evaluate)={str(verdicts['evaluate']).lower()} in_kernel(divide)={str(verdicts['divide']).lower()}"
    ]
    return _emit(args, "kernel", {"expr": args.expr, "a": args.a, "b": args.b}, verdicts, lines)


def _cmd_rank_nullity(args) -> int:
    order = args.order if args.order is not None else 3 * args.a * args.b
    ok = gh.rank_nullity_check(args.a, args.b, order)
    result = {"a": args.a, "b": args.b, "order": order, "holds": ok}
    lines = [f"rank_nullity up to n={order}: {'PASS' if ok else 'FAIL'}"]
    code = _emit(args, "rank-nullity", {"a": args.a, "b": args.b, "order": order}, result, lines)
    return code if ok else 1


def _opt_int(value: str) -> int | None:
    return None if value == "-" else int(value)


def _cmd_hilbert(args) -> int:
    order = args.order if args.order is not None else args.n
    if order is None:
        raise ValueError("hilbert needs a truncation order (positional N or --order)")
    a, b = _opt_int(args.a), _opt_int(args.b)
    series = gh.hilbert_series(args.which, a, b, order)
    result = {"which": args.which, "a": a, "b": b, **gh.series_to_json(series)}
    return _emit(
        args,
        "hilbert",
        {"which": args.which, "a": a, "b": b, "order": order},
        result,
        [str(series)],
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="semialg",
        description="Exact computations on numerical semigroups, gap polynomials, "
        "bivariate division, and Hilbert series.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, handler, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.add_argument("--json", action="store_true", help="emit a JSON envelope")
        p.set_defaults(handler=handler)
        return p

    p = add("frobenius", _cmd_frobenius, help="Frobenius number, genus, and gap count")
    p.add_argument("generators", type=int, nargs="+")
    p.add_argument("--gaps", action="store_true", help="also list the gaps")
    p.add_argument("--witness", type=int, metavar="N", help="print a representation of N")

    p = add("gaps", _cmd_gaps, help="list the gaps of S(A)")
    p.add_argument("generators", type=int, nargs="+")

    p = add("gap-poly", _cmd_gap_poly, help="print the gap generating polynomial")
    p.add_argument("generators", type=int, nargs="+")

    p = add("verify", _cmd_verify, help="run the identity checks for a pair (or a sweep)")
    p.add_argument("a", type=int, nargs="?")
    p.add_argument("b", type=int, nargs="?")
    p.add_argument("--sweep", type=int, metavar="B", help="all coprime pairs 2 <= a < b <= B")

    p = add("divide", _cmd_divide, help="divide an expression by x^b - y^a")
    p.add_argument("expr")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)

    p = add("kernel", _cmd_kernel, help="kernel membership by both methods")
    p.add_argument("expr")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)

    p = add("rank-nullity", _cmd_rank_nullity, help="check dim E_n = dim R_n + dim K_n")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.add_argument("--order", type=int, metavar="N", help="check up to n = N (default 3ab)")

    p = add("hilbert", _cmd_hilbert, help="print a truncated Hilbert series")
    p.add_argument("which", choices=gh.SERIES_KINDS)
    p.add_argument("a", help="first weight, or '-' where unused")
    p.add_argument("b", help="second weight, or '-' where unused")
    p.add_argument("n", type=int, nargs="?", help="truncation order")
    p.add_argument("--order", type=int, metavar="N", help="truncation order (alternative)")

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except biv.ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (ValueError, sc.NotNumericalSemigroupError, sc.BoundTooLargeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
