"""Command-line front end (installed as ``wdc``).

Subcommands: count, zeta, expand, remainder-fit, spectrum.  Results go to
standard output, diagnostics to standard error.  Exit codes: 0 success,
1 usage or spec error, 2 enumeration budget exceeded.  The environment
variable WDC_BUDGET overrides the default enumeration budget.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import counting, expansions, remainders, specfile
from .errors import BudgetExceededError, SpecFileError, WeylDivError
from .sequences import AffinePower, kth_value
from .zeta import hurwitz_zeta


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _budget(args) -> int | None:
    if getattr(args, "budget", None) is not None:
        return args.budget
    env = os.environ.get("WDC_BUDGET")
    return int(env) if env else None


def _cmd_count(args) -> int:
    spec = specfile.load_product_spec(args.spec)
    result = counting.count(spec, args.lam, method=args.method, budget=_budget(args))
    print(result.count)
    return 0


def _cmd_zeta(args) -> int:
    print(f"{hurwitz_zeta(args.s, args.a):.15g}")
    return 0


def _expansion_for(spec: counting.ProductSpec, method: str):
    factors = list(spec.factors)
    if method == "leading":
        return expansions.leading_term(factors)
    if method == "dominant":
        alphas = [expansions._growth_exponent(f) for f in factors]
        return expansions.dominant_remainder_expansion(factors, alphas.index(max(alphas)))
    if method == "full":
        return expansions.full_expansion(factors)[1]
    if method == "hermite":
        if not all(isinstance(f, AffinePower) for f in factors):
            raise WeylDivError("hermite expansion requires AffinePower factors")
        order = sorted(factors, key=lambda f: f.beta)
        return expansions.hermite_expansion(
            [f.c for f in order], [f.b for f in order], [f.beta for f in order]
        )
    raise _UsageError(f"unknown expansion method {method!r}")


def _expansion_json(exp) -> str:
    return json.dumps(
        {
            "terms": [
                {"coeff": t.coefficient, "power": t.power, "logPower": t.log_power}
                for t in exp.terms
            ],
            "errorExponent": exp.error_exponent,
        }
    )


def _cmd_expand(args) -> int:
    spec = specfile.load_product_spec(args.spec)
    print(_expansion_json(_expansion_for(spec, args.method)))
    return 0


def _cmd_remainder_fit(args) -> int:
    spec = specfile.load_product_spec(args.spec)
    expansion = _expansion_for(spec, args.method)
    grid = remainders.GridSpec(args.min, args.max, args.points)
    count_method = "dirichlet" if counting.is_double_identity(spec) else "recursive"
    table = remainders.evaluate_remainder(
        spec, expansion, grid, method=count_method, budget=_budget(args)
    )
    if args.csv:
        table.write_csv(args.csv)
    fit = remainders.fit_exponent(table)
    print(
        json.dumps(
            {"slope": fit.slope, "stderr": fit.stderr, "pointsUsed": fit.points_used}
        )
    )
    return 0


def _cmd_spectrum(args) -> int:
    spec = specfile.load_product_spec(args.spec)
    if args.k_min < 1 or args.k_max < args.k_min:
        raise _UsageError("need 1 <= k-min <= k-max")
    writer = sys.stdout
    writer.write("k," + ",".join(f"factor{j+1}" for j in range(len(spec.factors))) + "\n")
    for k in range(args.k_min, args.k_max + 1):
        values = [repr(kth_value(f, k)) for f in spec.factors]
        writer.write(f"{k}," + ",".join(values) + "\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="wdc", description=__doc__)
    sub = parser.add_subparsers(dest="command", metavar="command")

    p = sub.add_parser("count", parents=[], help="exact tensor-product count")
    p.add_argument("--spec", required=True, help="JSON product-spec file")
    p.add_argument("--lambda", dest="lam", type=float, required=True)
    p.add_argument(
        "--method",
        choices=["naive", "recursive", "hyperbola", "dirichlet"],
        default="recursive",
    )
    p.add_argument("--budget", type=int, help="enumeration budget override")
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("zeta", help="Hurwitz zeta value")
    p.add_argument("--s", type=float, required=True)
    p.add_argument("--a", type=float, default=1.0)
    p.set_defaults(func=_cmd_zeta)

    p = sub.add_parser("expand", help="asymptotic expansion as JSON")
    p.add_argument("--spec", required=True)
    p.add_argument(
        "--method", choices=["leading", "dominant", "full", "hermite"], required=True
    )
    p.set_defaults(func=_cmd_expand)

    p = sub.add_parser("remainder-fit", help="remainder table and exponent fit")
    p.add_argument("--spec", required=True)
    p.add_argument(
        "--method", choices=["leading", "dominant", "full", "hermite"], required=True
    )
    p.add_argument("--min", type=float, required=True)
    p.add_argument("--max", type=float, required=True)
    p.add_argument("--points", type=int, required=True)
    p.add_argument("--csv", help="write the remainder table to this path")
    p.add_argument("--budget", type=int)
    p.set_defaults(func=_cmd_remainder_fit)

    p = sub.add_parser("spectrum", help="per-factor k-th eigenvalues over a k range")
    p.add_argument("--spec", required=True)
    p.add_argument("--k-min", type=int, default=1)
    p.add_argument("--k-max", type=int, required=True)
    p.set_defaults(func=_cmd_spectrum)

    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except SystemExit as exc:  # argparse --help
        return int(exc.code or 0)
    if getattr(args, "func", None) is None:
        parser.print_usage(sys.stderr)
        return 1
    try:
        return args.func(args)
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (SpecFileError, WeylDivError, ValueError, OverflowError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
