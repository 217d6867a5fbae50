"""Command line front end.

Every command prints one JSON document (or an indented table with
``--output table``) built from exact rational arithmetic.  Exit status:
0 on success, 1 when a requested check fails (the counterexample is in
the printed witness), 2 on malformed input.  Output depends only on the
arguments, so repeated runs are byte identical.
"""

from __future__ import annotations

import argparse
import json
import sys

from .algebras import builtin_names, load_algebra
from .checks import check_associativity, check_pairing, check_skew
from .kummer import (
    KummerClass,
    kummer_multiply,
    kummer_poincare,
    kummer_poincare_reduced,
)
from .oracles import goettsche_series
from .orbifold import (
    OrbifoldClass,
    cr_triple_pairing,
    integral,
    multiply,
    orbifold_poincare,
    restrict_cr,
)
from .permgroup import Permutation, close_subgroup, symmetric_group
from .rdp import orbifold_gram, rescaling_obstruction, resolution_gram


def _emit(payload, output: str) -> None:
    if output == "table":
        for line in _table_lines(payload, ""):
            print(line)
    else:
        print(json.dumps(payload, indent=1, default=str))


def _table_lines(value, prefix: str):
    # Insertion order of every dict is already deterministic.
    if isinstance(value, dict):
        lines = []
        for key, item in value.items():
            if isinstance(item, (dict, list)):
                lines.append(f"{prefix}{key}:")
                lines.extend(_table_lines(item, prefix + "  "))
            else:
                lines.append(f"{prefix}{key}  {item}")
        return lines
    if isinstance(value, list):
        if all(not isinstance(item, (dict, list)) for item in value):
            return [prefix + "  ".join(str(item) for item in value)]
        lines = []
        for item in value:
            lines.extend(_table_lines(item, prefix))
        return lines
    return [f"{prefix}{value}"]


def _load_json(path: str):
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def _resolve_group(spec: str | None, n: int):
    """'full' (the default) or a comma separated list of cycle words."""
    if spec is None or spec == "full":
        return symmetric_group(n)
    gens = [Permutation.parse(part.strip(), n) for part in spec.split(",") if part.strip()]
    if not gens:
        raise ValueError("empty generator list")
    return close_subgroup(gens, n)


def cmd_algebra_validate(args) -> int:
    algebra = load_algebra(args.file)
    report = algebra.validate()
    _emit(report.to_json_dict(), args.output)
    return 0 if report.ok else 1


def cmd_ring_poincare(args) -> int:
    algebra = load_algebra(args.algebra)
    group = _resolve_group(args.group, args.n)
    poly = orbifold_poincare(group, algebra, shift=args.shift)
    _emit(poly.to_json_dict(), args.output)
    return 0


def cmd_ring_multiply(args) -> int:
    algebra = load_algebra(args.algebra)
    group = symmetric_group(args.n)
    lhs = OrbifoldClass.from_json_list(group, algebra, _load_json(args.lhs))
    rhs = OrbifoldClass.from_json_list(group, algebra, _load_json(args.rhs))
    product = multiply(lhs, rhs, signed=args.signed)
    _emit(product.to_json_list(), args.output)
    return 0


def cmd_ring_check(args) -> int:
    algebra = load_algebra(args.algebra)
    group = _resolve_group(args.group, args.n)
    seed = 0 if args.seed is None else args.seed
    if args.assoc:
        if args.samples is None:
            cert = check_associativity(group, algebra, signed=args.signed)
        else:
            cert = check_associativity(
                group,
                algebra,
                mode="sampled",
                seed=seed,
                samples=args.samples,
                signed=args.signed,
            )
    elif args.skew:
        cert = check_skew(group, algebra, seed=seed, pairs=args.samples or 200)
    else:
        cert = check_pairing(group, algebra)
    _emit(cert.to_json_dict(), args.output)
    return 0 if cert.passed else 1


def cmd_ring_cr_triple(args) -> int:
    algebra = load_algebra(args.algebra)
    group = symmetric_group(args.n)
    if len(args.cls) != 3:
        raise ValueError("exactly three --class files are required")
    expanded = [
        OrbifoldClass.from_json_list(group, algebra, _load_json(path)) for path in args.cls
    ]
    crs = [restrict_cr(a) for a in expanded]
    weighted = cr_triple_pairing(crs[0], crs[1], crs[2])
    average = integral(multiply(multiply(expanded[0], expanded[1]), expanded[2]))
    average = average / group.order
    payload = {
        "triple_pairing": str(weighted),
        "average_integral": str(average),
        "equal": weighted == average,
    }
    _emit(payload, args.output)
    return 0 if weighted == average else 1


def cmd_kummer_poincare(args) -> int:
    poly = kummer_poincare(args.n, rank=args.rank)
    payload = {
        "n": args.n,
        "rank": args.rank,
        "poincare": poly.to_json_dict(),
    }
    try:
        payload["reduced"] = kummer_poincare_reduced(args.n, rank=args.rank).to_json_dict()
    except ValueError:
        payload["reduced"] = None
    _emit(payload, args.output)
    return 0


def cmd_kummer_multiply(args) -> int:
    group = symmetric_group(args.n)
    lhs = KummerClass.from_json_list(group, args.rank, _load_json(args.lhs))
    rhs = KummerClass.from_json_list(group, args.rank, _load_json(args.rhs))
    _emit(kummer_multiply(lhs, rhs).to_json_list(), args.output)
    return 0


def cmd_anmodel_compare(args) -> int:
    payload = {
        "n": args.n,
        "orbifold_gram": [[str(entry) for entry in row] for row in orbifold_gram(args.n)],
        "resolution_gram": resolution_gram(args.n),
        "verdict": rescaling_obstruction(args.n),
    }
    _emit(payload, args.output)
    return 0


def cmd_oracle_goettsche(args) -> int:
    betti = [int(part) for part in args.betti.split(",")]
    series = goettsche_series(betti, args.n)
    payload = {
        "betti": betti,
        "series": [
            {"n": k, "coefficients": poly.to_json_dict()} for k, poly in enumerate(series)
        ],
    }
    _emit(payload, args.output)
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--output",
        choices=("json", "table"),
        default="json",
        help="print one JSON document (default) or an indented table",
    )
    common.add_argument(
        "--jobs",
        type=int,
        default=1,
        help="cap on parallel fan-out; evaluation is sequential and exact,"
        " so the result never depends on this value",
    )

    names = ", ".join(builtin_names())
    parser = argparse.ArgumentParser(
        prog="orbisym",
        description="Exact orbifold cohomology rings of symmetric products.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    algebra = sub.add_parser("algebra", help="Frobenius algebra utilities")
    algebra_sub = algebra.add_subparsers(dest="algebra_command", required=True)
    validate = algebra_sub.add_parser(
        "validate", parents=[common], help="check the Frobenius axioms of an algebra file"
    )
    validate.add_argument("file", help=f"JSON algebra file or builtin name ({names})")
    validate.set_defaults(func=cmd_algebra_validate)

    ring = sub.add_parser("ring", help="the orbifold ring of a power of the base")
    ring_sub = ring.add_subparsers(dest="ring_command", required=True)

    poincare = ring_sub.add_parser(
        "poincare", parents=[common], help="invariant dimensions per doubled degree"
    )
    poincare.add_argument("--algebra", required=True, help=f"builtin name ({names}) or file")
    poincare.add_argument("--n", type=int, required=True, help="number of factors")
    poincare.add_argument(
        "--group",
        default="full",
        help="'full' or comma separated generator cycles, e.g. '(1 2),(1 2 3)'",
    )
    poincare.add_argument(
        "--signed",
        action="store_true",
        help="accepted for symmetry with multiply; the sign twist changes"
        " no dimension",
    )
    poincare.add_argument(
        "--shift",
        type=int,
        default=0,
        help="doubled amount subtracted from every degree",
    )
    poincare.set_defaults(func=cmd_ring_poincare)

    mult = ring_sub.add_parser(
        "multiply", parents=[common], help="product of two classes given as JSON files"
    )
    mult.add_argument("--algebra", required=True, help=f"builtin name ({names}) or file")
    mult.add_argument("--n", type=int, required=True)
    mult.add_argument("--lhs", required=True, help="JSON file with the left class")
    mult.add_argument("--rhs", required=True, help="JSON file with the right class")
    mult.add_argument("--signed", action="store_true", help="use the sign modified product")
    mult.set_defaults(func=cmd_ring_multiply)

    check = ring_sub.add_parser(
        "check", parents=[common], help="run a ring certificate and report the witness"
    )
    which = check.add_mutually_exclusive_group(required=True)
    which.add_argument("--assoc", action="store_true", help="associativity over basis triples")
    which.add_argument("--skew", action="store_true", help="graded commutation against invariants")
    which.add_argument("--pairing", action="store_true", help="duality pairing block structure")
    check.add_argument("--algebra", required=True, help=f"builtin name ({names}) or file")
    check.add_argument("--n", type=int, required=True)
    check.add_argument(
        "--group",
        default="full",
        help="'full' or comma separated generator cycles",
    )
    check.add_argument("--seed", type=int, default=None, help="sampling seed (default 0)")
    check.add_argument(
        "--samples",
        type=int,
        default=None,
        help="sample count; for --assoc this turns on sampled mode",
    )
    check.add_argument("--signed", action="store_true", help="check the sign modified product")
    check.set_defaults(func=cmd_ring_check)

    triple = ring_sub.add_parser(
        "cr-triple",
        parents=[common],
        help="three point pairing of invariant classes, two ways",
    )
    triple.add_argument("--algebra", required=True, help=f"builtin name ({names}) or file")
    triple.add_argument("--n", type=int, required=True)
    triple.add_argument(
        "--class",
        dest="cls",
        action="append",
        required=True,
        help="JSON file with an invariant class; give exactly three",
    )
    triple.set_defaults(func=cmd_ring_cr_triple)

    kummer = sub.add_parser("kummer", help="the division point ring over the abelian base")
    kummer_sub = kummer.add_subparsers(dest="kummer_command", required=True)

    kpoincare = kummer_sub.add_parser(
        "poincare", parents=[common], help="dimensions of the division point ring"
    )
    kpoincare.add_argument("--n", type=int, required=True)
    kpoincare.add_argument("--rank", type=int, default=4, help="torsion rank (default 4)")
    kpoincare.set_defaults(func=cmd_kummer_poincare)

    kmult = kummer_sub.add_parser(
        "multiply", parents=[common], help="product of two division point classes"
    )
    kmult.add_argument("--n", type=int, required=True)
    kmult.add_argument("--rank", type=int, default=4, help="torsion rank (default 4)")
    kmult.add_argument("--lhs", required=True, help="JSON file with the left class")
    kmult.add_argument("--rhs", required=True, help="JSON file with the right class")
    kmult.set_defaults(func=cmd_kummer_multiply)

    anmodel = sub.add_parser("anmodel", help="cyclic quotient singularity comparison")
    anmodel_sub = anmodel.add_subparsers(dest="anmodel_command", required=True)
    compare = anmodel_sub.add_parser(
        "compare",
        parents=[common],
        help="twisted sector Gram matrix against the resolution lattice",
    )
    compare.add_argument("--n", type=int, required=True, help="singularity index")
    compare.set_defaults(func=cmd_anmodel_compare)

    oracle = sub.add_parser("oracle", help="independent combinatorial verification routes")
    oracle_sub = oracle.add_subparsers(dest="oracle_command", required=True)
    goettsche = oracle_sub.add_parser(
        "goettsche", parents=[common], help="product formula for invariant dimensions"
    )
    goettsche.add_argument(
        "--betti",
        required=True,
        help="five comma separated Betti numbers, e.g. 1,0,22,0,1",
    )
    goettsche.add_argument("--n", type=int, required=True, help="truncation order")
    goettsche.set_defaults(func=cmd_oracle_goettsche)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    if args.jobs < 1:
        print(json.dumps({"error": "--jobs must be at least 1"}), file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(json.dumps({"error": str(exc)}), file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
