"""Command-line interface.

Subcommands:

* ``classify`` -- classify one or more equations (inline arguments, a file,
  or stdin), or a short-Weierstrass pair given as ``--f4 EXPR --f6 EXPR``,
  or apply the degree rule with ``--degree N``;
* ``enumerate`` -- the combinatorial configuration lists (``--j 0``,
  ``--j 1728``, ``--j generic`` or ``--instar [--rank-cap N]``);
* ``catalog`` -- list the built-in witnesses, with ``--verify`` re-classifying
  each against its golden expectations;
* ``tables`` -- regenerate the two isotrivial reference tables.

Exit codes: 0 success, 1 parse or usage error, 2 invalid surface
(missing w^2 or z^3 term, identically-zero discriminant, non-minimal place),
3 catalog or table verification mismatch.

JSON output serializes exact rationals as strings "p/q" and infinite
valuations as "inf"; it never contains floating-point numbers.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from .catalog import emit_tables, verify_witness, witness_catalog, witness_for_configuration
from .enumeration import (
    enumerate_instar_without_in,
    enumerate_isotrivial,
    is_miranda_excluded,
)
from .errors import (
    DelPezzoError,
    EquationError,
    InvalidSurfaceError,
    TableMismatchError,
)
from .sextic import parse_binary_form
from .surfaces import ClassificationReport, classify_weierstrass, classify_surface, degree_rule
from .weierstrass import weierstrass_data

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INVALID_SURFACE = 2
EXIT_VERIFY_FAILED = 3


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="delpezzo",
        description="Exact classification of degree-1 du Val del Pezzo surfaces.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_classify = sub.add_parser(
        "classify", help="classify sextic equations in P(1,1,2,3)"
    )
    p_classify.add_argument("equations", nargs="*", help="equations to classify")
    p_classify.add_argument("--file", help="read one equation per line from a file")
    p_classify.add_argument("--f4", help="degree-4 binary form in x, y")
    p_classify.add_argument("--f6", help="degree-6 binary form in x, y")
    p_classify.add_argument(
        "--degree", type=int,
        help="degree of the surface; for 2..9 no equation is needed",
    )
    p_classify.add_argument("--json", action="store_true", help="JSON output")
    p_classify.add_argument(
        "--parallel", action="store_true",
        help="classify batch inputs concurrently (output order preserved)",
    )

    p_enum = sub.add_parser("enumerate", help="enumerate fiber configurations")
    group = p_enum.add_mutually_exclusive_group(required=True)
    group.add_argument("--j", choices=["0", "1728", "generic"],
                       help="isotrivial configurations for this j")
    group.add_argument("--instar", action="store_true",
                       help="configurations with an In* fiber and no In fiber")
    p_enum.add_argument("--rank-cap", type=int, default=8,
                        help="total du Val rank cap (default 8)")
    p_enum.add_argument("--json", action="store_true", help="JSON output")

    p_catalog = sub.add_parser("catalog", help="built-in witness surfaces")
    p_catalog.add_argument("--verify", action="store_true",
                           help="classify each witness and diff expectations")
    p_catalog.add_argument("--json", action="store_true", help="JSON output")

    p_tables = sub.add_parser("tables", help="regenerate the reference tables")
    p_tables.add_argument("--json", action="store_true", help="JSON output")

    return parser


def _error_payload(exc: DelPezzoError) -> str:
    stage = "parse" if isinstance(exc, EquationError) else "validate"
    return json.dumps(
        {"errors": [{"code": exc.code, "message": str(exc), "stage": stage}]},
        ensure_ascii=True,
    )


def _classify_inputs(args) -> list[str]:
    inputs: list[str] = list(args.equations)
    if args.file:
        with open(args.file, "r", encoding="utf-8") as handle:
            inputs.extend(
                line.strip() for line in handle if line.strip()
            )
    if not inputs and not sys.stdin.isatty():
        inputs.extend(line.strip() for line in sys.stdin if line.strip())
    return inputs


def _emit_report(report: ClassificationReport, as_json: bool, out) -> None:
    print(report.to_json() if as_json else report.to_text(), file=out)


def _cmd_classify(args, out, err) -> int:
    uses_pair = args.f4 is not None or args.f6 is not None
    if args.degree is not None:
        if uses_pair or args.equations or args.file:
            print("--degree takes no equation input", file=err)
            return EXIT_USAGE
        if args.degree == 1:
            print(
                "degree 1 needs the equation: pass the sextic itself "
                "(or --f4/--f6)",
                file=err,
            )
            return EXIT_USAGE
        try:
            report = degree_rule(args.degree)
        except ValueError as exc:
            print(str(exc), file=err)
            return EXIT_USAGE
        _emit_report(report, args.json, out)
        return EXIT_OK

    if uses_pair:
        if args.f4 is None or args.f6 is None:
            print("--f4 and --f6 must be given together", file=err)
            return EXIT_USAGE
        if args.equations or args.file:
            print("--f4/--f6 cannot be combined with equation input", file=err)
            return EXIT_USAGE
        try:
            f4 = parse_binary_form(args.f4, 4)
            f6 = parse_binary_form(args.f6, 6)
        except EquationError as exc:
            if args.json:
                print(_error_payload(exc), file=out)
            print(str(exc), file=err)
            return EXIT_USAGE
        try:
            report = classify_weierstrass(weierstrass_data(f4, f6))
        except InvalidSurfaceError as exc:
            if args.json:
                print(_error_payload(exc), file=out)
            print(str(exc), file=err)
            return EXIT_INVALID_SURFACE
        _emit_report(report, args.json, out)
        return EXIT_OK

    inputs = _classify_inputs(args)
    if not inputs:
        print("nothing to classify: pass equations, --file, or pipe stdin", file=err)
        return EXIT_USAGE

    def run(text: str):
        try:
            return classify_surface(text), None
        except DelPezzoError as exc:
            return None, exc

    if args.parallel and len(inputs) > 1:
        with ThreadPoolExecutor() as pool:
            results = list(pool.map(run, inputs))
    else:
        results = [run(text) for text in inputs]

    exit_code = EXIT_OK
    for text, (report, exc) in zip(inputs, results):
        if report is not None:
            _emit_report(report, args.json, out)
            continue
        if args.json:
            print(_error_payload(exc), file=out)
        print(f"{text}: {exc}", file=err)
        if isinstance(exc, InvalidSurfaceError):
            exit_code = max(exit_code, EXIT_INVALID_SURFACE)
        else:
            exit_code = max(exit_code, EXIT_USAGE)
    return exit_code


def _config_dict(config) -> dict:
    fibers = [
        {"type": t.tag, **({"n": t.n} if t.n else {}), "count": c}
        for t, c in config.entries
    ]
    return {
        "fibers": fibers,
        "display": str(config),
        "chi": config.chi_total,
        "rank": config.rank_total,
    }


def _cmd_enumerate(args, out, err) -> int:
    if args.rank_cap is not None and args.rank_cap < 0:
        print("--rank-cap must be non-negative", file=err)
        return EXIT_USAGE
    prefer_table = None
    if args.instar:
        configs = enumerate_instar_without_in(args.rank_cap)
        annotate_miranda = True
        head = {"mode": "instar-no-in", "rank_cap": args.rank_cap}
    else:
        j_class = {"0": "zero", "1728": "value1728", "generic": "generic"}[args.j]
        prefer_table = {"0": "j0", "1728": "j1728", "generic": None}[args.j]
        try:
            configs = enumerate_isotrivial(j_class, args.rank_cap)
        except ValueError as exc:
            print(str(exc), file=err)
            return EXIT_USAGE
        annotate_miranda = False
        head = {"mode": "isotrivial", "j": args.j, "rank_cap": args.rank_cap}

    if args.json:
        rows = []
        for config in configs:
            row = _config_dict(config)
            row["witness"] = witness_for_configuration(config.multiset(), prefer_table)
            if annotate_miranda:
                row["excluded"] = is_miranda_excluded(config)
            rows.append(row)
        print(json.dumps({**head, "configurations": rows}, ensure_ascii=True),
              file=out)
        return EXIT_OK

    for config in configs:
        notes = []
        witness = witness_for_configuration(config.multiset(), prefer_table)
        if witness:
            notes.append(f"witness: {witness}")
        elif annotate_miranda and is_miranda_excluded(config):
            notes.append("not realized by any surface (curated exclusion)")
        else:
            notes.append("combinatorially feasible; no catalog witness")
        print(f"{config}  [{'; '.join(notes)}]", file=out)
    return EXIT_OK


def _witness_dict(witness) -> dict:
    return {
        "name": witness.name,
        "equation": witness.equation,
        "fibers": [
            {"type": tag, **({"n": n} if n else {}), "count": c}
            for tag, n, c in witness.fibers
        ],
        "sing": [
            {"family": family, "index": index, "count": c}
            for family, index, c in witness.sing
        ],
        "rho": witness.rho,
        "isotrivial": witness.isotrivial,
        "j": None if witness.j is None else str(Fraction(witness.j)),
        "coreg1": witness.coreg[0],
        "coreg2": witness.coreg[1],
        "coreg": witness.coreg[2],
        "toric_model": witness.toric_model,
        "moduli_dim": witness.moduli_dim,
        "family": witness.family,
    }


def _cmd_catalog(args, out, err) -> int:
    witnesses = witness_catalog()
    failures: dict[str, list[str]] = {}
    if args.verify:
        for witness in witnesses:
            problems = verify_witness(witness)
            if problems:
                failures[witness.name] = problems

    if args.json:
        payload = {"witnesses": [_witness_dict(w) for w in witnesses]}
        if args.verify:
            payload["verified"] = not failures
            payload["failures"] = failures
        print(json.dumps(payload, ensure_ascii=True), file=out)
    else:
        for witness in witnesses:
            status = ""
            if args.verify:
                status = "  [FAIL]" if witness.name in failures else "  [ok]"
            print(f"{witness.name}: {witness.equation}{status}", file=out)
        for name, problems in failures.items():
            for problem in problems:
                print(f"{name}: {problem}", file=err)

    if args.verify and failures:
        return EXIT_VERIFY_FAILED
    return EXIT_OK


def _cmd_tables(args, out, err) -> int:
    try:
        text, data = emit_tables()
    except TableMismatchError as exc:
        print(str(exc), file=err)
        return EXIT_VERIFY_FAILED
    if args.json:
        print(json.dumps(data, ensure_ascii=True), file=out)
    else:
        print(text, file=out)
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    out, err = sys.stdout, sys.stderr
    if args.command == "classify":
        return _cmd_classify(args, out, err)
    if args.command == "enumerate":
        return _cmd_enumerate(args, out, err)
    if args.command == "catalog":
        return _cmd_catalog(args, out, err)
    if args.command == "tables":
        return _cmd_tables(args, out, err)
    parser.print_usage(err)
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
