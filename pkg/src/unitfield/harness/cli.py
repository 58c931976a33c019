"""``unitfield`` command line.

Exit codes: 0 clean, 1 violations (or a failed verify), 2 usage or
configuration errors, 3 I/O errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import replace
from fractions import Fraction

from ..errors import ConfigError, DegenerateError, ReportParseError, UnitFieldError
from ..moduli import moduli_record
from ..serialize import parse_expr, to_jsonable
from ..vojta import (
    UnitEquationInstance,
    classify,
    cover_bound_check,
    degree_bound,
    discriminant_bounds,
    divisibility_check,
    lemma_ab_chain,
    validate,
)
from .config import SUITE_NAMES, load_config
from .report import dumps, run_search_report, verify_report
from .suites import run_suites

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3


def _emit(obj) -> None:
    print(json.dumps(to_jsonable(obj), indent=2))


def _instance(args) -> UnitEquationInstance:
    cfg = load_config(args.config)
    u1, u2, y = parse_expr(args.u1), parse_expr(args.u2), parse_expr(args.y)
    inst = UnitEquationInstance(cfg.S, cfg.lam, u1, u2, y, strict=cfg.strict)
    # y is only determined up to a constant; absorb it into y_const
    if y and inst.rhs:
        ratio = inst.rhs / (y * y)
        if ratio.is_constant():
            inst = replace(inst, y_const=ratio.num.coeffs[0] / ratio.den.coeffs[0])
    return validate(inst)


def cmd_search(args) -> int:
    cfg = load_config(args.config)
    summary = run_search_report(cfg, args.out, args.workers)
    print(dumps(summary))
    return EXIT_VIOLATION if summary["violations"] else EXIT_OK


def cmd_suites(args) -> int:
    cfg = load_config(args.config)
    for name in args.suite or []:
        if name not in SUITE_NAMES:
            raise ConfigError(f"unknown suite {name!r}; known: {', '.join(SUITE_NAMES)}")
    manifest = run_suites(cfg, args.suite)
    text = json.dumps(manifest.to_dict(), indent=2)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    print(text)
    return EXIT_VIOLATION if manifest.violations else EXIT_OK


def cmd_classify(args) -> int:
    inst = _instance(args)
    cls = classify(inst)
    _emit(
        {
            "classification": cls.to_dict(),
            "divisibility": divisibility_check(inst).ok,
            "degree": degree_bound(inst),
        }
    )
    return EXIT_VIOLATION if cls.is_counterexample else EXIT_OK


def cmd_cover(args) -> int:
    inst = _instance(args)
    cover = cover_bound_check(inst)
    disc = discriminant_bounds(inst)
    chain = lemma_ab_chain(inst)
    _emit(
        {
            "cover": cover.to_dict(),
            "discriminants": {
                "height_F": disc.height_F,
                "bound_F": disc.bound_F,
                "height_G": disc.height_G,
                "bound_G": disc.bound_G,
                "findings": list(disc.findings),
            },
            "chain": {
                "regime": chain.regime,
                "violations": list(chain.violations),
                "findings": list(chain.findings),
            },
        }
    )
    bad = not (cover.holds_53 and disc.ok_F and disc.ok_G) or chain.violations
    return EXIT_VIOLATION if bad else EXIT_OK


def cmd_moduli(args) -> int:
    try:
        lam = Fraction(args.lambda_coeff)
    except (ValueError, ZeroDivisionError) as exc:
        raise ConfigError(f"bad rational {args.lambda_coeff!r}") from exc
    _emit(moduli_record(lam))
    return EXIT_OK


def cmd_verify(args) -> int:
    res = verify_report(args.report)
    print(dumps({"ok": res.ok, "checked": res.checked, "mismatches": res.mismatches}))
    return EXIT_OK if res.ok else EXIT_VIOLATION


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="unitfield", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("search", help="exhaustive solution search, writes a JSONL report")
    s.add_argument("--config", required=True)
    s.add_argument("--out", required=True)
    s.add_argument("--workers", type=int, default=None)
    s.set_defaults(func=cmd_search)

    s = sub.add_parser("suites", help="run seeded verification suites")
    s.add_argument("--config", required=True)
    s.add_argument("--suite", action="append", help="repeatable; default: config or all")
    s.add_argument("--out")
    s.set_defaults(func=cmd_suites)

    for name, func, text in (
        ("classify", cmd_classify, "classify one solution"),
        ("cover", cmd_cover, "cover, discriminant and chain reports for one solution"),
    ):
        s = sub.add_parser(name, help=text)
        s.add_argument("--config", required=True)
        s.add_argument("--u1", required=True, help="num=[a0,a1,...];den=[b0,...]")
        s.add_argument("--u2", required=True)
        s.add_argument("--y", required=True)
        s.set_defaults(func=func)

    s = sub.add_parser("moduli", help="lambda' of the conic y^2 = x^2 + c x + 1 with two lines")
    s.add_argument("--lambda-coeff", required=True)
    s.set_defaults(func=cmd_moduli)

    s = sub.add_parser("verify", help="recompute every record of a report")
    s.add_argument("--report", required=True)
    s.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except OSError as exc:
        print(f"unitfield: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (ConfigError, ReportParseError, DegenerateError, ValueError, UnitFieldError) as exc:
        print(f"unitfield: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
