"""Command-line front end.

Commands: schur (compute a Schur polynomial by any of the four routes),
verify (run one identity check), suite (run the whole grid, JSON report),
paths (count non-intersecting path systems and their signed sum), render
(write the systems as an SVG figure).

Exit codes: 0 = success/verified, 1 = mismatch or bounded-resource refusal,
2 = usage or config error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import combinat, identities, lgv, symfun
from .combinat import parse_partition
from .ring import Polynomial, canonical_text


class _UsageError(Exception):
    pass


def _partition_arg(text: str):
    try:
        return parse_partition(text)
    except ValueError as exc:
        raise _UsageError(str(exc)) from None


def _schur_by_method(shape, n: int, method: str) -> Polynomial:
    if len(shape) > n:
        return Polynomial.zero()
    if method == "tableaux":
        return combinat.schur_tableaux(shape, n)
    if method == "jacobitrudi":
        return symfun.jacobi_trudi(shape, n)
    if method == "bialternant":
        return symfun.bialternant(shape, n)
    if method == "lgv":
        return lgv.schur_via_lgv(shape, n)
    raise _UsageError(f"unknown method {method!r}")


def cmd_schur(args) -> int:
    shape = _partition_arg(args.shape)
    if args.n < 1:
        raise _UsageError("--n must be >= 1")
    text = canonical_text(_schur_by_method(shape, args.n, args.method))
    if args.json:
        print(json.dumps({"schur": text}))
    else:
        print(text)
    return 0


def _or_default(value, default):
    return default if value is None else value


def _run_verifier(args) -> identities.CheckReport:
    name = args.identity

    def need_shape():
        if args.shape is None:
            raise _UsageError(f"verify {name} needs --shape")
        return _partition_arg(args.shape)

    if name == "main-lemma":
        return identities.verify_main_lemma(_or_default(args.m, 6), _or_default(args.n, 6))
    if name == "corollary":
        return identities.verify_corollary(_or_default(args.n, 4), _or_default(args.m, 5))
    if name == "vandermonde":
        return identities.verify_vandermonde(_or_default(args.n, 3))
    if name == "jacobi-trudi":
        return identities.verify_jacobi_trudi(need_shape(), _or_default(args.n, 3))
    if name == "bialternant":
        return identities.verify_bialternant(need_shape(), _or_default(args.n, 3))
    if name == "cauchy":
        return identities.verify_cauchy(_or_default(args.n, 2), _or_default(args.degree_cap, 4))
    if name == "dual-cauchy":
        return identities.verify_dual_cauchy(_or_default(args.n, 2), _or_default(args.m, 2))
    if name == "dual-determinant":
        return identities.verify_dual_determinant(_or_default(args.n, 2), _or_default(args.m, 2))
    if name == "factorial-schur":
        return identities.verify_factorial_schur(need_shape(), _or_default(args.n, 3))
    if name == "newton":
        return identities.verify_newton(_or_default(args.power, 8))
    raise _UsageError(f"unknown identity {name!r}")


def cmd_verify(args) -> int:
    report = _run_verifier(args)
    if args.json:
        print(json.dumps(report.to_json_dict(), indent=2))
    else:
        print(report.summary_line())
        if report.status == identities.MISMATCH:
            print(f"  lhs: {report.lhs_text}")
            print(f"  rhs: {report.rhs_text}")
    return 0 if report.status == identities.VERIFIED else 1


def cmd_suite(args) -> int:
    config = identities.SuiteConfig()
    if args.config:
        try:
            with open(args.config, "r", encoding="utf-8") as handle:
                data = json.load(handle)
            if not isinstance(data, dict):
                raise ValueError("config must be a JSON object")
            config = identities.SuiteConfig.from_dict(data)
        except (OSError, ValueError) as exc:
            raise _UsageError(f"bad config file: {exc}") from None
    if args.only is not None:
        bad = [name for name in args.only if name not in identities.IDENTITY_NAMES]
        if bad:
            raise _UsageError(f"unknown identity names: {bad}")
        config.only = args.only
    reports = identities.run_suite(config)
    print(identities.reports_to_json(reports))
    return 0 if identities.all_verified(reports) else 1


def _preset_configuration(args):
    if args.preset == "vandermonde":
        n = _or_default(args.n, 2)
        if n < 1:
            raise _UsageError("--n must be >= 1")
        return lgv.vandermonde_scheme(n), *lgv.vandermonde_endpoints(n)
    if args.preset == "schur":
        if args.shape is None:
            raise _UsageError("the schur preset needs --shape")
        shape = _partition_arg(args.shape)
        n = _or_default(args.n, 2)
        if n < 1:
            raise _UsageError("--n must be >= 1")
        if len(shape) > n:
            raise _UsageError(f"shape {args.shape} has more than {n} rows")
        width = (shape[0] if shape else 0) + n
        scheme = lgv.jacobi_trudi_scheme(n=n, col_bound=width)
        return scheme, *lgv.schur_endpoints(shape, n)
    raise _UsageError(f"unknown preset {args.preset!r}")


def cmd_paths(args) -> int:
    scheme, sources, sinks = _preset_configuration(args)
    systems = list(lgv.nonintersecting_systems(scheme, sources, sinks))
    signed = Polynomial.zero()
    for system in systems:
        signed = signed + system.sign * lgv.system_weight(scheme, system)
    text = canonical_text(signed)
    if args.json:
        print(json.dumps({"systems": len(systems), "signed_sum": text}))
    else:
        print(f"systems: {len(systems)}")
        print(f"signed sum: {text}")
    return 0


def cmd_render(args) -> int:
    scheme, sources, sinks = _preset_configuration(args)
    systems = list(lgv.nonintersecting_systems(scheme, sources, sinks))
    svg = lgv.path_systems_svg(scheme, sources, sinks, systems)
    with open(args.out, "w", encoding="utf-8") as handle:
        handle.write(svg + "\n")
    if args.json:
        print(json.dumps({"file": args.out, "systems": len(systems)}))
    else:
        print(f"wrote {args.out} ({len(systems)} systems)")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="schurpaths",
        description="Exact Schur polynomials via lattice paths, with identity checks.",
    )
    sub = parser.add_subparsers(dest="command")

    p_schur = sub.add_parser("schur", help="compute a Schur polynomial")
    p_schur.add_argument("--shape", required=True, help='partition, e.g. "[2,1]"')
    p_schur.add_argument("--n", type=int, required=True, help="number of variables")
    p_schur.add_argument(
        "--method",
        choices=["tableaux", "jacobitrudi", "bialternant", "lgv"],
        default="tableaux",
    )
    p_schur.add_argument("--json", action="store_true")
    p_schur.set_defaults(func=cmd_schur)

    p_verify = sub.add_parser("verify", help="verify one identity")
    p_verify.add_argument("identity", choices=list(identities.IDENTITY_NAMES))
    p_verify.add_argument("--shape", help='partition, e.g. "[2,1]"')
    p_verify.add_argument("--n", type=int)
    p_verify.add_argument("--m", type=int)
    p_verify.add_argument("--degree-cap", type=int, dest="degree_cap")
    p_verify.add_argument("--power", type=int)
    p_verify.add_argument("--json", action="store_true")
    p_verify.set_defaults(func=cmd_verify)

    p_suite = sub.add_parser("suite", help="run the full verification suite")
    p_suite.add_argument("--config", help="JSON config file")
    p_suite.add_argument(
        "--only",
        action="append",
        metavar="IDENTITY",
        help="restrict to one identity (repeatable)",
    )
    p_suite.set_defaults(func=cmd_suite)

    p_paths = sub.add_parser("paths", help="enumerate non-intersecting path systems")
    p_render = sub.add_parser("render", help="render path systems as SVG")
    for p in (p_paths, p_render):
        p.add_argument("--preset", choices=["vandermonde", "schur"], required=True)
        p.add_argument("--n", type=int)
        p.add_argument("--shape", help="partition (schur preset)")
        p.add_argument("--json", action="store_true")
    p_paths.set_defaults(func=cmd_paths)
    p_render.add_argument("--out", required=True, help="output SVG file")
    p_render.set_defaults(func=cmd_render)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if not hasattr(args, "func"):
        parser.print_help()
        return 2
    try:
        return args.func(args)
    except (_UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except lgv.TooLarge as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
