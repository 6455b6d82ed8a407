"""
Command-line front-end.

Exit codes: 0 pass, 1 mathematical failure (invalid table, failed check,
non-factorizable input, failing suite), 2 operational failure (unreadable
file, bad parameters, mismatched inputs). Reports go to stdout (or --out),
diagnostics to stderr as "<code>: <detail>".
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import Any, Callable, Optional, Sequence

from app.adapters.builtin_adapter import DEFAULT_CORPUS, is_builtin_name, resolve_builtin
from app.adapters.file_adapter import (
    dump_json,
    function_to_file,
    read_function_file,
    read_semigroup_file,
    semigroup_to_file,
)
from app.cli.render import render_text
from app.config import settings
from app.errors import (
    AlgebraError,
    BadParamsError,
    NotRPDError,
    ParseError,
    SemigroupValidationError,
)
from app.models.semigroup import InverseSemigroup
from app.schemas.files import CheckReportSchema
from app.services.constructors import (
    adjoin_identity,
    chain_semilattice,
    cyclic_group,
    direct_product,
    symmetric_group,
    symmetric_inverse_monoid,
)
from app.services.positive_definite import (
    godement_factorize,
    is_extendible_pd,
    is_extendible_rpd,
    is_pd,
    is_rpd,
    positive_functional_check,
    random_rpd,
)
from app.services.semigroup_core import (
    idempotents,
    is_chain,
    is_group,
    is_semilattice,
    restricted_semigroup,
)
from app.services.suite import SuiteConfig, run_suite, to_jsonable

logger = logging.getLogger(__name__)

EXIT_OK, EXIT_FAIL, EXIT_ERROR = 0, 1, 2


def _emit(payload: Any, args: argparse.Namespace) -> None:
    fmt = args.format or settings.output_format
    text = render_text(payload) if fmt == "text" else dump_json(payload)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
        logger.info("Wrote %s", args.out)
    else:
        sys.stdout.write(text)


def _seed(args: argparse.Namespace) -> int:
    return args.seed if args.seed is not None else settings.default_seed


def _trials(args: argparse.Namespace) -> int:
    return args.trials if args.trials is not None else settings.default_trials


def _semigroup(ref: str) -> InverseSemigroup:
    """A semigroup file path or a builtin name such as Z3xchain2."""
    if Path(ref).exists():
        return read_semigroup_file(ref)
    if is_builtin_name(ref):
        return resolve_builtin(ref)
    raise ParseError(f"{ref}: no such file or builtin semigroup")


def _int_params(params: Sequence[str], count: int, kind: str) -> list[int]:
    if len(params) != count:
        raise BadParamsError(f"build {kind} takes {count} parameter(s), got {len(params)}")
    try:
        return [int(p) for p in params]
    except ValueError as e:
        raise BadParamsError(f"build {kind}: {e}") from e


def _summary(S: InverseSemigroup) -> dict[str, Any]:
    return {
        "name": S.label,
        "n": S.n,
        "identity": S.identity,
        "zero": S.zero,
        "idempotents": sorted(idempotents(S)),
        "is_group": is_group(S),
        "is_semilattice": is_semilattice(S),
        "is_chain": is_chain(S),
    }


# --- validate ---


def cmd_validate(args: argparse.Namespace) -> int:
    try:
        S = read_semigroup_file(args.file)
    except SemigroupValidationError as e:
        report = {
            "file": args.file,
            "valid": False,
            "error": e.code,
            "detail": str(e),
            "witness": to_jsonable(e.witness),
        }
        _emit(report, args)
        print(e.describe(), file=sys.stderr)
        return EXIT_FAIL
    _emit({"file": args.file, "valid": True, **_summary(S)}, args)
    return EXIT_OK


# --- build ---


_SINGLE_PARAM_BUILDERS: dict[str, Callable[[int], InverseSemigroup]] = {
    "chain": chain_semilattice,
    "cyclic": cyclic_group,
    "inverse-monoid": symmetric_inverse_monoid,
    "symmetric": symmetric_group,
}

BUILD_KINDS = tuple(_SINGLE_PARAM_BUILDERS) + ("product", "restricted", "unitization")


def cmd_build(args: argparse.Namespace) -> int:
    kind, params = args.kind, args.params
    if kind in _SINGLE_PARAM_BUILDERS:
        (k,) = _int_params(params, 1, kind)
        S = _SINGLE_PARAM_BUILDERS[kind](k)
    elif kind == "product":
        if len(params) != 2:
            raise BadParamsError(f"build product takes 2 semigroups, got {len(params)}")
        S = direct_product(_semigroup(params[0]), _semigroup(params[1]))
    else:
        if len(params) != 1:
            raise BadParamsError(f"build {kind} takes 1 semigroup, got {len(params)}")
        T = _semigroup(params[0])
        S = restricted_semigroup(T) if kind == "restricted" else adjoin_identity(T)
    logger.info("Built %s: n=%d identity=%s zero=%s", S.label, S.n, S.identity, S.zero)
    _emit(semigroup_to_file(S), args)
    return EXIT_OK


# --- check ---


CHECKS = ("pd", "rpd", "extendible", "extendible-pd", "functional")


def cmd_check(args: argparse.Namespace) -> int:
    S = _semigroup(args.semigroup)
    u = read_function_file(args.function, S)
    tol = args.tolerance
    if args.which == "pd":
        report = is_pd(u, tol)
    elif args.which == "rpd":
        report = is_rpd(u, tol)
    elif args.which == "extendible":
        report = is_extendible_rpd(u, tol)
    elif args.which == "extendible-pd":
        report = is_extendible_pd(u, tol)
    else:
        report = positive_functional_check(u, _trials(args), _seed(args), tol)
    _emit(CheckReportSchema(**report.to_dict()).dict(exclude_none=True), args)
    return EXIT_OK if report.verdict else EXIT_FAIL


# --- factorize ---


def cmd_factorize(args: argparse.Namespace) -> int:
    S = _semigroup(args.semigroup)
    phi = read_function_file(args.function, S)
    try:
        result = godement_factorize(phi, args.tolerance)
    except NotRPDError as e:
        _emit(CheckReportSchema(**e.report.to_dict()).dict(exclude_none=True), args)
        print(e.describe(), file=sys.stderr)
        return EXIT_FAIL
    payload = function_to_file(result.xi)
    payload["reconstruction_error"] = result.reconstruction_error
    _emit(payload, args)
    return EXIT_OK


# --- random ---


def cmd_random(args: argparse.Namespace) -> int:
    S = _semigroup(args.semigroup)
    _emit(function_to_file(random_rpd(S, _seed(args))), args)
    return EXIT_OK


# --- suite ---


def _default_corpus() -> tuple[str, ...]:
    if settings.corpus_dir:
        return DEFAULT_CORPUS + (settings.corpus_dir,)
    return DEFAULT_CORPUS


def cmd_suite(args: argparse.Namespace) -> int:
    config = SuiteConfig(
        corpus=tuple(args.corpus) if args.corpus else _default_corpus(),
        trials=_trials(args),
        seed=_seed(args),
        tolerance=args.tolerance,
        output_format=args.format or settings.output_format,
        output_path=args.out,
        properties=tuple(args.property or ()),
    )
    report = run_suite(config)
    _emit(report, args)
    return EXIT_OK if report["summary"]["all_passed"] else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "text"], default=None, help="Report format")
    common.add_argument("--seed", type=int, default=None, help="Master seed")
    common.add_argument("--trials", type=int, default=None, help="Random trials")
    common.add_argument("--tolerance", type=float, default=None, help="Override the default tolerance")
    common.add_argument("--out", "-o", default=None, help="Write the report here instead of stdout")

    parser = argparse.ArgumentParser(
        prog="semigroup-pd",
        description="Positive definite functions on finite inverse semigroups",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    p = subparsers.add_parser("validate", parents=[common], help="Validate a semigroup file")
    p.add_argument("file")
    p.set_defaults(handler=cmd_validate)

    p = subparsers.add_parser("build", parents=[common], help="Generate a semigroup file")
    p.add_argument("kind", choices=BUILD_KINDS)
    p.add_argument("params", nargs="*", help="degree, or semigroup files / builtin names")
    p.set_defaults(handler=cmd_build)

    p = subparsers.add_parser("check", parents=[common], help="Decide positivity of a function")
    p.add_argument("which", choices=CHECKS)
    p.add_argument("semigroup", help="Semigroup file or builtin name")
    p.add_argument("function", help="Function file")
    p.set_defaults(handler=cmd_check)

    p = subparsers.add_parser("factorize", parents=[common], help="Write phi as xi . xi~")
    p.add_argument("semigroup")
    p.add_argument("function")
    p.set_defaults(handler=cmd_factorize)

    p = subparsers.add_parser("random", parents=[common], help="Random certified restricted PD function")
    p.add_argument("semigroup")
    p.set_defaults(handler=cmd_random)

    p = subparsers.add_parser("suite", parents=[common], help="Run the verification suite")
    p.add_argument("--corpus", nargs="+", default=None, help="Builtin names and/or semigroup files")
    p.add_argument("--property", action="append", default=None, help="Restrict to a property id")
    p.set_defaults(handler=cmd_suite)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except AlgebraError as e:
        print(e.describe(), file=sys.stderr)
        return EXIT_ERROR
    except OSError as e:
        print(f"IOError: {e}", file=sys.stderr)
        return EXIT_ERROR
