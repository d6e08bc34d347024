"""
Command-line interface for modplab.

Every command prints one JSON OutputEnvelope on stdout (breuil-enumerate can
print a bare CSV table instead). Logs go to stderr.

Exit codes: 0 success, 1 failed verification or internal invariant,
2 input or precondition error, 3 resource cap.
"""

import argparse
import json
import logging
import sys
import time
from typing import Any, Callable, Dict, List, Optional

from pydantic import ValidationError

from . import __version__
from .config import LabConfig
from .exceptions import (
    InvariantError,
    ModpLabError,
    ParameterError,
    PreconditionError,
    ResourceCapError,
)
from .feasibility import InertialType, verify_all_types
from .fixtures import FIXTURE_NAMES, load_fixture
from .matrix_groups import (
    RepresentationPair,
    SquareMatrix,
    admissible_weights,
    build_monomial_induction,
    closure,
    field_of_order,
    find_annihilation_failure,
    find_intertwiner,
    find_kernel_violation,
    is_regular_generated,
    kernel_containment,
    load_generators,
    load_pair,
    regular_determinant_agreement,
    regular_subgroup,
    union_of_kernels,
    verify_regular_lemma,
)
from .matrix_groups.lemmas import find_union_of_kernels_failure, pair_witness
from .models import ErrorPayload, OutputEnvelope
from .records import profile_records, write_records
from .residual_reps import is_r_regular, parse_rep, rep_payload
from .tame_arith import TameParams

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT = 2
EXIT_CAP = 3


def _int_list(text: str) -> List[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError as e:
        raise ParameterError(
            f"expected a comma-separated list of integers, got {text!r}"
        ) from e


def _config(args: argparse.Namespace) -> LabConfig:
    return LabConfig.from_env(budget=args.budget, workers=args.workers)


def _emit(command: str, args: argparse.Namespace, payload: Any, started: float) -> None:
    hidden = ("handler", "verbose", "command", "group_command")
    params = {
        key: value
        for key, value in vars(args).items()
        if key not in hidden and value is not None
    }
    envelope = OutputEnvelope(
        command=command,
        params=params,
        payload=payload,
        elapsedMs=int((time.perf_counter() - started) * 1000),
    )
    print(envelope.model_dump_json(indent=2))


# breuil-enumerate


def cmd_breuil_enumerate(args: argparse.Namespace) -> int:
    started = time.perf_counter()
    params = TameParams(p=args.p, d=args.d)
    if not 0 <= args.r <= params.p - 2:
        raise ParameterError(f"r must lie in [0, {params.p - 2}]")
    allowed = _int_list(args.allowed) if args.allowed else list(range(params.p - 1))
    try:
        records = profile_records(params, args.r, allowed)
    except ValueError as e:
        raise ParameterError(str(e)) from e
    disagreements = [r for r in records if not r.agree]
    if args.format == "csv":
        sys.stdout.write(write_records(records, "csv"))
    else:
        payload = {
            "count": len(records),
            "allAgree": not disagreements,
            "records": [r.model_dump(mode="json") for r in records],
        }
        _emit("breuil-enumerate", args, payload, started)
    if disagreements:
        logger.error(
            "%d profiles where the two kappa_0 formulas disagree", len(disagreements)
        )
        return EXIT_FAILED
    return EXIT_OK


# rep-regular


def cmd_rep_regular(args: argparse.Namespace) -> int:
    started = time.perf_counter()
    if args.r < 0:
        raise ParameterError("r must be non-negative")
    try:
        TameParams(p=args.p, d=1)
    except ValidationError as e:
        raise ParameterError(f"invalid prime p={args.p}: {e}") from e
    rep = parse_rep(args.rep, args.p)
    payload = rep_payload(rep)
    payload["r"] = args.r
    payload["regular"] = is_r_regular(rep, args.r)
    _emit("rep-regular", args, payload, started)
    return EXIT_OK


# verify-theorem


def cmd_verify_theorem(args: argparse.Namespace) -> int:
    started = time.perf_counter()
    config = _config(args)
    types = None
    if args.type:
        try:
            types = [InertialType(p=args.p, a_vec=tuple(_int_list(args.type)))]
        except ValidationError as e:
            raise ParameterError(f"invalid type {args.type!r}: {e}") from e
    report = verify_all_types(
        args.p,
        args.n,
        args.r,
        config,
        require_big_subquotient=not args.diagnostic,
        types=types,
    )
    _emit("verify-theorem", args, report.model_dump(mode="json"), started)
    return EXIT_OK if not report.counterexamples else EXIT_FAILED


# group


def _fixture_or(args: argparse.Namespace, attr: str) -> Any:
    if getattr(args, "fixture", None):
        return load_fixture(args.fixture, cap=args.cap)
    path = getattr(args, attr, None)
    if not path:
        raise ParameterError(f"one of --{attr} or --fixture is required")
    return path


def _load_group_generators(args: argparse.Namespace) -> List[SquareMatrix]:
    loaded = _fixture_or(args, "gens")
    if isinstance(loaded, RepresentationPair):
        return loaded.rho_generators
    if isinstance(loaded, list):
        return loaded
    return load_generators(loaded)


def _load_pair(args: argparse.Namespace) -> RepresentationPair:
    loaded = _fixture_or(args, "pair")
    if isinstance(loaded, RepresentationPair):
        return loaded
    if isinstance(loaded, list):
        raise ParameterError(f"fixture {args.fixture!r} is a group, not a pair")
    return load_pair(loaded, cap=args.cap)


def cmd_regular_generated(args: argparse.Namespace) -> int:
    started = time.perf_counter()
    gens = _load_group_generators(args)
    group = closure(gens, cap=args.cap)
    subgroup = regular_subgroup(group)
    generated = is_regular_generated(group)
    outside = next((g for g in group if g not in subgroup), None)
    if outside is None and not generated:
        outside = group.identity
    payload = {
        "order": len(group),
        "regularSubgroupOrder": len(subgroup),
        "regularGenerated": generated,
        "witness": outside.to_json() if outside is not None else None,
    }
    _emit("group regular-generated", args, payload, started)
    return EXIT_OK


def cmd_annihilation(args: argparse.Namespace) -> int:
    started = time.perf_counter()
    pair = _load_pair(args)
    bad = find_annihilation_failure(pair)
    payload = {
        "order": len(pair),
        "holds": bad is None,
        "witness": pair_witness(bad) if bad is not None else None,
    }
    _emit("group annihilation", args, payload, started)
    return EXIT_OK


def cmd_kernels(args: argparse.Namespace) -> int:
    started = time.perf_counter()
    pair = _load_pair(args)
    if args.characters:
        holds = union_of_kernels(pair)
        bad = None if holds else find_union_of_kernels_failure(pair)
        lemma = "union-of-kernels"
    else:
        holds = kernel_containment(pair)
        bad = None if holds else find_kernel_violation(pair)
        lemma = "kernel-containment"
    payload = {
        "lemma": lemma,
        "order": len(pair),
        "holds": holds,
        "witness": pair_witness(bad) if bad is not None else None,
    }
    _emit("group kernels", args, payload, started)
    return EXIT_OK if holds else EXIT_FAILED


def cmd_determinant(args: argparse.Namespace) -> int:
    started = time.perf_counter()
    pair = _load_pair(args)
    holds = regular_determinant_agreement(pair)
    _emit("group determinant", args, {"order": len(pair), "holds": holds}, started)
    return EXIT_OK if holds else EXIT_FAILED


def cmd_monomial_verify(args: argparse.Namespace) -> int:
    started = time.perf_counter()
    if args.psi:
        if not args.field:
            raise ParameterError("--psi requires --field")
        field = field_of_order(args.field)
        gens = build_monomial_induction(field, _int_list(args.psi), args.n)
    else:
        gens = _load_group_generators(args)
    group = closure(gens, cap=args.cap)
    report = verify_regular_lemma(group, args.mode)
    payload = {"order": len(group), **report.model_dump(mode="json")}
    _emit("group monomial-verify", args, payload, started)
    return EXIT_OK if report.passed else EXIT_FAILED


def cmd_admissible_weights(args: argparse.Namespace) -> int:
    started = time.perf_counter()
    weights = admissible_weights(args.q, args.n)
    payload = {"weights": [list(w) for w in weights]}
    _emit("group admissible-weights", args, payload, started)
    return EXIT_OK


def cmd_intertwiner(args: argparse.Namespace) -> int:
    started = time.perf_counter()
    pair = _load_pair(args)
    config = _config(args)
    found = find_intertwiner(
        pair.rho_generators, pair.theta_generators, cap=config.intertwiner_search_cap
    )
    payload = {
        "dimensions": [pair.n, pair.m],
        "found": found is not None,
        "intertwiner": found.to_json() if found is not None else None,
    }
    _emit("group intertwiner", args, payload, started)
    return EXIT_OK


# parser


def _common_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--verbose", "-v", action="store_true", help="Log at DEBUG level"
    )
    common.add_argument("--workers", type=int, default=None, help="Worker processes")
    common.add_argument(
        "--budget",
        type=int,
        default=None,
        help="Instance budget (overrides MODP_LAB_BUDGET)",
    )
    return common


def _add_group_source(parser: argparse.ArgumentParser, kind: str) -> None:
    parser.add_argument(f"--{kind}", help=f"{kind} JSON file")
    parser.add_argument(
        "--fixture", choices=FIXTURE_NAMES, help="Use a shipped fixture"
    )
    parser.add_argument("--cap", type=int, default=None, help="Closure element cap")


def build_parser() -> argparse.ArgumentParser:
    common = _common_parser()
    parser = argparse.ArgumentParser(
        prog="modplab",
        description=(
            "Exhaustive checks for mod-p representations and finite matrix groups"
        ),
    )
    parser.add_argument(
        "--version", action="version", version=f"%(prog)s {__version__}"
    )
    commands = parser.add_subparsers(dest="command", required=True)

    breuil = commands.add_parser(
        "breuil-enumerate", parents=[common], help="Tabulate niveau-1 rank-one profiles"
    )
    breuil.add_argument("--p", type=int, required=True)
    breuil.add_argument("--d", type=int, required=True)
    breuil.add_argument("--r", type=int, required=True)
    breuil.add_argument("--allowed", help="Comma-separated x values (default: all)")
    breuil.add_argument("--format", choices=("json", "csv"), default="json")
    breuil.set_defaults(handler=cmd_breuil_enumerate)

    regular = commands.add_parser(
        "rep-regular", parents=[common], help="Test r-regularity of a representation"
    )
    regular.add_argument("--p", type=int, required=True)
    regular.add_argument("--r", type=int, required=True)
    regular.add_argument("--rep", required=True, help='Summands "d:kappa,d:kappa,..."')
    regular.set_defaults(handler=cmd_rep_regular)

    verify = commands.add_parser(
        "verify-theorem",
        parents=[common],
        help="Exhaustively verify the vanishing theorem",
    )
    verify.add_argument("--p", type=int, required=True)
    verify.add_argument("--n", type=int, required=True)
    verify.add_argument("--r", type=int, required=True)
    which = verify.add_mutually_exclusive_group(required=True)
    which.add_argument("--type", help="Comma-separated inertial type a_1,...,a_n")
    which.add_argument("--all-types", action="store_true", help="Every inertial type")
    verify.add_argument(
        "--diagnostic", action="store_true", help="Drop the big-subquotient hypothesis"
    )
    verify.set_defaults(handler=cmd_verify_theorem)

    group = commands.add_parser("group", help="Finite matrix group lemma checks")
    group_commands = group.add_subparsers(dest="group_command", required=True)

    sub = group_commands.add_parser("regular-generated", parents=[common])
    _add_group_source(sub, "gens")
    sub.set_defaults(handler=cmd_regular_generated)

    sub = group_commands.add_parser("annihilation", parents=[common])
    _add_group_source(sub, "pair")
    sub.set_defaults(handler=cmd_annihilation)

    sub = group_commands.add_parser("kernels", parents=[common])
    _add_group_source(sub, "pair")
    sub.add_argument(
        "--characters",
        action="store_true",
        help="rho is a sum of characters, theta a character",
    )
    sub.set_defaults(handler=cmd_kernels)

    sub = group_commands.add_parser("determinant", parents=[common])
    _add_group_source(sub, "pair")
    sub.set_defaults(handler=cmd_determinant)

    sub = group_commands.add_parser("monomial-verify", parents=[common])
    _add_group_source(sub, "gens")
    sub.add_argument("--field", type=int, help="Field order q")
    sub.add_argument("--n", type=int, default=3)
    sub.add_argument("--psi", help="Comma-separated exponents of the primitive element")
    sub.add_argument("--mode", choices=("induced", "unipotent"), default="induced")
    sub.set_defaults(handler=cmd_monomial_verify)

    sub = group_commands.add_parser("admissible-weights", parents=[common])
    sub.add_argument("--q", type=int, required=True)
    sub.add_argument("--n", type=int, required=True)
    sub.set_defaults(handler=cmd_admissible_weights)

    sub = group_commands.add_parser("intertwiner", parents=[common])
    _add_group_source(sub, "pair")
    sub.set_defaults(handler=cmd_intertwiner)

    return parser


def _configure_logging(verbose: bool) -> None:
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(asctime)s %(name)s %(levelname)s %(message)s",
        stream=sys.stderr,
    )
    logging.getLogger("modplab").setLevel(logging.DEBUG if verbose else logging.WARNING)


def _report_error(e: Exception) -> None:
    payload = ErrorPayload(
        error=type(e).__name__,
        message=str(e),
        failed=getattr(e, "failed", None),
        witness=_jsonable(getattr(e, "witness", None)),
    )
    print(payload.model_dump_json(), file=sys.stderr)


def _jsonable(value: Any) -> Any:
    if isinstance(value, SquareMatrix):
        return value.to_json()
    if isinstance(value, tuple):
        return [_jsonable(v) for v in value]
    try:
        json.dumps(value)
    except TypeError:
        return repr(value)
    return value


_EXIT_CODES: Dict[type, int] = {
    ParameterError: EXIT_INPUT,
    PreconditionError: EXIT_INPUT,
    ResourceCapError: EXIT_CAP,
    InvariantError: EXIT_FAILED,
}


def main(argv: Optional[List[str]] = None) -> int:
    """
    Run the CLI.

    Args:
        argv: Arguments without the program name; defaults to sys.argv[1:]

    Returns:
        The process exit code
    """
    parser = build_parser()
    args = parser.parse_args(argv)
    _configure_logging(getattr(args, "verbose", False))
    handler: Callable[[argparse.Namespace], int] = args.handler
    try:
        return handler(args)
    except ValidationError as e:
        _report_error(e)
        return EXIT_INPUT
    except ModpLabError as e:
        _report_error(e)
        for kind, code in _EXIT_CODES.items():
            if isinstance(e, kind):
                return code
        return EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
