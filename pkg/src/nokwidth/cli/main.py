from __future__ import annotations

import argparse
import sys
import time
from collections.abc import Sequence

import nokwidth.logger as logger_mod
from nokwidth import config
from nokwidth.errors import InternalInvariantError, NokWidthError
from nokwidth.jsonio import (
    create_report_document,
    dumps_canonical,
    to_jsonable,
    validate_document,
    write_document,
)
from nokwidth.repmod import BuildLimits
from nokwidth.rootsys import CartanType, build_root_system

from .cases import ORDERINGS, CaseSpec
from .commands import (
    CONSTRUCTIONS,
    cmd_essential,
    cmd_gamma,
    cmd_roots,
    cmd_verify,
    cmd_width,
)

log = logger_mod.get_logger()


def _common(p: argparse.ArgumentParser, weight: bool = True) -> None:
    p.add_argument("--type", required=True, help="Cartan series A..G")
    p.add_argument("--rank", required=True, type=int)
    if weight:
        p.add_argument("--lambda", dest="lam", help='fundamental coordinates, e.g. "1,1" or "1/2,1/2"')
        p.add_argument("--epsilon", help='type A epsilon coordinates, e.g. "2,1,0"')
    p.add_argument("--pretty", action="store_true", help="indent the JSON document")
    p.add_argument("--timing", action="store_true", help="add wall-clock timing to the document")
    p.add_argument("--output", help="also write the document to this path")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nok-width",
        description=(
            "Essential monomials and Gromov-width certificates for G/P. "
            "Each run takes one case from its flags and prints one JSON document."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("roots", help="positive roots, coroot pairings and Hasse edges")
    _common(p, weight=False)

    p = sub.add_parser("width", help="Gromov-width formula for a (rational) weight")
    _common(p)

    for name, helptext in (
        ("essential", "essential set es_P(level * lambda)"),
        ("gamma", "level slice of the monoid Gamma_lambda"),
    ):
        p = sub.add_parser(name, help=helptext)
        _common(p)
        p.add_argument("--ordering", choices=ORDERINGS, default=None)
        p.add_argument("--word", help='reduced word, e.g. "1,2,1"')
        p.add_argument("--variant", choices=("prefix", "suffix"), default="prefix")
        p.add_argument("--level", type=int, default=1)
        p.add_argument(
            "--max-dim",
            dest="max_dim",
            type=int,
            default=config.MAX_DIM,
            help="refuse to build V(level * lambda) above this dimension",
        )

    p = sub.add_parser(
        "verify",
        help="verify the simplex constructions",
        description=(
            "Verify the simplex constructions for one case given by flags. "
            "Only the weight spaces the vertices need are built, so --max-dim does not apply."
        ),
    )
    _common(p)
    p.add_argument("--construction", choices=CONSTRUCTIONS, default="all")
    p.add_argument("--word", help="reduced word for the convex construction")
    p.add_argument("--jobs", type=int, default=config.JOBS)
    return parser


def _run(args: argparse.Namespace) -> tuple[dict, int]:
    if args.command == "roots":
        return cmd_roots(build_root_system(CartanType(args.type, args.rank)))
    case = CaseSpec.from_args(args)
    rs = build_root_system(case.cartan_type)
    if args.command == "width":
        return cmd_width(rs, case)
    if args.command in ("essential", "gamma"):
        limits = BuildLimits(max_dim=args.max_dim)
        handler = cmd_essential if args.command == "essential" else cmd_gamma
        return handler(rs, case, limits)
    return cmd_verify(rs, case, args.construction, jobs=args.jobs)


def _inputs(args: argparse.Namespace) -> dict:
    # jobs is left out so documents do not depend on parallelism
    skip = ("command", "pretty", "timing", "output", "jobs")
    return {
        ("lambda" if k == "lam" else k): v
        for k, v in sorted(vars(args).items())
        if k not in skip and v is not None
    }


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    document = create_report_document(args.command, _inputs(args))
    started = time.perf_counter()
    try:
        output, code = _run(args)
        document["output"] = to_jsonable(output)
    except NokWidthError as e:
        log.error(f"❌ {type(e).__name__}: {e}")
        code = e.exit_code
        document["error"] = {"type": type(e).__name__, "message": str(e), "exit_code": code}
    except Exception as e:  # noqa: BLE001
        log.exception(f"❌ Unexpected failure: {e}")
        code = InternalInvariantError.exit_code
        document["error"] = {"type": type(e).__name__, "message": str(e), "exit_code": code}
    if args.timing:
        document["timing"] = {"seconds": round(time.perf_counter() - started, 6)}

    try:
        validate_document(document)
    except NokWidthError as e:
        log.error(f"❌ {e}")
        return e.exit_code
    text = dumps_canonical(document, pretty=args.pretty)
    sys.stdout.write(text + "\n")
    if args.output:
        write_document(document, args.output, pretty=args.pretty)
    return code


if __name__ == "__main__":
    sys.exit(main())
