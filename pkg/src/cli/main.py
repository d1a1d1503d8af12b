"""
Command-line entry point for the HRS tilt engine.

Every verb produces one Report. The exit status is 0 when all verdicts
pass, 1 on a failed check and the error's own status otherwise.
"""

import argparse
import sys
from typing import Any, Callable, Dict, List, Optional

from src.cli import commands
from src.cli.reports import build_report, error_report, write_report
from src.cli.selftest import DEPTHS, run_selftest
from src.config import settings
from src.utils.error_handling import (
    EXIT_CHECK_FAILURE,
    EXIT_PASS,
    EXIT_VALIDATION,
    HrsTiltError,
    exit_code_for,
)
from src.utils.logging import ExecutionTimer, get_logger, set_log_level
from src.utils.validation import Report

logger = get_logger(__name__)

HEART_OPERATIONS = ("hom", "ext1", "ext2", "kernel", "cokernel")

HANDLERS: Dict[str, Callable[[argparse.Namespace], commands.CommandOutcome]] = {
    "snf": commands.run_snf,
    "group": commands.run_group,
    "hom": commands.run_hom,
    "ext": commands.run_ext,
    "heart": commands.run_heart,
    "tilt": commands.run_tilt,
    "ah-detect": commands.run_ah_detect,
    "example73": commands.run_example73,
}

# Arguments that only shape output, left out of the provenance.
_PRESENTATION = ("format", "out", "log_level", "verb")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text", help="Report format")
    common.add_argument("--seed", type=int, default=None, help="Seed for randomized checks")
    common.add_argument("--bound", type=int, default=None, help="Resource or truncation bound")
    common.add_argument("--out", default=None, help="Write the report to this file")
    common.add_argument("--log-level", default=None, help="Override LOG_LEVEL for this run")

    parser = argparse.ArgumentParser(
        prog="hrs-tilt",
        description="Certificates for abelian groups, tilted hearts and almost-hereditary detection",
    )
    verbs = parser.add_subparsers(dest="verb", required=True, metavar="VERB")

    snf = verbs.add_parser("snf", parents=[common], help="Smith normal form of an integer matrix")
    snf.add_argument("matrix", help="JSON list of rows or a matrix fixture file")

    group = verbs.add_parser("group", parents=[common], help="Canonical form of a group")
    group.add_argument("group", nargs="?", help="Group text such as 'Z^2 + Z/6'")
    group.add_argument("--matrix", help="Presentation matrix, JSON rows or fixture file")

    hom = verbs.add_parser("hom", parents=[common], help="Hom between two groups")
    hom.add_argument("source")
    hom.add_argument("target")

    ext = verbs.add_parser("ext", parents=[common], help="Ext¹ between two groups")
    ext.add_argument("source")
    ext.add_argument("target")

    heart = verbs.add_parser("heart", parents=[common], help="Computations in the tilted heart")
    heart.add_argument("operation", choices=HEART_OPERATIONS)
    heart.add_argument("--q", required=True, help="Comma separated primes")
    heart.add_argument("--object", required=True, help="Object written F,T")
    heart.add_argument("--target", default=None, help="Second object written F,T")
    morphism = heart.add_mutually_exclusive_group()
    morphism.add_argument("--morphism", default=None, help="Multiplication p=N on the object")
    morphism.add_argument("--morphism-file", default=None, help="Heart morphism fixture")

    tilt = verbs.add_parser("tilt", parents=[common], help="Verify a tilting object")
    tilt.add_argument("--q", required=True, help="Comma separated primes")
    tilt.add_argument("--object", default="Z,0", help="Candidate written F,T")
    tilt.add_argument("--witness", action="append", default=None, help="Witness object F,T")

    detect = verbs.add_parser("ah-detect", parents=[common], help="Almost-hereditary detection")
    detect.add_argument("fixture", help="Hom-quiver fixture JSON")

    example = verbs.add_parser("example73", parents=[common], help="The example ring end to end")
    example.add_argument("--prime", type=int, default=None)
    example.add_argument("--export", default=None, help="Write the generated fixture here")

    selftest = verbs.add_parser("selftest", parents=[common], help="Run the acceptance suite")
    selftest.add_argument("depth", choices=DEPTHS)
    return parser


def _arguments(args: argparse.Namespace) -> Dict[str, Any]:
    return {k: v for k, v in sorted(vars(args).items()) if k not in _PRESENTATION}


def run(args: argparse.Namespace) -> Report:
    """Dispatch one parsed command and assemble its report."""
    seed = settings.DEFAULT_SEED if args.seed is None else args.seed
    arguments = _arguments(args)
    bounds = {
        "brute_force_order": settings.BRUTE_FORCE_ORDER_BOUND,
        "enumeration_vertices": settings.ENUMERATION_VERTEX_BOUND,
        "truncation": settings.TRUNCATION_BOUND,
        "stability": settings.STABILITY_BOUND,
    }
    if args.bound is not None:
        bounds["requested"] = args.bound

    if args.verb == "selftest":
        verdicts, results = run_selftest(args.depth, seed)
        return build_report(
            args.verb, verdicts, results, arguments=arguments, seed=seed, bounds=bounds
        )

    outcome = HANDLERS[args.verb](args)
    return build_report(
        args.verb,
        outcome.verdicts,
        outcome.results,
        arguments=arguments,
        inputs=outcome.inputs,
        seed=seed,
        bounds=bounds,
    )


def main(argv: Optional[List[str]] = None) -> int:
    """
    Main entry point for the command line.

    Returns:
        The process exit status
    """
    args = build_parser().parse_args(argv)
    if args.log_level:
        set_log_level(args.log_level)

    problems = settings.validate_config()
    if problems:
        for problem in problems:
            logger.error("Invalid configuration", problem=problem)
        return EXIT_VALIDATION

    try:
        with ExecutionTimer(f"hrs-tilt {args.verb}", logger):
            report = run(args)
        status = EXIT_PASS if report.passed else EXIT_CHECK_FAILURE
    except HrsTiltError as e:
        logger.error(f"{args.verb} failed", **e.to_dict())
        report = error_report(args.verb, e, _arguments(args))
        status = exit_code_for(e)

    text = write_report(report, args.format, args.out)
    if args.out is None:
        print(text)
    logger.info("Report written", verb=args.verb, passed=report.passed, status=status)
    return status


if __name__ == "__main__":
    sys.exit(main())
