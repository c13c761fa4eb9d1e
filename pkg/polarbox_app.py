"""
PolarBox command line
Exact H/V conversion, polars and HV-symmetry for pointed rational polyhedra
"""
import argparse
import logging
import sys
from typing import Callable, Dict, List, Optional, TextIO

from commands.certify import run_certify
from commands.common import CliConfig
from commands.convert import run_bipolar, run_convert, run_polar
from commands.liftcompare import run_liftcompare
from commands.suite import run_suite
from commands.symcheck import run_symcheck
from config import APP_DESCRIPTION, APP_NAME, DEFAULT_CAP, DEFAULT_SEED, EXIT_CODES, SUITE_DEFAULT_COUNT
from utils.errors import PolarBoxError
from utils.logging_config import level_for_verbosity, setup_logging

logger = logging.getLogger(APP_NAME)

HANDLERS: Dict[str, Callable[[CliConfig, TextIO, TextIO], int]] = {
    'convert': run_convert,
    'polar': run_polar,
    'bipolar': run_bipolar,
    'symcheck': run_symcheck,
    'certify': run_certify,
    'liftcompare': run_liftcompare,
    'suite': run_suite,
}


def build_parser() -> argparse.ArgumentParser:
    # global flags go before or after the command name, so none of them has a default here
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--cap", type=int, default=argparse.SUPPRESS,
                        help=f"largest number of row subsets a brute-force count may visit (default {DEFAULT_CAP})")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS,
                        help=f"seed for randomized instances (default {DEFAULT_SEED})")
    common.add_argument("-v", "--verbose", action="count", default=argparse.SUPPRESS,
                        help="log progress to standard error; repeat for debug output")

    parser = argparse.ArgumentParser(prog=APP_NAME, description=APP_DESCRIPTION, parents=[common])
    subparsers = parser.add_subparsers(dest="command", required=True)

    convert = subparsers.add_parser("convert", parents=[common], help="H-file to V-file or V-file to H-file")
    convert.add_argument("input")
    convert.add_argument("--direct", action="store_true",
                         help="facet enumeration by vertex enumeration of the polar (needs 0 in P)")
    convert.add_argument("-o", "--output", help="output file (default standard output)")
    convert.add_argument("--save", action="store_true", help="write the result beside the input as .ine/.ext")

    for name, text in (("polar", "H-file of the polar P+"), ("bipolar", "V-file of P++")):
        command = subparsers.add_parser(name, parents=[common], help=text)
        command.add_argument("input")
        command.add_argument("-o", "--output", help="output file (default standard output)")

    symcheck = subparsers.add_parser("symcheck", parents=[common], help="decide HV-symmetry")
    symcheck.add_argument("input")

    certify = subparsers.add_parser("certify", parents=[common], help="membership certificate for a point")
    certify.add_argument("input")
    certify.add_argument("point", nargs="*", help="coordinates; negative fractions such as -1/2 go after --")

    liftcompare = subparsers.add_parser("liftcompare", parents=[common], help="compare lifted and direct routes")
    liftcompare.add_argument("input")
    liftcompare.add_argument("--csv", help="also write the table as CSV")

    suite = subparsers.add_parser("suite", parents=[common], help="seeded check of the four equivalent symmetry conditions")
    suite.add_argument("--count", type=int, default=SUITE_DEFAULT_COUNT, help="number of random instances")

    return parser


def parse_config(argv: Optional[List[str]] = None) -> CliConfig:
    args = build_parser().parse_args(argv)
    return CliConfig(
        command=args.command,
        input=getattr(args, "input", None),
        output=getattr(args, "output", None),
        direct=getattr(args, "direct", False),
        save=getattr(args, "save", False),
        csv=getattr(args, "csv", None),
        point=list(getattr(args, "point", [])),
        count=getattr(args, "count", SUITE_DEFAULT_COUNT),
        cap=getattr(args, "cap", DEFAULT_CAP),
        seed=getattr(args, "seed", DEFAULT_SEED),
        verbose=getattr(args, "verbose", 0),
    )


def main(argv: Optional[List[str]] = None, stdout: Optional[TextIO] = None,
         stderr: Optional[TextIO] = None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    config = parse_config(argv)
    setup_logging(level_for_verbosity(config.verbose))

    try:
        return HANDLERS[config.command](config, stdout, stderr)
    except PolarBoxError as e:
        logger.error("%s failed: %s", config.command, e)
        return e.exit_code
    except OSError as e:
        logger.error("%s failed: %s", config.command, e)
        return EXIT_CODES['parse']


if __name__ == "__main__":
    sys.exit(main())
