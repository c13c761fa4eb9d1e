"""
symcheck command
"""
import logging
from typing import TextIO

from commands.common import CliConfig, format_flag, load_vrep
from config import EXIT_CODES
from polarity.polar import shape_class
from polarity.symmetry import SymmetryReason, is_hv_symmetric, verify_equivalences

logger = logging.getLogger(__name__)


def run_symcheck(config: CliConfig, stdout: TextIO, stderr: TextIO) -> int:
    v = load_vrep(config.input, config.cap)
    verdict = is_hv_symmetric(v, config.cap)

    stdout.write(f"HV-symmetric: {'yes' if verdict.symmetric else 'no'}\n")
    stdout.write(f"reason: {verdict.reason.value}\n")
    stdout.write(f"shape: {shape_class(v)}\n")
    if verdict.reason is SymmetryReason.POLAR_NOT_POINTED:
        stdout.write("conditions: not applicable, P+ is not pointed\n")
    else:
        check = verify_equivalences(v, config.cap)
        flags = ",".join(format_flag(x) for x in check.as_tuple())
        stdout.write(f"conditions (a,b,c,d): ({flags})\n")
    if verdict.witness_row is not None:
        stdout.write("witness facet: " + " ".join(str(x) for x in verdict.witness_row) + "\n")

    return EXIT_CODES['ok'] if verdict.symmetric else EXIT_CODES['not_symmetric']
