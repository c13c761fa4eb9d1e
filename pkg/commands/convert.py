"""
convert, polar and bipolar commands
"""
import logging
from typing import TextIO

from commands.common import CliConfig, load_vrep, write_rep
from config import EXIT_CODES
from conversion.enumeration import facet_enumeration_direct, facet_enumeration_lifted, vertex_enumeration
from conversion.redundancy import require_pointed_v
from polarity.polar import bipolar_vrep, polar_hrep
from representation.file_manager import rep_files
from representation.models import HRep
from utils.analytics import analytics

logger = logging.getLogger(__name__)


def run_convert(config: CliConfig, stdout: TextIO, stderr: TextIO) -> int:
    """H-file to V-file, or V-file to H-file by the lifted or direct route"""
    rep = rep_files.load_rep(config.input)
    if isinstance(rep, HRep):
        result, report = vertex_enumeration(rep, config.cap, count_bases=True)
    elif config.direct:
        result, report = facet_enumeration_direct(require_pointed_v(rep), config.cap, count_bases=True)
    else:
        result, report = facet_enumeration_lifted(require_pointed_v(rep), config.cap, count_bases=True)

    write_rep(result, config, stdout)
    for line in analytics.report_lines(report):
        stderr.write(line + "\n")
    return EXIT_CODES['ok']


def run_polar(config: CliConfig, stdout: TextIO, stderr: TextIO) -> int:
    """H-file of P+"""
    v = load_vrep(config.input, config.cap)
    write_rep(polar_hrep(v), config, stdout)
    return EXIT_CODES['ok']


def run_bipolar(config: CliConfig, stdout: TextIO, stderr: TextIO) -> int:
    """V-file of P++"""
    v = load_vrep(config.input, config.cap)
    write_rep(bipolar_vrep(v), config, stdout)
    return EXIT_CODES['ok']
