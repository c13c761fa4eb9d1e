"""
suite command: seeded run of the four equivalent symmetry conditions
"""
import logging
from typing import TextIO

import numpy as np

from commands.common import CliConfig
from config import EXIT_CODES
from polarity.instances import symmetry_instances
from polarity.symmetry import verify_equivalences
from utils.analytics import analytics

logger = logging.getLogger(__name__)


def run_suite(config: CliConfig, stdout: TextIO, stderr: TextIO) -> int:
    rng = np.random.default_rng(config.seed)
    instances = symmetry_instances(rng, config.count)
    checks = []
    for k, v in enumerate(instances):
        checks.append(verify_equivalences(v, config.cap))
        logger.debug("instance %d of %d done", k + 1, len(instances))

    frame = analytics.suite_table(checks, [v.n for v in instances])
    stdout.write(analytics.summary_by_dimension(frame).to_string(index=False) + "\n")
    for key, value in analytics.suite_summary(frame).items():
        stdout.write(f"{key}: {value}\n")
    return EXIT_CODES['ok']
