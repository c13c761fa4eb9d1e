"""
Shared plumbing for the command handlers
"""
import logging
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, TextIO

from config import DEFAULT_CAP, DEFAULT_SEED, SUITE_DEFAULT_COUNT
from conversion.enumeration import vertex_enumeration
from conversion.redundancy import require_pointed_v
from representation.file_manager import rep_files
from representation.models import HRep, Rep, VRep
from representation.rep_format import emit_rep
from utils.exact_arith import to_rational

logger = logging.getLogger(__name__)

COMMANDS = ('convert', 'polar', 'bipolar', 'symcheck', 'certify', 'liftcompare', 'suite')


@dataclass
class CliConfig:
    command: str
    input: Optional[str] = None
    output: Optional[str] = None
    direct: bool = False
    save: bool = False
    csv: Optional[str] = None
    point: List[str] = field(default_factory=list)
    count: int = SUITE_DEFAULT_COUNT
    cap: int = DEFAULT_CAP
    seed: int = DEFAULT_SEED
    verbose: int = 0

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise ValueError(f"unknown command {self.command!r}")


def load_vrep(path: str, cap: int) -> VRep:
    """Pointed V-file as is; an H-file is vertex-enumerated first"""
    rep = rep_files.load_rep(path)
    if isinstance(rep, HRep):
        logger.info("enumerating vertices of the H-file input")
        rep, _ = vertex_enumeration(rep, cap)
    return require_pointed_v(rep)


def write_rep(rep: Rep, config: CliConfig, stdout: TextIO) -> None:
    """Result goes to -o, beside the input with --save, or to standard output"""
    if config.output:
        rep_files.save_rep(rep, config.output)
    elif config.save and config.input:
        rep_files.save_rep(rep, rep_files.output_path(config.input, rep))
    else:
        stdout.write(emit_rep(rep))


def format_vector(values: Sequence) -> str:
    return "(" + ", ".join(str(to_rational(x)) for x in values) + ")"


def format_flag(value: bool) -> str:
    return "true" if value else "false"
