"""
Exception hierarchy for PolarBox

Every error carries the process exit code the command line reports for it.
"""
from typing import Optional, Sequence, Tuple

from config import EXIT_CODES


class PolarBoxError(Exception):
    """Base class for all PolarBox failures"""
    exit_code = EXIT_CODES['internal']


class ParseError(PolarBoxError):
    """Raised when a polyhedra file does not follow the cdd/lrs layout"""
    exit_code = EXIT_CODES['parse']

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class RepresentationError(PolarBoxError, ValueError):
    """Raised for an invalid HRep/VRep or an incompatible pair of representations"""
    exit_code = EXIT_CODES['parse']


class DimensionMismatch(PolarBoxError, ValueError):
    """Raised when vector and matrix shapes disagree"""
    exit_code = EXIT_CODES['parse']


class Infeasible(PolarBoxError):
    """Raised when an inequality system describes the empty set"""
    exit_code = EXIT_CODES['infeasible']


class NotPointed(PolarBoxError):
    """Raised when a polyhedron or cone contains a line"""
    exit_code = EXIT_CODES['not_pointed']

    def __init__(self, message: str, lineality: Sequence[Tuple] = ()):
        self.lineality = tuple(lineality)
        super().__init__(message)


class PolarNotPointed(NotPointed):
    """Raised when the polar of P contains a line, so V(P+) is undefined"""


class OriginNotContained(PolarBoxError):
    """Raised when a route needs 0 in P and it is not"""
    exit_code = EXIT_CODES['origin_not_contained']


class CapExceeded(PolarBoxError):
    """Raised when a brute-force enumeration would visit too many subsets"""
    exit_code = EXIT_CODES['cap_exceeded']

    def __init__(self, rows: int, subset_size: int, cap: int):
        self.rows = rows
        self.subset_size = subset_size
        self.cap = cap
        super().__init__(
            f"binomial({rows}, {subset_size}) subsets exceed the cap of {cap}"
        )


class InconsistentPair(PolarBoxError):
    """Raised when an H-rep and a V-rep cannot describe the same polyhedron"""

    def __init__(self, h_row: int, v_row: int):
        self.h_row = h_row
        self.v_row = v_row
        super().__init__(f"generator row {v_row} violates inequality row {h_row}")


class ConsistencyViolation(PolarBoxError):
    """Raised when independent computations of equivalent statements disagree"""
