"""
certify command
"""
from typing import TextIO

from commands.common import CliConfig, format_vector, load_vrep
from config import EXIT_CODES
from conversion.redundancy import member_certificate
from utils.errors import DimensionMismatch, ParseError
from utils.exact_arith import to_rational


def run_certify(config: CliConfig, stdout: TextIO, stderr: TextIO) -> int:
    """Print lambda and mu with [1, x] = [lambda, mu] V(P), or 'not a member'"""
    v = load_vrep(config.input, config.cap)
    try:
        point = tuple(to_rational(token) for token in config.point)
    except ValueError as e:
        raise ParseError(f"point coordinate: {e}")
    if len(point) != v.n:
        raise DimensionMismatch(f"point has {len(point)} coordinates, the polyhedron lives in dimension {v.n}")

    certificate = member_certificate(v, point)
    if certificate is None:
        stdout.write("not a member\n")
    else:
        stdout.write(f"lambda = {format_vector(certificate.lambdas)}\n")
        stdout.write(f"mu = {format_vector(certificate.mus)}\n")
    return EXIT_CODES['ok']
