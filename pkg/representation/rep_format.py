"""
cdd/lrs polyhedra file format

    <optional name line>
    H-representation | V-representation
    [linearity k i1 ... ik]
    begin
    m d rational
    <m rows of d rationals>
    end

Lines starting with '*' are comments. Column 0 is the b column of an
H-file and the 1/0 vertex/ray column of a V-file.
"""
import logging
from typing import List, Optional, Tuple

from representation.models import HRep, Rep, VRep
from utils.errors import ParseError, RepresentationError
from utils.exact_arith import ONE, is_zero_vector, to_rational

logger = logging.getLogger(__name__)

H_HEADER = "H-representation"
V_HEADER = "V-representation"
NUMBER_TYPES = ("rational", "integer")


def _meaningful_lines(text: str) -> List[Tuple[int, str]]:
    lines = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith('*'):
            lines.append((number, line))
    return lines


def _parse_linearity(line: str, number: int) -> List[int]:
    tokens = line.split()[1:]
    try:
        values = [int(t) for t in tokens]
    except ValueError:
        raise ParseError(f"malformed linearity line {line!r}", number)
    if not values or values[0] != len(values) - 1:
        raise ParseError("linearity count does not match the listed rows", number)
    return values[1:]


def _parse_row(line: str, number: int, width: int) -> Tuple:
    tokens = line.split()
    if len(tokens) != width:
        raise ParseError(f"expected {width} entries, found {len(tokens)}", number)
    try:
        return tuple(to_rational(t) for t in tokens)
    except ValueError as e:
        raise ParseError(str(e), number)


def parse_rep(text: str) -> Rep:
    """Parse an H-file or V-file into a typed representation"""
    lines = _meaningful_lines(text)
    kind: Optional[str] = None
    linearity: List[int] = []
    linearity_line = None
    position = 0

    # Header section up to 'begin'
    while position < len(lines):
        number, line = lines[position]
        position += 1
        if line == H_HEADER:
            kind = "H"
        elif line == V_HEADER:
            kind = "V"
        elif line.startswith("linearity"):
            linearity = _parse_linearity(line, number)
            linearity_line = number
        elif line == "begin":
            break
        elif kind is None and position == 1:
            continue  # name line
        else:
            raise ParseError(f"unexpected header line {line!r}", number)
    else:
        raise ParseError("missing 'begin'")

    if kind is None:
        logger.info("no representation header, reading as %s", H_HEADER)
        kind = "H"
    if kind == "V" and linearity:
        raise ParseError("V-file with linearity rows describes a non-pointed polyhedron; V(P) is undefined",
                         linearity_line)

    if position >= len(lines):
        raise ParseError("missing size line")
    number, size_line = lines[position]
    position += 1
    size = size_line.split()
    if len(size) != 3:
        raise ParseError(f"malformed size line {size_line!r}", number)
    try:
        m, d = int(size[0]), int(size[1])
    except ValueError:
        raise ParseError(f"malformed size line {size_line!r}", number)
    if size[2] not in NUMBER_TYPES:
        raise ParseError(f"number type {size[2]!r} is not supported", number)
    if m < 0 or d < 2:
        raise ParseError(f"invalid size {m} x {d}", number)

    rows = []
    size_line_number = number
    while position < len(lines) and lines[position][1] != "end":
        number, line = lines[position]
        position += 1
        rows.append((number, _parse_row(line, number, d)))
    if position >= len(lines):
        raise ParseError("missing 'end'")
    if len(rows) != m:
        raise ParseError(f"declared {m} rows, found {len(rows)}", size_line_number)

    trailing = lines[position + 1:]
    if trailing:
        logger.warning("ignoring %d line(s) after 'end'", len(trailing))

    for index in linearity:
        if not 1 <= index <= m:
            raise ParseError(f"linearity row {index} is out of range", linearity_line)

    try:
        if kind == "H":
            for number, row in rows:
                if is_zero_vector(row):
                    raise ParseError("all-zero inequality row", number)
            return HRep.from_rows([row for _, row in rows], d - 1,
                                  equality_marks=[i - 1 for i in linearity])
        return VRep.from_rows([_vertex_scaled(row, number) for number, row in rows], d - 1)
    except RepresentationError as e:
        raise ParseError(str(e))


def _vertex_scaled(row: Tuple, number: int) -> Tuple:
    lead = row[0]
    if lead < 0:
        raise ParseError(f"leading entry {lead} is neither 0 nor positive", number)
    if lead == 0:
        if is_zero_vector(row):
            raise ParseError("zero ray row", number)
        return row
    if lead != ONE:
        return tuple(x / lead for x in row)
    return row


def emit_rep(rep: Rep, name: Optional[str] = None) -> str:
    """Write a representation in the cdd/lrs layout"""
    lines = []
    if name:
        lines.append(name)
    lines.append(H_HEADER if isinstance(rep, HRep) else V_HEADER)
    if isinstance(rep, HRep) and rep.equality_marks:
        marks = sorted(rep.equality_marks)
        lines.append(f"linearity {len(marks)} " + " ".join(str(i + 1) for i in marks))
    lines.append("begin")
    lines.append(f"{rep.rows.n_rows} {rep.n + 1} rational")
    for row in rep.rows:
        lines.append(" ".join(str(x) for x in row))
    lines.append("end")
    return "\n".join(lines) + "\n"
