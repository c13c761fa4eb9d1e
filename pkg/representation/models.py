"""
H- and V-representation data model

An HRep row (b, a) means b + a.x >= 0, or b + a.x = 0 when the row is
marked as an equation. A VRep row is (1, s) for a vertex s or (0, r) for
a ray r, so that P = conv(S) + cone(R).
"""
import logging
from dataclasses import dataclass, field
from typing import FrozenSet, Iterable, List, Optional, Sequence, Tuple, Union

from utils.errors import RepresentationError
from utils.exact_arith import (
    ONE,
    ZERO,
    RMatrix,
    Vector,
    is_zero_vector,
    negate,
    primitive_integer_vector,
    to_vector,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class HRep:
    n: int
    rows: RMatrix
    equality_marks: FrozenSet[int] = field(default_factory=frozenset)

    kind = "H"

    def __post_init__(self):
        object.__setattr__(self, 'equality_marks', frozenset(self.equality_marks))
        if self.n < 1:
            raise RepresentationError("ambient dimension must be at least 1")
        if self.rows.n_cols != self.n + 1:
            raise RepresentationError(
                f"H-rep in dimension {self.n} needs {self.n + 1} columns, got {self.rows.n_cols}"
            )
        for i, row in enumerate(self.rows):
            if is_zero_vector(row):
                raise RepresentationError(f"row {i} of the H-rep is all zero")
        for i in self.equality_marks:
            if not 0 <= i < self.rows.n_rows:
                raise RepresentationError(f"equality mark {i} is out of range")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable], n: int, equality_marks: Iterable[int] = ()) -> "HRep":
        return cls(n, RMatrix(rows, cols=n + 1), frozenset(equality_marks))

    @property
    def inequality_rows(self) -> List[Vector]:
        return [row for i, row in enumerate(self.rows) if i not in self.equality_marks]

    @property
    def equality_rows(self) -> List[Vector]:
        return [row for i, row in enumerate(self.rows) if i in self.equality_marks]

    @property
    def b_block(self) -> List[Vector]:
        """Rows with b != 0, the (b, A) block"""
        return [row for row in self.rows if row[0] != 0]

    @property
    def homogeneous_block(self) -> List[Vector]:
        """Rows with b = 0, the (0, B) block"""
        return [row for row in self.rows if row[0] == 0]


@dataclass(frozen=True)
class VRep:
    n: int
    rows: RMatrix

    kind = "V"

    def __post_init__(self):
        if self.n < 1:
            raise RepresentationError("ambient dimension must be at least 1")
        if self.rows.n_cols != self.n + 1:
            raise RepresentationError(
                f"V-rep in dimension {self.n} needs {self.n + 1} columns, got {self.rows.n_cols}"
            )
        for i, row in enumerate(self.rows):
            if row[0] not in (ZERO, ONE):
                raise RepresentationError(f"row {i} has leading entry {row[0]}, expected 0 or 1")
            if row[0] == 0 and is_zero_vector(row):
                raise RepresentationError(f"ray row {i} is the zero vector")
        if not any(row[0] == 1 for row in self.rows):
            raise RepresentationError("a V-rep needs at least one vertex row")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable], n: int) -> "VRep":
        return cls(n, RMatrix(rows, cols=n + 1))

    @classmethod
    def from_generators(cls, vertices: Sequence[Sequence], rays: Sequence[Sequence] = (),
                        n: Optional[int] = None) -> "VRep":
        if n is None:
            n = len(vertices[0])
        rows = [(ONE,) + to_vector(s) for s in vertices] + [(ZERO,) + to_vector(r) for r in rays]
        return cls.from_rows(rows, n)

    @property
    def vertex_indices(self) -> List[int]:
        return [i for i, row in enumerate(self.rows) if row[0] == 1]

    @property
    def ray_indices(self) -> List[int]:
        return [i for i, row in enumerate(self.rows) if row[0] == 0]

    @property
    def vertices(self) -> List[Vector]:
        return [self.rows[i][1:] for i in self.vertex_indices]

    @property
    def rays(self) -> List[Vector]:
        return [self.rows[i][1:] for i in self.ray_indices]

    @property
    def m_S(self) -> int:
        return len(self.vertex_indices)

    @property
    def m_R(self) -> int:
        return len(self.ray_indices)


Rep = Union[HRep, VRep]


def canonical_sort_key(row: Sequence) -> Tuple:
    """Leading column descending, then entries ascending"""
    return (-row[0],) + tuple(row[1:])


def _canonical_equality_row(row: Vector) -> Vector:
    row = primitive_integer_vector(row)
    lead = next((x for x in row[1:] if x != 0), row[0])
    return negate(row) if lead < 0 else row


def _canonical_hrep(h: HRep) -> HRep:
    equalities = sorted({_canonical_equality_row(row) for row in h.equality_rows},
                        key=canonical_sort_key)
    equality_set = set(equalities)
    inequalities = set()
    for row in h.inequality_rows:
        row = primitive_integer_vector(row)
        if is_zero_vector(row[1:]) and row[0] > 0:
            # the hyperplane at infinity holds everywhere
            continue
        if _canonical_equality_row(row) in equality_set:
            continue
        inequalities.add(row)
    ordered = equalities + sorted(inequalities, key=canonical_sort_key)
    return HRep.from_rows(ordered, h.n, equality_marks=range(len(equalities)))


def _canonical_vrep(v: VRep) -> VRep:
    rows = set()
    for row in v.rows:
        if row[0] != 0:
            rows.add(tuple(x / row[0] for x in row))
        else:
            rows.add(primitive_integer_vector(row))
    return VRep.from_rows(sorted(rows, key=canonical_sort_key), v.n)


def canonicalize(rep: Rep) -> Rep:
    """Unique form up to row permutation and positive row scaling"""
    if isinstance(rep, HRep):
        return _canonical_hrep(rep)
    if isinstance(rep, VRep):
        return _canonical_vrep(rep)
    raise RepresentationError(f"cannot canonicalize {type(rep).__name__}")


def reps_equal(first: Rep, second: Rep) -> bool:
    """Syntactic equality of canonical matrices"""
    if type(first) is not type(second):
        raise RepresentationError(f"cannot compare {first.kind}-rep with {second.kind}-rep")
    if first.n != second.n:
        raise RepresentationError(f"cannot compare dimensions {first.n} and {second.n}")
    a, b = canonicalize(first), canonicalize(second)
    if a.rows != b.rows:
        return False
    if isinstance(a, HRep):
        return a.equality_marks == b.equality_marks
    return True


def as_hrep(v: VRep) -> HRep:
    """Read a generator matrix as an inequality matrix, row for row"""
    return HRep(v.n, v.rows)


def as_vrep(h: HRep) -> VRep:
    """Read an inequality matrix as a generator matrix"""
    if h.equality_marks:
        raise RepresentationError("an H-rep with equations has no generator reading")
    rows = []
    for i, row in enumerate(h.rows):
        if row[0] < 0:
            raise RepresentationError(
                f"row {i} has negative entry {row[0]} in column one and cannot be a V-representation"
            )
        rows.append(tuple(x / row[0] for x in row) if row[0] > 0 else row)
    return VRep.from_rows(rows, h.n)
