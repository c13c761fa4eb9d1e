"""
Exact rational arithmetic for PolarBox

Scalars are fractions.Fraction, always in lowest terms with a positive
denominator. Matrices keep their entries in read-only numpy object arrays.
"""
import logging
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from utils.errors import DimensionMismatch

logger = logging.getLogger(__name__)

Rational = Fraction
Vector = Tuple[Fraction, ...]

ZERO = Fraction(0)
ONE = Fraction(1)

_RATIONAL_TOKEN = re.compile(r"^[+-]?\d+(/\d+)?$")

# Linear system classifications
UNIQUE = "unique"
NO_SOLUTION = "none"
INFINITELY_MANY = "infinitely-many"

# LP outcomes
OPTIMAL = "optimal"
UNBOUNDED = "unbounded"
INFEASIBLE = "infeasible"


def to_rational(value) -> Fraction:
    """Convert an int, Fraction or 'p/q' token into a Fraction"""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, np.integer)):
        return Fraction(int(value))
    if isinstance(value, str):
        token = value.strip()
        if not _RATIONAL_TOKEN.match(token):
            raise ValueError(f"not a rational number: {value!r}")
        try:
            return Fraction(token)
        except ZeroDivisionError:
            raise ValueError(f"zero denominator in {value!r}")
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


def to_vector(values: Iterable) -> Vector:
    return tuple(to_rational(x) for x in values)


def dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    if len(u) != len(v):
        raise DimensionMismatch(f"dot product of lengths {len(u)} and {len(v)}")
    return sum((a * b for a, b in zip(u, v)), ZERO)


def is_zero_vector(v: Sequence[Fraction]) -> bool:
    return all(x == 0 for x in v)


def negate(v: Sequence[Fraction]) -> Vector:
    return tuple(-x for x in v)


def primitive_integer_vector(vector: Sequence) -> Vector:
    """Scale by a positive constant to coprime integer entries"""
    values = to_vector(vector)
    if is_zero_vector(values):
        return values
    scale = math.lcm(*(x.denominator for x in values))
    integers = [int(x * scale) for x in values]
    divisor = math.gcd(*integers)
    return tuple(Fraction(i // divisor) for i in integers)


class RMatrix:
    """Dense immutable matrix of Fractions; rows are constraints or generators"""

    def __init__(self, rows: Iterable[Iterable], cols: Optional[int] = None):
        converted = [to_vector(row) for row in rows]
        if cols is None:
            if not converted:
                raise ValueError("an empty matrix needs an explicit column count")
            cols = len(converted[0])
        if cols < 1:
            raise ValueError("a matrix needs at least one column")
        for i, row in enumerate(converted):
            if len(row) != cols:
                raise DimensionMismatch(f"row {i} has {len(row)} entries, expected {cols}")

        data = np.empty((len(converted), cols), dtype=object)
        for i, row in enumerate(converted):
            for j, entry in enumerate(row):
                data[i, j] = entry
        data.flags.writeable = False

        self._data = data
        self._rows = tuple(converted)

    @property
    def n_rows(self) -> int:
        return self._data.shape[0]

    @property
    def n_cols(self) -> int:
        return self._data.shape[1]

    @property
    def shape(self) -> Tuple[int, int]:
        return self._data.shape

    @property
    def rows(self) -> Tuple[Vector, ...]:
        return self._rows

    def as_array(self) -> np.ndarray:
        """Read-only object array view of the entries"""
        return self._data

    def transpose(self) -> "RMatrix":
        if self.n_rows == 0:
            raise ValueError("the transpose of an empty matrix has no columns")
        return RMatrix(self._data.T.tolist(), cols=self.n_rows)

    def apply(self, vector: Sequence) -> Vector:
        """Matrix-vector product"""
        vector = to_vector(vector)
        if len(vector) != self.n_cols:
            raise DimensionMismatch(f"vector of length {len(vector)} for {self.n_cols} columns")
        if self.n_rows == 0:
            return ()
        product = self._data.dot(np.array(vector, dtype=object))
        return tuple(to_rational(x) for x in product)

    def __len__(self) -> int:
        return self.n_rows

    def __iter__(self):
        return iter(self._rows)

    def __getitem__(self, index: int) -> Vector:
        return self._rows[index]

    def __eq__(self, other) -> bool:
        if not isinstance(other, RMatrix):
            return NotImplemented
        return self.n_cols == other.n_cols and self._rows == other._rows

    def __hash__(self) -> int:
        return hash((self.n_cols, self._rows))

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in row) for row in self._rows)
        return f"RMatrix({self.n_rows}x{self.n_cols}: [{body}])"


@dataclass(frozen=True)
class LinearSolution:
    kind: str
    solution: Optional[Vector] = None


@dataclass(frozen=True)
class LPResult:
    status: str
    value: Optional[Fraction] = None
    point: Optional[Vector] = None
    pivots: int = 0


def _row_list(matrix) -> List[Vector]:
    if isinstance(matrix, RMatrix):
        return list(matrix.rows)
    return [to_vector(row) for row in matrix]


def fraction_free_echelon(rows: Sequence[Sequence[Fraction]],
                          pivot_cols: Optional[int] = None) -> Tuple[List[List[Fraction]], List[int]]:
    """Bareiss forward elimination; entries stay minors of the input"""
    work = [list(row) for row in rows]
    if not work:
        return work, []
    cols = len(work[0])
    limit = cols if pivot_cols is None else pivot_cols
    previous = ONE
    pivots: List[int] = []
    r = 0
    for c in range(limit):
        if r >= len(work):
            break
        pivot_row = next((i for i in range(r, len(work)) if work[i][c] != 0), None)
        if pivot_row is None:
            continue
        work[r], work[pivot_row] = work[pivot_row], work[r]
        p = work[r][c]
        for i in range(r + 1, len(work)):
            factor = work[i][c]
            for j in range(c + 1, cols):
                work[i][j] = (p * work[i][j] - factor * work[r][j]) / previous
            work[i][c] = ZERO
        previous = p
        pivots.append(c)
        r += 1
    return work, pivots


def reduced_row_echelon(rows: Sequence[Sequence[Fraction]],
                        column_order: Optional[Sequence[int]] = None) -> Tuple[List[List[Fraction]], List[int]]:
    """Gauss-Jordan elimination; pivots are chosen in column_order and scaled to 1"""
    work = [list(to_vector(row)) for row in rows]
    if not work:
        return [], []
    cols = len(work[0])
    order = list(range(cols)) if column_order is None else list(column_order)
    pivots: List[int] = []
    r = 0
    for c in order:
        if r >= len(work):
            break
        pivot_row = next((i for i in range(r, len(work)) if work[i][c] != 0), None)
        if pivot_row is None:
            continue
        work[r], work[pivot_row] = work[pivot_row], work[r]
        p = work[r][c]
        work[r] = [x / p for x in work[r]]
        for i in range(len(work)):
            if i != r and work[i][c] != 0:
                factor = work[i][c]
                work[i] = [a - factor * b for a, b in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
    return work[:r], pivots


def null_space(rows, cols: int) -> List[Vector]:
    """Basis of {y : row . y = 0 for every row}"""
    row_list = _row_list(rows)
    for row in row_list:
        if len(row) != cols:
            raise DimensionMismatch(f"row of length {len(row)} for {cols} columns")
    reduced, pivots = reduced_row_echelon(row_list)
    basis = []
    for free in (c for c in range(cols) if c not in pivots):
        vector = [ZERO] * cols
        vector[free] = ONE
        for row, p in zip(reduced, pivots):
            vector[p] = -row[free]
        basis.append(tuple(vector))
    return basis


def matrix_rank(matrix) -> int:
    """Exact rank over the rationals"""
    rows = _row_list(matrix)
    _, pivots = fraction_free_echelon(rows)
    return len(pivots)


def solve_linear_system(matrix: RMatrix, rhs: Sequence) -> LinearSolution:
    """Classify and solve M x = rhs exactly"""
    rhs = to_vector(rhs)
    if len(rhs) != matrix.n_rows:
        raise DimensionMismatch(f"{len(rhs)} right-hand sides for {matrix.n_rows} rows")

    n = matrix.n_cols
    augmented = [list(row) + [b] for row, b in zip(matrix.rows, rhs)]
    work, pivots = fraction_free_echelon(augmented, pivot_cols=n)
    rank = len(pivots)

    # rows below the rank have a zero coefficient block
    for row in work[rank:]:
        if row[-1] != 0:
            return LinearSolution(NO_SOLUTION)
    if rank < n:
        return LinearSolution(INFINITELY_MANY)

    x = [ZERO] * n
    for k in reversed(range(rank)):
        c = pivots[k]
        residual = work[k][-1] - sum((work[k][j] * x[j] for j in range(c + 1, n)), ZERO)
        x[c] = residual / work[k][c]
    return LinearSolution(UNIQUE, tuple(x))


class SimplexTableau:
    """Dense two-phase tableau over Fractions using Bland's rule"""

    def __init__(self, matrix: List[List[Fraction]], rhs: List[Fraction], n_cols: int):
        self.m = len(matrix)
        self.n = n_cols
        self.rows: List[List[Fraction]] = []
        for i, (row, b) in enumerate(zip(matrix, rhs)):
            sign = -1 if b < 0 else 1
            artificial = [ZERO] * self.m
            artificial[i] = ONE
            self.rows.append([sign * x for x in row] + artificial + [sign * b])
        self.basis = [self.n + i for i in range(self.m)]
        self.pivots = 0

    def pivot(self, i: int, j: int):
        p = self.rows[i][j]
        pivot_row = [x / p for x in self.rows[i]]
        self.rows[i] = pivot_row
        for k, row in enumerate(self.rows):
            if k != i and row[j] != 0:
                factor = row[j]
                self.rows[k] = [a - factor * b for a, b in zip(row, pivot_row)]
        self.basis[i] = j
        self.pivots += 1

    def _entering(self, cost: Sequence[Fraction], allowed: int) -> Optional[int]:
        # smallest index with negative reduced cost
        for j in range(allowed):
            reduced = cost[j] - sum((cost[self.basis[i]] * row[j]
                                     for i, row in enumerate(self.rows)), ZERO)
            if reduced < 0:
                return j
        return None

    def optimize(self, cost: Sequence[Fraction], allowed: int) -> str:
        """Minimize cost over columns [0, allowed)"""
        while True:
            j = self._entering(cost, allowed)
            if j is None:
                return OPTIMAL
            candidates = [(row[-1] / row[j], self.basis[i], i)
                          for i, row in enumerate(self.rows) if row[j] > 0]
            if not candidates:
                return UNBOUNDED
            _, _, leaving = min(candidates)
            self.pivot(leaving, j)

    def phase_one(self) -> bool:
        """Find a basic feasible solution; False if none exists"""
        cost = [ZERO] * self.n + [ONE] * self.m
        self.optimize(cost, self.n + self.m)
        infeasibility = sum((row[-1] for row, var in zip(self.rows, self.basis) if var >= self.n), ZERO)
        if infeasibility > 0:
            return False

        # drive artificials out, dropping rows that are linearly dependent
        i = 0
        while i < len(self.rows):
            if self.basis[i] >= self.n:
                j = next((j for j in range(self.n) if self.rows[i][j] != 0), None)
                if j is None:
                    del self.rows[i]
                    del self.basis[i]
                    continue
                self.pivot(i, j)
            i += 1
        return True

    def solution(self) -> List[Fraction]:
        values = [ZERO] * self.n
        for row, var in zip(self.rows, self.basis):
            if var < self.n:
                values[var] = row[-1]
        return values


def _check_rows(rows: Sequence[Sequence], width: int, what: str) -> List[Vector]:
    checked = []
    for row in rows:
        vector = to_vector(row)
        if len(vector) != width:
            raise DimensionMismatch(f"{what} row of length {len(vector)}, expected {width}")
        checked.append(vector)
    return checked


def _purify(point: List[Fraction], inequalities: List[Vector], equalities: List[Vector]) -> List[Fraction]:
    """Move an optimal point along null directions of its tight rows to a basic solution"""
    n = len(point)
    all_coefficients = [row[1:] for row in inequalities + equalities]
    if matrix_rank(all_coefficients) < n:
        return point

    while True:
        slacks = [row[0] + dot(row[1:], point) for row in inequalities]
        tight = [row[1:] for row, s in zip(inequalities, slacks) if s == 0]
        tight += [row[1:] for row in equalities]
        directions = null_space(tight, n)
        if not directions:
            return point
        direction = directions[0]
        for oriented in (direction, negate(direction)):
            blockers = [(s / -dot(row[1:], oriented))
                        for row, s in zip(inequalities, slacks)
                        if s > 0 and dot(row[1:], oriented) < 0]
            if blockers:
                step = min(blockers)
                point = [x + step * d for x, d in zip(point, oriented)]
                break
        else:
            return point


def lp_solve(objective: Sequence, constraints: Sequence[Sequence] = (), sense: str = "min",
             equalities: Sequence[Sequence] = (), nonnegative: bool = False) -> LPResult:
    """Exact LP over rows (b, a) meaning b + a.x >= 0 (or = 0 for equalities)"""
    c = to_vector(objective)
    n = len(c)
    inequalities = _check_rows(constraints, n + 1, "constraint")
    equations = _check_rows(equalities, n + 1, "equality")
    if sense not in ("min", "max"):
        raise ValueError(f"unknown sense {sense!r}")
    sign = ONE if sense == "min" else -ONE

    width = n if nonnegative else 2 * n
    n_slack = len(inequalities)
    total = width + n_slack
    matrix: List[List[Fraction]] = []
    rhs: List[Fraction] = []

    for k, row in enumerate(inequalities):
        coefficients = list(row[1:]) + ([] if nonnegative else [-a for a in row[1:]])
        slack = [ZERO] * n_slack
        slack[k] = -ONE
        matrix.append(coefficients + slack)
        rhs.append(-row[0])
    for row in equations:
        coefficients = list(row[1:]) + ([] if nonnegative else [-a for a in row[1:]])
        matrix.append(coefficients + [ZERO] * n_slack)
        rhs.append(-row[0])

    tableau = SimplexTableau(matrix, rhs, total)
    if not tableau.phase_one():
        logger.debug("LP infeasible after %d pivots", tableau.pivots)
        return LPResult(INFEASIBLE, pivots=tableau.pivots)

    cost = [sign * x for x in c]
    if not nonnegative:
        cost += [-sign * x for x in c]
    cost += [ZERO] * n_slack
    status = tableau.optimize(cost, total)
    if status == UNBOUNDED:
        logger.debug("LP unbounded after %d pivots", tableau.pivots)
        return LPResult(UNBOUNDED, pivots=tableau.pivots)

    values = tableau.solution()
    if nonnegative:
        point = values[:n]
    else:
        point = [values[j] - values[n + j] for j in range(n)]
        point = _purify(point, inequalities, equations)
    logger.debug("LP optimal after %d pivots", tableau.pivots)
    return LPResult(OPTIMAL, dot(c, point), tuple(point), tableau.pivots)
