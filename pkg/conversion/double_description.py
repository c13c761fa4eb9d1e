"""
Double description method for pointed polyhedral cones

The cone is {y : row . y >= 0 for every row}. Rows are inserted one at a
time into an initial simplicial cone; each new ray is a positive
combination of an adjacent pair straddling the inserted hyperplane.
"""
import logging
from dataclasses import dataclass, field
from typing import FrozenSet, List, Sequence

from representation.models import HRep, canonical_sort_key
from utils.errors import NotPointed
from utils.exact_arith import (
    ONE,
    ZERO,
    RMatrix,
    Vector,
    dot,
    is_zero_vector,
    matrix_rank,
    negate,
    null_space,
    primitive_integer_vector,
    solve_linear_system,
    UNIQUE,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ConeRays:
    """Extreme rays of a pointed cone in dimension n+1"""
    n_plus_1: int
    rays: RMatrix
    max_intermediate_rays: int = field(default=0, compare=False)


def homogenize(h: HRep) -> RMatrix:
    """Cone rows b*x0 + a.x >= 0, equations split in two, plus x0 >= 0"""
    rows = []
    for i, row in enumerate(h.rows):
        rows.append(row)
        if i in h.equality_marks:
            rows.append(negate(row))
    rows.append((ONE,) + (ZERO,) * h.n)
    return RMatrix(rows, cols=h.n + 1)


def _insertion_order(cone_rows: Sequence[Vector]) -> List[Vector]:
    distinct = {primitive_integer_vector(row) for row in cone_rows if not is_zero_vector(row)}
    return sorted(distinct, key=canonical_sort_key)


def _initial_basis(rows: List[Vector], d: int) -> List[int]:
    """Indices of the first d linearly independent rows"""
    chosen: List[int] = []
    for i, row in enumerate(rows):
        candidate = [rows[j] for j in chosen] + [row]
        if matrix_rank(candidate) == len(candidate):
            chosen.append(i)
            if len(chosen) == d:
                break
    return chosen


def _zero_set(ray: Vector, rows: List[Vector], processed: Sequence[int]) -> FrozenSet[int]:
    return frozenset(i for i in processed if dot(rows[i], ray) == 0)


def _adjacent(p: int, q: int, zero_sets: List[FrozenSet[int]], d: int) -> bool:
    common = zero_sets[p] & zero_sets[q]
    if len(common) < d - 2:
        return False
    for k, other in enumerate(zero_sets):
        if k != p and k != q and common <= other:
            return False
    return True


def dd_extreme_rays(cone_rows: RMatrix) -> ConeRays:
    """Complete irredundant extreme rays of {y : cone_rows . y >= 0}"""
    d = cone_rows.n_cols
    if matrix_rank(cone_rows) < d:
        lineality = null_space(cone_rows, d)
        raise NotPointed(f"the cone contains a line ({len(lineality)}-dimensional lineality space)",
                         lineality)

    rows = _insertion_order(cone_rows.rows)
    basis = _initial_basis(rows, d)
    basis_matrix = RMatrix([rows[i] for i in basis], cols=d)

    # columns of the basis inverse span the initial simplicial cone
    rays: List[Vector] = []
    for k in range(d):
        unit = [ZERO] * d
        unit[k] = ONE
        result = solve_linear_system(basis_matrix, unit)
        if result.kind != UNIQUE:
            raise ValueError("initial basis of the cone is singular")
        rays.append(primitive_integer_vector(result.solution))

    processed = list(basis)
    zero_sets = [_zero_set(ray, rows, processed) for ray in rays]
    max_rays = len(rays)

    for index, row in enumerate(rows):
        if index in basis:
            continue
        values = [dot(row, ray) for ray in rays]
        positive = [k for k, value in enumerate(values) if value > 0]
        negative = [k for k, value in enumerate(values) if value < 0]
        zero = [k for k, value in enumerate(values) if value == 0]

        new_rays: List[Vector] = []
        new_zero_sets: List[FrozenSet[int]] = []
        for p in positive:
            for q in negative:
                if not _adjacent(p, q, zero_sets, d):
                    continue
                combined = tuple(values[p] * a - values[q] * b for a, b in zip(rays[q], rays[p]))
                new_rays.append(primitive_integer_vector(combined))
                new_zero_sets.append((zero_sets[p] & zero_sets[q]) | {index})

        kept = positive + zero
        rays = [rays[k] for k in kept] + new_rays
        zero_sets = [zero_sets[k] | {index} if values[k] == 0 else zero_sets[k] for k in kept] + new_zero_sets
        processed.append(index)
        max_rays = max(max_rays, len(rays))
        logger.debug("inserted row %d of %d: %d rays (%d new)", len(processed), len(rows),
                     len(rays), len(new_rays))

    ordered = sorted(set(rays), key=canonical_sort_key)
    logger.info("double description found %d extreme rays from %d rows", len(ordered), len(rows))
    return ConeRays(d, RMatrix(ordered, cols=d), max_rays)


def rays_satisfy_cone(cone: ConeRays, cone_rows: RMatrix) -> bool:
    """Every ray is feasible and tight on d-1 independent rows"""
    d = cone.n_plus_1
    for ray in cone.rays:
        tight = [row for row in cone_rows if dot(row, ray) == 0]
        if any(dot(row, ray) < 0 for row in cone_rows):
            return False
        if matrix_rank(tight) < d - 1:
            return False
    return True
