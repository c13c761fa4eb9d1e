"""
Brute-force oracles over row subsets

Independent of the double description code: every (d-1)-subset of cone
rows with rank d-1 fixes one direction, which is kept when it is feasible
in one of its two signs.
"""
import logging
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterator, List, Tuple

from config import DEFAULT_CAP
from conversion.double_description import ConeRays, homogenize
from representation.models import HRep, VRep, canonical_sort_key
from utils.errors import CapExceeded, DimensionMismatch, InconsistentPair, NotPointed
from utils.exact_arith import (
    RMatrix,
    Vector,
    dot,
    matrix_rank,
    negate,
    null_space,
    primitive_integer_vector,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FacetIncidence:
    h_row: int
    incident: Tuple[int, ...]
    supports_facet: bool


def _check_cap(rows: int, subset_size: int, cap: int):
    if comb(rows, subset_size) > cap:
        raise CapExceeded(rows, subset_size, cap)


def _feasible_directions(cone_rows: RMatrix, cap: int) -> Iterator[Vector]:
    """One feasible direction per (d-1)-subset that determines one"""
    d = cone_rows.n_cols
    rows = list(cone_rows.rows)
    _check_cap(len(rows), d - 1, cap)
    for subset in combinations(rows, d - 1):
        if matrix_rank(list(subset)) != d - 1:
            continue
        direction = null_space(list(subset), d)[0]
        values = [dot(row, direction) for row in rows]
        if all(value >= 0 for value in values):
            yield direction
        elif all(value <= 0 for value in values):
            yield negate(direction)


def count_cone_bases(cone_rows: RMatrix, cap: int = DEFAULT_CAP) -> int:
    """Number of feasible bases of a pointed cone"""
    return sum(1 for _ in _feasible_directions(cone_rows, cap))


def count_feasible_bases(h: HRep, cap: int = DEFAULT_CAP) -> int:
    """Feasible bases of the homogenized system, vertex and ray bases alike"""
    return count_cone_bases(homogenize(h), cap)


def brute_force_rays(cone_rows: RMatrix, cap: int = DEFAULT_CAP) -> ConeRays:
    d = cone_rows.n_cols
    if matrix_rank(cone_rows) < d:
        raise NotPointed("the cone contains a line", null_space(cone_rows, d))
    rays = {primitive_integer_vector(direction) for direction in _feasible_directions(cone_rows, cap)}
    ordered = sorted(rays, key=canonical_sort_key)
    logger.info("brute force found %d extreme rays", len(ordered))
    return ConeRays(d, RMatrix(ordered, cols=d))


def facet_vertex_incidence(h: HRep, v: VRep) -> List[FacetIncidence]:
    """Generator rows tight on each inequality row"""
    if h.n != v.n:
        raise DimensionMismatch(f"H-rep in dimension {h.n} against V-rep in dimension {v.n}")
    # a facet of P is a face of dimension dim(P) - 1
    facet_rank = matrix_rank(v.rows) - 1
    incidences = []
    for i, h_row in enumerate(h.rows):
        incident = []
        for j, v_row in enumerate(v.rows):
            value = dot(h_row, v_row)
            if value < 0 or (value != 0 and i in h.equality_marks):
                raise InconsistentPair(i, j)
            if value == 0:
                incident.append(j)
        supports = (i not in h.equality_marks
                    and matrix_rank([v.rows[j] for j in incident]) == facet_rank)
        incidences.append(FacetIncidence(i, tuple(incident), supports))
    return incidences


