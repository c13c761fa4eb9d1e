"""
Pointedness, membership and redundancy removal

Every test here is an exact LP or an exact rank computation.
"""
import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from representation.models import HRep, VRep, canonicalize
from utils.errors import DimensionMismatch, Infeasible, NotPointed, OriginNotContained
from utils.exact_arith import (
    INFEASIBLE,
    OPTIMAL,
    ONE,
    ZERO,
    Vector,
    is_zero_vector,
    lp_solve,
    matrix_rank,
    null_space,
    primitive_integer_vector,
    reduced_row_echelon,
    to_vector,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LinealityCheck:
    lineality: Tuple[Vector, ...] = ()

    @property
    def pointed(self) -> bool:
        return not self.lineality


@dataclass(frozen=True)
class MembershipCertificate:
    """Weights with [1, x] = [lambdas, mus] V(P)"""
    lambdas: Vector
    mus: Vector


def is_pointed_h(h: HRep) -> LinealityCheck:
    """Pointed iff the coefficient block has rank n"""
    coefficients = [row[1:] for row in h.rows]
    if matrix_rank(coefficients) == h.n:
        return LinealityCheck()
    return LinealityCheck(tuple(null_space(coefficients, h.n)))


def polar_is_pointed(v: VRep) -> bool:
    """Q = {z : 1 + Sz >= 0, Rz >= 0} is pointed iff [S; R] has rank n"""
    return matrix_rank([row[1:] for row in v.rows]) == v.n


def polar_lineality(v: VRep) -> List[Vector]:
    return null_space([row[1:] for row in v.rows], v.n)


def _combination_exists(target: Sequence, vertices: Sequence[Vector], rays: Sequence[Vector],
                        convex: bool = True) -> Optional[Vector]:
    """Nonnegative weights w with sum(w * generators) = target, summing to 1 over vertices"""
    generators = list(vertices) + list(rays)
    if not generators:
        return None
    target = to_vector(target)
    equalities = []
    for i, value in enumerate(target):
        equalities.append((-value,) + tuple(g[i] for g in generators))
    if convex:
        if not vertices:
            return None
        equalities.append((-ONE,) + (ONE,) * len(vertices) + (ZERO,) * len(rays))
    result = lp_solve((ZERO,) * len(generators), equalities=equalities, nonnegative=True)
    if result.status != OPTIMAL:
        return None
    return result.point


def member_certificate(v: VRep, x: Sequence) -> Optional[MembershipCertificate]:
    """Certificate of x in conv(S) + cone(R), or None when x is outside P"""
    point = to_vector(x)
    if len(point) != v.n:
        raise DimensionMismatch(f"point of dimension {len(point)} for a polyhedron in dimension {v.n}")
    weights = _combination_exists(point, v.vertices, v.rays)
    if weights is None:
        return None
    return MembershipCertificate(tuple(weights[:v.m_S]), tuple(weights[v.m_S:]))


def vrep_is_pointed(v: VRep) -> bool:
    """False iff some nonzero nonnegative combination of the rays vanishes"""
    if not v.rays:
        return True
    zero = (ZERO,) * v.n
    # a vanishing combination can be scaled to weights summing to 1
    return _combination_exists(zero, v.rays, ()) is None


def require_pointed_v(v: VRep) -> VRep:
    if not vrep_is_pointed(v):
        raise NotPointed("the rays span a line, so the input is not pointed")
    return v


def equality_basis(rows: Sequence[Vector], n: int) -> Tuple[List[Vector], List[int]]:
    """Reduced basis of an equation system, pivoting on coordinates before the b column"""
    if not rows:
        return [], []
    reduced, pivots = reduced_row_echelon(rows, column_order=list(range(1, n + 1)) + [0])
    return [tuple(row) for row in reduced], pivots


def reduce_modulo_equalities(row: Vector, basis: Sequence[Vector], pivots: Sequence[int]) -> Vector:
    """Clear the pivot columns of row using the equation basis"""
    reduced = list(row)
    for equation, pivot in zip(basis, pivots):
        factor = reduced[pivot]
        if factor != 0:
            reduced = [a - factor * b for a, b in zip(reduced, equation)]
    return tuple(reduced)


def _implicit_equalities(h: HRep) -> List[int]:
    inequalities = h.inequality_rows
    equalities = h.equality_rows
    tight = []
    for i, row in enumerate(inequalities):
        result = lp_solve(row[1:], inequalities, sense="max", equalities=equalities)
        if result.status == OPTIMAL and row[0] + result.value == 0:
            tight.append(i)
    return tight


def remove_redundancy_h(h: HRep) -> HRep:
    """Irredundant canonical H-rep with implicit equalities marked"""
    inequalities = h.inequality_rows
    equalities = h.equality_rows
    feasibility = lp_solve((ZERO,) * h.n, inequalities, equalities=equalities)
    if feasibility.status == INFEASIBLE:
        raise Infeasible("the inequality system has no solution")

    implicit = _implicit_equalities(h)
    basis, pivots = equality_basis(equalities + [inequalities[i] for i in implicit], h.n)
    if 0 in pivots:
        raise Infeasible("the equations have no common solution")

    candidates = []
    seen = set()
    for i, row in enumerate(inequalities):
        if i in implicit:
            continue
        row = primitive_integer_vector(reduce_modulo_equalities(row, basis, pivots))
        if is_zero_vector(row[1:]):
            continue
        if row not in seen:
            seen.add(row)
            candidates.append(row)

    kept: List[Vector] = []
    for i, row in enumerate(candidates):
        others = kept + candidates[i + 1:]
        result = lp_solve(row[1:], others, sense="min", equalities=basis)
        if result.status == OPTIMAL and row[0] + result.value >= 0:
            logger.debug("row %s is implied by the others", row)
            continue
        kept.append(row)

    logger.info("redundancy removal kept %d of %d rows (%d equations)",
                len(kept), h.rows.n_rows, len(basis))
    return canonicalize(HRep.from_rows(basis + kept, h.n, equality_marks=range(len(basis))))


def remove_redundancy_v(v: VRep) -> VRep:
    """Keep only extreme vertices and extreme rays"""
    canonical = canonicalize(v)
    rays = canonical.rays
    kept_rays: List[Vector] = []
    for i, ray in enumerate(rays):
        others = kept_rays + rays[i + 1:]
        if _combination_exists(ray, (), others, convex=False) is None:
            kept_rays.append(ray)

    vertices = canonical.vertices
    kept_vertices: List[Vector] = []
    for i, vertex in enumerate(vertices):
        others = kept_vertices + vertices[i + 1:]
        if _combination_exists(vertex, others, kept_rays) is None:
            kept_vertices.append(vertex)

    logger.info("generator reduction kept %d of %d vertices and %d of %d rays",
                len(kept_vertices), len(vertices), len(kept_rays), len(rays))
    return canonicalize(VRep.from_generators(kept_vertices, kept_rays, n=v.n))


def unit_b_form(h: HRep) -> HRep:
    """Scale every row with b > 0 to b = 1; needs the origin in P"""
    rows = []
    for i, row in enumerate(h.rows):
        if i in h.equality_marks and row[0] != 0:
            raise OriginNotContained(f"equation row {i} is not satisfied at the origin")
        if row[0] < 0:
            raise OriginNotContained(f"row {i} has b = {row[0]} < 0, so the origin violates it")
        rows.append(tuple(x / row[0] for x in row) if row[0] > 0 else row)
    return HRep.from_rows(rows, h.n, equality_marks=h.equality_marks)
