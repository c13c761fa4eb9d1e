"""
H to V and V to H conversion
"""
import logging
from dataclasses import asdict, dataclass
from typing import Dict, List, Optional, Tuple

from config import DEFAULT_CAP
from conversion.double_description import dd_extreme_rays, homogenize
from conversion.oracles import count_cone_bases
from conversion.redundancy import (
    equality_basis,
    is_pointed_h,
    member_certificate,
    polar_is_pointed,
    polar_lineality,
    reduce_modulo_equalities,
)
from representation.models import HRep, VRep, as_hrep, canonicalize
from utils.errors import CapExceeded, Infeasible, NotPointed, OriginNotContained, PolarNotPointed
from utils.exact_arith import INFEASIBLE, ZERO, RMatrix, Vector, is_zero_vector, lp_solve, negate, null_space

logger = logging.getLogger(__name__)

ROUTE_VERTEX = "vertex"
ROUTE_LIFTED = "lifted"
ROUTE_DIRECT = "direct"


@dataclass(frozen=True)
class ConversionReport:
    """Statistics of one conversion; basis counts are of bases, not vertices, on degenerate input"""
    route: str
    input_rows: int
    output_rows: int
    feasible_basis_count: Optional[int] = None
    max_intermediate_rays: int = 0

    def as_dict(self) -> Dict:
        return asdict(self)


def _basis_count(cone_rows: RMatrix, cap: int, count_bases: bool, require: bool) -> Optional[int]:
    if not (count_bases or require):
        return None
    try:
        return count_cone_bases(cone_rows, cap)
    except CapExceeded as e:
        if require:
            raise
        logger.warning("skipping the basis count: %s", e)
        return None


def vertex_enumeration(h: HRep, cap: int = DEFAULT_CAP, count_bases: bool = False,
                       require_basis_count: bool = False) -> Tuple[VRep, ConversionReport]:
    """V(P) from H(P) by double description on the homogenized cone"""
    feasibility = lp_solve((ZERO,) * h.n, h.inequality_rows, equalities=h.equality_rows)
    if feasibility.status == INFEASIBLE:
        raise Infeasible("the H-representation describes the empty set")
    check = is_pointed_h(h)
    if not check.pointed:
        raise NotPointed("the polyhedron contains a line and has no vertex", check.lineality)

    cone_rows = homogenize(h)
    cone = dd_extreme_rays(cone_rows)
    rows = []
    for ray in cone.rays:
        if ray[0] > 0:
            rows.append(tuple(x / ray[0] for x in ray))
        else:
            rows.append(ray)
    v = canonicalize(VRep.from_rows(rows, h.n))

    report = ConversionReport(
        route=ROUTE_VERTEX,
        input_rows=h.rows.n_rows,
        output_rows=v.rows.n_rows,
        feasible_basis_count=_basis_count(cone_rows, cap, count_bases, require_basis_count),
        max_intermediate_rays=cone.max_intermediate_rays,
    )
    logger.info("vertex enumeration: %d vertices, %d rays", v.m_S, v.m_R)
    return v, report


def lifted_cone_rows(v: VRep) -> Tuple[RMatrix, List[Vector], List[int]]:
    """V(P) as cone rows, cut down to the complement of its lineality space"""
    equations, pivots = equality_basis(null_space(v.rows, v.n + 1), v.n)
    rows = list(v.rows) + equations + [negate(e) for e in equations]
    return RMatrix(rows, cols=v.n + 1), equations, pivots


def facet_enumeration_lifted(v: VRep, cap: int = DEFAULT_CAP, count_bases: bool = False,
                             require_basis_count: bool = False) -> Tuple[HRep, ConversionReport]:
    """H(P) from the extreme rays of the cone whose rows are V(P)"""
    cone_rows, equations, pivots = lifted_cone_rows(v)
    cone = dd_extreme_rays(cone_rows)

    inequalities = []
    for ray in cone.rays:
        row = reduce_modulo_equalities(ray, equations, pivots)
        if is_zero_vector(row[1:]):
            # 1 >= 0 on the affine hull of P
            continue
        inequalities.append(row)
    h = canonicalize(HRep.from_rows(equations + inequalities, v.n,
                                    equality_marks=range(len(equations))))

    report = ConversionReport(
        route=ROUTE_LIFTED,
        input_rows=v.rows.n_rows,
        output_rows=h.rows.n_rows,
        feasible_basis_count=_basis_count(cone_rows, cap, count_bases, require_basis_count),
        max_intermediate_rays=cone.max_intermediate_rays,
    )
    logger.info("lifted facet enumeration: %d rows, %d equations", h.rows.n_rows, len(equations))
    return h, report


def facet_enumeration_direct(v: VRep, cap: int = DEFAULT_CAP, count_bases: bool = False,
                             require_basis_count: bool = False) -> Tuple[HRep, ConversionReport]:
    """H(P) as V(P+) read row for row; needs 0 in P and P+ pointed"""
    if member_certificate(v, (ZERO,) * v.n) is None:
        raise OriginNotContained("the origin is not in P; use the lifted route")
    if not polar_is_pointed(v):
        raise PolarNotPointed("the polar of P contains a line, so V(P+) is undefined", polar_lineality(v))

    polar_v, inner = vertex_enumeration(as_hrep(v), cap, count_bases, require_basis_count)
    h = canonicalize(as_hrep(polar_v))

    report = ConversionReport(
        route=ROUTE_DIRECT,
        input_rows=v.rows.n_rows,
        output_rows=h.rows.n_rows,
        feasible_basis_count=inner.feasible_basis_count,
        max_intermediate_rays=inner.max_intermediate_rays,
    )
    logger.info("direct facet enumeration: %d rows", h.rows.n_rows)
    return h, report
