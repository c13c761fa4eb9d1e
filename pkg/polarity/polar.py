"""
Polar and bipolar of a pointed polyhedron

P+ = {z : 1 + z.x >= 0 for all x in P}. With P = conv(S) + cone(R) this is
{z : 1 + Sz >= 0, Rz >= 0}, so V(P) already encodes an H(P+).
The other common convention, P° = {z : z.x <= 1 for all x in P}, is -P+.
"""
import logging
from enum import Enum

from config import DEFAULT_CAP
from conversion.enumeration import vertex_enumeration
from conversion.redundancy import polar_is_pointed, polar_lineality, remove_redundancy_h, remove_redundancy_v
from representation.models import HRep, VRep, as_hrep
from utils.errors import PolarNotPointed
from utils.exact_arith import ONE, ZERO

logger = logging.getLogger(__name__)

SHAPE_POINT = "point"
SHAPE_POLYTOPE = "polytope"
SHAPE_CONE = "cone"
SHAPE_POLYHEDRON = "polyhedron"


class OriginLocation(Enum):
    INTERIOR = "Interior"
    BOUNDARY = "Boundary"
    OUTSIDE = "Outside"


def polar_hrep(v: VRep) -> HRep:
    """H(P+) := V(P)"""
    return as_hrep(v)


def polar_vrep(v: VRep, cap: int = DEFAULT_CAP) -> VRep:
    """V(P+) by vertex enumeration of H(P+)"""
    if not polar_is_pointed(v):
        raise PolarNotPointed("the polar contains a line, so V(P+) is undefined", polar_lineality(v))
    polar, _ = vertex_enumeration(polar_hrep(v), cap)
    return polar


def origin_location(h: HRep) -> OriginLocation:
    """Where 0 lies relative to P, decided on the irredundant rows"""
    reduced = remove_redundancy_h(h)
    if any(row[0] != 0 for row in reduced.equality_rows):
        return OriginLocation.OUTSIDE
    if any(row[0] < 0 for row in reduced.inequality_rows):
        return OriginLocation.OUTSIDE
    if reduced.equality_marks or any(row[0] == 0 for row in reduced.inequality_rows):
        return OriginLocation.BOUNDARY
    return OriginLocation.INTERIOR


def bipolar_vrep(v: VRep) -> VRep:
    """V(P++) = V(cl conv(P u {0})): append the origin and reduce"""
    origin = (ONE,) + (ZERO,) * v.n
    return remove_redundancy_v(VRep.from_rows(list(v.rows) + [origin], v.n))


def is_bounded(v: VRep) -> bool:
    return v.m_R == 0


def origin_interior_to_polar(v: VRep) -> bool:
    """The origin is interior to P+ exactly when P is bounded"""
    return origin_location(polar_hrep(v)) is OriginLocation.INTERIOR


def shape_class(v: VRep) -> str:
    reduced = remove_redundancy_v(v)
    if reduced.m_R == 0:
        return SHAPE_POINT if reduced.m_S == 1 else SHAPE_POLYTOPE
    if reduced.m_S == 1:
        return SHAPE_CONE
    return SHAPE_POLYHEDRON
