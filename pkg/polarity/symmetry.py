"""
HV-symmetry

P is HV-symmetric when V(P+) read as an inequality matrix is an H(P).
The four equivalent conditions checked by verify_equivalences are
    (a) 0 in P
    (b) P = P++
    (c) V(P+) encodes H(P)
    (d) P is HV-symmetric
each evaluated by its own computation.
"""
import logging
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple

from config import DEFAULT_CAP
from conversion.enumeration import facet_enumeration_lifted, vertex_enumeration
from conversion.redundancy import (
    member_certificate,
    polar_is_pointed,
    polar_lineality,
    remove_redundancy_v,
    require_pointed_v,
    unit_b_form,
)
from polarity.polar import bipolar_vrep, polar_vrep
from representation.models import HRep, Rep, VRep, as_hrep, reps_equal
from utils.errors import ConsistencyViolation, Infeasible, NotPointed, PolarNotPointed
from utils.exact_arith import ZERO, Vector, negate

logger = logging.getLogger(__name__)


class SymmetryReason(Enum):
    ORIGIN_OUTSIDE = "OriginOutside"
    POLAR_NOT_POINTED = "PolarNotPointed"
    VERIFIED = "Verified"


@dataclass(frozen=True)
class SymmetryVerdict:
    symmetric: bool
    reason: SymmetryReason
    witness: Optional[Tuple[Rep, Rep]] = None
    witness_row: Optional[Vector] = None


@dataclass(frozen=True)
class EquivalenceCheck:
    a: bool
    b: bool
    c: bool
    d: bool

    def as_tuple(self) -> Tuple[bool, bool, bool, bool]:
        return (self.a, self.b, self.c, self.d)

    @property
    def consistent(self) -> bool:
        return len(set(self.as_tuple())) == 1


def _origin(v: VRep) -> Vector:
    return (ZERO,) * v.n


def encodes_h(polar: VRep, h: HRep, cap: int = DEFAULT_CAP) -> bool:
    """Does V(P+) read as inequalities describe the polyhedron H(P) describes"""
    candidate = as_hrep(polar)
    if not h.equality_marks:
        return reps_equal(candidate, h)
    # H(P) is not unique without full dimension; compare after a double conversion
    try:
        generators, _ = vertex_enumeration(candidate, cap)
    except (Infeasible, NotPointed):
        return False
    round_trip, _ = facet_enumeration_lifted(generators, cap)
    return reps_equal(round_trip, h)


def _violated_row(h: HRep) -> Optional[Vector]:
    """A facet of the form -1 + a.x >= 0, or an equation missing the origin"""
    for row in h.equality_rows:
        if row[0] != 0:
            return row if row[0] < 0 else negate(row)
    return next((row for row in h.inequality_rows if row[0] < 0), None)


def is_hv_symmetric(v: VRep, cap: int = DEFAULT_CAP) -> SymmetryVerdict:
    """V(P+) read as inequalities against the lifted H(P)"""
    require_pointed_v(v)
    if not polar_is_pointed(v):
        return SymmetryVerdict(False, SymmetryReason.POLAR_NOT_POINTED)

    polar = polar_vrep(v, cap)
    h, _ = facet_enumeration_lifted(v, cap)
    if encodes_h(polar, h, cap):
        return SymmetryVerdict(True, SymmetryReason.VERIFIED, witness=(polar, unit_b_form(h)))
    return SymmetryVerdict(False, SymmetryReason.ORIGIN_OUTSIDE, witness=(polar, h),
                           witness_row=_violated_row(h))


def hv_symmetric_fast(v: VRep) -> bool:
    """0 in P and P+ pointed"""
    return polar_is_pointed(v) and member_certificate(v, _origin(v)) is not None


def verify_equivalences(v: VRep, cap: int = DEFAULT_CAP) -> EquivalenceCheck:
    """Evaluate (a) to (d) independently and insist they agree"""
    require_pointed_v(v)
    if not polar_is_pointed(v):
        raise PolarNotPointed("P+ is not pointed; the equivalence does not apply", polar_lineality(v))

    a = member_certificate(v, _origin(v)) is not None
    b = reps_equal(remove_redundancy_v(v), bipolar_vrep(v))
    h, _ = facet_enumeration_lifted(v, cap)
    c = encodes_h(polar_vrep(v, cap), h, cap)
    d = is_hv_symmetric(v, cap).symmetric

    check = EquivalenceCheck(a, b, c, d)
    if not check.consistent:
        raise ConsistencyViolation(f"equivalent statements disagree: {check.as_tuple()}")
    logger.debug("equivalent conditions %s", check.as_tuple())
    return check
