"""
Seeded random instances for the property suites

Every generator takes an explicit numpy Generator and rejection-samples
until its hypotheses hold.
"""
import logging
from math import comb
from typing import List, Optional

import numpy as np

from config import DEFAULT_CAP, RANDOM_INSTANCE
from conversion.redundancy import member_certificate, polar_is_pointed, vrep_is_pointed
from representation.models import HRep, VRep
from utils.exact_arith import ONE, ZERO, RMatrix, dot, matrix_rank

logger = logging.getLogger(__name__)


def _integers(rng: np.random.Generator, size: int) -> List[int]:
    values = rng.integers(RANDOM_INSTANCE['coord_min'], RANDOM_INSTANCE['coord_max'] + 1, size=size)
    return [int(x) for x in values]


def _nonzero_integers(rng: np.random.Generator, size: int) -> List[int]:
    while True:
        values = _integers(rng, size)
        if any(values):
            return values


def _dimension(rng: np.random.Generator, dim: Optional[int]) -> int:
    if dim is not None:
        return dim
    return int(rng.integers(RANDOM_INSTANCE['dim_min'], RANDOM_INSTANCE['dim_max'] + 1))


def _row_count(rng: np.random.Generator, rows: Optional[int], minimum: int) -> int:
    if rows is not None:
        return rows
    low = max(RANDOM_INSTANCE['rows_min'], minimum)
    return int(rng.integers(low, max(low, RANDOM_INSTANCE['rows_max']) + 1))


def random_vrep(rng: np.random.Generator, dim: Optional[int] = None, rows: Optional[int] = None) -> VRep:
    """Integer vertices and occasional rays; the first row is always a vertex"""
    n = _dimension(rng, dim)
    m = _row_count(rng, rows, 1)
    generator_rows = []
    for i in range(m):
        if i > 0 and rng.random() < RANDOM_INSTANCE['ray_probability']:
            generator_rows.append([ZERO] + _nonzero_integers(rng, n))
        else:
            generator_rows.append([ONE] + _integers(rng, n))
    return VRep.from_rows(generator_rows, n)


def random_pointed_cone(rng: np.random.Generator, dim: Optional[int] = None,
                        rows: Optional[int] = None, cap: int = DEFAULT_CAP) -> RMatrix:
    """Cone rows of full rank with binomial(m, d-1) within the cap"""
    d = _dimension(rng, dim) + 1
    for _ in range(RANDOM_INSTANCE['max_attempts']):
        m = _row_count(rng, rows, d)
        if comb(m, d - 1) > cap:
            continue
        cone_rows = RMatrix([_nonzero_integers(rng, d) for _ in range(m)], cols=d)
        if matrix_rank(cone_rows) == d:
            return cone_rows
    raise RuntimeError("no pointed cone found within the attempt budget")


def random_full_dimensional_hrep(rng: np.random.Generator, dim: Optional[int] = None,
                                 rows: Optional[int] = None) -> HRep:
    """Inequalities strictly satisfied at a random integer point, with full-rank coefficients"""
    n = _dimension(rng, dim)
    for _ in range(RANDOM_INSTANCE['max_attempts']):
        m = _row_count(rng, rows, n)
        center = _integers(rng, n)
        h_rows = []
        for _ in range(m):
            a = _nonzero_integers(rng, n)
            slack = int(rng.integers(1, RANDOM_INSTANCE['coord_max'] + 1))
            h_rows.append([slack - dot(a, center)] + a)
        if matrix_rank([row[1:] for row in h_rows]) == n:
            return HRep.from_rows(h_rows, n)
    raise RuntimeError("no pointed full-dimensional H-rep found within the attempt budget")


def symmetry_instances(rng: np.random.Generator, count: int) -> List[VRep]:
    """Pointed P with pointed P+; alternately with and without the origin"""
    instances = []
    for k in range(count):
        want_origin = k % 2 == 0
        for _ in range(RANDOM_INSTANCE['max_attempts']):
            v = random_vrep(rng)
            if not (vrep_is_pointed(v) and polar_is_pointed(v)):
                continue
            has_origin = member_certificate(v, (ZERO,) * v.n) is not None
            if has_origin == want_origin:
                instances.append(v)
                break
        else:
            raise RuntimeError(f"instance {k} not found within the attempt budget")
    logger.info("sampled %d symmetry instances", len(instances))
    return instances
