"""
Tests for polars, bipolars and HV-symmetry
"""
import os
import unittest
from fractions import Fraction

from parameterized import parameterized

from conversion.oracles import brute_force_rays
from polarity.polar import (
    OriginLocation,
    bipolar_vrep,
    is_bounded,
    origin_interior_to_polar,
    origin_location,
    polar_hrep,
    polar_vrep,
    shape_class,
)
from polarity.symmetry import (
    EquivalenceCheck,
    SymmetryReason,
    hv_symmetric_fast,
    is_hv_symmetric,
    verify_equivalences,
)
from representation.file_manager import rep_files
from representation.models import HRep, VRep, as_hrep, canonicalize, reps_equal
from utils.errors import NotPointed, PolarNotPointed
from test_conversion import CUBE_H, CUBE_V, HALF_PLANE_V, SEGMENT_V
from test_representation import DATA_DIR, EX1_H, EX1_V, EX1_VQ, EX2_H, EX2_V, EX2_VQ

OCTAHEDRON_V = VRep.from_generators([(1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0), (0, 0, 1), (0, 0, -1)])
QUADRANT_V = rep_files.load_rep(os.path.join(DATA_DIR, 'quadrant_cone.ext'))
SIMPLEX_V = rep_files.load_rep(os.path.join(DATA_DIR, 'simplex.ext'))
POINT_V = VRep.from_generators([(5,)])


class TestPolar(unittest.TestCase):
    def test_polar_hrep_relabels_rows(self):
        self.assertEqual(polar_hrep(EX1_V).rows, EX1_V.rows)

    @parameterized.expand([
        ("example1", EX1_V, EX1_VQ),
        ("example2", EX2_V, EX2_VQ),
        ("cube", CUBE_V, OCTAHEDRON_V),
    ])
    def test_polar_vrep(self, _, v, expected):
        self.assertTrue(reps_equal(polar_vrep(v), expected))

    def test_cube_polar_against_brute_force(self):
        cone = brute_force_rays(as_hrep(CUBE_V).rows)
        vertices = {tuple(x / ray[0] for x in ray)[1:] for ray in cone.rays}
        self.assertEqual(vertices, set(OCTAHEDRON_V.vertices))

    def test_polar_not_pointed(self):
        with self.assertRaises(PolarNotPointed) as context:
            polar_vrep(SEGMENT_V)
        self.assertEqual(len(context.exception.lineality), 1)

    def test_polar_of_point_is_a_halfline(self):
        polar = polar_vrep(POINT_V)
        self.assertEqual(polar.vertices, [(Fraction(-1, 5),)])
        self.assertEqual(polar.rays, [(Fraction(1),)])


class TestOriginLocation(unittest.TestCase):
    @parameterized.expand([
        ("example1", EX1_H, OriginLocation.OUTSIDE),
        ("example2", EX2_H, OriginLocation.BOUNDARY),
        ("cube", CUBE_H, OriginLocation.INTERIOR),
        ("equation_missing_origin", HRep.from_rows([(-5, 1)], 1, equality_marks=[0]), OriginLocation.OUTSIDE),
        ("equation_through_origin", HRep.from_rows([(0, 1, 0), (1, 0, 1), (1, 0, -1)], 2, equality_marks=[0]),
         OriginLocation.BOUNDARY),
    ])
    def test_origin_location(self, _, h, expected):
        self.assertIs(origin_location(h), expected)

    def test_implicit_equation_missing_origin(self):
        # x >= 1 and x <= 1 pin the segment to the line x = 1
        h = HRep.from_rows([(-1, 1, 0), (1, -1, 0), (1, 0, 1), (1, 0, -1)], 2)
        self.assertIs(origin_location(h), OriginLocation.OUTSIDE)

    @parameterized.expand([
        ("example1", EX1_V, False),
        ("example2", EX2_V, True),
        ("cube", CUBE_V, True),
        ("quadrant", QUADRANT_V, False),
    ])
    def test_bounded_iff_origin_interior_to_polar(self, _, v, bounded):
        self.assertEqual(is_bounded(v), bounded)
        self.assertEqual(origin_interior_to_polar(v), bounded)


class TestBipolar(unittest.TestCase):
    def test_example1_bipolar_is_the_quadrant(self):
        self.assertEqual(bipolar_vrep(EX1_V), canonicalize(EX1_VQ))

    def test_example2_bipolar_is_itself(self):
        self.assertEqual(bipolar_vrep(EX2_V), canonicalize(EX2_V))

    def test_point_bipolar_is_a_segment(self):
        self.assertEqual(set(bipolar_vrep(POINT_V).vertices), {(Fraction(0),), (Fraction(5),)})

    def test_idempotent(self):
        for v in (EX1_V, EX2_V, POINT_V, CUBE_V):
            once = bipolar_vrep(v)
            self.assertEqual(bipolar_vrep(once), once)


class TestShape(unittest.TestCase):
    @parameterized.expand([
        ("point", POINT_V, "point"),
        ("example2", EX2_V, "polytope"),
        ("quadrant", QUADRANT_V, "cone"),
        ("example1", EX1_V, "cone"),
        ("two_vertices_and_a_ray", VRep.from_generators([(0, 0), (1, 0)], [(0, 1)]), "polyhedron"),
        ("redundant_vertex", VRep.from_generators([(0, 0), (1, 1)], [(1, 0), (0, 1)]), "cone"),
    ])
    def test_shape_class(self, _, v, expected):
        self.assertEqual(shape_class(v), expected)


class TestHVSymmetry(unittest.TestCase):
    def test_example2_symmetric(self):
        verdict = is_hv_symmetric(EX2_V)
        self.assertTrue(verdict.symmetric)
        self.assertIs(verdict.reason, SymmetryReason.VERIFIED)
        polar, h = verdict.witness
        self.assertTrue(reps_equal(polar, EX2_VQ))
        self.assertTrue(all(row[0] in (0, 1) for row in h.rows))

    def test_example1_not_symmetric(self):
        verdict = is_hv_symmetric(EX1_V)
        self.assertFalse(verdict.symmetric)
        self.assertIs(verdict.reason, SymmetryReason.ORIGIN_OUTSIDE)
        self.assertEqual(verdict.witness_row, (-1, 0, 1))

    def test_pointed_cone_symmetric(self):
        verdict = is_hv_symmetric(QUADRANT_V)
        self.assertTrue(verdict.symmetric)

    def test_segment_polar_not_pointed(self):
        verdict = is_hv_symmetric(SEGMENT_V)
        self.assertFalse(verdict.symmetric)
        self.assertIs(verdict.reason, SymmetryReason.POLAR_NOT_POINTED)
        self.assertIsNone(verdict.witness)

    def test_line_in_rays_refused(self):
        with self.assertRaises(NotPointed) as context:
            is_hv_symmetric(HALF_PLANE_V)
        self.assertNotIsInstance(context.exception, PolarNotPointed)

    def test_lower_dimensional_point(self):
        verdict = is_hv_symmetric(POINT_V)
        self.assertFalse(verdict.symmetric)
        self.assertEqual(verdict.witness_row, (-5, 1))

    def test_polar_of_symmetric_is_symmetric(self):
        self.assertTrue(is_hv_symmetric(EX2_VQ).symmetric)
        self.assertTrue(is_hv_symmetric(polar_vrep(CUBE_V)).symmetric)

    @parameterized.expand([
        ("example1", EX1_V, False),
        ("example2", EX2_V, True),
        ("cube", CUBE_V, True),
        ("segment", SEGMENT_V, False),
        ("point", POINT_V, False),
    ])
    def test_fast_path(self, _, v, expected):
        self.assertEqual(hv_symmetric_fast(v), expected)
        self.assertEqual(is_hv_symmetric(v).symmetric, expected)


class TestEquivalentConditions(unittest.TestCase):
    @parameterized.expand([
        ("example1", EX1_V, False),
        ("example2", EX2_V, True),
        ("simplex", SIMPLEX_V, True),
        ("quadrant", QUADRANT_V, True),
        ("point", POINT_V, False),
    ])
    def test_all_four_agree(self, _, v, expected):
        check = verify_equivalences(v)
        self.assertEqual(check.as_tuple(), (expected,) * 4)
        self.assertTrue(check.consistent)

    def test_polar_not_pointed_refused(self):
        with self.assertRaises(PolarNotPointed):
            verify_equivalences(SEGMENT_V)

    def test_line_in_recession_cone_refused(self):
        with self.assertRaises(NotPointed) as context:
            verify_equivalences(HALF_PLANE_V)
        self.assertNotIsInstance(context.exception, PolarNotPointed)

    def test_consistency_flag(self):
        self.assertFalse(EquivalenceCheck(True, True, False, True).consistent)


if __name__ == "__main__":
    unittest.main()
