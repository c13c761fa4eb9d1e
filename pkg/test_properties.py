"""
Seeded property suites over random instances
"""
import unittest
from fractions import Fraction

import numpy as np

from config import DEFAULT_SEED
from conversion.double_description import dd_extreme_rays, rays_satisfy_cone
from conversion.enumeration import facet_enumeration_lifted, vertex_enumeration
from conversion.oracles import brute_force_rays
from conversion.redundancy import member_certificate, polar_is_pointed, remove_redundancy_h, remove_redundancy_v
from polarity.instances import random_full_dimensional_hrep, random_pointed_cone, symmetry_instances
from polarity.polar import bipolar_vrep, is_bounded, origin_interior_to_polar, polar_hrep, polar_vrep
from polarity.symmetry import hv_symmetric_fast, is_hv_symmetric, verify_equivalences
from representation.models import reps_equal
from utils.analytics import analytics
from utils.exact_arith import ZERO, dot

SUITE_SIZE = 200
RAY_STRETCH = 1000


class TestSymmetrySuite(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.instances = symmetry_instances(np.random.default_rng(DEFAULT_SEED), SUITE_SIZE)
        cls.checks = [verify_equivalences(v) for v in cls.instances]

    def test_four_statements_agree(self):
        frame = analytics.suite_table(self.checks, [v.n for v in self.instances])
        summary = analytics.suite_summary(frame)
        self.assertEqual(summary['instances'], SUITE_SIZE)
        self.assertEqual(summary['inconsistent'], 0)
        self.assertGreaterEqual(summary['symmetric'], 20)
        self.assertGreaterEqual(summary['not_symmetric'], 20)

    def test_instances_are_deterministic(self):
        again = symmetry_instances(np.random.default_rng(DEFAULT_SEED), 10)
        self.assertEqual(again, self.instances[:10])

    def test_fast_path_agrees(self):
        for v, check in zip(self.instances, self.checks):
            self.assertEqual(hv_symmetric_fast(v), check.d)

    def test_bipolar_law(self):
        for v, check in zip(self.instances, self.checks):
            bipolar = bipolar_vrep(v)
            if check.a:
                self.assertTrue(reps_equal(bipolar, remove_redundancy_v(v)))
            polar = polar_vrep(v)
            if polar_is_pointed(polar):
                self.assertTrue(reps_equal(polar_vrep(polar), bipolar))

    def test_bipolar_idempotent(self):
        for v in self.instances[:50]:
            once = bipolar_vrep(v)
            self.assertTrue(reps_equal(bipolar_vrep(once), once))

    def test_bounded_iff_origin_interior_to_polar(self):
        for v in self.instances:
            self.assertEqual(is_bounded(remove_redundancy_v(v)), origin_interior_to_polar(v))

    def test_polar_of_symmetric_is_symmetric(self):
        symmetric = [v for v, check in zip(self.instances, self.checks) if check.d]
        for v in symmetric[:30]:
            polar = polar_vrep(v)
            self.assertTrue(polar_is_pointed(polar))
            self.assertTrue(is_hv_symmetric(polar).symmetric)


class TestPolarMembership(unittest.TestCase):
    def test_polar_rows_match_sampled_points(self):
        rng = np.random.default_rng(DEFAULT_SEED)
        for v in symmetry_instances(rng, 30):
            samples = list(v.vertices)
            for ray in v.rays:
                samples.append(tuple(s + RAY_STRETCH * r for s, r in zip(v.vertices[0], ray)))
            for x in samples:
                self.assertIsNotNone(member_certificate(v, x))

            h = polar_hrep(v)
            for _ in range(5):
                z = tuple(Fraction(int(k), 2) for k in rng.integers(-3, 4, size=v.n))
                in_polar = all(row[0] + dot(row[1:], z) >= 0 for row in h.rows)
                on_samples = all(1 + dot(z, x) >= 0 for x in samples)
                self.assertEqual(in_polar, on_samples)


class TestOracleEquivalence(unittest.TestCase):
    def test_double_description_matches_brute_force(self):
        rng = np.random.default_rng(DEFAULT_SEED)
        for _ in range(100):
            cone_rows = random_pointed_cone(rng)
            cone = dd_extreme_rays(cone_rows)
            self.assertEqual(cone, brute_force_rays(cone_rows))
            self.assertTrue(rays_satisfy_cone(cone, cone_rows))


class TestRoundTrip(unittest.TestCase):
    def test_h_to_v_to_h(self):
        rng = np.random.default_rng(DEFAULT_SEED)
        for _ in range(100):
            h = random_full_dimensional_hrep(rng)
            v, _ = vertex_enumeration(h)
            round_trip, _ = facet_enumeration_lifted(v)
            self.assertTrue(reps_equal(round_trip, remove_redundancy_h(h)))
            self.assertFalse(round_trip.equality_marks)

    def test_origin_in_every_certified_instance(self):
        rng = np.random.default_rng(DEFAULT_SEED + 1)
        for v in symmetry_instances(rng, 20)[::2]:
            self.assertIsNotNone(member_certificate(v, (ZERO,) * v.n))


if __name__ == "__main__":
    unittest.main()
