"""Unit tests for ratio metrics and report aggregation"""
import unittest
import sys
import os
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', '..', 'src'))

from evaluation import ALL_INSTANCES, CLIQUE_INSTANCES, DEGREE_INSTANCES, IDENTITY_INSTANCES, MetricsCalculator
from services.field import get_field


class TestBands(unittest.TestCase):

    def test_gating_band_widens_for_small_q(self):
        low, high = MetricsCalculator.gating_band(3)
        self.assertAlmostEqual(low, 2 / 3)
        self.assertAlmostEqual(high, 4 / 3)

    def test_gating_band_keeps_nominal_for_large_q(self):
        self.assertEqual(MetricsCalculator.gating_band(9), (0.8, 1.25))

    def test_in_band(self):
        self.assertTrue(MetricsCalculator.in_band(1.0, (0.8, 1.25)))
        self.assertTrue(MetricsCalculator.in_band(0.8, (0.8, 1.25)))
        self.assertFalse(MetricsCalculator.in_band(1.3, (0.8, 1.25)))
        self.assertIsNone(MetricsCalculator.in_band(None, (0.8, 1.25)))


class TestTableRatios(unittest.TestCase):

    def test_gamma_4_1_3(self):
        row = MetricsCalculator.table_ratios(4, 1, get_field(3))
        self.assertEqual((row["vertex_count"], row["degree"]), (15, 6))
        self.assertAlmostEqual(row["vertex_ratio"], 1.11111111)
        self.assertAlmostEqual(row["degree_ratio"], 1.33333333)
        self.assertTrue(row["vertex_in_nominal_band"])
        self.assertFalse(row["degree_in_nominal_band"])
        self.assertTrue(row["degree_in_gating_band"])
        self.assertTrue(MetricsCalculator.row_passes(row))

    def test_edgeless_instance_has_no_degree_ratio(self):
        row = MetricsCalculator.table_ratios(4, 2, get_field(3))
        self.assertIsNone(row["degree_ratio"])
        self.assertIsNone(row["degree_in_gating_band"])

    def test_ratios_approach_one(self):
        small = MetricsCalculator.table_ratios(4, 1, get_field(3))
        large = MetricsCalculator.table_ratios(4, 1, get_field(7))
        self.assertLess(abs(large["vertex_ratio"] - 1), abs(small["vertex_ratio"] - 1))


class TestAggregate(unittest.TestCase):

    def test_counts_and_failures(self):
        instance = {"n": 4, "k": 1, "q": 3}
        results = [
            {"claimId": "a", "instance": instance, "status": "pass", "pass": True},
            {"claimId": "b", "instance": instance, "status": "fail", "pass": False},
            {"claimId": "c", "instance": instance, "status": "skipped", "pass": True},
        ]
        summary = MetricsCalculator.aggregate_results(results)
        self.assertEqual(summary["total"], 3)
        self.assertEqual(summary["passed"], 2)
        self.assertEqual(summary["failed"], 1)
        self.assertEqual(summary["by_status"], {"fail": 1, "pass": 1, "skipped": 1})
        self.assertEqual(summary["failures"], ["b@4,1,3"])

    def test_empty(self):
        self.assertEqual(MetricsCalculator.aggregate_results([])["total"], 0)


class TestAcceptanceInstances(unittest.TestCase):

    def test_instances_are_sorted_and_unique(self):
        self.assertEqual(ALL_INSTANCES, sorted(set(ALL_INSTANCES)))
        self.assertIn((5, 2, 3), ALL_INSTANCES)
        self.assertIn((7, 2, 3), ALL_INSTANCES)

    def test_expected_values(self):
        self.assertIn({"n": 5, "k": 2, "q": 3, "vertex_count": 270, "degree": 3}, DEGREE_INSTANCES)
        self.assertEqual({i["clique_number"] for i in CLIQUE_INSTANCES}, {2, 3})
        self.assertEqual(IDENTITY_INSTANCES[0]["a"], 4)


if __name__ == '__main__':
    unittest.main()
