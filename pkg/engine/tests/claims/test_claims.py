"""Unit tests for the claim battery"""
import unittest
import sys
import os
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', '..', 'src'))

from claims import BaseClaim, ClaimManager, ClaimResult, ClaimStatus, VerificationContext
from claims.combinatorial import clique_bound
from claims.forms import odd_form_rows
from claims.spectral import fixture_errors, FIXTURE_TOLERANCE
from evaluation import ClaimVerifier
from services.field import get_field
from utils.errors import GraphError, ValidationError


def context(n, k, q=3, **kwargs):
    kwargs.setdefault("workers", 1)
    return VerificationContext(n, k, get_field(q), **kwargs)


class TestClaimManager(unittest.TestCase):

    def setUp(self):
        self.manager = ClaimManager()

    def test_registry_order(self):
        ids = self.manager.list_available_claims()
        self.assertEqual(len(ids), 18)
        self.assertEqual(ids[0], "classification-table")
        self.assertEqual(ids[-1], "eigensolver-fixtures")
        self.assertLess(ids.index("clique-bound"), ids.index("eigenvalue-bound"))

    def test_select_keeps_registry_order(self):
        selected = self.manager.select(["interlacing", "clique-bound"])
        self.assertEqual([c.claim_id for c in selected], ["clique-bound", "interlacing"])

    def test_unknown_claim(self):
        with self.assertRaises(ValidationError):
            self.manager.select(["no-such-claim"])
        with self.assertRaises(ValidationError):
            self.manager.load_claim("no-such-claim")

    def test_claims_are_loaded_once(self):
        self.assertIs(self.manager.load_claim("clique-bound"), self.manager.load_claim("clique-bound"))


class TestFormClaims(unittest.TestCase):

    def test_odd_form_table(self):
        for q in (3, 5, 7, 9):
            rows = odd_form_rows(get_field(q))
            self.assertEqual(len(rows), 6)
            self.assertTrue(all(r["match"] and r["witt_matches"] for r in rows), q)

    def test_mod_4_pattern_for_q_3(self):
        rows = {(r["n"], r["c"]): r["observed"] for r in odd_form_rows(get_field(3))}
        self.assertEqual(rows[(5, "1")], "Euclidean(5)")
        self.assertEqual(rows[(5, "lambda")], "Lorentzian(5)")
        self.assertEqual(rows[(3, "1")], "Lorentzian(3)")
        self.assertEqual(rows[(3, "lambda")], "Euclidean(3)")

    def test_minus_one_square(self):
        rows = odd_form_rows(get_field(5))
        self.assertTrue(all(r["observed"].startswith("Euclidean") for r in rows if r["c"] == "1"))

    def test_clique_bound(self):
        self.assertEqual(clique_bound(7, 2), 3)
        self.assertEqual(clique_bound(5, 2), 2)
        self.assertEqual(clique_bound(4, 1), 3)


class TestBattery(unittest.TestCase):

    def test_all_claims_on_gamma_4_1(self):
        report = ClaimVerifier().verify([context(4, 1)])
        statuses = {r.claim_id: r.status for r in report.results}
        self.assertTrue(report.passed, [r.to_dict() for r in report.failures])
        self.assertEqual(statuses.pop("edgeless-above-half"), ClaimStatus.NOT_APPLICABLE)
        self.assertTrue(all(s is ClaimStatus.PASS for s in statuses.values()), statuses)

    def test_edgeless_instance(self):
        ids = ["edgeless-above-half", "neighborhood-isomorphism", "neighborhood-degree", "spectral-gap-edges"]
        results = {r.claim_id: r for r in ClaimVerifier().verify([context(4, 2)], ids).results}
        self.assertIs(results["edgeless-above-half"].status, ClaimStatus.PASS)
        self.assertIs(results["neighborhood-isomorphism"].status, ClaimStatus.NOT_APPLICABLE)
        self.assertIs(results["spectral-gap-edges"].status, ClaimStatus.NOT_APPLICABLE)
        self.assertEqual(results["neighborhood-degree"].observed, 0)
        self.assertIs(results["neighborhood-degree"].status, ClaimStatus.PASS)

    def test_structure_of_gamma_5_2(self):
        ids = ["clique-bound", "clique-attained", "neighborhood-degree", "eigenvalue-bound", "spectral-gap-edges"]
        results = {r.claim_id: r for r in ClaimVerifier().verify([context(5, 2)], ids).results}
        self.assertIs(results.pop("eigenvalue-bound").status, ClaimStatus.NOT_APPLICABLE)
        self.assertTrue(all(r.status is ClaimStatus.PASS for r in results.values()),
                        {k: r.to_dict() for k, r in results.items()})
        self.assertEqual(results["clique-attained"].observed, 2)
        self.assertEqual(results["neighborhood-degree"].observed, 3)
        self.assertEqual(results["spectral-gap-edges"].details["eligible"], 0)

    def test_budget_skips_dependent_claims(self):
        ctx = context(4, 1, max_vertices=10)
        results = ClaimVerifier().verify([ctx], ["clique-bound", "eigenvalue-bound", "enumeration-count"]).results
        statuses = {r.claim_id: r.status for r in results}
        self.assertIs(statuses["clique-bound"], ClaimStatus.SKIPPED)
        self.assertIs(statuses["eigenvalue-bound"], ClaimStatus.SKIPPED)
        self.assertIs(statuses["enumeration-count"], ClaimStatus.PASS)
        self.assertTrue(all(r.passed for r in results))

    def test_eigenvalue_bound_needs_k_below_third(self):
        results = ClaimVerifier().verify([context(3, 1), context(4, 1)], ["eigenvalue-bound"]).results
        self.assertEqual([r.status for r in results], [ClaimStatus.NOT_APPLICABLE, ClaimStatus.PASS])

    def test_interlacing_reports_counts(self):
        result = ClaimVerifier().verify([context(4, 1)], ["interlacing"]).results[0]
        self.assertIs(result.status, ClaimStatus.PASS)
        self.assertEqual((result.details["sub_count"], result.details["full_count"]), (15, 40))
        self.assertEqual(result.observed, [])
        self.assertNotIn("holds", result.details)

    def test_exclude_policy_measures_identity(self):
        ids = ["square-identity-transverse", "full-graph-eigenvalue-bound"]
        results = ClaimVerifier().verify([context(4, 1, loop_policy="exclude")], ids).results
        self.assertTrue(all(r.status is ClaimStatus.MEASURED for r in results))

    def test_ratios_outside_band_instances_are_measured(self):
        result = ClaimVerifier().verify([context(3, 1)], ["asymptotic-ratios"]).results[0]
        self.assertIs(result.status, ClaimStatus.MEASURED)

    def test_report_payload(self):
        report = ClaimVerifier().verify([context(3, 1), context(4, 1)], ["clique-bound"])
        data = report.to_dict()
        self.assertEqual(data["instances"], [{"n": 3, "k": 1, "q": 3}, {"n": 4, "k": 1, "q": 3}])
        self.assertEqual(data["summary"]["total"], 2)
        self.assertTrue(data["pass"])
        entry = data["claims"][0]
        self.assertEqual(set(entry), {"claimId", "instance", "expected", "observed", "pass", "status", "details"})


class TestClaimErrors(unittest.TestCase):

    class _Broken(BaseClaim):
        claim_id = "broken"

        def check(self, context) -> ClaimResult:
            raise GraphError("boom")

    def test_framework_error_is_a_failed_entry(self):
        result = ClaimVerifier().evaluate_claim(self._Broken(), context(3, 1))
        self.assertIs(result.status, ClaimStatus.FAIL)
        self.assertFalse(result.passed)
        self.assertEqual(result.details["error"]["error"], "boom")

    def test_fixture_errors_within_tolerance(self):
        rows = fixture_errors()
        self.assertEqual(len(rows), 9)
        self.assertTrue(all(r["max_error"] <= FIXTURE_TOLERANCE for r in rows))


if __name__ == '__main__':
    unittest.main()
