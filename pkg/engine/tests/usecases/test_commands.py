"""Unit tests for the command use cases"""
import unittest
import sys
import os
import json
import tempfile
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', '..', 'src'))

from config.models import RunConfig
from usecases import CommandUseCase, cache_command, verify_suite
from usecases.commands import EXIT_OK
from utils.errors import ValidationError


class CommandTestCase(unittest.TestCase):

    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()

    def tearDown(self):
        self.tmp.cleanup()

    def usecase(self, n=4, k=1, q=3, **kwargs):
        return CommandUseCase(RunConfig(n=n, k=k, q=q, cache_dir=self.tmp.name, **kwargs))


class TestGraphCommands(CommandTestCase):

    def test_stats(self):
        output = self.usecase().execute("stats")
        self.assertEqual(output.exit_code, EXIT_OK)
        self.assertEqual(output.payload["vertex_count"], 15)
        self.assertEqual(output.payload["degree"], 6)
        self.assertEqual(output.payload["clique_number"], 3)

    def test_stats_of_gamma_bar(self):
        payload = self.usecase(graph="bar").execute("stats").payload
        self.assertEqual(payload["vertex_count"], 40)
        self.assertEqual(payload["loop_count"], 10)
        self.assertIsNone(payload["clique_number"])

    def test_cliques(self):
        payload = self.usecase().execute("cliques").payload
        self.assertEqual(payload["clique_number"], 3)
        self.assertTrue(payload["attains_bound"])
        self.assertTrue(payload["direct_sum_witness"])
        self.assertEqual(len(payload["clique"]), 3)

    def test_orbits(self):
        payload = self.usecase().execute("orbits").payload
        self.assertTrue(payload["vertex_transitive"])
        self.assertTrue(payload["arc_transitive"])

    def test_unknown_command(self):
        with self.assertRaises(ValidationError):
            self.usecase().execute("plot")

    def test_json_output_is_reproducible(self):
        first = self.usecase().execute("stats").render()
        second = self.usecase().execute("stats").render()
        self.assertEqual(first, second)


class TestSpectralCommands(CommandTestCase):

    def test_spectrum_csv_under_both_policies(self):
        text = self.usecase(graph="bar", loop_policy="both", output_format="csv").execute("spectrum").text
        headers = [line for line in text.splitlines() if line.startswith("#")]
        self.assertEqual(len(headers), 2)
        self.assertIn("loop_policy=include", headers[0])
        self.assertIn("loop_policy=exclude", headers[1])

    def test_verify_identity(self):
        output = self.usecase(loop_policy="both").execute("verify-identity")
        self.assertEqual(output.exit_code, EXIT_OK)
        self.assertEqual(len(output.payload["reports"]), 2)

    def test_gap_test_is_vacuous_on_gamma_5_2(self):
        output = self.usecase(n=5, k=2, trials=20).execute("gap-test")
        self.assertEqual(output.exit_code, EXIT_OK)
        self.assertEqual(output.payload["eligible"], 0)
        self.assertAlmostEqual(output.payload["n_star"], 270.0, places=5)


class TestVerifyAll(CommandTestCase):

    def test_selected_claims(self):
        output = self.usecase(claims=["clique-bound", "neighborhood-degree"]).execute("verify-all")
        self.assertEqual(output.exit_code, EXIT_OK)
        self.assertEqual([c["claimId"] for c in output.payload["claims"]],
                         ["clique-bound", "neighborhood-degree"])

    def test_rejects_both_policies(self):
        with self.assertRaises(ValidationError):
            self.usecase(loop_policy="both").execute("verify-all")

    def test_suite(self):
        runs = [RunConfig(n=n, k=k, q=3, cache_dir=self.tmp.name, claims=["enumeration-count"])
                for n, k in [(3, 1), (4, 2)]]
        output = verify_suite(runs)
        self.assertEqual(output.exit_code, EXIT_OK)
        self.assertEqual(len(output.payload["claims"]), 2)


class TestExport(CommandTestCase):

    def test_edgelist_needs_output(self):
        with self.assertRaises(ValidationError):
            self.usecase(output_format="edgelist").execute("export")

    def test_edgelist_file(self):
        path = os.path.join(self.tmp.name, "g.edges")
        output = self.usecase(output_format="edgelist", output=path).execute("export")
        self.assertEqual(output.payload["output"], path)
        with open(path) as fh:
            self.assertEqual(len(fh.read().splitlines()), 45)

    def test_dot_and_csv_to_stdout(self):
        self.assertIn("--", self.usecase(output_format="dot").execute("export").text)
        csv_text = self.usecase(output_format="csv").execute("export").text
        self.assertEqual(csv_text.splitlines()[0], "u,v")
        self.assertEqual(len(csv_text.splitlines()), 46)

    def test_build_writes_json_summary(self):
        path = os.path.join(self.tmp.name, "g.json")
        output = self.usecase(output=path).execute("build")
        with open(path) as fh:
            self.assertEqual(json.load(fh)["vertex_count"], 15)
        self.assertEqual(output.payload["output"], path)


class TestCacheCommand(CommandTestCase):

    def test_list_and_clear(self):
        self.usecase().execute("stats")
        listed = cache_command("list", self.tmp.name).payload
        self.assertGreater(len(listed["entries"]), 0)
        removed = cache_command("clear", self.tmp.name).payload["removed"]
        self.assertEqual(removed, len(listed["entries"]))
        self.assertEqual(cache_command("list", self.tmp.name).payload["entries"], [])

    def test_unknown_action(self):
        with self.assertRaises(ValidationError):
            cache_command("prune", self.tmp.name)


if __name__ == '__main__':
    unittest.main()
