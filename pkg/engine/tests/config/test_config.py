"""Unit tests for configuration loading and validation"""
import unittest
import sys
import os
import tempfile
from pathlib import Path
from unittest.mock import patch
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', '..', 'src'))

from pydantic import ValidationError as PydanticValidationError

from config.constants import CACHE_ENV_VAR, load_config, resolve_cache_dir
from config.models import QuadgraphConfig, RunConfig, VerificationConfig
from utils.errors import ConfigError


class TestLoadConfig(unittest.TestCase):

    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()

    def tearDown(self):
        self.tmp.cleanup()

    def write(self, name, text):
        path = os.path.join(self.tmp.name, name)
        with open(path, "w") as fh:
            fh.write(text)
        return path

    def test_shipped_config(self):
        config = load_config()
        self.assertEqual(config.graph.loop_policy, "include")
        self.assertEqual(config.field.moduli[9], [1, 0, 1])
        self.assertEqual(config.verification.ratio_band, [0.8, 1.25])

    def test_shipped_cap_admits_gamma_7_2(self):
        # GammaSquare(7,2,3) has 22113 vertices
        self.assertGreaterEqual(load_config().graph.max_vertices, 22113)
        self.assertEqual(QuadgraphConfig().graph.max_vertices, 30000)

    def test_empty_file_uses_defaults(self):
        config = load_config(self.write("empty.yaml", ""))
        self.assertEqual(config, QuadgraphConfig())

    def test_env_expansion(self):
        path = self.write("env.yaml", "cache:\n  dir: ${QUADGRAPH_TEST_DIR}\n")
        with patch.dict(os.environ, {"QUADGRAPH_TEST_DIR": "/tmp/somewhere"}):
            self.assertEqual(load_config(path).cache.dir, "/tmp/somewhere")

    def test_unset_env_var_means_no_dir(self):
        path = self.write("unset.yaml", "cache:\n  dir: ${QUADGRAPH_SURELY_UNSET}\n")
        self.assertIsNone(load_config(path).cache.dir)

    def test_invalid_values(self):
        with self.assertRaises(ConfigError):
            load_config(self.write("bad.yaml", "graph:\n  loop_policy: sometimes\n"))

    def test_missing_file(self):
        with self.assertRaises(ConfigError):
            load_config(os.path.join(self.tmp.name, "absent.yaml"))


class TestModels(unittest.TestCase):

    def test_run_config_defaults(self):
        run = RunConfig(n=4, k=1, q=3)
        self.assertEqual((run.loop_policy, run.output_format, run.graph), ("include", "json", "square"))

    def test_run_config_rejects_k_at_least_n(self):
        with self.assertRaises(PydanticValidationError):
            RunConfig(n=3, k=3, q=3)

    def test_run_config_rejects_unknown_format(self):
        with self.assertRaises(PydanticValidationError):
            RunConfig(n=4, k=1, q=3, output_format="xml")

    def test_ratio_band_must_contain_one(self):
        with self.assertRaises(PydanticValidationError):
            VerificationConfig(ratio_band=[1.1, 1.2])


class TestRequirements(unittest.TestCase):

    def read(self, path):
        lines = path.read_text().splitlines()
        return dict(line.split(">=", 1) if ">=" in line else (line, "") for line in lines if line.strip())

    def test_manifests_agree(self):
        here = Path(__file__).resolve().parents[2]
        engine, root = self.read(here / "requirements.txt"), self.read(here.parent / "requirements.txt")
        for name, version in engine.items():
            self.assertNotIn("==", name, "pinned requirement")
            self.assertEqual(root.get(name), version, name)


class TestCacheDir(unittest.TestCase):

    def test_override_wins(self):
        with patch.dict(os.environ, {CACHE_ENV_VAR: "/tmp/from-env"}):
            self.assertEqual(resolve_cache_dir("/tmp/flag"), Path("/tmp/flag"))

    def test_environment_variable(self):
        with patch.dict(os.environ, {CACHE_ENV_VAR: "/tmp/from-env"}):
            self.assertEqual(resolve_cache_dir(), Path("/tmp/from-env"))

    def test_default_dir(self):
        with patch.dict(os.environ, {CACHE_ENV_VAR: ""}):
            self.assertEqual(resolve_cache_dir(), Path("~/.cache/quadgraph").expanduser())


if __name__ == '__main__':
    unittest.main()
