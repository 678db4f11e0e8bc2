"""Unit tests for services.cache"""
import unittest
import sys
import os
import json
import tempfile
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', '..', 'src'))

import numpy as np

from services.cache import SubspaceCache
from services.field import get_field
from services.subspace import enumerate_subspaces, gaussian_binomial


class TestSubspaceCache(unittest.TestCase):

    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.cache = SubspaceCache(self.tmp.name)
        self.f = get_field(3)

    def tearDown(self):
        self.tmp.cleanup()

    def test_miss_then_hit(self):
        expected = gaussian_binomial(4, 2, 3)
        self.assertIsNone(self.cache.load(self.f, 4, 2, expected))
        first = enumerate_subspaces(4, 2, self.f, cache=self.cache)
        cached = self.cache.load(self.f, 4, 2, expected)
        self.assertIsNotNone(cached)
        np.testing.assert_array_equal(cached, first.bases)
        second = enumerate_subspaces(4, 2, self.f, cache=self.cache)
        np.testing.assert_array_equal(second.bases, first.bases)

    def test_entries_and_clear(self):
        enumerate_subspaces(3, 1, self.f, cache=self.cache)
        enumerate_subspaces(3, 1, get_field(9), cache=self.cache)
        entries = self.cache.entries()
        self.assertEqual(len(entries), 2)
        self.assertEqual(sorted(e["q"] for e in entries), [3, 9])
        self.assertEqual(self.cache.clear(), 2)
        self.assertEqual(self.cache.entries(), [])

    def test_header_mismatch_is_a_miss(self):
        enumerate_subspaces(3, 1, self.f, cache=self.cache)
        header_path = os.path.join(self.tmp.name, "subspaces_n3_k1_q3.json")
        with open(header_path) as fh:
            header = json.load(fh)
        header["count"] = 999
        with open(header_path, "w") as fh:
            json.dump(header, fh)
        self.assertIsNone(self.cache.load(self.f, 3, 1, 13))

    def test_corrupt_payload_is_a_miss(self):
        enumerate_subspaces(3, 1, self.f, cache=self.cache)
        with open(os.path.join(self.tmp.name, "subspaces_n3_k1_q3.npy"), "wb") as fh:
            fh.write(b"not an array")
        self.assertIsNone(self.cache.load(self.f, 3, 1, 13))
        # enumeration still succeeds
        self.assertEqual(len(enumerate_subspaces(3, 1, self.f, cache=self.cache)), 13)

    def test_disabled_cache_writes_nothing(self):
        cache = SubspaceCache(self.tmp.name, enabled=False)
        enumerate_subspaces(3, 1, self.f, cache=cache)
        self.assertEqual(os.listdir(self.tmp.name), [])

    def test_clear_missing_directory(self):
        cache = SubspaceCache(os.path.join(self.tmp.name, "absent"))
        self.assertEqual(cache.clear(), 0)
        self.assertEqual(cache.entries(), [])


if __name__ == '__main__':
    unittest.main()
