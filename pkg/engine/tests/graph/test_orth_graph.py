"""Unit tests for services.graph construction, statistics and cliques"""
import unittest
import sys
import os
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', '..', 'src'))

import numpy as np

from services.field import get_field
from services.graph import (
    GraphKind,
    LoopPolicy,
    OrthGraph,
    asymptotic_ratios,
    build_gamma_bar,
    build_gamma_square,
    clique_sum_class,
    counted_vertices_and_degree,
    dotk_subspaces,
    is_direct_sum_witness,
    leading_counts,
    max_clique,
    orthogonality_matrix,
    pack_rows,
    popcount_rows,
    stats,
    totally_isotropic_mask,
    unpack_rows,
    with_loop_policy,
)
from services.quadform import FormClass
from tests.fixtures.common_graphs import f3, gamma_bar, gamma_square
from utils.errors import BudgetExceededError, GraphError


class TestGammaSquare(unittest.TestCase):

    def test_small_instances(self):
        for (n, k), (count, degree) in {(3, 1): (6, 1), (4, 1): (15, 6), (5, 1): (36, 15),
                                        (5, 2): (270, 3)}.items():
            graph = gamma_square(n, k)
            self.assertEqual(graph.vertex_count, count, graph.label)
            self.assertTrue(graph.is_regular(), graph.label)
            self.assertEqual(int(graph.degrees[0]), degree, graph.label)

    def test_loop_free_and_symmetric(self):
        graph = gamma_square(4, 1)
        self.assertEqual(graph.loop_count, 0)
        self.assertTrue(np.array_equal(graph.adjacency, graph.adjacency.T))
        self.assertEqual(graph.edge_count, 15 * 6 // 2)

    def test_edgeless_when_k_at_least_half(self):
        for n, k in [(4, 2), (5, 3)]:
            graph = gamma_square(n, k)
            self.assertGreater(graph.vertex_count, 0)
            self.assertEqual(graph.edge_count, 0)

    def test_vertices_are_spacelike_lines(self):
        graph = gamma_square(3, 1)
        space = graph.space
        for v in graph.vertices:
            value = space.evaluate(v.matrix[0]).code
            self.assertTrue(value != 0 and graph.field.square_table[value])

    def test_adjacency_is_orthogonality(self):
        graph = gamma_square(4, 1)
        u = graph.neighbors(0)[0]
        self.assertEqual(graph.space.bilinear(graph.vertices.bases[0][0], graph.vertices.bases[u][0]), 0)

    def test_label_and_kind(self):
        graph = gamma_square(4, 1)
        self.assertIs(graph.kind, GraphKind.GAMMA_SQUARE)
        self.assertEqual(graph.label, "GammaSquare(4,1,3)")

    def test_invalid_parameters(self):
        with self.assertRaises(GraphError):
            build_gamma_square(3, 3, f3())
        with self.assertRaises(GraphError):
            build_gamma_square(3, 0, f3())

    def test_vertex_budget(self):
        with self.assertRaises(BudgetExceededError):
            build_gamma_square(5, 2, f3(), max_vertices=100, workers=1)

    def test_parallel_build_matches_serial(self):
        serial = gamma_square(5, 1)
        parallel = build_gamma_square(5, 1, f3(), workers=4)
        np.testing.assert_array_equal(serial.bits, parallel.bits)

    def test_extension_field(self):
        graph = build_gamma_square(3, 1, get_field(9), workers=1)
        # -1 is a square in F_9, so ldot_3 has (q^2 - q) / 2 spacelike lines
        self.assertEqual(graph.vertex_count, 36)
        self.assertTrue(graph.is_regular())


class TestGammaBar(unittest.TestCase):

    def test_vertex_counts(self):
        self.assertEqual(gamma_bar(4, 1).vertex_count, 40)
        self.assertEqual(gamma_bar(4, 2).vertex_count, 130)

    def test_loops_at_totally_isotropic_vertices(self):
        include = gamma_bar(4, 1, loop_policy="include")
        exclude = gamma_bar(4, 1, loop_policy="exclude")
        # ldot_4 over F_3 is elliptic: q^2 + 1 isotropic points
        self.assertEqual(include.loop_count, 10)
        self.assertEqual(exclude.loop_count, 0)
        self.assertEqual(include.edge_count, exclude.edge_count)
        mask = totally_isotropic_mask(include.space, include.vertices.bases)
        np.testing.assert_array_equal(np.diag(include.adjacency), mask)

    def test_with_loop_policy(self):
        include = gamma_bar(4, 1, loop_policy="include")
        exclude = with_loop_policy(include, LoopPolicy.EXCLUDE)
        np.testing.assert_array_equal(exclude.adjacency, gamma_bar(4, 1, loop_policy="exclude").adjacency)
        back = with_loop_policy(exclude, LoopPolicy.INCLUDE)
        np.testing.assert_array_equal(back.adjacency, include.adjacency)
        self.assertIs(with_loop_policy(include, LoopPolicy.INCLUDE), include)

    def test_square_is_induced_subgraph(self):
        square, bar = gamma_square(4, 1), gamma_bar(4, 1)
        positions = bar.vertices.lookup(square.vertices.bases)
        self.assertTrue((positions >= 0).all())
        np.testing.assert_array_equal(bar.adjacency[np.ix_(positions, positions)], square.adjacency)

    def test_include_degree(self):
        # every vertex meets gb(3,1,3) = 13 lines of its perp, its own line included when isotropic
        self.assertTrue(gamma_bar(4, 1).is_regular())
        self.assertEqual(int(gamma_bar(4, 1).degrees[0]), 13)

    def test_extension_field_counts(self):
        graph = build_gamma_bar(3, 1, get_field(9), workers=1)
        self.assertEqual(graph.vertex_count, 91)


class TestBitsetAdjacency(unittest.TestCase):

    def setUp(self):
        self.graph = gamma_bar(4, 1, loop_policy="include")

    def test_one_packed_row_per_vertex(self):
        bits = self.graph.bits
        self.assertEqual(bits.dtype, np.uint8)
        self.assertEqual(bits.shape, (40, 5))
        self.assertFalse(bits.flags.writeable)
        np.testing.assert_array_equal(unpack_rows(bits, 40), self.graph.adjacency)
        np.testing.assert_array_equal(popcount_rows(bits), self.graph.adjacency.sum(axis=1))

    def test_row_accessors_agree_with_dense(self):
        dense = self.graph.adjacency
        for u in (0, 7, 39):
            np.testing.assert_array_equal(self.graph.row(u), dense[u])
            for v in range(40):
                self.assertEqual(self.graph.has_edge(u, v), bool(dense[u, v]))
        rows, cols = [3, 1, 20], [0, 39, 5, 5]
        np.testing.assert_array_equal(self.graph.block(rows, cols), dense[np.ix_(rows, cols)])
        masks = self.graph.row_masks()
        self.assertEqual([v for v in range(40) if masks[2] >> v & 1], self.graph.neighbors(2).tolist())

    def test_loop_mask(self):
        np.testing.assert_array_equal(self.graph.loop_mask, np.diag(self.graph.adjacency))

    def test_from_dense_round_trip(self):
        graph = OrthGraph.from_dense(self.graph.kind, 4, 1, self.graph.field, self.graph.vertices,
                                     self.graph.adjacency, loop_policy=LoopPolicy.INCLUDE)
        np.testing.assert_array_equal(graph.bits, self.graph.bits)
        self.assertEqual(graph.edge_count, self.graph.edge_count)

    def test_asymmetric_rows_rejected(self):
        dense = self.graph.adjacency
        dense[0, 1] = not dense[1, 0]
        with self.assertRaises(GraphError):
            OrthGraph.from_dense(self.graph.kind, 4, 1, self.graph.field, self.graph.vertices, dense)
        with self.assertRaises(GraphError):
            OrthGraph(self.graph.kind, 4, 1, self.graph.field, self.graph.vertices, self.graph.bits[:, :4])

    def test_symmetry_check_reaches_last_column(self):
        square = gamma_square(5, 2)
        dense = square.adjacency
        self.assertEqual(square.bits.shape, (270, 34))
        dense[3, 269] = dense[269, 3] = True
        OrthGraph.from_dense(square.kind, 5, 2, square.field, square.vertices, dense)
        dense[269, 3] = False
        with self.assertRaises(GraphError):
            OrthGraph.from_dense(square.kind, 5, 2, square.field, square.vertices, dense)

    def test_packed_orthogonality_matches_dense(self):
        graph = gamma_square(4, 1)
        gram = graph.space.gram_matrix
        dense = orthogonality_matrix(graph.field, gram, graph.vertices.bases, workers=1)
        packed = orthogonality_matrix(graph.field, gram, graph.vertices.bases, workers=1, packed=True)
        np.testing.assert_array_equal(packed, pack_rows(dense))
        np.testing.assert_array_equal(packed, graph.bits)



class TestStats(unittest.TestCase):

    def test_stats_summary(self):
        summary = stats(gamma_square(5, 2))
        self.assertEqual(summary.vertex_count, 270)
        self.assertEqual(summary.degree, 3)
        self.assertTrue(summary.regular)
        self.assertEqual(summary.degree_histogram, {3: 270})
        self.assertFalse(summary.spacelike_line_graph)
        self.assertEqual(summary.to_dict()["degree_histogram"], {"3": 270})

    def test_leading_counts(self):
        self.assertEqual(leading_counts(GraphKind.GAMMA_SQUARE, 5, 2, 3), {"vertices": 364.5, "degree": 4.5})
        self.assertIsNone(leading_counts(GraphKind.GAMMA_BAR, 4, 2, 3)["degree"])

    def test_ratios(self):
        ratios = asymptotic_ratios(gamma_square(4, 1))
        self.assertAlmostEqual(ratios["vertex_ratio"], 15 / 13.5)
        self.assertAlmostEqual(ratios["degree_ratio"], 6 / 4.5)

    def test_counted_vertices_and_degree(self):
        self.assertEqual(counted_vertices_and_degree(5, 2, f3()), (270, 3))
        self.assertEqual(counted_vertices_and_degree(4, 2, f3())[1], None)
        self.assertEqual(counted_vertices_and_degree(4, 1, get_field(5)), (65, 10))

    def test_dotk_subspace_count(self):
        self.assertEqual(len(dotk_subspaces(4, 1, f3())), 15)


class TestCliques(unittest.TestCase):

    def test_clique_numbers(self):
        for (n, k), expected in {(3, 1): 2, (4, 1): 3, (5, 1): 4, (5, 2): 2}.items():
            self.assertEqual(max_clique(gamma_square(n, k)).size, expected, (n, k))

    def test_clique_is_direct_sum_witness(self):
        graph = gamma_square(4, 1)
        result = max_clique(graph)
        self.assertTrue(is_direct_sum_witness(graph, result.clique))
        self.assertEqual(clique_sum_class(graph, result.clique), FormClass.euclidean(3))
        for i, u in enumerate(result.clique):
            for v in result.clique[i + 1:]:
                self.assertTrue(graph.has_edge(u, v))

    def test_cap_stops_early(self):
        result = max_clique(gamma_square(5, 1), cap=2)
        self.assertGreaterEqual(result.size, 2)
        self.assertTrue(result.stopped_at_cap)

    def test_node_budget(self):
        with self.assertRaises(BudgetExceededError):
            max_clique(gamma_square(5, 1), node_budget=1)

    def test_edgeless_graph(self):
        self.assertEqual(max_clique(gamma_square(4, 2)).size, 1)


if __name__ == '__main__':
    unittest.main()
