"""Orthogonality graph construction and analysis."""
from .orth_graph import (
    GraphKind,
    LoopPolicy,
    OrthGraph,
    orthogonality_matrix,
    pack_rows,
    unpack_rows,
    popcount_rows,
    dotk_subspaces,
    totally_isotropic_mask,
    build_gamma_square,
    build_gamma_bar,
    with_loop_policy,
)
from .cliques import CliqueResult, max_clique, clique_number, clique_sum_class, is_direct_sum_witness
from .neighborhood import (
    NeighborhoodMap,
    neighborhood_subgraph,
    neighborhood_target,
    neighborhood_map,
    verify_neighborhoods,
)
from .orbits import OrbitReport, vertex_permutation, generator_permutations, orbit_check
from .stats import GraphStats, leading_counts, asymptotic_ratios, counted_vertices_and_degree, stats
from .export import (
    edge_pairs,
    edgelist_text,
    vertex_table_text,
    write_edgelist,
    to_networkx,
    dot_text,
    json_text,
)

__all__ = [
    'GraphKind',
    'LoopPolicy',
    'OrthGraph',
    'orthogonality_matrix',
    'pack_rows',
    'unpack_rows',
    'popcount_rows',
    'dotk_subspaces',
    'totally_isotropic_mask',
    'build_gamma_square',
    'build_gamma_bar',
    'with_loop_policy',
    'CliqueResult',
    'max_clique',
    'clique_number',
    'clique_sum_class',
    'is_direct_sum_witness',
    'NeighborhoodMap',
    'neighborhood_subgraph',
    'neighborhood_target',
    'neighborhood_map',
    'verify_neighborhoods',
    'OrbitReport',
    'vertex_permutation',
    'generator_permutations',
    'orbit_check',
    'GraphStats',
    'leading_counts',
    'asymptotic_ratios',
    'counted_vertices_and_degree',
    'stats',
    'edge_pairs',
    'edgelist_text',
    'vertex_table_text',
    'write_edgelist',
    'to_networkx',
    'dot_text',
    'json_text',
]
