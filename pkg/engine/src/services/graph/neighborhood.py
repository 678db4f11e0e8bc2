"""
Neighbourhoods in GammaSquare(n,k,q).

For a vertex x, the neighbours are the dot_k-subspaces of x-perp, and x-perp with
the restricted form is equivalent to ldot_{n-k}. An explicit isometry of x-perp
onto the standard ldot_{n-k} carries N(x) onto the vertex set of
GammaSquare(n-k,k,q) and preserves orthogonality, hence adjacency.
"""
import logging
from dataclasses import dataclass
from typing import List, Optional

import numpy as np

from services.linalg import batch_matmul, batch_row_reduce
from services.quadform import (
    construct_isometry,
    orthogonal_complement,
    restrict,
    standard_space,
)
from utils.errors import GraphError
from .orth_graph import GraphKind, OrthGraph, build_gamma_square

logger = logging.getLogger(__name__)


@dataclass
class NeighborhoodMap:
    """Image of N(x) in GammaSquare(n-k,k,q) under the induced isometry."""
    vertex: int
    neighbors: np.ndarray  # indices in the parent graph
    images: np.ndarray  # indices in the target graph, -1 if not a vertex there
    isometry: np.ndarray
    is_bijection: bool
    preserves_adjacency: bool

    @property
    def ok(self) -> bool:
        return self.is_bijection and self.preserves_adjacency


def _check_neighborhood_graph(graph: OrthGraph):
    if graph.kind is not GraphKind.GAMMA_SQUARE:
        raise GraphError("neighbourhood isomorphism needs a GammaSquare graph", graph=graph.label)
    if 2 * graph.k >= graph.n:
        raise GraphError("empty neighbourhood: k >= n/2", graph=graph.label)


def neighborhood_subgraph(graph: OrthGraph, vertex: int) -> OrthGraph:
    """Induced graph on N(vertex)."""
    _check_neighborhood_graph(graph)
    return graph.induced(graph.neighbors(vertex))


def neighborhood_target(graph: OrthGraph, **build_kwargs) -> OrthGraph:
    return build_gamma_square(graph.n - graph.k, graph.k, graph.field, **build_kwargs)


def neighborhood_map(graph: OrthGraph, vertex: int, target: OrthGraph) -> NeighborhoodMap:
    """Map N(vertex) into target = GammaSquare(n-k,k,q) through coordinates on x-perp."""
    _check_neighborhood_graph(graph)
    field = graph.field
    space = graph.space
    x = graph.vertices[vertex]

    perp = orthogonal_complement(space, x)
    perp_basis = perp.matrix  # RREF, identity in its pivot columns
    restricted = restrict(space, perp)
    standard = standard_space("ldot", graph.n - graph.k, field)
    isometry = construct_isometry(restricted, standard)
    if isometry is None:
        raise GraphError("x-perp is not equivalent to ldot_{n-k}", graph=graph.label, vertex=vertex)

    neighbors = graph.neighbors(vertex)
    bases = graph.vertices.bases[neighbors]  # (d, k, n)
    coords = bases[:, :, list(perp.pivots)]  # coordinates in the x-perp basis
    mapped = batch_matmul(field, coords, isometry.T)
    canonical = batch_row_reduce(field, mapped).reduced[:, :graph.k]
    images = target.vertices.lookup(canonical)

    found = images >= 0
    is_bijection = bool(found.all()) and len(np.unique(images)) == len(images) == target.vertex_count
    preserves = False
    if found.all():
        preserves = bool(np.array_equal(
            graph.block(neighbors, neighbors),
            target.block(images, images),
        ))
    return NeighborhoodMap(vertex, neighbors, images, isometry, is_bijection, preserves)


def verify_neighborhoods(graph: OrthGraph, target: Optional[OrthGraph] = None,
                         vertices: Optional[List[int]] = None) -> List[NeighborhoodMap]:
    """neighborhood_map for every vertex (or the given ones)."""
    _check_neighborhood_graph(graph)
    target = target or neighborhood_target(graph)
    chosen = range(graph.vertex_count) if vertices is None else vertices
    maps = [neighborhood_map(graph, v, target) for v in chosen]
    failures = [m.vertex for m in maps if not m.ok]
    if failures:
        logger.error(f"Neighbourhood map failed at vertices {failures[:10]} of {graph.label}")
    else:
        logger.info(f"All {len(maps)} neighbourhoods of {graph.label} map onto {target.label}")
    return maps
