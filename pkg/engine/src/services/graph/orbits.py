"""Vertex and arc orbits under groups generated by isometries (reflections by default)."""
import logging
from collections import deque
from dataclasses import dataclass
from typing import List, Optional, Sequence

import numpy as np

from config.constants import ARC_CHECK_MAX_ARCS
from services.linalg import as_codes, batch_matmul, batch_row_reduce
from services.quadform import is_isometry, reflection_generators
from utils.errors import GraphError
from .orth_graph import OrthGraph

logger = logging.getLogger(__name__)


@dataclass
class OrbitReport:
    vertex_transitive: bool
    vertex_orbit_size: int
    vertex_count: int
    arc_transitive: Optional[bool]  # None when the arc check was skipped
    arc_orbit_size: int
    arc_count: int
    generator_count: int
    arc_check_skipped: bool = False
    skip_reason: Optional[str] = None

    def to_dict(self) -> dict:
        return dict(self.__dict__)


def vertex_permutation(graph: OrthGraph, generator) -> np.ndarray:
    """Permutation of vertex indices induced by x -> g x."""
    generator = as_codes(generator)
    images = batch_matmul(graph.field, graph.vertices.bases, generator.T)
    canonical = batch_row_reduce(graph.field, images).reduced[:, :graph.k]
    permutation = graph.vertices.lookup(canonical)
    if (permutation < 0).any() or len(np.unique(permutation)) != graph.vertex_count:
        raise GraphError("non-isometry generator: vertex set not preserved", graph=graph.label)
    return permutation


def generator_permutations(graph: OrthGraph, generators: Optional[Sequence] = None) -> List[np.ndarray]:
    space = graph.space
    if generators is None:
        generators = reflection_generators(space)
    permutations = []
    for g in generators:
        if not is_isometry(space, space, g):
            raise GraphError("non-isometry generator", graph=graph.label)
        permutations.append(vertex_permutation(graph, g))
    return permutations


def vertex_orbit(permutations: List[np.ndarray], start: int, count: int) -> np.ndarray:
    """BFS closure of one vertex; returns the visited mask."""
    seen = np.zeros(count, dtype=bool)
    seen[start] = True
    frontier = np.array([start], dtype=np.intp)
    while len(frontier):
        reached = np.concatenate([perm[frontier] for perm in permutations]) if permutations else frontier[:0]
        reached = np.unique(reached[~seen[reached]])
        seen[reached] = True
        frontier = reached
    return seen


def arc_orbit_size(permutations: List[np.ndarray], start: tuple) -> int:
    seen = {start}
    queue = deque([start])
    while queue:
        u, v = queue.popleft()
        for perm in permutations:
            image = (int(perm[u]), int(perm[v]))
            if image not in seen:
                seen.add(image)
                queue.append(image)
    return len(seen)


def _first_arc(graph: OrthGraph) -> tuple:
    for u in range(graph.vertex_count):
        others = graph.neighbors(u)
        others = others[others != u]
        if len(others):
            return u, int(others[0])
    raise GraphError("graph has no arcs", graph=graph.label)


def orbit_check(graph: OrthGraph, generators: Optional[Sequence] = None,
                max_arcs: int = ARC_CHECK_MAX_ARCS) -> OrbitReport:
    """Transitivity on vertices and on ordered adjacent pairs of distinct vertices."""
    count = graph.vertex_count
    arc_count = 2 * graph.edge_count
    if count == 0:
        return OrbitReport(True, 0, 0, True, 0, 0, 0)

    permutations = generator_permutations(graph, generators)
    vertex_seen = vertex_orbit(permutations, 0, count)
    vertex_orbit_size = int(vertex_seen.sum())

    report = OrbitReport(
        vertex_transitive=vertex_orbit_size == count,
        vertex_orbit_size=vertex_orbit_size,
        vertex_count=count,
        arc_transitive=None,
        arc_orbit_size=0,
        arc_count=arc_count,
        generator_count=len(permutations),
    )
    if arc_count == 0:
        report.arc_transitive = True
    elif arc_count > max_arcs:
        report.arc_check_skipped = True
        report.skip_reason = f"{arc_count} arcs exceed the cap {max_arcs}"
        logger.warning(f"Arc transitivity of {graph.label} skipped: {report.skip_reason}")
    else:
        u, v = _first_arc(graph)
        report.arc_orbit_size = arc_orbit_size(permutations, (u, v))
        report.arc_transitive = report.arc_orbit_size == arc_count
    logger.info(f"Orbits of {graph.label}: vertices {vertex_orbit_size}/{count}, "
                f"arcs {report.arc_orbit_size}/{arc_count}")
    return report
