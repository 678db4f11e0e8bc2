"""Graph statistics and ratios against the leading-order vertex and degree counts."""
import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, Optional, Tuple

from services.field import FieldSpec
from services.quadform import standard_space
from .orth_graph import GraphKind, OrthGraph, dotk_subspaces, orthogonality_matrix

logger = logging.getLogger(__name__)


@dataclass
class GraphStats:
    graph: str
    kind: str
    n: int
    k: int
    q: int
    vertex_count: int
    edge_count: int
    loop_count: int
    degree_histogram: Dict[int, int]
    regular: bool
    degree: Optional[int]
    loop_policy: str
    spacelike_line_graph: bool
    clique_number: Optional[int] = None
    ratios: Dict[str, Optional[float]] = field(default_factory=dict)

    def to_dict(self) -> dict:
        data = dict(self.__dict__)
        data["degree_histogram"] = {str(d): c for d, c in sorted(self.degree_histogram.items())}
        return data


def leading_counts(kind: GraphKind, n: int, k: int, q: int) -> Dict[str, Optional[float]]:
    """q^{k(n-k)} and q^{k(n-2k)}, halved for GammaSquare; no degree term when k >= n/2."""
    factor = 0.5 if kind is GraphKind.GAMMA_SQUARE else 1.0
    vertices = factor * q ** (k * (n - k))
    degree = factor * q ** (k * (n - 2 * k)) if 2 * k < n else None
    return {"vertices": vertices, "degree": degree}


def asymptotic_ratios(graph: OrthGraph) -> Dict[str, Optional[float]]:
    """vertexCount and mean degree divided by their leading-order counts."""
    leading = leading_counts(graph.kind, graph.n, graph.k, graph.q)
    ratios: Dict[str, Optional[float]] = {
        "vertex_ratio": graph.vertex_count / leading["vertices"],
        "degree_ratio": None,
    }
    if leading["degree"] and graph.vertex_count:
        ratios["degree_ratio"] = float(graph.degrees.mean()) / leading["degree"]
    return ratios


def counted_vertices_and_degree(n: int, k: int, field: FieldSpec, cache=None) -> Tuple[int, Optional[int]]:
    """|V(GammaSquare(n,k,q))| and the degree of its first vertex, without the adjacency matrix."""
    vertices = dotk_subspaces(n, k, field, cache=cache)
    if 2 * k >= n:
        return len(vertices), None
    if len(vertices) == 0:
        return 0, 0
    gram = standard_space("ldot", n, field).gram_matrix
    row = orthogonality_matrix(field, gram, vertices.bases[:1], vertices.bases, workers=1)
    return len(vertices), int(row.sum())


def stats(graph: OrthGraph, clique_number: Optional[int] = None) -> GraphStats:
    degrees = graph.degrees
    histogram = dict(Counter(int(d) for d in degrees))
    regular = graph.is_regular()
    result = GraphStats(
        graph=graph.label,
        kind=graph.kind.value,
        n=graph.n,
        k=graph.k,
        q=graph.q,
        vertex_count=graph.vertex_count,
        edge_count=graph.edge_count,
        loop_count=graph.loop_count,
        degree_histogram=histogram,
        regular=regular,
        degree=int(degrees[0]) if regular and len(degrees) else None,
        loop_policy=graph.loop_policy.value,
        spacelike_line_graph=graph.kind is GraphKind.GAMMA_SQUARE and graph.k == 1,
        clique_number=clique_number,
        ratios=asymptotic_ratios(graph),
    )
    logger.debug(f"Stats for {graph.label}: {result.to_dict()}")
    return result
