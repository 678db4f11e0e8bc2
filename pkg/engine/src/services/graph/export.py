"""Edge list, vertex table, DOT and JSON exports."""
import json
import logging
from pathlib import Path
from typing import Any, Dict, Union

import networkx as nx
import numpy as np

from .orth_graph import OrthGraph

logger = logging.getLogger(__name__)


def format_basis(graph: OrthGraph, index: int) -> str:
    """RREF basis as "r1;r2" with comma-separated element codes."""
    return ";".join(",".join(str(int(c)) for c in row) for row in graph.vertices.bases[index])


def edge_pairs(graph: OrthGraph):
    """(u, v) with u <= v in increasing order; loops appear as (u, u)."""
    pairs = []
    for u in range(graph.vertex_count):
        pairs += [(u, int(v)) for v in graph.neighbors(u) if v >= u]
    return pairs


def edgelist_text(graph: OrthGraph) -> str:
    return "".join(f"{u} {v}\n" for u, v in edge_pairs(graph))


def vertex_table_text(graph: OrthGraph) -> str:
    return "".join(f"{i}\t{format_basis(graph, i)}\n" for i in range(graph.vertex_count))


def vertex_table_path(path: Union[str, Path]) -> Path:
    path = Path(path)
    return path.with_name(path.name + ".vertices.tsv")


def write_edgelist(graph: OrthGraph, path: Union[str, Path]) -> Path:
    """Write "u v" lines and the sidecar vertex table; returns the table path."""
    path = Path(path)
    path.write_text(edgelist_text(graph))
    table = vertex_table_path(path)
    table.write_text(vertex_table_text(graph))
    logger.info(f"Wrote {graph.edge_count + graph.loop_count} edges to {path} and vertex table {table}")
    return table


def to_networkx(graph: OrthGraph) -> nx.Graph:
    g = nx.Graph(name=graph.label)
    for i in range(graph.vertex_count):
        g.add_node(i, basis=format_basis(graph, i))
    g.add_edges_from(edge_pairs(graph))
    return g


def dot_text(graph: OrthGraph) -> str:
    """Undirected DOT; nodes carry their RREF basis as label."""
    lines = [f'graph "{graph.label}" {{']
    lines += [f'  {i} [label="{format_basis(graph, i)}"];' for i in range(graph.vertex_count)]
    lines += [f"  {u} -- {v};" for u, v in edge_pairs(graph)]
    return "\n".join(lines) + "\n}\n"


def json_text(payload: Dict[str, Any]) -> str:
    """Deterministic JSON for reports."""
    return json.dumps(payload, indent=2, sort_keys=True, default=_jsonable) + "\n"


def _jsonable(value):
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, np.floating):
        return float(value)
    if isinstance(value, np.bool_):
        return bool(value)
    if isinstance(value, np.ndarray):
        return value.tolist()
    if hasattr(value, "to_dict"):
        return value.to_dict()
    if hasattr(value, "value"):
        return value.value
    raise TypeError(f"Object of type {type(value).__name__} is not JSON serializable")
