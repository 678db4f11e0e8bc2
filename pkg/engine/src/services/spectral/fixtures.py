"""Graphs with closed-form spectra, used to validate the eigensolvers."""
from typing import Callable, Dict, Tuple

import networkx as nx
import numpy as np


def complete_spectrum(m: int) -> np.ndarray:
    return np.array([m - 1.0] + [-1.0] * (m - 1))


def cycle_spectrum(m: int) -> np.ndarray:
    return np.sort(2.0 * np.cos(2.0 * np.pi * np.arange(m) / m))[::-1]


def star_spectrum(m: int) -> np.ndarray:
    """Star on m vertices: one centre, m - 1 leaves."""
    root = np.sqrt(m - 1.0)
    return np.array([root] + [0.0] * (m - 2) + [-root])


FIXTURES: Dict[str, Tuple[Callable[[int], nx.Graph], Callable[[int], np.ndarray], int]] = {
    # name: (graph builder, closed-form spectrum, smallest m)
    "complete": (nx.complete_graph, complete_spectrum, 1),
    "cycle": (nx.cycle_graph, cycle_spectrum, 3),
    "star": (lambda m: nx.star_graph(m - 1), star_spectrum, 2),
}


def fixture_adjacency(name: str, m: int) -> np.ndarray:
    builder, _, smallest = FIXTURES[name]
    if m < smallest:
        raise ValueError(f"{name} fixture needs m >= {smallest}")
    graph = builder(m)
    return nx.to_numpy_array(graph, nodelist=sorted(graph.nodes()), dtype=np.float64)


def fixture_spectrum(name: str, m: int) -> np.ndarray:
    return FIXTURES[name][1](m)
