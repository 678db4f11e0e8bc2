"""Exact maximum clique by branch and bound with greedy-colouring bounds."""
import logging
from dataclasses import dataclass, field
from typing import List, Optional

import numpy as np

from config.constants import CLIQUE_NODE_BUDGET
from services.quadform import FormClass, classify, restrict
from services.subspace import canonicalize
from utils.errors import BudgetExceededError
from .orth_graph import OrthGraph

logger = logging.getLogger(__name__)


@dataclass
class CliqueResult:
    """Outcome of a clique search."""
    size: int
    clique: List[int] = field(default_factory=list)
    nodes: int = 0
    stopped_at_cap: bool = False


class _CliqueSearch:
    """Vertex sets are Python int bitsets; colour classes bound the clique size."""

    def __init__(self, rows: List[int], cap: Optional[int], node_budget: int):
        # loops are ignored
        self.neighbors = [mask & ~(1 << v) for v, mask in enumerate(rows)]
        self.cap = cap
        self.node_budget = node_budget
        self.nodes = 0
        self.best: List[int] = []
        self.current: List[int] = []
        self.done = False

    def _colour_sort(self, candidates: int):
        order, bounds = [], []
        uncoloured = candidates
        colour = 0
        while uncoloured:
            colour += 1
            available = uncoloured
            while available:
                v = (available & -available).bit_length() - 1
                bit = 1 << v
                available &= ~(self.neighbors[v] | bit)
                uncoloured &= ~bit
                order.append(v)
                bounds.append(colour)
        return order, bounds

    def expand(self, candidates: int):
        self.nodes += 1
        if self.nodes > self.node_budget:
            raise BudgetExceededError(
                f"clique search exceeded {self.node_budget} nodes",
                budget="graph.clique_node_budget", limit=self.node_budget, best=len(self.best),
            )
        order, bounds = self._colour_sort(candidates)
        for v, bound in zip(reversed(order), reversed(bounds)):
            if self.done or len(self.current) + bound <= len(self.best):
                return
            self.current.append(v)
            remaining = candidates & self.neighbors[v]
            if remaining:
                self.expand(remaining)
            elif len(self.current) > len(self.best):
                self.best = list(self.current)
                if self.cap is not None and len(self.best) >= self.cap:
                    self.done = True
            self.current.pop()
            candidates &= ~(1 << v)


def max_clique(graph: OrthGraph, cap: Optional[int] = None,
               node_budget: int = CLIQUE_NODE_BUDGET) -> CliqueResult:
    """Exact clique number (loops ignored); stops early once a clique of size cap is found."""
    count = graph.vertex_count
    if count == 0:
        return CliqueResult(size=0)
    search = _CliqueSearch(graph.row_masks(), cap, node_budget)
    search.expand((1 << count) - 1)
    clique = sorted(search.best)
    result = CliqueResult(size=len(clique), clique=clique, nodes=search.nodes, stopped_at_cap=search.done)
    logger.info(f"Clique number of {graph.label}: {result.size} ({result.nodes} nodes)")
    return result


def clique_number(graph: OrthGraph, cap: Optional[int] = None,
                  node_budget: int = CLIQUE_NODE_BUDGET) -> int:
    return max_clique(graph, cap=cap, node_budget=node_budget).size


def clique_sum_class(graph: OrthGraph, clique: List[int]) -> FormClass:
    """Class of the form restricted to the sum of the clique's vertices."""
    rows = np.concatenate([graph.vertices.bases[v] for v in clique])
    total = canonicalize(graph.field, rows, n=graph.n)
    return classify(restrict(graph.space, total))


def is_direct_sum_witness(graph: OrthGraph, clique: List[int]) -> bool:
    """The vertices of an l-clique of GammaSquare sum to a dot_{kl}-subspace."""
    return clique_sum_class(graph, clique) == FormClass.euclidean(graph.k * len(clique))
