"""Spectral-gap edge guarantee: sqrt(|X||Y|) > n_* forces an edge between X and Y."""
import logging
import math
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

import numpy as np

from config.constants import DEFAULT_SEED, EIGEN_TOLERANCE, GAP_TRIALS
from services.graph import OrthGraph
from utils.errors import SpectralError
from .analysis import SpectralReport

logger = logging.getLogger(__name__)


@dataclass
class EdgeGuarantee:
    guaranteed: bool
    witness: Optional[Tuple[int, int]]
    size_x: int
    size_y: int

    @property
    def violated(self) -> bool:
        return self.guaranteed and self.witness is None


def gap_threshold(adjacency, second_abs: float) -> float:
    """n_* = |V| * secondLargestAbs / d for a regular adjacency matrix of degree d > 0."""
    degrees = np.asarray(adjacency).sum(axis=1)
    if len(degrees) == 0 or not np.all(degrees == degrees[0]) or degrees[0] == 0:
        raise SpectralError("irregular or degree zero")
    return len(degrees) * second_abs / float(degrees[0])


def spectral_gap_threshold(graph: OrthGraph, report: SpectralReport) -> float:
    return gap_threshold(graph.adjacency_int(), report.second_largest_abs)


def find_crossing_edge(graph: OrthGraph, xs: Sequence[int], ys: Sequence[int]) -> Optional[Tuple[int, int]]:
    """First (x, y) with x in X, y in Y, x != y adjacent, by exhaustive search."""
    xs, ys = np.asarray(xs, dtype=np.intp), np.asarray(ys, dtype=np.intp)
    if len(xs) == 0 or len(ys) == 0:
        return None
    block = graph.block(xs, ys) & (xs[:, None] != ys[None, :])
    hits = np.argwhere(block)
    if len(hits) == 0:
        return None
    i, j = hits[0]
    return int(xs[i]), int(ys[j])


def edge_guarantee(graph: OrthGraph, xs: Sequence[int], ys: Sequence[int], n_star: float,
                   tolerance: float = EIGEN_TOLERANCE) -> EdgeGuarantee:
    # n_* comes from floating-point eigenvalues; pairs within tolerance of it are not eligible
    guaranteed = math.sqrt(len(xs) * len(ys)) > n_star + tolerance
    result = EdgeGuarantee(guaranteed, find_crossing_edge(graph, xs, ys), len(xs), len(ys))
    if result.violated:
        logger.error(f"No edge between sets of sizes {len(xs)} and {len(ys)} above n_*={n_star:.4f}")
    return result


@dataclass
class GapTrialReport:
    n_star: float
    trials: int
    eligible: int
    failures: int
    seed: int
    notes: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def to_dict(self) -> dict:
        return {
            "n_star": round(self.n_star, 8),
            "trials": self.trials,
            "eligible": self.eligible,
            "failures": self.failures,
            "seed": self.seed,
            "passed": self.passed,
            "notes": list(self.notes),
        }


def gap_trials(graph: OrthGraph, n_star: float, trials: int = GAP_TRIALS,
               seed: int = DEFAULT_SEED, tolerance: float = EIGEN_TOLERANCE) -> GapTrialReport:
    """Random pairs (X, Y) sized so that sqrt(|X||Y|) > n_*, each checked for a crossing edge."""
    count = graph.vertex_count
    rng = np.random.default_rng(seed)
    report = GapTrialReport(n_star, trials, 0, 0, seed)
    threshold = n_star + tolerance
    square = threshold * threshold
    min_x = math.floor(square / count) + 1 if count else 1
    if count == 0 or min_x > count or count <= threshold:
        report.notes.append(f"threshold n_*={n_star:.4f} is not below |V|={count}; no eligible pairs")
        logger.warning(f"Gap trials on {graph.label}: {report.notes[-1]}")
        return report
    for _ in range(trials):
        size_x = int(rng.integers(min_x, count + 1))
        min_y = min(count, math.floor(square / size_x) + 1)
        size_y = int(rng.integers(min_y, count + 1))
        xs = np.sort(rng.choice(count, size=size_x, replace=False))
        ys = np.sort(rng.choice(count, size=size_y, replace=False))
        outcome = edge_guarantee(graph, xs, ys, n_star, tolerance)
        if not outcome.guaranteed:
            continue
        report.eligible += 1
        if outcome.witness is None:
            report.failures += 1
    logger.info(f"Gap trials on {graph.label}: {report.eligible} eligible, {report.failures} failures")
    return report
