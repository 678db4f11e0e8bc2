"""Spectra of orthogonality graphs, the sqrt(d_bar - a_bar) eigenvalue bound and interlacing."""
import logging
import math
from dataclasses import dataclass, field
from typing import List, Optional

import numpy as np

from config.constants import (
    EIGEN_MAX_VERTICES,
    EIGEN_TOLERANCE,
    EIGENSOLVER,
    JACOBI_MAX_DIM,
    REPORT_DIGITS,
)
from services.graph import OrthGraph
from services.subspace import gaussian_binomial
from utils.errors import BudgetExceededError, GraphError
from .eigensolver import symmetric_eigen

logger = logging.getLogger(__name__)


@dataclass
class SpectralReport:
    graph: str
    loop_policy: str
    vertex_count: int
    eigenvalues: np.ndarray  # descending, full precision
    d: float  # top eigenvalue
    second_largest_abs: float
    d_bar: int
    a_bar: int
    bound: float  # sqrt(d_bar - a_bar)
    solver: str
    sweeps: int
    residual: float
    trace: int
    eigen_sum: float
    degree_sum: int  # trace(A^2)
    eigen_square_sum: float
    tolerance: float = EIGEN_TOLERANCE
    digits: int = REPORT_DIGITS
    notes: List[str] = field(default_factory=list)

    @property
    def bound_holds(self) -> bool:
        return self.second_largest_abs <= self.bound + self.tolerance

    @property
    def trace_ok(self) -> bool:
        return abs(self.eigen_sum - self.trace) <= self.tolerance * max(1, self.vertex_count)

    @property
    def square_sum_ok(self) -> bool:
        return abs(self.eigen_square_sum - self.degree_sum) <= self.tolerance * max(1, self.vertex_count)

    def rounded(self, value: float) -> float:
        # +0.0 folds negative zero
        return round(float(value), self.digits) + 0.0

    def to_dict(self, include_eigenvalues: bool = True) -> dict:
        data = {
            "graph": self.graph,
            "loop_policy": self.loop_policy,
            "vertex_count": self.vertex_count,
            "d": self.rounded(self.d),
            "second_largest_abs": self.rounded(self.second_largest_abs),
            "d_bar": self.d_bar,
            "a_bar": self.a_bar,
            "bound": self.rounded(self.bound),
            "bound_holds": self.bound_holds,
            "solver": self.solver,
            "residual_ok": self.residual <= self.tolerance,
            "trace": self.trace,
            "trace_ok": self.trace_ok,
            "degree_sum": self.degree_sum,
            "square_sum_ok": self.square_sum_ok,
            "notes": list(self.notes),
        }
        if include_eigenvalues:
            data["eigenvalues"] = [self.rounded(v) for v in self.eigenvalues]
        return data


def second_largest_abs(values: np.ndarray) -> float:
    """max(|lambda_2|, |lambda_min|) for descending values."""
    if len(values) < 2:
        return 0.0
    return float(max(abs(values[1]), abs(values[-1])))


def eigenvalues(graph: OrthGraph, cap: int = EIGEN_MAX_VERTICES, solver: str = EIGENSOLVER,
                jacobi_max_dim: int = JACOBI_MAX_DIM) -> SpectralReport:
    """Full spectrum of the adjacency matrix with solver checks and the sqrt(d_bar - a_bar) bound."""
    count = graph.vertex_count
    if count > cap:
        raise BudgetExceededError(
            f"{graph.label} has {count} vertices, above the eigensolver cap {cap}",
            budget="spectral.max_vertices", limit=cap, vertices=count,
        )
    adjacency = graph.adjacency_int()
    result = symmetric_eigen(adjacency.astype(np.float64), solver=solver, jacobi_max_dim=jacobi_max_dim)
    values = result.eigenvalues
    n, k, q = graph.n, graph.k, graph.q
    d_bar = gaussian_binomial(n - k, k, q)
    a_bar = gaussian_binomial(n - 2 * k, k, q)
    report = SpectralReport(
        graph=graph.label,
        loop_policy=graph.loop_policy.value,
        vertex_count=count,
        eigenvalues=values,
        d=float(values[0]) if count else 0.0,
        second_largest_abs=second_largest_abs(values),
        d_bar=d_bar,
        a_bar=a_bar,
        bound=math.sqrt(max(d_bar - a_bar, 0)),
        solver=result.solver,
        sweeps=result.sweeps,
        residual=result.residual,
        trace=int(np.trace(adjacency)),
        eigen_sum=float(values.sum()),
        degree_sum=int(adjacency.sum()),
        eigen_square_sum=float((values ** 2).sum()),
    )
    if not (report.trace_ok and report.square_sum_ok):
        logger.error(f"Solver validation failed on {graph.label}: trace or square-sum mismatch")
    logger.info(f"Spectrum of {graph.label} via {result.solver}: d={report.d:.6f}, "
                f"second largest |lambda|={report.second_largest_abs:.6f}, bound={report.bound:.6f}")
    return report


@dataclass
class InterlacingReport:
    holds: bool
    sub_count: int
    full_count: int
    violations: List[int]
    max_violation: float

    def to_dict(self) -> dict:
        return dict(self.__dict__)


def interlacing_inequalities(full: np.ndarray, sub: np.ndarray,
                             tolerance: float = EIGEN_TOLERANCE) -> InterlacingReport:
    """full_i >= sub_i >= full_{N - m + i} for descending spectra (i = 1..m)."""
    big, m = len(full), len(sub)
    if m > big:
        raise GraphError("vertex-set mismatch: subgraph larger than graph")
    violations, worst = [], 0.0
    for i in range(m):
        upper = sub[i] - full[i]
        lower = full[big - m + i] - sub[i]
        excess = max(upper, lower)
        if excess > tolerance:
            violations.append(i + 1)
        worst = max(worst, excess)
    return InterlacingReport(not violations, m, big, violations, max(worst, 0.0))


def interlacing_check(sub_graph: OrthGraph, full_graph: OrthGraph,
                      sub_report: Optional[SpectralReport] = None,
                      full_report: Optional[SpectralReport] = None,
                      tolerance: float = EIGEN_TOLERANCE) -> InterlacingReport:
    """Check that sub_graph is an induced subgraph of full_graph, then interlace spectra."""
    if sub_graph.n != full_graph.n or sub_graph.k != full_graph.k or sub_graph.field != full_graph.field:
        raise GraphError("vertex-set mismatch: different parameters")
    positions = full_graph.vertices.lookup(sub_graph.vertices.bases)
    if (positions < 0).any():
        raise GraphError("vertex-set mismatch: vertices missing from the full graph")
    if not np.array_equal(full_graph.block(positions, positions), sub_graph.adjacency):
        raise GraphError("vertex-set mismatch: not an induced subgraph")
    sub_report = sub_report or eigenvalues(sub_graph)
    full_report = full_report or eigenvalues(full_graph)
    report = interlacing_inequalities(full_report.eigenvalues, sub_report.eigenvalues, tolerance)
    logger.info(f"Interlacing {sub_graph.label} in {full_graph.label}: "
                f"{'holds' if report.holds else 'FAILS at ' + str(report.violations[:5])}")
    return report
