"""
Dense symmetric eigensolvers.

jacobi_eigh is a cyclic Jacobi rotation scheme in round-robin order: each round
is a set of disjoint (p, q) pairs, so the rotations of a round commute and are
applied together as vectorised row and column updates. lapack_eigh delegates to
numpy.linalg.eigh. Both return eigenvalues in descending order.
"""
import logging
from dataclasses import dataclass
from typing import List, Tuple

import numpy as np

from config.constants import EIGENSOLVER, JACOBI_MAX_DIM, MAX_SWEEPS, OFF_TOLERANCE
from utils.errors import SpectralError

logger = logging.getLogger(__name__)


@dataclass
class EigenResult:
    eigenvalues: np.ndarray  # descending
    eigenvectors: np.ndarray  # columns, matching eigenvalues
    solver: str
    sweeps: int
    residual: float


def residual(matrix: np.ndarray, values: np.ndarray, vectors: np.ndarray) -> float:
    """max |A v - lambda v| over all computed pairs."""
    if len(values) == 0:
        return 0.0
    return float(np.abs(matrix @ vectors - vectors * values[None, :]).max())


def _check_symmetric(matrix) -> np.ndarray:
    matrix = np.asarray(matrix, dtype=np.float64)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise SpectralError("matrix must be square", shape=list(matrix.shape))
    if not np.array_equal(matrix, matrix.T):
        raise SpectralError("matrix is not symmetric")
    return matrix


def round_robin_pairs(n: int) -> List[Tuple[np.ndarray, np.ndarray]]:
    """Circle-method schedule: n - 1 rounds (n even) covering every pair once."""
    m = n + (n % 2)
    players = list(range(m))
    rounds = []
    for _ in range(m - 1):
        pairs = [(players[i], players[m - 1 - i]) for i in range(m // 2)]
        pairs = [(min(p, q), max(p, q)) for p, q in pairs if p < n and q < n]
        if pairs:
            p, q = zip(*pairs)
            rounds.append((np.array(p, dtype=np.intp), np.array(q, dtype=np.intp)))
        players = [players[0], players[-1]] + players[1:-1]
    return rounds


def _sorted_result(values, vectors, matrix, solver, sweeps) -> EigenResult:
    order = np.argsort(-values, kind="stable")
    values, vectors = values[order], vectors[:, order]
    return EigenResult(values, vectors, solver, sweeps, residual(matrix, values, vectors))


def jacobi_eigh(matrix, tol: float = OFF_TOLERANCE, max_sweeps: int = MAX_SWEEPS) -> EigenResult:
    """Rotation J (J_pp = J_qq = c, J_pq = s, J_qp = -s) annihilates a_pq with
    theta = (a_qq - a_pp) / (2 a_pq), t = sgn(theta) / (|theta| + sqrt(theta^2 + 1)).
    Sweeps stop once the off-diagonal Frobenius norm is at most tol * max(1, ||A||).
    """
    original = _check_symmetric(matrix)
    n = len(original)
    a = original.copy()
    v = np.eye(n)
    if n <= 1:
        return _sorted_result(np.diag(a).copy(), v, original, "jacobi", 0)

    rounds = round_robin_pairs(n)
    threshold = tol * max(1.0, float(np.linalg.norm(original)))
    sweeps = 0
    while True:
        off = float(np.linalg.norm(a - np.diag(np.diag(a))))
        if off <= threshold:
            break
        if sweeps >= max_sweeps:
            raise SpectralError("rotation solver did not converge", sweeps=sweeps, off_norm=off)
        sweeps += 1
        for p, q in rounds:
            apq = a[p, q]
            active = apq != 0.0
            if not active.any():
                continue
            p, q, apq = p[active], q[active], apq[active]
            theta = (a[q, q] - a[p, p]) / (2.0 * apq)
            t = np.where(theta >= 0, 1.0, -1.0) / (np.abs(theta) + np.hypot(theta, 1.0))
            c = 1.0 / np.hypot(t, 1.0)
            s = t * c

            rows_p, rows_q = a[p, :].copy(), a[q, :].copy()
            a[p, :] = c[:, None] * rows_p - s[:, None] * rows_q
            a[q, :] = s[:, None] * rows_p + c[:, None] * rows_q
            cols_p, cols_q = a[:, p].copy(), a[:, q].copy()
            a[:, p] = cols_p * c - cols_q * s
            a[:, q] = cols_p * s + cols_q * c
            a[p, q] = 0.0
            a[q, p] = 0.0

            vec_p, vec_q = v[:, p].copy(), v[:, q].copy()
            v[:, p] = vec_p * c - vec_q * s
            v[:, q] = vec_p * s + vec_q * c

    logger.debug(f"Rotation solver converged in {sweeps} sweeps (n={n})")
    return _sorted_result(np.diag(a).copy(), v, original, "jacobi", sweeps)


def lapack_eigh(matrix) -> EigenResult:
    original = _check_symmetric(matrix)
    values, vectors = np.linalg.eigh(original)
    return _sorted_result(values, vectors, original, "lapack", 0)


def symmetric_eigen(matrix, solver: str = EIGENSOLVER, jacobi_max_dim: int = JACOBI_MAX_DIM,
                    tol: float = OFF_TOLERANCE, max_sweeps: int = MAX_SWEEPS) -> EigenResult:
    """Dispatch on solver: jacobi, lapack, or auto (jacobi up to jacobi_max_dim)."""
    n = len(matrix)
    if solver == "auto":
        solver = "jacobi" if n <= jacobi_max_dim else "lapack"
    if solver == "jacobi":
        return jacobi_eigh(matrix, tol=tol, max_sweeps=max_sweeps)
    if solver == "lapack":
        return lapack_eigh(matrix)
    raise SpectralError(f"unknown eigensolver '{solver}'")
