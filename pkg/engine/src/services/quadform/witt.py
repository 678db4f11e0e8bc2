"""Witt decomposition: hyperbolic planes, anisotropic kernel, radical."""
import logging
from dataclasses import dataclass
from enum import Enum
from typing import List, Optional, Tuple

import numpy as np

from services.linalg import as_codes, matmul, nullspace, projective_points, rref
from utils.errors import QuadFormError
from .space import QuadraticSpace, quadratic_values

logger = logging.getLogger(__name__)


class WittType(Enum):
    SPLIT = "split"  # n = 2m, m hyperbolic planes
    NONSPLIT = "nonsplit"  # n = 2m, m - 1 planes and an anisotropic plane
    ODD = "odd"  # n = 2m + 1, m planes and <c>


@dataclass(frozen=True)
class WittDecomposition:
    hyperbolic_rank: int
    anisotropic_part: QuadraticSpace
    basis_change: np.ndarray
    radical_dim: int

    @property
    def anisotropic_dim(self) -> int:
        return self.anisotropic_part.n

    def to_dict(self) -> dict:
        return {
            "hyperbolic_rank": self.hyperbolic_rank,
            "anisotropic_dim": self.anisotropic_dim,
            "anisotropic_gram": [list(r) for r in self.anisotropic_part.gram],
            "radical_dim": self.radical_dim,
        }


def _first_isotropic(field, gram: np.ndarray) -> Optional[np.ndarray]:
    """First nonzero isotropic vector in projective enumeration order."""
    m = gram.shape[0]
    if m < 2:
        return None
    points = projective_points(field, m)
    hits = np.nonzero(quadratic_values(field, gram, points) == 0)[0]
    return points[hits[0]] if len(hits) else None


def _split_radical(space: QuadraticSpace) -> Tuple[np.ndarray, np.ndarray]:
    """Rows spanning the radical, and rows of standard vectors completing it to a basis."""
    field, n = space.field, space.n
    rad = nullspace(field, space.gram_matrix)
    if len(rad) == 0:
        return rad, np.eye(n, dtype=np.intp)
    reduced, pivots = rref(field, rad)
    complement = [j for j in range(n) if j not in pivots]
    return reduced[:len(pivots)], np.eye(n, dtype=np.intp)[complement]


def witt_decompose(space: QuadraticSpace) -> WittDecomposition:
    """Split off hyperbolic planes one isotropic vector at a time.

    basis_change has columns (v_1, w_1, ..., v_r, w_r, anisotropic basis, radical
    basis), so basis_change^T G basis_change is r hyperbolic blocks, then the
    anisotropic Gram, then zeros.
    """
    field = space.field
    radical_rows, current = _split_radical(space)
    pairs: List[np.ndarray] = []

    while True:
        gram = matmul(field, matmul(field, current, space.gram_matrix), current.T)
        v = _first_isotropic(field, gram)
        if v is None:
            break
        gv = matmul(field, v[None, :], gram)[0]
        j = int(np.argmax(gv != 0))
        w = np.zeros_like(v)
        w[j] = field.inv_table[gv[j]]  # B(v, w) = 1
        qw = int(quadratic_values(field, gram, w[None, :])[0])
        half_qw = field.mul_table[qw, field.inv_table[2 % field.p]]
        w = field.sub_table[w, field.mul_table[half_qw, v]]  # now Q(w) = 0
        pair = np.stack([v, w])
        pairs.append(matmul(field, pair, current))
        # Orthogonal complement of the plane inside the current subspace
        perp = nullspace(field, matmul(field, pair, gram))
        current = matmul(field, perp, current) if len(perp) else np.zeros((0, space.n), dtype=np.intp)

    aniso_gram = matmul(field, matmul(field, current, space.gram_matrix), current.T)
    rows = pairs + [current, radical_rows]
    basis_rows = np.concatenate([as_codes(r).reshape(-1, space.n) for r in rows])
    decomposition = WittDecomposition(
        hyperbolic_rank=len(pairs),
        anisotropic_part=QuadraticSpace.from_gram(field, aniso_gram.reshape(len(current), len(current))),
        basis_change=basis_rows.T.copy(),
        radical_dim=len(radical_rows),
    )
    logger.debug(f"Witt decomposition: {decomposition.to_dict()}")
    return decomposition


def witt_type(space: QuadraticSpace) -> Tuple[WittType, Optional[bool]]:
    """Witt type of a nondegenerate form; for ODD also whether <c> is a square class."""
    decomposition = witt_decompose(space)
    if decomposition.radical_dim:
        raise QuadFormError("degenerate input", radical_dim=decomposition.radical_dim)
    if space.n % 2 == 0:
        split = decomposition.hyperbolic_rank == space.n // 2
        return (WittType.SPLIT if split else WittType.NONSPLIT), None
    c = decomposition.anisotropic_part.gram[0][0]
    return WittType.ODD, bool(space.field.square_table[c])
