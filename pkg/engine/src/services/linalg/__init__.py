"""Linear algebra over F_q."""
from .matrix import (
    RowReduction,
    as_codes,
    identity,
    add,
    sub,
    dot,
    matmul,
    batch_matmul,
    batch_row_reduce,
    batch_ranks,
    batch_dets,
    rref,
    rank,
    det,
    nullspace,
    inverse,
    is_symmetric,
    all_vectors,
    projective_points,
)

__all__ = [
    'RowReduction',
    'as_codes',
    'identity',
    'add',
    'sub',
    'dot',
    'matmul',
    'batch_matmul',
    'batch_row_reduce',
    'batch_ranks',
    'batch_dets',
    'rref',
    'rank',
    'det',
    'nullspace',
    'inverse',
    'is_symmetric',
    'all_vectors',
    'projective_points',
]
