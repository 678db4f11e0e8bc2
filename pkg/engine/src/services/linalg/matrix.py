"""
Matrix kernels over F_q on arrays of element codes.

Every routine indexes the FieldSpec arithmetic tables with numpy fancy indexing,
so a single code path serves prime and extension fields. The batched routines take
stacks of matrices with shape (batch, rows, cols) and are what graph construction,
orbit computation and vertex filtering run on.
"""
from typing import List, NamedTuple, Tuple

import numpy as np

from services.field import FieldSpec
from utils.errors import FieldArithmeticError


class RowReduction(NamedTuple):
    reduced: np.ndarray  # (batch, m, n) reduced row echelon forms
    ranks: np.ndarray  # (batch,)
    dets: np.ndarray  # (batch,) determinants, meaningful for square input


def as_codes(matrix) -> np.ndarray:
    return np.asarray(matrix, dtype=np.intp)


def identity(n: int) -> np.ndarray:
    return np.eye(n, dtype=np.intp)


def add(field: FieldSpec, a, b) -> np.ndarray:
    return field.add_table[as_codes(a), as_codes(b)]


def sub(field: FieldSpec, a, b) -> np.ndarray:
    return field.sub_table[as_codes(a), as_codes(b)]


def batch_matmul(field: FieldSpec, a, b) -> np.ndarray:
    """Matrix product over F_q with numpy broadcasting on leading axes."""
    a, b = as_codes(a), as_codes(b)
    products = field.mul_table[a[..., :, :, None], b[..., None, :, :]]
    inner = products.shape[-2]
    if inner == 0:
        return np.zeros(products.shape[:-2] + products.shape[-1:], dtype=np.intp)
    acc = products[..., 0, :]
    for t in range(1, inner):
        acc = field.add_table[acc, products[..., t, :]]
    return acc


def matmul(field: FieldSpec, a, b) -> np.ndarray:
    a, b = as_codes(a), as_codes(b)
    vector = b.ndim == 1
    result = batch_matmul(field, a, b[:, None] if vector else b)
    return result[:, 0] if vector else result


def dot(field: FieldSpec, u, v) -> int:
    """Standard dot product sum(u_i v_i)."""
    products = field.mul_table[as_codes(u), as_codes(v)]
    acc = 0
    for value in products:
        acc = int(field.add_table[acc, value])
    return acc


def batch_row_reduce(field: FieldSpec, mats, track_det: bool = False) -> RowReduction:
    """Gauss-Jordan elimination of a stack of matrices.

    Pivot rows are normalised to 1 and cleared above and below, zero rows sink to
    the bottom, so each output is the unique RREF of its row space.
    """
    reduced = np.array(mats, dtype=np.intp, copy=True)
    batch, m, n = reduced.shape
    ranks = np.zeros(batch, dtype=np.intp)
    dets = np.ones(batch, dtype=np.intp)
    if batch == 0 or m == 0:
        return RowReduction(reduced, ranks, dets)

    row_ids = np.arange(m)
    for col in range(n):
        candidates = (reduced[:, :, col] != 0) & (row_ids[None, :] >= ranks[:, None])
        has_pivot = candidates.any(axis=1)
        if not has_pivot.any():
            continue
        b = np.nonzero(has_pivot)[0]
        target = ranks[b]
        source = np.argmax(candidates[b], axis=1)

        swapped = source != target
        if swapped.any():
            bs, ts, ss = b[swapped], target[swapped], source[swapped]
            upper = reduced[bs, ts].copy()
            reduced[bs, ts] = reduced[bs, ss]
            reduced[bs, ss] = upper
            if track_det:
                dets[bs] = field.neg_table[dets[bs]]

        pivots = reduced[b, target, col]
        if track_det:
            dets[b] = field.mul_table[dets[b], pivots]
        reduced[b, target] = field.mul_table[field.inv_table[pivots][:, None], reduced[b, target]]

        factors = reduced[b, :, col].copy()
        factors[np.arange(len(b)), target] = 0
        pivot_rows = reduced[b, target]
        updates = field.mul_table[factors[:, :, None], pivot_rows[:, None, :]]
        reduced[b] = field.sub_table[reduced[b], updates]
        ranks[b] += 1

    if track_det:
        dets[ranks < n] = 0
    return RowReduction(reduced, ranks, dets)


def rref(field: FieldSpec, matrix) -> Tuple[np.ndarray, List[int]]:
    """Reduced row echelon form and pivot columns of one matrix."""
    matrix = as_codes(matrix)
    if matrix.ndim != 2:
        raise ValueError("rref expects a 2-D matrix")
    result = batch_row_reduce(field, matrix[None])
    reduced, rank = result.reduced[0], int(result.ranks[0])
    pivots = [int(np.argmax(reduced[i] != 0)) for i in range(rank)]
    return reduced, pivots


def rank(field: FieldSpec, matrix) -> int:
    matrix = as_codes(matrix)
    if matrix.size == 0:
        return 0
    return int(batch_row_reduce(field, matrix[None]).ranks[0])


def batch_ranks(field: FieldSpec, mats) -> np.ndarray:
    return batch_row_reduce(field, mats).ranks


def det(field: FieldSpec, matrix) -> int:
    matrix = as_codes(matrix)
    if matrix.shape[0] != matrix.shape[1]:
        raise ValueError("determinant of a non-square matrix")
    if matrix.shape[0] == 0:
        return 1
    return int(batch_row_reduce(field, matrix[None], track_det=True).dets[0])


def batch_dets(field: FieldSpec, mats) -> np.ndarray:
    mats = as_codes(mats)
    if mats.shape[-1] == 0:
        return np.ones(mats.shape[0], dtype=np.intp)
    return batch_row_reduce(field, mats, track_det=True).dets


def nullspace(field: FieldSpec, matrix) -> np.ndarray:
    """Basis (as rows) of {x : matrix @ x = 0}."""
    matrix = as_codes(matrix)
    n = matrix.shape[1]
    if matrix.shape[0] == 0:
        return identity(n)
    reduced, pivots = rref(field, matrix)
    free = [c for c in range(n) if c not in pivots]
    basis = np.zeros((len(free), n), dtype=np.intp)
    for row, f in enumerate(free):
        basis[row, f] = 1
        for i, pc in enumerate(pivots):
            basis[row, pc] = field.neg_table[reduced[i, f]]
    return basis


def inverse(field: FieldSpec, matrix) -> np.ndarray:
    matrix = as_codes(matrix)
    n = matrix.shape[0]
    augmented = np.concatenate([matrix, identity(n)], axis=1)
    reduced, pivots = rref(field, augmented)
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        raise FieldArithmeticError("division by zero", reason="singular matrix")
    return reduced[:, n:].copy()


def is_symmetric(matrix) -> bool:
    matrix = as_codes(matrix)
    return matrix.shape[0] == matrix.shape[1] and bool(np.array_equal(matrix, matrix.T))


def all_vectors(field: FieldSpec, n: int) -> np.ndarray:
    """All q^n vectors in lexicographic code order."""
    if n == 0:
        return np.zeros((1, 0), dtype=np.intp)
    # C order on the index grid puts the last coordinate fastest
    return np.indices((field.q,) * n, dtype=np.intp).reshape(n, -1).T.copy()


def projective_points(field: FieldSpec, n: int) -> np.ndarray:
    """One representative per line of F_q^n: first nonzero coordinate equal to 1."""
    blocks = []
    for lead in range(n):
        tail = all_vectors(field, n - lead - 1)
        block = np.zeros((len(tail), n), dtype=np.intp)
        block[:, lead] = 1
        block[:, lead + 1:] = tail
        blocks.append(block)
    return np.concatenate(blocks) if blocks else np.zeros((0, 0), dtype=np.intp)
