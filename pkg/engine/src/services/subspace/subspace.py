"""
Subspaces of F_q^n in canonical RREF form, and the vertex-set container.
"""
import logging
from dataclasses import dataclass
from typing import Dict, Iterator, Optional, Sequence, Tuple, Union

import numpy as np

from services.field import FieldSpec
from services.linalg import as_codes, batch_row_reduce, nullspace, rank, matmul
from utils.errors import SubspaceError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Subspace:
    """A subspace given by its RREF basis; equal spans compare equal."""
    field: FieldSpec
    n: int
    basis: Tuple[Tuple[int, ...], ...]

    @property
    def k(self) -> int:
        return len(self.basis)

    @property
    def matrix(self) -> np.ndarray:
        if not self.basis:
            return np.zeros((0, self.n), dtype=np.intp)
        return np.array(self.basis, dtype=np.intp)

    @property
    def pivots(self) -> Tuple[int, ...]:
        return tuple(next(c for c, x in enumerate(row) if x) for row in self.basis)

    def contains_vector(self, v) -> bool:
        return contains_vector(self, v)

    def to_dict(self) -> dict:
        return {"n": self.n, "k": self.k, "basis": [list(row) for row in self.basis]}

    def __repr__(self) -> str:
        rows = ",".join("(" + ",".join(self.field.format_code(c) for c in row) + ")"
                        for row in self.basis)
        return f"span({rows})"


def _as_stack(bases, k: int, n: int) -> np.ndarray:
    """(N, k, n) array from a stack of bases; a lone empty basis when k = 0."""
    bases = as_codes(bases)
    if bases.ndim == 3:
        return bases.reshape(len(bases), k, n)
    return bases.reshape(-1, k, n) if k * n else bases.reshape(1, k, n)


def _from_reduced(field: FieldSpec, reduced: np.ndarray, k: int) -> Subspace:
    return Subspace(field, reduced.shape[1], tuple(tuple(int(x) for x in row) for row in reduced[:k]))


def canonicalize(field: FieldSpec, rows, n: Optional[int] = None,
                 allow_zero: bool = False) -> Subspace:
    """RREF of the row span with zero rows dropped."""
    matrix = as_codes(rows)
    if matrix.ndim == 1:
        matrix = matrix[None, :] if matrix.size else np.zeros((0, n or 0), dtype=np.intp)
    if n is not None and matrix.shape[1] != n:
        raise SubspaceError("ambient mismatch", expected=n, got=int(matrix.shape[1]))
    n = matrix.shape[1]
    if matrix.shape[0] == 0:
        if allow_zero:
            return zero_subspace(field, n)
        raise SubspaceError("zero matrix")
    result = batch_row_reduce(field, matrix[None])
    k = int(result.ranks[0])
    if k == 0 and not allow_zero:
        raise SubspaceError("zero matrix")
    return _from_reduced(field, result.reduced[0], k)


def zero_subspace(field: FieldSpec, n: int) -> Subspace:
    return Subspace(field, n, ())


def full_space(field: FieldSpec, n: int) -> Subspace:
    return Subspace(field, n, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))


def _check_ambient(a: Subspace, b: Subspace):
    if a.n != b.n or a.field != b.field:
        raise SubspaceError("ambient mismatch", left=a.n, right=b.n)


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    _check_ambient(a, b)
    return canonicalize(a.field, np.concatenate([a.matrix, b.matrix]), n=a.n, allow_zero=True)


def intersection(a: Subspace, b: Subspace) -> Subspace:
    """Solve x A = y B via the null space of [A; B]^T and map back through A."""
    _check_ambient(a, b)
    if a.k == 0 or b.k == 0:
        return zero_subspace(a.field, a.n)
    stacked = np.concatenate([a.matrix, b.matrix])
    relations = nullspace(a.field, stacked.T)
    if len(relations) == 0:
        return zero_subspace(a.field, a.n)
    vectors = matmul(a.field, relations[:, :a.k], a.matrix)
    return canonicalize(a.field, vectors, n=a.n, allow_zero=True)


def is_subset(a: Subspace, b: Subspace) -> bool:
    """True iff a is contained in b."""
    _check_ambient(a, b)
    if a.k == 0:
        return True
    return rank(a.field, np.concatenate([b.matrix, a.matrix])) == b.k


def contains_vector(space: Subspace, v) -> bool:
    v = as_codes(v)
    if v.shape != (space.n,):
        raise SubspaceError("ambient mismatch", expected=space.n, got=list(v.shape))
    if not v.any():
        return True
    if space.k == 0:
        return False
    return rank(space.field, np.concatenate([space.matrix, v[None, :]])) == space.k


class SubspaceSet:
    """Ordered, duplicate-free collection of k-subspaces backed by a (N, k, n) code array."""

    def __init__(self, field: FieldSpec, n: int, k: int, bases: np.ndarray):
        self.field = field
        self.n = n
        self.k = k
        self.bases = np.ascontiguousarray(_as_stack(bases, k, n))
        self.bases.flags.writeable = False
        self._index: Optional[Dict[bytes, int]] = None

    def __len__(self) -> int:
        return len(self.bases)

    def __getitem__(self, i: int) -> Subspace:
        return _from_reduced(self.field, self.bases[i], self.k)

    def __iter__(self) -> Iterator[Subspace]:
        for i in range(len(self)):
            yield self[i]

    def _keys(self, bases: np.ndarray):
        packed = np.ascontiguousarray(bases.reshape(len(bases), self.k * self.n).astype(np.uint8))
        return [row.tobytes() for row in packed]

    @property
    def index(self) -> Dict[bytes, int]:
        if self._index is None:
            self._index = {key: i for i, key in enumerate(self._keys(self.bases))}
            if len(self._index) != len(self):
                raise SubspaceError("duplicate subspaces in set", count=len(self))
        return self._index

    def lookup(self, bases: np.ndarray) -> np.ndarray:
        """Indices of canonical bases, -1 where absent."""
        bases = _as_stack(bases, self.k, self.n)
        index = self.index
        return np.array([index.get(key, -1) for key in self._keys(bases)], dtype=np.intp)

    def index_of(self, item: Union[Subspace, Sequence]) -> int:
        basis = item.matrix if isinstance(item, Subspace) else as_codes(item)
        found = int(self.lookup(basis)[0])
        if found < 0:
            raise KeyError(repr(item))
        return found

    def __contains__(self, item) -> bool:
        try:
            self.index_of(item)
            return True
        except (KeyError, ValueError):
            return False

    def select(self, indices) -> "SubspaceSet":
        """Subset in the given index order."""
        indices = np.asarray(indices, dtype=np.intp)
        return SubspaceSet(self.field, self.n, self.k, self.bases[indices])

    def __repr__(self) -> str:
        return f"SubspaceSet(n={self.n}, k={self.k}, q={self.field.q}, size={len(self)})"
