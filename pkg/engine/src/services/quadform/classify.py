"""
Diagonalization and classification of quadratic forms over F_q, q odd.

A nondegenerate form is determined up to equivalence by its dimension and the
square class of its discriminant: Euclidean (equivalent to dot_n) when the
discriminant is a square, Lorentzian (equivalent to ldot_n) otherwise.
"""
import logging
from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple, Optional, Tuple

import numpy as np

from services.field import FieldSpec
from services.linalg import as_codes, batch_dets, identity
from services.subspace import Subspace
from .space import QuadraticSpace, restrict, restricted_gram

logger = logging.getLogger(__name__)

_MASK_CHUNK = 50_000


class FormKind(Enum):
    EUCLIDEAN = "Euclidean"
    LORENTZIAN = "Lorentzian"
    DEGENERATE = "Degenerate"


@dataclass(frozen=True)
class FormClass:
    kind: FormKind
    n: int
    radical_dim: int = 0
    quotient: Optional["FormClass"] = None

    @classmethod
    def euclidean(cls, n: int) -> "FormClass":
        return cls(FormKind.EUCLIDEAN, n)

    @classmethod
    def lorentzian(cls, n: int) -> "FormClass":
        return cls(FormKind.LORENTZIAN, n)

    @classmethod
    def degenerate(cls, radical_dim: int, quotient: "FormClass") -> "FormClass":
        return cls(FormKind.DEGENERATE, radical_dim + quotient.n, radical_dim, quotient)

    @property
    def is_degenerate(self) -> bool:
        return self.kind is FormKind.DEGENERATE

    def to_dict(self) -> dict:
        data = {"kind": self.kind.value, "n": self.n}
        if self.is_degenerate:
            data["radical_dim"] = self.radical_dim
            data["quotient"] = self.quotient.to_dict()
        return data

    def __str__(self) -> str:
        if self.is_degenerate:
            return f"Degenerate(radicalDim={self.radical_dim}, quotient={self.quotient})"
        return f"{self.kind.value}({self.n})"


class Diagonalization(NamedTuple):
    basis_change: np.ndarray  # columns are the new basis vectors
    diagonal: Tuple[int, ...]


def _is_diagonal(gram: np.ndarray) -> bool:
    return not np.any(gram - np.diag(np.diag(gram)))


def diagonalize(space: QuadraticSpace) -> Diagonalization:
    """Symmetric elimination by congruence: C^T G C is diagonal, zero entries last."""
    field = space.field
    gram = space.gram_matrix
    n = space.n
    if _is_diagonal(gram):
        return Diagonalization(identity(n), tuple(int(x) for x in np.diag(gram)))

    add, sub, mul = field.add_table, field.sub_table, field.mul_table
    a = gram.copy()
    c = identity(n)

    def swap(i, j):
        a[[i, j]] = a[[j, i]]
        a[:, [i, j]] = a[:, [j, i]]
        c[:, [i, j]] = c[:, [j, i]]

    for i in range(n):
        block_diag = np.nonzero(np.diag(a)[i:])[0]
        if len(block_diag) == 0:
            rows, cols = np.nonzero(a[i:, i:])
            if len(rows) == 0:
                break  # remaining block is the radical
            j, l = i + int(rows[0]), i + int(cols[0])
            # Replace e_j by e_j + e_l, making the diagonal entry 2 B(e_j, e_l) != 0
            a[j] = add[a[j], a[l]]
            a[:, j] = add[a[:, j], a[:, l]]
            c[:, j] = add[c[:, j], c[:, l]]
        else:
            j = i + int(block_diag[0])
        if j != i:
            swap(i, j)

        pivot_inv = field.inv_table[a[i, i]]
        for r in range(i + 1, n):
            if a[i, r]:
                f = mul[a[i, r], pivot_inv]
                a[r] = sub[a[r], mul[f, a[i]]]
                a[:, r] = sub[a[:, r], mul[f, a[:, i]]]
                c[:, r] = sub[c[:, r], mul[f, c[:, i]]]

    return Diagonalization(c, tuple(int(x) for x in np.diag(a)))


def class_of_diagonal(field: FieldSpec, diagonal) -> FormClass:
    """Class of diag(d_1, ..., d_n) from the square class of the nonzero entries' product."""
    nonzero = [int(d) for d in diagonal if d]
    discriminant = 1
    for d in nonzero:
        discriminant = int(field.mul_table[discriminant, d])
    m = len(nonzero)
    quotient = FormClass.euclidean(m) if field.square_table[discriminant] else FormClass.lorentzian(m)
    radical_dim = len(diagonal) - m
    return FormClass.degenerate(radical_dim, quotient) if radical_dim else quotient


def classify(space: QuadraticSpace) -> FormClass:
    return class_of_diagonal(space.field, diagonalize(space).diagonal)


def discriminant(space: QuadraticSpace) -> int:
    """Determinant of the Gram matrix as an element code."""
    if space.n == 0:
        return 1
    return int(batch_dets(space.field, space.gram_matrix[None])[0])


def is_dotk_subspace(space: QuadraticSpace, subspace: Subspace) -> bool:
    """True iff the restriction of the form to W is equivalent to dot_k."""
    return classify(restrict(space, subspace)) == FormClass.euclidean(subspace.k)


def dotk_mask(space: QuadraticSpace, bases) -> np.ndarray:
    """Vectorised is_dotk_subspace over a (N, k, n) stack of bases.

    The restricted Gram M G M^T is congruent to a diagonal form with the same
    discriminant square class, so W is a dot_k-subspace iff det(M G M^T) is a
    nonzero square.
    """
    bases = as_codes(bases)
    if len(bases) == 0:
        return np.zeros(0, dtype=bool)
    mask = np.empty(len(bases), dtype=bool)
    for start in range(0, len(bases), _MASK_CHUNK):
        dets = batch_dets(space.field, restricted_gram(space, bases[start:start + _MASK_CHUNK]))
        mask[start:start + _MASK_CHUNK] = (dets != 0) & space.field.square_table[dets]
    return mask
