"""
Quadratic spaces (F_q^n, Q) given by a symmetric Gram matrix, Q(v) = v^T G v.

Vectors and Gram matrices are arrays of element codes. Scalar results come back
as FieldElements.
"""
import logging
import re
from dataclasses import dataclass
from enum import Enum
from typing import Sequence, Tuple

import numpy as np

from services.field import FieldElement, FieldSpec, find_nonsquare
from services.linalg import as_codes, batch_matmul, is_symmetric, matmul, nullspace
from services.subspace import Subspace, canonicalize
from utils.errors import QuadFormError

logger = logging.getLogger(__name__)

HYPERBOLIC_GRAM = ((0, 1), (1, 0))

_SHORTHAND = re.compile(r'^\s*(dot|ldot|λdot)_?(\d+)\s*$')


class LineType(Enum):
    SPACELIKE = "spacelike"
    TIMELIKE = "timelike"
    LIGHTLIKE = "lightlike"


@dataclass(frozen=True)
class QuadraticSpace:
    field: FieldSpec
    gram: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        if not is_symmetric(self.gram_matrix):
            raise QuadFormError("gram matrix is not symmetric", gram=[list(r) for r in self.gram])
        if self.gram_matrix.size and (self.gram_matrix.min() < 0 or self.gram_matrix.max() >= self.field.q):
            raise QuadFormError(f"gram entries outside F_{self.field.q}")

    @classmethod
    def from_gram(cls, field: FieldSpec, gram) -> "QuadraticSpace":
        gram = as_codes(gram)
        if gram.ndim != 2:
            raise QuadFormError("gram matrix must be 2-D")
        return cls(field, tuple(tuple(int(x) for x in row) for row in gram))

    @property
    def n(self) -> int:
        return len(self.gram)

    @property
    def gram_matrix(self) -> np.ndarray:
        return np.array(self.gram, dtype=np.intp).reshape(len(self.gram), len(self.gram))

    def evaluate(self, v) -> FieldElement:
        return evaluate(self, v)

    def bilinear(self, u, v) -> FieldElement:
        return bilinear(self, u, v)

    def to_dict(self) -> dict:
        return {"q": self.field.q, "n": self.n, "gram": [list(row) for row in self.gram]}

    def __repr__(self) -> str:
        return f"QuadraticSpace(F_{self.field.q}, gram={[list(r) for r in self.gram]})"


def diagonal_space(field: FieldSpec, entries: Sequence[int]) -> QuadraticSpace:
    gram = np.diag(as_codes(list(entries))) if len(entries) else np.zeros((0, 0), dtype=np.intp)
    return QuadraticSpace.from_gram(field, gram)


def standard_space(kind: str, n: int, field: FieldSpec) -> QuadraticSpace:
    """dot_n = diag(1,...,1) or ldot_n = diag(1,...,1,lambda) with lambda the first nonsquare."""
    if n < 1:
        raise QuadFormError(f"dimension must be >= 1, got {n}")
    if kind == "dot":
        return diagonal_space(field, [1] * n)
    if kind in ("ldot", "λdot"):
        return diagonal_space(field, [1] * (n - 1) + [find_nonsquare(field).code])
    raise QuadFormError(f"unknown standard form '{kind}'", kind=kind)


def parse_space(text: str, field: FieldSpec) -> QuadraticSpace:
    """CLI shorthand "dot_n" / "ldot_n"."""
    match = _SHORTHAND.match(text)
    if not match:
        raise QuadFormError(f"malformed form shorthand '{text}'")
    return standard_space(match.group(1), int(match.group(2)), field)


def hyperbolic_plane(field: FieldSpec) -> QuadraticSpace:
    return QuadraticSpace(field, HYPERBOLIC_GRAM)


def direct_sum(*spaces: QuadraticSpace) -> QuadraticSpace:
    if not spaces:
        raise QuadFormError("direct sum of nothing")
    field = spaces[0].field
    if any(s.field != field for s in spaces):
        raise QuadFormError("field mismatch")
    n = sum(s.n for s in spaces)
    gram = np.zeros((n, n), dtype=np.intp)
    offset = 0
    for s in spaces:
        gram[offset:offset + s.n, offset:offset + s.n] = s.gram_matrix
        offset += s.n
    return QuadraticSpace.from_gram(field, gram)


def _check_vector(space: QuadraticSpace, v) -> np.ndarray:
    v = as_codes(v)
    if v.shape != (space.n,):
        raise QuadFormError("dimension mismatch", expected=space.n, got=list(v.shape))
    return v


def bilinear(space: QuadraticSpace, u, v) -> FieldElement:
    u, v = _check_vector(space, u), _check_vector(space, v)
    gv = matmul(space.field, space.gram_matrix, v)
    return FieldElement(int(matmul(space.field, u[None, :], gv)[0]), space.field)


def evaluate(space: QuadraticSpace, v) -> FieldElement:
    return bilinear(space, v, v)


def quadratic_values(field: FieldSpec, gram, vectors) -> np.ndarray:
    """Q(v) for every row of a (N, n) array."""
    vectors = as_codes(vectors)
    gv = batch_matmul(field, vectors, as_codes(gram))
    products = field.mul_table[gv, vectors]
    acc = np.zeros(len(vectors), dtype=np.intp)
    for col in range(products.shape[1]):
        acc = field.add_table[acc, products[:, col]]
    return acc


def line_type(space: QuadraticSpace, v) -> LineType:
    v = _check_vector(space, v)
    if not v.any():
        raise QuadFormError("zero vector has no line type")
    value = evaluate(space, v).code
    if value == 0:
        return LineType.LIGHTLIKE
    return LineType.SPACELIKE if space.field.square_table[value] else LineType.TIMELIKE


def restricted_gram(space: QuadraticSpace, basis) -> np.ndarray:
    """M G M^T for a basis given as rows (or a stack of bases)."""
    basis = as_codes(basis)
    field = space.field
    mg = batch_matmul(field, basis, space.gram_matrix)
    return batch_matmul(field, mg, np.swapaxes(basis, -1, -2))


def restrict(space: QuadraticSpace, subspace: Subspace) -> QuadraticSpace:
    """Form on W expressed in W's canonical RREF basis."""
    if subspace.n != space.n:
        raise QuadFormError("dimension mismatch", expected=space.n, got=subspace.n)
    return QuadraticSpace.from_gram(space.field, restricted_gram(space, subspace.matrix))


def orthogonal_complement(space: QuadraticSpace, subspace: Subspace) -> Subspace:
    """{v : B(v, w) = 0 for all w in W}, the null space of (basis of W) G."""
    if subspace.n != space.n:
        raise QuadFormError("dimension mismatch", expected=space.n, got=subspace.n)
    if subspace.k == 0:
        return canonicalize(space.field, np.eye(space.n, dtype=np.intp))
    constraints = matmul(space.field, subspace.matrix, space.gram_matrix)
    return canonicalize(space.field, nullspace(space.field, constraints), n=space.n, allow_zero=True)


def radical(space: QuadraticSpace) -> Subspace:
    return canonicalize(space.field, nullspace(space.field, space.gram_matrix),
                        n=space.n, allow_zero=True)
