"""Explicit isometries and reflections."""
import logging
from typing import List, Optional

import numpy as np

from services.field import FieldSpec, find_nonsquare
from services.linalg import all_vectors, as_codes, identity, inverse, matmul, projective_points
from utils.errors import QuadFormError
from .classify import classify, diagonalize
from .space import QuadraticSpace, evaluate, quadratic_values

logger = logging.getLogger(__name__)


def _sqrt(field: FieldSpec, a: int) -> int:
    roots = np.nonzero(field.mul_table.diagonal() == a)[0]
    if len(roots) == 0:
        raise QuadFormError(f"{field.format_code(a)} is not a square")
    return int(roots[0])


def _unit_pair(field: FieldSpec, lam: int) -> np.ndarray:
    """(a, b) with lam a^2 + lam b^2 = 1, by exhaustive search."""
    candidates = all_vectors(field, 2)
    values = quadratic_values(field, np.diag([lam, lam]), candidates)
    hits = np.nonzero(values == 1)[0]
    if len(hits) == 0:
        raise QuadFormError("diag(lambda, lambda) does not represent 1")
    return candidates[hits[0]]


def standard_basis_change(space: QuadraticSpace) -> np.ndarray:
    """C with C^T G C = diag(1, ..., 1) or diag(1, ..., 1, lambda)."""
    field = space.field
    mul, add, neg = field.mul_table, field.add_table, field.neg_table
    c, diagonal = diagonalize(space)
    c = c.copy()
    if any(d == 0 for d in diagonal):
        raise QuadFormError("degenerate input", diagonal=list(diagonal))
    lam = find_nonsquare(field).code

    # Scale each basis vector so its entry becomes 1 or lambda
    lambdas = []
    for i, d in enumerate(diagonal):
        if field.square_table[d]:
            root = _sqrt(field, d)
        else:
            root = _sqrt(field, int(mul[d, field.inv_table[lam]]))
            lambdas.append(i)
        c[:, i] = mul[field.inv_table[root], c[:, i]]

    # diag(lambda, lambda) is equivalent to diag(1, 1) via columns u = (a, b), w = (-b, a)
    if len(lambdas) >= 2:
        a, b = (int(x) for x in _unit_pair(field, lam))
        for i, j in zip(lambdas[0::2], lambdas[1::2]):
            ci, cj = c[:, i].copy(), c[:, j].copy()
            c[:, i] = add[mul[a, ci], mul[b, cj]]
            c[:, j] = add[mul[neg[b], ci], mul[a, cj]]
        lambdas = lambdas[-1:] if len(lambdas) % 2 else []

    if lambdas:
        order = [i for i in range(space.n) if i != lambdas[0]] + lambdas
        c = c[:, order]
    return c


def is_isometry(source: QuadraticSpace, target: QuadraticSpace, matrix) -> bool:
    """Check M^T G_target M == G_source."""
    matrix = as_codes(matrix)
    field = target.field
    pulled = matmul(field, matmul(field, matrix.T, target.gram_matrix), matrix)
    return bool(np.array_equal(pulled, source.gram_matrix))


def construct_isometry(source: QuadraticSpace, target: QuadraticSpace) -> Optional[np.ndarray]:
    """M with M^T G_target M = G_source, or None when the forms are not equivalent."""
    if source.field != target.field:
        raise QuadFormError("field mismatch")
    if source.n != target.n:
        raise QuadFormError("dimension mismatch", source=source.n, target=target.n)
    source_class, target_class = classify(source), classify(target)
    if source_class.is_degenerate or target_class.is_degenerate:
        raise QuadFormError("degenerate input", source=str(source_class), target=str(target_class))
    if source_class != target_class:
        logger.debug(f"Not equivalent: {source_class} vs {target_class}")
        return None
    field = source.field
    c_source = standard_basis_change(source)
    c_target = standard_basis_change(target)
    return matmul(field, c_target, inverse(field, c_source))


def reflection(space: QuadraticSpace, v) -> np.ndarray:
    """r_v(x) = x - 2 B(x, v) Q(v)^-1 v, as a matrix acting on column vectors."""
    field = space.field
    v = as_codes(v)
    qv = evaluate(space, v)
    if qv.code == 0:
        raise QuadFormError("isotropic vector", vector=v.tolist())
    factor = field.mul_table[2 % field.p, field.inv_table[qv.code]]
    gv = matmul(field, space.gram_matrix, v)
    outer = field.mul_table[v[:, None], gv[None, :]]
    return field.sub_table[identity(space.n), field.mul_table[factor, outer]]


def reflection_generators(space: QuadraticSpace) -> List[np.ndarray]:
    """Reflections in every anisotropic line, in projective enumeration order."""
    points = projective_points(space.field, space.n)
    values = quadratic_values(space.field, space.gram_matrix, points)
    return [reflection(space, v) for v in points[values != 0]]
