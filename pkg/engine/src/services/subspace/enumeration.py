"""Gaussian binomials and exhaustive RREF enumeration of k-subspaces."""
import itertools
import logging
from typing import Optional

import numpy as np

from services.field import FieldSpec
from services.linalg import all_vectors
from utils.errors import SubspaceError
from .subspace import SubspaceSet

logger = logging.getLogger(__name__)


def gaussian_binomial(n: int, k: int, q: int) -> int:
    """Number of k-dimensional subspaces of F_q^n (0 when k > n or k < 0)."""
    if k < 0 or k > n:
        return 0
    numerator, denominator = 1, 1
    for i in range(k):
        numerator *= q ** (n - i) - 1
        denominator *= q ** (i + 1) - 1
    return numerator // denominator


def _pattern_block(field: FieldSpec, n: int, pivots) -> np.ndarray:
    """All RREF matrices with the given pivot columns, free entries in lexicographic order."""
    k = len(pivots)
    pivot_set = set(pivots)
    free = [(i, c) for i, p in enumerate(pivots) for c in range(p + 1, n) if c not in pivot_set]
    values = all_vectors(field, len(free))
    block = np.zeros((len(values), k, n), dtype=np.intp)
    for i, p in enumerate(pivots):
        block[:, i, p] = 1
    for slot, (i, c) in enumerate(free):
        block[:, i, c] = values[:, slot]
    return block


def enumerate_subspaces(n: int, k: int, field: FieldSpec, cache=None) -> SubspaceSet:
    """All k-subspaces of F_q^n.

    Order: pivot-column patterns in lexicographic order (itertools.combinations),
    then free entries lexicographically, row-major. When a SubspaceCache is given
    the array is read from / written to it.
    """
    if not 0 <= k <= n:
        raise SubspaceError(f"require 0 <= k <= n, got k={k}, n={n}")
    expected = gaussian_binomial(n, k, field.q)

    if cache is not None:
        cached = cache.load(field, n, k, expected)
        if cached is not None:
            return SubspaceSet(field, n, k, cached)

    blocks = [_pattern_block(field, n, pivots) for pivots in itertools.combinations(range(n), k)]
    bases = np.concatenate(blocks) if blocks else np.zeros((0, k, n), dtype=np.intp)
    if len(bases) != expected:
        raise SubspaceError("enumeration count mismatch", expected=expected, got=len(bases))
    logger.info(f"Enumerated {len(bases)} subspaces of dimension {k} in F_{field.q}^{n}")

    if cache is not None:
        cache.store(field, n, k, bases)
    return SubspaceSet(field, n, k, bases)
