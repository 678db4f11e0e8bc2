"""
Orthogonality graphs over (F_q^n, ldot_n).

GammaSquare(n,k,q) has the dot_k-subspaces as vertices, GammaBar(n,k,q) all
k-subspaces; in both x ~ y iff x is contained in y-perp, i.e. X G Y^T = 0 for the
RREF bases X, Y.

Adjacency is kept as one packed bitset per vertex: row v of OrthGraph.bits holds
vertex u in bit u % 8 of byte u // 8 (numpy bitorder "little").
"""
import logging
from concurrent.futures import ThreadPoolExecutor
from enum import Enum
from typing import List, Optional

import numpy as np

from config.constants import GRAPH_WORKERS, LOOP_POLICY, MAX_GRAPH_VERTICES
from services.field import FieldSpec
from services.linalg import as_codes, batch_matmul
from services.quadform import QuadraticSpace, dotk_mask, restricted_gram, standard_space
from services.subspace import SubspaceSet, enumerate_subspaces
from utils.errors import BudgetExceededError, GraphError

logger = logging.getLogger(__name__)

# Upper bound on intermediate array entries per adjacency chunk
_CHUNK_ENTRIES = 4_000_000
# Rows unpacked at a time by the symmetry check (a multiple of 8)
_SYMMETRY_ROWS = 1024

_POPCOUNT = np.array([bin(i).count("1") for i in range(256)], dtype=np.uint8)


class GraphKind(Enum):
    GAMMA_SQUARE = "GammaSquare"
    GAMMA_BAR = "GammaBar"


class LoopPolicy(str, Enum):
    INCLUDE = "include"
    EXCLUDE = "exclude"


def row_bytes(count: int) -> int:
    return (count + 7) // 8


def pack_rows(dense) -> np.ndarray:
    """Boolean (N, M) matrix to (N, ceil(M/8)) bitset rows."""
    return np.packbits(np.asarray(dense, dtype=bool), axis=1, bitorder="little")


def unpack_rows(bits: np.ndarray, count: int) -> np.ndarray:
    """Bitset rows back to a boolean (N, count) matrix."""
    return np.unpackbits(bits, axis=1, count=count, bitorder="little").astype(bool)


def popcount_rows(bits: np.ndarray) -> np.ndarray:
    return _POPCOUNT[bits].sum(axis=1, dtype=np.int64)


def diagonal_bits(bits: np.ndarray) -> np.ndarray:
    idx = np.arange(len(bits))
    return ((bits[idx, idx >> 3] >> (idx & 7)) & 1).astype(bool)


def set_diagonal_bits(bits: np.ndarray, mask) -> None:
    """Overwrite the diagonal of a writeable bitset matrix in place."""
    idx = np.arange(len(bits))
    cols = idx >> 3
    flags = (1 << (idx & 7)).astype(np.uint8)
    current = bits[idx, cols]
    bits[idx, cols] = np.where(np.asarray(mask, dtype=bool), current | flags, current & ~flags)


def _bits_symmetric(bits: np.ndarray, count: int) -> bool:
    for start in range(0, count, _SYMMETRY_ROWS):
        stop = min(start + _SYMMETRY_ROWS, count)
        rows = unpack_rows(bits[start:stop], count)
        cols = np.unpackbits(bits[:, start // 8:row_bytes(stop)], axis=1, bitorder="little")
        if not np.array_equal(rows, cols[:, :stop - start].T.astype(bool)):
            return False
    return True


class OrthGraph:
    """Vertex set plus per-vertex adjacency bitsets (symmetric, read-only)."""

    def __init__(self, kind: GraphKind, n: int, k: int, field: FieldSpec,
                 vertices: SubspaceSet, bits: np.ndarray,
                 loop_policy: LoopPolicy = LoopPolicy.EXCLUDE,
                 induced_from: Optional[str] = None):
        self.kind = kind
        self.n = n
        self.k = k
        self.field = field
        self.vertices = vertices
        self.bits = np.ascontiguousarray(bits, dtype=np.uint8)
        self.bits.flags.writeable = False
        self.loop_policy = LoopPolicy(loop_policy)
        self.induced_from = induced_from
        count = len(vertices)
        if self.bits.shape != (count, row_bytes(count)):
            raise GraphError("adjacency shape does not match vertex count", graph=self.label)
        if not _bits_symmetric(self.bits, count):
            raise GraphError("adjacency is not symmetric", graph=self.label)

    @classmethod
    def from_dense(cls, kind: GraphKind, n: int, k: int, field: FieldSpec,
                   vertices: SubspaceSet, adjacency, **kwargs) -> "OrthGraph":
        return cls(kind, n, k, field, vertices, pack_rows(adjacency), **kwargs)

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def space(self) -> QuadraticSpace:
        return standard_space("ldot", self.n, self.field)

    @property
    def label(self) -> str:
        return f"{self.kind.value}({self.n},{self.k},{self.q})"

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    @property
    def adjacency(self) -> np.ndarray:
        """Dense boolean copy of the adjacency matrix."""
        return unpack_rows(self.bits, self.vertex_count)

    @property
    def loop_mask(self) -> np.ndarray:
        return diagonal_bits(self.bits)

    @property
    def loop_count(self) -> int:
        return int(self.loop_mask.sum())

    @property
    def edge_count(self) -> int:
        """Undirected edges between distinct vertices."""
        return int((self.degrees.sum() - self.loop_count) // 2)

    @property
    def degrees(self) -> np.ndarray:
        """Row popcounts (a loop counts once)."""
        return popcount_rows(self.bits)

    def is_regular(self) -> bool:
        degrees = self.degrees
        return len(degrees) == 0 or bool(np.all(degrees == degrees[0]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.bits[u, v >> 3] >> (v & 7)) & 1)

    def row(self, vertex: int) -> np.ndarray:
        return unpack_rows(self.bits[vertex:vertex + 1], self.vertex_count)[0]

    def neighbors(self, vertex: int) -> np.ndarray:
        """Adjacent vertex indices in increasing order (a looped vertex lists itself)."""
        return np.nonzero(self.row(vertex))[0]

    def block(self, rows, cols) -> np.ndarray:
        """Boolean submatrix A[rows][:, cols]."""
        rows = np.asarray(rows, dtype=np.intp)
        cols = np.asarray(cols, dtype=np.intp)
        return unpack_rows(self.bits[rows], self.vertex_count)[:, cols]

    def row_masks(self) -> List[int]:
        """Each row as a Python int with bit u set for neighbour u."""
        return [int.from_bytes(row.tobytes(), "little") for row in self.bits]

    def adjacency_int(self) -> np.ndarray:
        return self.adjacency.astype(np.int64)

    def induced(self, indices) -> "OrthGraph":
        indices = np.asarray(indices, dtype=np.intp)
        return OrthGraph.from_dense(
            self.kind, self.n, self.k, self.field,
            self.vertices.select(indices),
            self.block(indices, indices),
            loop_policy=self.loop_policy,
            induced_from=self.label,
        )

    def __repr__(self) -> str:
        return (f"OrthGraph({self.label}, vertices={self.vertex_count}, "
                f"edges={self.edge_count}, loops={self.loop_count})")


def _check_parameters(n: int, k: int):
    if k < 1:
        raise GraphError(f"k must be at least 1, got {k}")
    if k >= n:
        raise GraphError(f"k must be smaller than n (got n={n}, k={k}); the graph is empty")


def orthogonality_matrix(field: FieldSpec, gram, left, right=None,
                         workers: int = GRAPH_WORKERS, packed: bool = False) -> np.ndarray:
    """Boolean matrix O[i, j] = (left_i G right_j^T == 0) for stacks of bases.

    With packed=True each chunk is packed as soon as it is computed and the
    result is bitset rows.
    """
    left = as_codes(left)
    right = left if right is None else as_codes(right)
    n_left, k, n = left.shape
    n_right, k_right = right.shape[0], right.shape[1]
    if n_left == 0 or n_right == 0:
        if packed:
            return np.zeros((n_left, row_bytes(n_right)), dtype=np.uint8)
        return np.zeros((n_left, n_right), dtype=bool)
    projected = batch_matmul(field, left, as_codes(gram))  # (N, k, n)

    if field.e == 1:
        # Prime field: codes are residues, so integer matmul mod p is exact
        flat_right = right.reshape(-1, n).astype(np.int64).T
        per_row = k * n_right * k_right
    else:
        per_row = k * n_right * k_right * n
    chunk = max(1, _CHUNK_ENTRIES // max(per_row, 1))

    def orthogonal(part: np.ndarray) -> np.ndarray:
        if field.e == 1:
            values = (part.reshape(-1, n).astype(np.int64) @ flat_right) % field.p
            values = values.reshape(len(part), k, n_right, k_right)
            return ~values.any(axis=(1, 3))
        products = field.mul_table[part[:, None, :, None, :], right[None, :, None, :, :]]
        acc = products[..., 0]
        for t in range(1, n):
            acc = field.add_table[acc, products[..., t]]
        return ~acc.reshape(len(part), n_right, -1).any(axis=2)

    def block(start: int) -> np.ndarray:
        result = orthogonal(projected[start:start + chunk])
        return pack_rows(result) if packed else result

    starts = range(0, n_left, chunk)
    if workers > 1 and len(starts) > 1:
        with ThreadPoolExecutor(max_workers=workers) as executor:
            blocks = list(executor.map(block, starts))
    else:
        blocks = [block(s) for s in starts]
    return np.concatenate(blocks)


def dotk_subspaces(n: int, k: int, field: FieldSpec, cache=None) -> SubspaceSet:
    """All dot_k-subspaces of ldot_n, in enumeration order."""
    space = standard_space("ldot", n, field)
    candidates = enumerate_subspaces(n, k, field, cache=cache)
    mask = dotk_mask(space, candidates.bases)
    return candidates.select(np.nonzero(mask)[0])


def _check_budget(count: int, max_vertices: int, label: str):
    if count > max_vertices:
        raise BudgetExceededError(
            f"{label} has {count} vertices, above the build cap {max_vertices}",
            budget="graph.max_vertices", limit=max_vertices, vertices=count,
        )


def build_gamma_square(n: int, k: int, field: FieldSpec, cache=None,
                       max_vertices: int = MAX_GRAPH_VERTICES,
                       workers: int = GRAPH_WORKERS) -> OrthGraph:
    """Graph on the dot_k-subspaces of ldot_n; loop-free by construction."""
    _check_parameters(n, k)
    label = f"{GraphKind.GAMMA_SQUARE.value}({n},{k},{field.q})"
    vertices = dotk_subspaces(n, k, field, cache=cache)
    _check_budget(len(vertices), max_vertices, label)
    space = standard_space("ldot", n, field)
    bits = orthogonality_matrix(field, space.gram_matrix, vertices.bases, workers=workers, packed=True)
    if diagonal_bits(bits).any():
        raise GraphError("a dot_k-subspace is self-orthogonal", graph=label)
    graph = OrthGraph(GraphKind.GAMMA_SQUARE, n, k, field, vertices, bits)
    logger.info(f"Built {graph!r}")
    return graph


def build_gamma_bar(n: int, k: int, field: FieldSpec,
                    loop_policy: LoopPolicy = LOOP_POLICY, cache=None,
                    max_vertices: int = MAX_GRAPH_VERTICES,
                    workers: int = GRAPH_WORKERS) -> OrthGraph:
    """Graph on all k-subspaces; loops at totally isotropic vertices under INCLUDE."""
    _check_parameters(n, k)
    loop_policy = LoopPolicy(loop_policy)
    label = f"{GraphKind.GAMMA_BAR.value}({n},{k},{field.q})"
    vertices = enumerate_subspaces(n, k, field, cache=cache)
    _check_budget(len(vertices), max_vertices, label)
    space = standard_space("ldot", n, field)
    bits = orthogonality_matrix(field, space.gram_matrix, vertices.bases, workers=workers, packed=True)
    if loop_policy is LoopPolicy.EXCLUDE:
        set_diagonal_bits(bits, np.zeros(len(bits), dtype=bool))
    graph = OrthGraph(GraphKind.GAMMA_BAR, n, k, field, vertices, bits, loop_policy=loop_policy)
    logger.info(f"Built {graph!r} (loop policy {loop_policy.value})")
    return graph


def with_loop_policy(graph: OrthGraph, loop_policy: LoopPolicy) -> OrthGraph:
    """Same full graph under the other diagonal convention, without rebuilding."""
    loop_policy = LoopPolicy(loop_policy)
    if graph.kind is not GraphKind.GAMMA_BAR or graph.loop_policy is loop_policy:
        return graph
    bits = graph.bits.copy()
    if loop_policy is LoopPolicy.EXCLUDE:
        set_diagonal_bits(bits, np.zeros(len(bits), dtype=bool))
    else:
        set_diagonal_bits(bits, totally_isotropic_mask(graph.space, graph.vertices.bases))
    return OrthGraph(graph.kind, graph.n, graph.k, graph.field, graph.vertices, bits,
                     loop_policy=loop_policy)


def totally_isotropic_mask(space: QuadraticSpace, bases) -> np.ndarray:
    """x contained in x-perp, i.e. the restricted Gram matrix vanishes."""
    bases = as_codes(bases)
    if len(bases) == 0:
        return np.zeros(0, dtype=bool)
    return ~restricted_gram(space, bases).reshape(len(bases), -1).any(axis=1)
