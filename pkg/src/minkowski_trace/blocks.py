"""Block partitions of an ``(n*m) x (n*m)`` matrix into ``n x n`` blocks of size ``m``.

Viewing the matrix as an ``(n, m, n, m)`` tensor ``T[j, a, k, b] = A[j*m + a, k*m + b]``,
the sum of diagonal blocks is ``sum_j T[j, :, j, :]`` and the block-trace
matrix is ``sum_a T[:, a, :, a]``.  These are the two partial traces of a
bipartite operator, but nothing here assumes a tensor-product structure.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, IndexOutOfRange, PartitionTooSmall
from .linalg import as_matrix


@dataclass(frozen=True)
class BlockPartition:
    """``n`` block rows of edge ``m`` covering an ``original_dim`` matrix.

    ``padding`` zero rows/columns are appended so that ``n * m = original_dim + padding``.
    """

    n: int
    m: int
    original_dim: int
    padding: int

    def __post_init__(self):
        if self.n < 1 or self.m < 1 or self.original_dim < 1:
            raise ValueError(f"partition sizes must be positive: {self}")
        if self.n * self.m < self.original_dim:
            raise PartitionTooSmall(
                f"n*m = {self.n * self.m} cannot hold dimension {self.original_dim}"
            )
        if self.padding != self.n * self.m - self.original_dim:
            raise ValueError(f"padding must equal n*m - original_dim: {self}")

    @property
    def dim(self) -> int:
        """Padded dimension ``n * m``."""
        return self.n * self.m


def make_partition(N: int, n: int, m: int) -> BlockPartition:
    if n < 1 or m < 1 or N < 1:
        raise ValueError(f"N, n, m must be positive, got {(N, n, m)}")
    if n * m < N:
        raise PartitionTooSmall(f"n*m = {n * m} is smaller than N = {N}")
    return BlockPartition(n, m, N, n * m - N)


def coerce_partition(N: int, partition) -> BlockPartition:
    """Accept a ``BlockPartition`` or an ``(n, m)`` pair for a matrix of size ``N``."""
    if isinstance(partition, BlockPartition):
        if partition.original_dim != N:
            raise DimensionMismatch(
                f"partition is for dimension {partition.original_dim}, matrix has {N}"
            )
        return partition
    n, m = partition
    return make_partition(N, int(n), int(m))


def pad(a, partition: BlockPartition) -> np.ndarray:
    """Embed ``a`` in the top-left corner of an ``n*m`` zero matrix."""
    a = as_matrix(a)
    if a.shape[0] != partition.original_dim:
        raise DimensionMismatch(
            f"matrix has dimension {a.shape[0]}, partition expects {partition.original_dim}"
        )
    if partition.padding == 0:
        return a
    out = np.zeros((partition.dim, partition.dim), dtype=np.complex128)
    out[: a.shape[0], : a.shape[0]] = a
    return out


def _blocked(a, partition: BlockPartition) -> np.ndarray:
    a = np.asarray(a, dtype=np.complex128)
    if a.shape != (partition.dim, partition.dim):
        raise DimensionMismatch(
            f"matrix has shape {a.shape}, partition needs {partition.dim}x{partition.dim}"
        )
    n, m = partition.n, partition.m
    return a.reshape(n, m, n, m)


def block(a, partition: BlockPartition, j: int, k: int) -> np.ndarray:
    """The ``m x m`` block ``a_jk`` with 1-based block indices ``j, k``."""
    n = partition.n
    if not (1 <= j <= n and 1 <= k <= n):
        raise IndexOutOfRange(f"block indices ({j}, {k}) outside 1..{n}")
    return _blocked(a, partition)[j - 1, :, k - 1, :].copy()


def diagonal_block_sum(a, partition: BlockPartition) -> np.ndarray:
    """``sum_j a_jj``, an ``m x m`` matrix (trace over the block index)."""
    return np.einsum("jajb->ab", _blocked(a, partition))


def block_trace_matrix(a, partition: BlockPartition) -> np.ndarray:
    """``n x n`` matrix of block traces ``Tr a_jk`` (trace inside each block)."""
    return np.einsum("jaka->jk", _blocked(a, partition))
