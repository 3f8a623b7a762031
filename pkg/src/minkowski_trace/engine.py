"""Both sides of the block Minkowski trace inequality.

For a positive semidefinite matrix ``R`` blocked as ``n x n`` blocks
``a_jk`` of size ``m`` (after zero padding), with ``a_jk(p)`` the blocks
of ``R**p``:

    lhs = [Tr (sum_j a_jj)^p]^(1/p)
    rhs = Tr [ (Tr a_jk(p))_{jk} ]^(1/p)

``lhs <= rhs`` for ``p >= 1`` and ``lhs >= rhs`` for ``0 < p <= 1``.
``R`` is a density matrix, or a Hermitian matrix shifted by ``x I``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from . import rng
from .blocks import (
    BlockPartition,
    block_trace_matrix,
    coerce_partition,
    diagonal_block_sum,
    make_partition,
    pad,
)
from .errors import (
    ExponentOutOfRange,
    NotDensityMatrix,
    NotHermitian,
    ShiftInsufficient,
    TooManyPermutations,
)
from .linalg import (
    HermitianEigensystem,
    as_matrix,
    clip_tolerance,
    hermitian_eigendecomposition,
    hermitian_tolerance,
    matrix_power,
    max_abs,
    power_from_eigensystem,
)
from .report import SLACK_RTOL, InequalityReport, make_report
from .states import apply_permutation

TRACE_ATOL = 1e-8
MAX_EXHAUSTIVE_DIM = 8


def _check_p(p) -> float:
    p = float(p)
    if not (p > 0 and np.isfinite(p)):
        raise ExponentOutOfRange(f"exponent must be a positive real, got {p}")
    return p


@dataclass(frozen=True)
class _Prepared:
    """A padded PSD matrix with everything that does not depend on ``p``."""

    partition: BlockPartition
    x: float
    eig: HermitianEigensystem
    clip_tol: float
    reduced: np.ndarray


def _prepare(mat: np.ndarray, partition: BlockPartition, x: float, eig=None) -> _Prepared:
    if eig is None:
        eig = hermitian_eigendecomposition(mat)
    return _Prepared(partition, x, eig, clip_tolerance(mat), diagonal_block_sum(mat, partition))


def _sides(prep: _Prepared, p: float) -> tuple[float, float]:
    reduced_power = matrix_power(prep.reduced, p)
    lhs = max(float(np.trace(reduced_power).real), 0.0) ** (1.0 / p)
    full_power = power_from_eigensystem(prep.eig, p, prep.clip_tol)
    inner = block_trace_matrix(full_power, prep.partition)
    rhs = float(np.trace(matrix_power(inner, 1.0 / p)).real)
    return lhs, rhs


def _report(prep: _Prepared, p: float, tol: float) -> InequalityReport:
    lhs, rhs = _sides(prep, p)
    part = prep.partition
    return make_report(lhs, rhs, p, x=prep.x, n=part.n, m=part.m, padding=part.padding, tol=tol)


def density_failures(rho) -> tuple[list[str], HermitianEigensystem | None]:
    """Names of failed density-matrix checks, plus the eigensystem if one was computed."""
    rho = as_matrix(rho)
    failures = []
    if max_abs(rho - rho.conj().T) > hermitian_tolerance(rho):
        failures.append("hermitian")
        herm = (rho + rho.conj().T) / 2
    else:
        herm = rho
    eig = hermitian_eigendecomposition(herm)
    if eig.eigenvalues[0] < -clip_tolerance(rho):
        failures.append("psd")
    if abs(np.trace(rho) - 1.0) > TRACE_ATOL:
        failures.append("trace")
    return failures, (eig if not failures else None)


def is_density_matrix(rho) -> bool:
    return not density_failures(rho)[0]


def _density_prepared(rho, partition) -> _Prepared:
    rho = as_matrix(rho)
    part = coerce_partition(rho.shape[0], partition)
    mat = pad(rho, part)
    failures, eig = density_failures(mat)
    if failures:
        raise NotDensityMatrix(failures)
    return _prepare(mat, part, 0.0, eig)


def minkowski_lhs(rho, partition, p: float) -> float:
    """``[Tr (sum_j a_jj)^p]^(1/p)`` for a PSD matrix of dimension ``n*m``."""
    rho = as_matrix(rho)
    part = coerce_partition(rho.shape[0], partition)
    p = _check_p(p)
    reduced = diagonal_block_sum(pad(rho, part), part)
    return max(float(np.trace(matrix_power(reduced, p)).real), 0.0) ** (1.0 / p)


def minkowski_rhs(rho, partition, p: float) -> float:
    """``Tr[(Tr a_jk(p))^(1/p)]`` for a PSD matrix of dimension ``n*m``."""
    rho = as_matrix(rho)
    part = coerce_partition(rho.shape[0], partition)
    p = _check_p(p)
    inner = block_trace_matrix(matrix_power(pad(rho, part), p), part)
    return float(np.trace(matrix_power(inner, 1.0 / p)).real)


def verify_density(rho, partition, p: float, tol: float = SLACK_RTOL) -> InequalityReport:
    """Check the inequality for a density matrix, zero-padding to ``n*m`` if needed.

    ``partition`` is a :class:`BlockPartition` or an ``(n, m)`` pair.

    Raises
    ------
    NotDensityMatrix
        Listing which of the Hermitian / PSD / unit-trace checks failed.
    PartitionTooSmall
        If ``n*m`` is smaller than the matrix dimension.
    """
    p = _check_p(p)
    return _report(_density_prepared(rho, partition), p, tol)


def scan_p(rho, partition, p_values, tol: float = SLACK_RTOL) -> list[InequalityReport]:
    """One report per exponent, in input order.  The eigensystem is shared."""
    p_values = [_check_p(p) for p in p_values]
    if not p_values:
        raise ValueError("p_values must be nonempty")
    prep = _density_prepared(rho, partition)
    return [_report(prep, p, tol) for p in p_values]


def correlation_measure_J(rho, partition, p: float) -> float:
    """``rhs - lhs`` of the density-matrix inequality; only defined for ``p >= 1``."""
    p = _check_p(p)
    if p < 1:
        raise ExponentOutOfRange(f"J(p) is defined for p >= 1 only, got {p}")
    return verify_density(rho, partition, p).j_value


def shift_to_nonnegative(a, margin: float = 0.0) -> tuple[np.ndarray, float]:
    """Return ``(A + x I, x)`` with ``x = max(0, -lambda_min(A)) + margin``."""
    a = as_matrix(a)
    if margin < 0:
        raise ValueError(f"margin must be nonnegative, got {margin}")
    lam = hermitian_eigendecomposition(a).eigenvalues[0]
    x = max(0.0, -float(lam)) + float(margin)
    return a + x * np.eye(a.shape[0]), x


def _hermitian_prepared(a, partition, x: float) -> _Prepared:
    a = as_matrix(a)
    if max_abs(a - a.conj().T) > hermitian_tolerance(a):
        raise NotHermitian("matrix is not Hermitian")
    part = coerce_partition(a.shape[0], partition)
    x = float(x)
    mat = pad(a, part)
    # Padding precedes the shift, so the padded zeros become x as well.
    if x:
        mat = mat + x * np.eye(part.dim)
    eig = hermitian_eigendecomposition(mat)
    tol = clip_tolerance(mat)
    if eig.eigenvalues[0] < -tol:
        raise ShiftInsufficient(
            f"A + {x} I has eigenvalue {eig.eigenvalues[0]:.6g} < 0; "
            "x must be at least -lambda_min of the padded matrix"
        )
    return _prepare(mat, part, x, eig)


def verify_hermitian(a, partition, p: float, x: float, tol: float = SLACK_RTOL) -> InequalityReport:
    """Check the inequality for the shifted Hermitian matrix ``A' + x I``.

    ``A'`` is ``A`` zero-padded to ``n*m``.  With ``x = 0`` and a density
    matrix this runs the same arithmetic as :func:`verify_density`.
    """
    p = _check_p(p)
    return _report(_hermitian_prepared(a, partition, x), p, tol)


def scan_p_hermitian(a, partition, p_values, x: float, tol: float = SLACK_RTOL):
    p_values = [_check_p(p) for p in p_values]
    prep = _hermitian_prepared(a, partition, x)
    return [_report(prep, p, tol) for p in p_values]


def verify_all_permutations(rho, partition, p: float, samples: int | None = None,
                            seed: int = 0, tol: float = SLACK_RTOL):
    """Reports for every relabelling ``sigma`` of the matrix indices.

    Exhaustive for ``N <= 8``.  With ``samples`` set, that many seeded
    random permutations are used instead (seed ``seed XOR i`` for the
    ``i``-th).  Returns ``(perm, report)`` pairs with 1-based ``perm``.
    """
    rho = as_matrix(rho)
    N = rho.shape[0]
    part = coerce_partition(N, partition)
    p = _check_p(p)
    failures, _ = density_failures(rho)
    if failures:
        raise NotDensityMatrix(failures)
    if samples is None:
        if N > MAX_EXHAUSTIVE_DIM:
            raise TooManyPermutations(
                f"exhaustive enumeration is limited to N <= {MAX_EXHAUSTIVE_DIM}; pass samples="
            )
        perms = itertools.permutations(range(1, N + 1))
    else:
        perms = (
            tuple(i + 1 for i in rng.random_permutation(rng.derive_seed(seed, k), N))
            for k in range(samples)
        )
    out = []
    for perm in perms:
        permuted = apply_permutation(rho, perm)
        out.append((tuple(perm), verify_density(permuted, part, p, tol)))
    return out


def enumerate_partitions(N: int, max_padding: int = 0) -> list[BlockPartition]:
    """All ``(n, m)`` with ``n, m >= 2`` and ``N <= n*m <= N + max_padding``."""
    if max_padding < 0:
        raise ValueError("max_padding must be nonnegative")
    out = []
    for size in range(N, N + max_padding + 1):
        for n in range(2, size // 2 + 1):
            if size % n == 0 and size // n >= 2:
                out.append(make_partition(N, n, size // n))
    return out


def scan_partitions(rho, p: float, max_padding: int = 0, tol: float = SLACK_RTOL):
    rho = as_matrix(rho)
    p = _check_p(p)
    return [(part, verify_density(rho, part, p, tol))
            for part in enumerate_partitions(rho.shape[0], max_padding)]
