"""Test matrices: canonical states, seeded random ensembles, index permutations.

A 4x4 density matrix here can be read as a two-qubit state or as a single
spin-3/2 qudit; the matrix is the same in both cases.  Only the partition
passed to the engine (``(2, 2)`` or anything else) carries structure.

Random generators draw from :mod:`minkowski_trace.rng` and are fully
determined by ``(parameters, seed)``.
"""

from __future__ import annotations

import numpy as np

from . import rng
from .errors import BadRank, NotAPermutation, NotNormalized
from .scalar import ProbabilityGrid, as_grid


def maximally_mixed(N: int) -> np.ndarray:
    if N < 1:
        raise ValueError(f"dimension must be positive, got {N}")
    return np.eye(N, dtype=np.complex128) / N


def pure_state(amplitudes) -> np.ndarray:
    """Projector ``|psi><psi|`` for a unit vector of amplitudes."""
    psi = np.asarray(amplitudes, dtype=np.complex128).ravel()
    norm2 = float(np.vdot(psi, psi).real)
    if abs(norm2 - 1.0) > 1e-10:
        raise NotNormalized(f"amplitudes have squared norm {norm2!r}, not 1")
    return np.outer(psi, psi.conj())


def bell_state() -> np.ndarray:
    """``(|00> + |11>) / sqrt(2)`` as a 4x4 projector."""
    return pure_state(np.array([1, 0, 0, 1]) / np.sqrt(2))


def product_state(*factors) -> np.ndarray:
    """Kronecker product of density matrices, left factor = block index."""
    out = np.ones((1, 1), dtype=np.complex128)
    for f in factors:
        out = np.kron(out, np.asarray(f, dtype=np.complex128))
    return out


def diagonal_from_grid(P) -> np.ndarray:
    """``diag(P_11, P_12, ..., P_nm)`` in row-major grid order."""
    g = as_grid(P)
    if not g.normalized:
        raise NotNormalized(f"grid sums to {g.values.sum()!r}, not 1")
    return np.diag(g.values.ravel().astype(np.complex128))


def random_density_matrix(N: int, rank: int, seed: int) -> np.ndarray:
    """Ginibre-induced state ``G G^dagger / Tr(G G^dagger)``, ``G`` of shape ``(N, rank)``.

    ``G`` is filled row-major with standard complex Gaussians from ``seed``.
    """
    if not 1 <= rank <= N:
        raise BadRank(f"rank must lie in 1..{N}, got {rank}")
    g = rng.complex_normals(seed, (N, rank))
    rho = g @ g.conj().T
    rho = rho / np.trace(rho).real
    # Exact Hermitian symmetry; the product is Hermitian only up to rounding.
    return (rho + rho.conj().T) / 2


def random_hermitian(N: int, scale: float = 1.0, seed: int = 0) -> np.ndarray:
    """``(M + M^dagger) / 2`` with ``M`` iid standard complex Gaussian times ``scale``."""
    if N < 1:
        raise ValueError(f"dimension must be positive, got {N}")
    m = scale * rng.complex_normals(seed, (N, N))
    return (m + m.conj().T) / 2


def random_grid(n: int, m: int, seed: int, normalized: bool = True) -> ProbabilityGrid:
    """Grid of iid Exp(1) weights; normalizing makes it uniform on the simplex."""
    w = -np.log1p(-rng.uniforms(seed, n * m)).reshape(n, m)
    if normalized:
        w = w / w.sum()
    return ProbabilityGrid(w)


def _check_permutation(perm, N: int) -> np.ndarray:
    idx = np.asarray(perm)
    if idx.shape != (N,) or not np.issubdtype(idx.dtype, np.integer):
        raise NotAPermutation(f"expected {N} integer indices, got {perm!r}")
    if sorted(idx.tolist()) != list(range(1, N + 1)):
        raise NotAPermutation(f"{perm!r} is not a permutation of 1..{N}")
    return idx - 1


def apply_permutation(rho, perm) -> np.ndarray:
    """Relabel indices: ``out[sigma(j), sigma(k)] = rho[j, k]``.

    ``perm`` lists ``sigma(1), ..., sigma(N)`` using 1-based labels.
    """
    rho = np.asarray(rho, dtype=np.complex128)
    sigma = _check_permutation(perm, rho.shape[0])
    out = np.empty_like(rho)
    out[np.ix_(sigma, sigma)] = rho
    return out
