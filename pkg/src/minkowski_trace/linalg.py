"""Dense Hermitian linear algebra: Jacobi eigensolver and spectral powers.

Matrices are plain ``numpy`` complex arrays of shape ``(N, N)``.  The
eigensolver is a cyclic two-sided Jacobi method for complex Hermitian
input; each sweep visits every index pair once using round-robin
ordering, so the ``N // 2`` disjoint rotations of one round are applied
together as a single unitary.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import (
    DimensionMismatch,
    NoConvergence,
    NotHermitian,
    NotPositiveSemidefinite,
)

MAX_SWEEPS = 100
OFF_DIAGONAL_RTOL = 1e-12
CLIP_RTOL = 1e-10
HERMITIAN_RTOL = 1e-10
# Eigenvalues within this many N * eps of the spectral radius count as zero
# in fractional powers: x**p amplifies round-off near 0 for p < 1.
ZERO_FLOOR_EPS = 32


@dataclass(frozen=True)
class HermitianEigensystem:
    """Ascending eigenvalues and the matching unit eigenvectors (columns)."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    @property
    def dim(self) -> int:
        return self.eigenvalues.shape[0]

    def reconstruct(self) -> np.ndarray:
        u = self.eigenvectors
        return (u * self.eigenvalues) @ u.conj().T


def as_matrix(a) -> np.ndarray:
    """Coerce ``a`` to a finite square complex128 array."""
    a = np.asarray(a, dtype=np.complex128)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] == 0:
        raise DimensionMismatch(f"expected a nonempty square matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix has non-finite entries")
    return a


def max_abs(a) -> float:
    a = np.asarray(a)
    return float(np.max(np.abs(a))) if a.size else 0.0


def clip_tolerance(a) -> float:
    """Eigenvalues in ``[-clip_tolerance(a), 0)`` are treated as round-off."""
    return CLIP_RTOL * max(1.0, max_abs(a))


def hermitian_tolerance(a) -> float:
    return HERMITIAN_RTOL * max(1.0, max_abs(a))


def is_hermitian(a, tol: float = 1e-12) -> bool:
    """True iff ``max |A_jk - conj(A_kj)| <= tol``."""
    a = as_matrix(a)
    return max_abs(a - a.conj().T) <= tol


def trace(a) -> complex:
    return complex(np.trace(np.asarray(a)))


def _require_hermitian(a) -> np.ndarray:
    a = as_matrix(a)
    dev = max_abs(a - a.conj().T)
    if dev > hermitian_tolerance(a):
        raise NotHermitian(f"matrix is not Hermitian (max deviation {dev:.3e})")
    # Remove the sub-tolerance anti-Hermitian part so rotations see exact symmetry.
    return (a + a.conj().T) / 2


@lru_cache(maxsize=None)
def _round_robin(n: int):
    """Rounds of disjoint pairs covering all ``(p, q)``, ``p < q``, once."""
    players = list(range(n)) + ([-1] if n % 2 else [])
    k = len(players)
    rounds = []
    for _ in range(k - 1):
        pairs = []
        for i in range(k // 2):
            a, b = players[i], players[k - 1 - i]
            if a >= 0 and b >= 0:
                pairs.append((min(a, b), max(a, b)))
        if pairs:
            pp, qq = zip(*sorted(pairs))
            rounds.append((np.array(pp), np.array(qq)))
        players = [players[0], players[-1]] + players[1:-1]
    return tuple(rounds)


def _off_norm(a: np.ndarray) -> float:
    off = a - np.diag(np.diag(a))
    return float(np.sqrt(np.sum(off.real**2 + off.imag**2)))


def hermitian_eigendecomposition(a) -> HermitianEigensystem:
    """Diagonalise a Hermitian matrix with cyclic complex Jacobi rotations.

    Each rotation first removes the phase of ``A[p, q]`` and then applies
    the real symmetric Jacobi rotation that annihilates it.  Sweeps stop
    once the off-diagonal Frobenius norm is at most ``1e-12 * ||A||_F``.

    Raises
    ------
    NotHermitian
        If ``a`` deviates from its conjugate transpose beyond
        ``1e-10 * max(1, max|A|)``.
    NoConvergence
        If 100 sweeps are not enough.
    """
    a = _require_hermitian(a)
    n = a.shape[0]
    v = np.eye(n, dtype=np.complex128)
    target = OFF_DIAGONAL_RTOL * float(np.linalg.norm(a))

    for _ in range(MAX_SWEEPS):
        if _off_norm(a) <= target:
            break
        for p, q in _round_robin(n):
            apq = a[p, q]
            mag = np.abs(apq)
            active = mag > 0.0
            if not active.any():
                continue
            safe_mag = np.where(active, mag, 1.0)
            phase = np.where(active, apq / safe_mag, 1.0)
            theta = (a[q, q].real - a[p, p].real) / (2.0 * safe_mag)
            sign = np.where(theta >= 0.0, 1.0, -1.0)
            t = sign / (np.abs(theta) + np.hypot(theta, 1.0))
            t = np.where(active, t, 0.0)
            c = 1.0 / np.sqrt(1.0 + t * t)
            s = t * c

            rot = np.eye(n, dtype=np.complex128)
            back = np.conj(phase)
            rot[p, p] = c
            rot[p, q] = s
            rot[q, p] = -s * back
            rot[q, q] = c * back
            a = rot.conj().T @ a @ rot
            v = v @ rot
    else:
        if _off_norm(a) > target:
            raise NoConvergence(f"Jacobi iteration did not converge in {MAX_SWEEPS} sweeps")

    w = np.diag(a).real.copy()
    order = np.argsort(w, kind="stable")
    return HermitianEigensystem(w[order], v[:, order])


def min_eigenvalue(a) -> float:
    return float(hermitian_eigendecomposition(a).eigenvalues[0])


def _is_integer(p: float) -> bool:
    return float(p).is_integer()


def power_from_eigensystem(eig: HermitianEigensystem, p: float, clip_tol: float) -> np.ndarray:
    """``U diag(lambda^p) U^dagger`` with the package's clipping rules."""
    w = eig.eigenvalues
    if p <= 0:
        raise ValueError(f"exponent must be positive, got {p}")
    if _is_integer(p):
        wp = w ** int(p)
    else:
        if w[0] < -clip_tol:
            raise NotPositiveSemidefinite(
                f"not positive semidefinite: eigenvalue {w[0]:.3e} below -{clip_tol:.1e}"
            )
        floor = ZERO_FLOOR_EPS * len(w) * np.finfo(np.float64).eps * np.max(np.abs(w))
        wp = np.power(np.where(w > floor, w, 0.0), p)
    u = eig.eigenvectors
    return (u * wp) @ u.conj().T


def matrix_power(a, p: float) -> np.ndarray:
    """Spectral power ``A**p`` of a Hermitian matrix for real ``p > 0``.

    Non-integer ``p`` requires ``A`` to be positive semidefinite up to
    ``clip_tolerance(A)``.  Small negative eigenvalues, and positive ones
    at round-off level (``32 N eps`` relative), are set to zero and
    ``0**p = 0``.
    """
    a = as_matrix(a)
    return power_from_eigensystem(hermitian_eigendecomposition(a), p, clip_tolerance(a))
