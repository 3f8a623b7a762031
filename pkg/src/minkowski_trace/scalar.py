"""Probability-vector forms of the block Minkowski inequality.

A grid ``P`` of shape ``(n, m)`` stands for the diagonal of an
``(n*m) x (n*m)`` matrix in row-major order, so row ``j`` is the diagonal
of block ``a_jj`` and column ``alpha`` collects entry ``alpha`` of every
diagonal block.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.special import entr

from .errors import ExponentOutOfRange, InvalidGrid, NotNormalized
from .report import SLACK_RTOL, InequalityReport, make_report

NORMALIZATION_ATOL = 1e-10
MI_ROUNDOFF = 1e-12


@dataclass(frozen=True)
class ProbabilityGrid:
    """Nonnegative finite reals ``P[j, alpha]`` on an ``n x m`` grid."""

    values: np.ndarray

    def __post_init__(self):
        v = np.array(self.values, dtype=np.float64)
        if v.ndim != 2 or v.size == 0:
            raise InvalidGrid(f"grid must be a nonempty 2-D array, got shape {v.shape}")
        if not np.all(np.isfinite(v)):
            raise InvalidGrid("grid has non-finite entries")
        if np.any(v < 0):
            idx = tuple(int(i) for i in np.argwhere(v < 0)[0])
            raise InvalidGrid(f"grid entry {idx} is negative ({v[idx]})")
        v.setflags(write=False)
        object.__setattr__(self, "values", v)

    @classmethod
    def from_flat(cls, values, n: int, m: int) -> "ProbabilityGrid":
        """Build from ``n*m`` numbers listed row by row."""
        flat = np.asarray(values, dtype=np.float64).ravel()
        if flat.size != n * m:
            raise InvalidGrid(f"expected n*m = {n * m} values, got {flat.size}")
        return cls(flat.reshape(n, m))

    @property
    def n(self) -> int:
        return self.values.shape[0]

    @property
    def m(self) -> int:
        return self.values.shape[1]

    @property
    def normalized(self) -> bool:
        return abs(float(self.values.sum()) - 1.0) <= NORMALIZATION_ATOL


def pad_vector(values, n: int, m: int) -> ProbabilityGrid:
    """Append zeros to a flat vector of at most ``n*m`` entries and reshape."""
    flat = np.asarray(values, dtype=np.float64).ravel()
    if flat.size > n * m:
        raise InvalidGrid(f"{flat.size} values do not fit an {n}x{m} grid")
    return ProbabilityGrid.from_flat(np.concatenate([flat, np.zeros(n * m - flat.size)]), n, m)


def as_grid(P) -> ProbabilityGrid:
    return P if isinstance(P, ProbabilityGrid) else ProbabilityGrid(P)


def _check_p(p: float) -> float:
    p = float(p)
    if not p > 0 or not np.isfinite(p):
        raise ExponentOutOfRange(f"exponent must be a positive real, got {p}")
    return p


def vector_minkowski_sides(P, p: float) -> tuple[float, float]:
    """Return ``(lhs, rhs)`` of the vector inequality.

    ``lhs = [sum_a (sum_j P_ja)^p]^(1/p)`` is the p-norm of the column sums,
    ``rhs = sum_j [sum_a P_ja^p]^(1/p)`` is the sum of the row p-norms.
    """
    v = as_grid(P).values
    p = _check_p(p)
    lhs = np.sum(v.sum(axis=0) ** p) ** (1.0 / p)
    rhs = np.sum(np.sum(v**p, axis=1) ** (1.0 / p))
    return float(lhs), float(rhs)


def verify_vector(P, p: float, tol: float = SLACK_RTOL) -> InequalityReport:
    g = as_grid(P)
    lhs, rhs = vector_minkowski_sides(g, p)
    return make_report(lhs, rhs, p, n=g.n, m=g.m, tol=tol)


def _check_x(x: float) -> float:
    x = float(x)
    if not (x >= 0 and np.isfinite(x)):
        raise ValueError(f"shift x must be a finite nonnegative real, got {x}")
    return x


def p1_function(P, x: float, p: float) -> float:
    """``{sum_a (n x + sum_j P_ja)^p}^(1/p)``."""
    g = as_grid(P)
    x, p = _check_x(x), _check_p(p)
    cols = g.values.sum(axis=0) + g.n * x
    return float(np.sum(cols**p) ** (1.0 / p))


def p2_function(P, x: float, p: float) -> float:
    """``sum_j {[(sum_a P_ja) + m x]^p}^(1/p)``, evaluated literally.

    On nonnegative scalars the two powers cancel, so this is the total
    mass plus ``n m x``.
    """
    g = as_grid(P)
    x, p = _check_x(x), _check_p(p)
    rows = g.values.sum(axis=1) + g.m * x
    return float(np.sum((rows**p) ** (1.0 / p)))


def p2_diagonal_function(P, x: float, p: float) -> float:
    """``sum_j [sum_a (P_ja + x)^p]^(1/p)``.

    This is the right-hand side of the shifted matrix inequality for the
    diagonal matrix ``diag(P) + x I``.  For ``p >= 1`` it sits between
    :func:`p1_function` and :func:`p2_function`.
    """
    g = as_grid(P)
    x, p = _check_x(x), _check_p(p)
    return float(np.sum(np.sum((g.values + x) ** p, axis=1) ** (1.0 / p)))


def verify_shifted_scalar(P, x: float, p: float, tol: float = SLACK_RTOL) -> InequalityReport:
    g = as_grid(P)
    lhs, rhs = p1_function(g, x, p), p2_function(g, x, p)
    return make_report(lhs, rhs, p, x=x, n=g.n, m=g.m, tol=tol)


def scalar_correlation_J(P, p: float) -> float:
    """``rhs - lhs`` of the vector inequality for a normalized grid, ``p >= 1``."""
    g = as_grid(P)
    if not g.normalized:
        raise InvalidGrid("scalar J needs a normalized grid")
    p = _check_p(p)
    if p < 1:
        raise ExponentOutOfRange(f"J(p) is defined for p >= 1 only, got {p}")
    lhs, rhs = vector_minkowski_sides(g, p)
    return rhs - lhs


def shannon_entropy(weights) -> float:
    """Entropy in nats with ``0 ln 0 = 0``."""
    w = np.asarray(weights, dtype=np.float64)
    if np.any(w < 0) or not np.all(np.isfinite(w)):
        raise InvalidGrid("weights must be finite and nonnegative")
    if abs(float(w.sum()) - 1.0) > NORMALIZATION_ATOL:
        raise NotNormalized(f"weights sum to {w.sum()!r}, not 1")
    return float(np.sum(entr(w)))


def mutual_information(P) -> float:
    """``H(row sums) + H(column sums) - H(P)`` in nats."""
    g = as_grid(P)
    if not g.normalized:
        raise NotNormalized(f"grid sums to {g.values.sum()!r}, not 1")
    v = g.values
    info = (
        float(np.sum(entr(v.sum(axis=1))))
        + float(np.sum(entr(v.sum(axis=0))))
        - float(np.sum(entr(v)))
    )
    # I >= 0 exactly; cancellation can leave a few ulps below zero.
    return 0.0 if -MI_ROUNDOFF < info < 0.0 else info
