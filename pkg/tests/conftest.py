import numpy as np
import pytest

from minkowski_trace.states import bell_state, maximally_mixed, pure_state

ACCEPTANCE_LINES = []


def _zeroed(w):
    # 0**p = 0 with eigenvalues at round-off level (32 N eps) counted as zero.
    floor = 32 * len(w) * np.finfo(float).eps * np.max(np.abs(w))
    return np.where(w > floor, w, 0.0)


def brute_force_power(a, p):
    """Reference spectral power via LAPACK, independent of the package solver."""
    w, v = np.linalg.eigh(a)
    return (v * _zeroed(w) ** p) @ v.conj().T


def brute_force_sides(rho, n, m, p):
    """Both sides of the inequality using explicit index loops and numpy.eigh."""
    N = n * m
    padded = np.zeros((N, N), dtype=complex)
    padded[: rho.shape[0], : rho.shape[0]] = rho
    summed = np.zeros((m, m), dtype=complex)
    for j in range(n):
        summed += padded[j * m:(j + 1) * m, j * m:(j + 1) * m]
    lhs = np.sum(_zeroed(np.linalg.eigvalsh(summed)) ** p) ** (1 / p)
    powered = brute_force_power(padded, p)
    traces = np.zeros((n, n), dtype=complex)
    for j in range(n):
        for k in range(n):
            traces[j, k] = sum(powered[j * m + a, k * m + a] for a in range(m))
    rhs = np.sum(_zeroed(np.linalg.eigvalsh(traces)) ** (1 / p))
    return float(lhs), float(rhs)


@pytest.fixture
def bell():
    return bell_state()


@pytest.fixture
def mixed4():
    return maximally_mixed(4)


@pytest.fixture
def ket00():
    return pure_state([1, 0, 0, 0])


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
