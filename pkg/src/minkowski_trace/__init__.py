"""Numerical verification of the block Minkowski trace inequality.

For an ``(n*m) x (n*m)`` density matrix blocked into ``n x n`` blocks
``a_jk`` of size ``m``::

    [Tr (sum_j a_jj)^p]^(1/p)  <=  Tr [(Tr a_jk(p))_{jk}]^(1/p)     (p >= 1)

with the reverse for ``0 < p <= 1``.  The package evaluates both sides,
the gap ``J(p)``, shifted Hermitian and probability-vector variants, and
runs seeded fuzz campaigns.
"""

from .blocks import (
    BlockPartition,
    block,
    block_trace_matrix,
    diagonal_block_sum,
    make_partition,
    pad,
)
from .engine import (
    correlation_measure_J,
    enumerate_partitions,
    is_density_matrix,
    minkowski_lhs,
    minkowski_rhs,
    scan_p,
    scan_p_hermitian,
    scan_partitions,
    shift_to_nonnegative,
    verify_all_permutations,
    verify_density,
    verify_hermitian,
)
from .errors import *  # noqa: F401,F403
from .linalg import (
    HermitianEigensystem,
    hermitian_eigendecomposition,
    is_hermitian,
    matrix_power,
    min_eigenvalue,
    trace,
)
from .matrixfile import format_matrix, load_matrix, parse_matrix, save_matrix
from .report import Direction, InequalityReport
from .scalar import (
    ProbabilityGrid,
    mutual_information,
    p1_function,
    p2_diagonal_function,
    p2_function,
    scalar_correlation_J,
    shannon_entropy,
    vector_minkowski_sides,
    verify_shifted_scalar,
    verify_vector,
)
from .states import (
    apply_permutation,
    bell_state,
    diagonal_from_grid,
    maximally_mixed,
    product_state,
    pure_state,
    random_density_matrix,
    random_grid,
    random_hermitian,
)

__version__ = "0.1.0"
