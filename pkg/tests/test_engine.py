import math

import numpy as np
import pytest
from conftest import _zeroed, brute_force_sides
from numpy.testing import assert_allclose

from minkowski_trace.blocks import make_partition
from minkowski_trace.engine import (
    correlation_measure_J,
    density_failures,
    enumerate_partitions,
    minkowski_lhs,
    minkowski_rhs,
    scan_p,
    scan_partitions,
    shift_to_nonnegative,
    verify_all_permutations,
    verify_density,
    verify_hermitian,
)
from minkowski_trace.errors import (
    ExponentOutOfRange,
    NotDensityMatrix,
    NotHermitian,
    PartitionTooSmall,
    ShiftInsufficient,
    TooManyPermutations,
)
from minkowski_trace.report import Direction
from minkowski_trace.scalar import vector_minkowski_sides
from minkowski_trace.states import (
    apply_permutation,
    diagonal_from_grid,
    maximally_mixed,
    random_density_matrix,
    random_grid,
    random_hermitian,
)

SQRT2 = math.sqrt(2)


class TestSides:
    def test_maximally_mixed_closed_form(self, mixed4):
        for p in (0.5, 2, 3):
            expected = 2 ** ((1 - p) / p)
            assert minkowski_lhs(mixed4, (2, 2), p) == pytest.approx(expected, abs=1e-12)
            assert minkowski_rhs(mixed4, (2, 2), p) == pytest.approx(expected, abs=1e-12)

    def test_product_ket(self, ket00):
        assert minkowski_lhs(ket00, (2, 2), 3) == pytest.approx(1, abs=1e-12)
        assert minkowski_rhs(ket00, (2, 2), 3) == pytest.approx(1, abs=1e-12)

    def test_bell(self, bell):
        assert brute_force_sides(bell, 2, 2, 2) == pytest.approx((1 / SQRT2, SQRT2), abs=1e-12)
        assert minkowski_lhs(bell, (2, 2), 2) == pytest.approx(1 / SQRT2, abs=1e-12)
        assert minkowski_rhs(bell, (2, 2), 2) == pytest.approx(SQRT2, abs=1e-12)

    @pytest.mark.parametrize("N, n, m", [(4, 2, 2), (6, 2, 3), (6, 3, 2), (3, 2, 2), (5, 2, 3)])
    @pytest.mark.parametrize("p", [0.3, 0.5, 1.5, 2, 3.7])
    def test_against_brute_force(self, N, n, m, p):
        for seed in range(5):
            rho = random_density_matrix(N, 1 + seed % N, seed)
            rep = verify_density(rho, (n, m), p)
            lhs, rhs = brute_force_sides(rho, n, m, p)
            assert rep.lhs == pytest.approx(lhs, abs=1e-10)
            assert rep.rhs == pytest.approx(rhs, abs=1e-10)


class TestVerifyDensity:
    def test_equality_reversed(self, mixed4):
        rep = verify_density(mixed4, (2, 2), 0.5)
        assert rep.direction is Direction.GE
        assert rep.satisfied and abs(rep.margin) <= 1e-10

    def test_bell(self, bell):
        rep = verify_density(bell, make_partition(4, 2, 2), 2)
        assert rep.direction is Direction.LE and rep.satisfied
        assert rep.lhs == pytest.approx(1 / SQRT2, abs=1e-12)
        assert rep.rhs == pytest.approx(SQRT2, abs=1e-12)
        assert rep.j_value == pytest.approx(1 / SQRT2, abs=1e-12)

    def test_p_one_collapse(self):
        rep = verify_density(random_density_matrix(4, 3, 1), (2, 2), 1)
        assert rep.direction is Direction.EQ
        assert abs(rep.lhs - 1) <= 1e-10 and abs(rep.rhs - 1) <= 1e-10
        assert rep.satisfied

    def test_padding_applied(self):
        rho = random_density_matrix(3, 3, 4)
        rep = verify_density(rho, (2, 2), 2)
        assert rep.padding == 1 and rep.satisfied

    def test_partition_too_small(self):
        with pytest.raises(PartitionTooSmall):
            verify_density(maximally_mixed(5), (2, 2), 2)

    def test_failure_names(self):
        with pytest.raises(NotDensityMatrix) as info:
            verify_density(np.diag([1.0, -1.0, 0.5, 0.5]), (2, 2), 2)
        assert info.value.failures == ("psd",)
        assert "not positive semidefinite" in str(info.value)
        with pytest.raises(NotDensityMatrix) as info:
            verify_density(np.eye(4), (2, 2), 2)
        assert info.value.failures == ("trace",)
        bad = maximally_mixed(4)
        bad[0, 1] = 0.1
        assert density_failures(bad)[0] == ["hermitian"]

    @pytest.mark.parametrize("p", [0, -1, float("nan"), float("inf")])
    def test_rejects_bad_exponent(self, mixed4, p):
        with pytest.raises(ExponentOutOfRange):
            verify_density(mixed4, (2, 2), p)

    def test_degenerate_partitions(self):
        rho = random_density_matrix(4, 4, 2)
        for part in [(1, 4), (4, 1)]:
            for p in (0.5, 2):
                assert verify_density(rho, part, p).satisfied
        # n = 1: rhs is [Tr rho^p]^(1/p) = lhs, saturated.
        rep = verify_density(rho, (1, 4), 2)
        assert abs(rep.j_value) <= 1e-12


class TestCorrelationJ:
    def test_values(self, mixed4, bell, ket00):
        assert abs(correlation_measure_J(mixed4, (2, 2), 2)) <= 1e-10
        assert correlation_measure_J(bell, (2, 2), 2) == pytest.approx(1 / SQRT2, abs=1e-12)
        assert abs(correlation_measure_J(ket00, (2, 2), 2)) <= 1e-10

    def test_undefined_below_one(self, mixed4):
        with pytest.raises(ExponentOutOfRange):
            correlation_measure_J(mixed4, (2, 2), 0.5)


class TestShift:
    def test_psd_unchanged(self):
        a = np.diag([0.2, 0.8])
        shifted, x = shift_to_nonnegative(a)
        assert x == 0 and np.array_equal(shifted, a)

    def test_pauli(self):
        shifted, x = shift_to_nonnegative([[0, 1], [1, 0]])
        assert x == pytest.approx(1)
        assert_allclose(shifted, [[1, 1], [1, 1]], atol=1e-14)

    def test_margin(self):
        shifted, x = shift_to_nonnegative(np.diag([-2.0, 5.0]), 0.5)
        assert x == pytest.approx(2.5)
        assert_allclose(shifted, np.diag([0.5, 7.5]))

    def test_not_hermitian(self):
        with pytest.raises(NotHermitian):
            shift_to_nonnegative([[0, 1], [0, 0]])


class TestVerifyHermitian:
    def test_zero_matrix_shift_one(self):
        rep = verify_hermitian(np.zeros((4, 4)), (2, 2), 2, 1)
        assert rep.lhs == pytest.approx(2 * SQRT2, abs=1e-12)
        assert rep.rhs == pytest.approx(2 * SQRT2, abs=1e-12)
        assert rep.satisfied and rep.x == 1

    def test_pauli_tensor_identity(self):
        a = np.kron([[0, 1], [1, 0]], np.eye(2))
        rep = verify_hermitian(a, (2, 2), 2, 1)
        lhs, rhs = brute_force_sides(a + np.eye(4), 2, 2, 2)
        assert rep.satisfied
        assert (rep.lhs, rep.rhs) == pytest.approx((lhs, rhs), abs=1e-12)

    def test_random_reversed(self):
        for seed in range(100):
            a = random_hermitian(4, 1.0, seed)
            x = -np.linalg.eigvalsh(a)[0] + 0.1
            rep = verify_hermitian(a, (2, 2), 0.5, x)
            assert rep.direction is Direction.GE and rep.satisfied

    def test_shift_insufficient(self):
        with pytest.raises(ShiftInsufficient):
            verify_hermitian(np.diag([-1.0, 0, 0, 2]), (2, 2), 2, 0.5)

    def test_padded_zeros_are_shifted(self):
        # padding precedes the shift, so a negative x is caught on the padded block
        with pytest.raises(ShiftInsufficient):
            verify_hermitian(np.diag([3.0, 4.0, 5.0]), (2, 2), 2, -1)

    def test_x_zero_matches_density_bitwise(self):
        for seed in range(10):
            rho = random_density_matrix(3 + seed % 4, 2, seed)
            for p in (0.4, 2.5):
                assert verify_hermitian(rho, (2, 3), p, 0) == verify_density(rho, (2, 3), p)


class TestScans:
    def test_scan_p_mixed(self, mixed4):
        reps = scan_p(mixed4, (2, 2), [0.5, 1, 2, 3])
        assert [r.p for r in reps] == [0.5, 1, 2, 3]
        assert all(abs(r.j_value) <= 1e-10 for r in reps)

    def test_scan_p_bell(self, bell):
        r1, r2 = scan_p(bell, (2, 2), [1, 2])
        assert abs(r1.margin) <= 1e-10
        assert r2.margin == pytest.approx(1 / SQRT2, abs=1e-12)

    def test_scan_p_matches_single(self):
        rho = random_density_matrix(6, 4, 3)
        ps = [0.3, 1, 2.2]
        assert scan_p(rho, (3, 2), ps) == [verify_density(rho, (3, 2), p) for p in ps]

    def test_scan_p_empty(self, mixed4):
        with pytest.raises(ValueError):
            scan_p(mixed4, (2, 2), [])

    @pytest.mark.parametrize("N, pad, expected", [
        (4, 0, [(2, 2)]),
        (6, 0, [(2, 3), (3, 2)]),
        (5, 1, [(2, 3), (3, 2)]),
        (4, 2, [(2, 2), (2, 3), (3, 2)]),
        (7, 0, []),
    ])
    def test_enumerate_partitions(self, N, pad, expected):
        assert [(p.n, p.m) for p in enumerate_partitions(N, pad)] == expected

    def test_scan_partitions(self):
        rho = random_density_matrix(5, 5, 2)
        pairs = scan_partitions(rho, 2, 1)
        assert [(p.n, p.m, p.padding) for p, _ in pairs] == [(2, 3, 1), (3, 2, 1)]
        assert all(r.satisfied for _, r in pairs)


class TestPermutations:
    def test_mixed_all_equal(self, mixed4):
        out = verify_all_permutations(mixed4, (2, 2), 2)
        assert len(out) == 24
        assert all(abs(r.j_value) <= 1e-10 for _, r in out)

    def test_bell(self, bell):
        out = verify_all_permutations(bell, (2, 2), 2)
        assert len(out) == 24 and all(r.satisfied for _, r in out)
        assert len({perm for perm, _ in out}) == 24

    def test_diagonal_matches_scalar(self):
        grid = random_grid(2, 2, 5)
        for perm, rep in verify_all_permutations(diagonal_from_grid(grid), (2, 2), 2):
            permuted = np.empty(4)
            permuted[np.array(perm) - 1] = grid.values.ravel()
            lhs, rhs = vector_minkowski_sides(permuted.reshape(2, 2), 2)
            assert (rep.lhs, rep.rhs) == pytest.approx((lhs, rhs), abs=1e-12)

    def test_report_is_for_conjugated_matrix(self):
        rho = random_density_matrix(4, 2, 9)
        for perm, rep in verify_all_permutations(rho, (2, 2), 0.5)[:5]:
            assert rep == verify_density(apply_permutation(rho, perm), (2, 2), 0.5)

    def test_too_many(self):
        with pytest.raises(TooManyPermutations):
            verify_all_permutations(maximally_mixed(9), (3, 3), 2)

    def test_sampled(self):
        rho = random_density_matrix(9, 9, 1)
        out = verify_all_permutations(rho, (3, 3), 2, samples=10, seed=4)
        assert len(out) == 10 and all(r.satisfied for _, r in out)
        again = verify_all_permutations(rho, (3, 3), 2, samples=10, seed=4)
        assert [p for p, _ in out] == [p for p, _ in again]


def test_tensor_product_lhs_is_schatten_norm():
    for seed in range(10):
        rho_b = random_density_matrix(2, 2, seed)
        rho_c = random_density_matrix(3, 1 + seed % 3, seed + 100)
        for p in (0.5, 2, 3):
            expected = np.sum(_zeroed(np.linalg.eigvalsh(rho_c)) ** p) ** (1 / p)
            lhs = minkowski_lhs(np.kron(rho_b, rho_c), (2, 3), p)
            assert abs(lhs - expected) <= 1e-10


def test_direction_property_population():
    for seed in range(150):
        N, parts = [(4, [(2, 2), (2, 3)]), (6, [(2, 3), (3, 2), (2, 4)]),
                    (8, [(2, 4), (4, 2), (3, 3)]), (9, [(3, 3), (2, 5)])][seed % 4]
        rho = random_density_matrix(N, 1 + seed % N, seed)
        for part in parts:
            for rep in scan_p(rho, part, [0.3, 0.5, 0.8, 1, 1.5, 2, 3, 5]):
                assert rep.margin >= -1e-9
