import numpy as np
import pytest

from blochsep.bloch import decompose, reconstruct
from blochsep.detection import random_contraction
from blochsep.gamma import (
    TransformPair,
    apply_gamma,
    constraint_check,
    gamma_matrix,
    ppt_as_gamma,
    transpose_diagonal,
    transpose_pair,
)
from blochsep.linalg import POS_TOL, is_hermitian, min_eig, partial_transpose
from blochsep.states import isotropic, random_density, random_separable

from conftest import apply_local_maps

HALF_DIAG = np.diag([0.5] * 5 + [-0.5] * 3)


class TestConstraint:
    def test_half_diagonal_saturates(self):
        res = constraint_check(HALF_DIAG, 3)
        assert res.ok and res.max_singular_value == pytest.approx(0.5)

    def test_identity_too_large_for_qutrits(self):
        res = constraint_check(np.eye(8), 3)
        assert not res.ok and res.max_singular_value == pytest.approx(1.0)

    def test_qubit_reflection(self):
        assert constraint_check(np.diag([1.0, 1.0, -1.0]), 2)

    def test_size_mismatch(self):
        with pytest.raises(ValueError):
            constraint_check(np.eye(3), 3)

    def test_pair_rejects_violation(self):
        with pytest.raises(ValueError, match="singular value"):
            TransformPair(np.eye(8) * 0.6, np.eye(8) * 0.5, (3, 3))

    def test_transpose_diagonal(self):
        np.testing.assert_array_equal(transpose_diagonal(3), HALF_DIAG)
        np.testing.assert_array_equal(transpose_diagonal(2), np.diag([1.0, 1.0, -1.0]))


class TestApplyGamma:
    def test_zero_pair_keeps_only_M0(self, rng):
        rho = random_density((2, 3, 2), rng)
        b = decompose(rho)
        out = apply_gamma(b, TransformPair(np.zeros((3, 3)), np.zeros((8, 8)), (2, 3)))
        np.testing.assert_allclose(reconstruct(out), np.kron(np.eye(6), b.M0), atol=1e-15)
        assert min_eig(reconstruct(out)) >= -POS_TOL

    @pytest.mark.parametrize("dims", [(2, 2, 2), (3, 2, 2), (3, 3, 2), (3, 1, 3)])
    def test_matches_direct_local_maps(self, rng, dims):
        # oracle: apply X -> Tr(X) I/n + 1/2 sum R_ij Tr(X l_j) l_i on each party directly
        rho = random_density(dims, rng)
        n1, n2, _ = dims
        r1 = random_contraction(n1, rng)
        r2 = random_contraction(n2, rng) if n2 > 1 else np.zeros((0, 0))
        got = gamma_matrix(decompose(rho), TransformPair(r1, r2, (n1, n2)))
        np.testing.assert_allclose(got, apply_local_maps(rho.matrix, dims, r1, r2), atol=1e-13)

    @pytest.mark.parametrize("which,subset", [("A", [0]), ("B", [1]), ("AB", [0, 1])])
    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_ppt_pairs_are_partial_transposes(self, rng, which, subset, n):
        for _ in range(10):
            rho = random_density((2, 2, n), rng)
            got = gamma_matrix(decompose(rho), ppt_as_gamma(which))
            assert np.abs(got - partial_transpose(rho, subset)).max() <= 1e-12

    def test_transpose_pair_on_qutrits_is_reduction_like(self, rng):
        # scaled transpose: X -> X^T / 2 + Tr(X) I / 6
        rho = random_density((3, 2), rng)
        got = gamma_matrix(decompose(rho), transpose_pair((3, 1)))
        expected = 0.5 * partial_transpose(rho, [0]) + np.kron(np.eye(3), np.trace(rho.matrix.reshape(3, 2, 3, 2), axis1=0, axis2=2)) / 6
        np.testing.assert_allclose(got, expected, atol=1e-14)

    def test_ab_twice_is_identity(self, rng):
        rho = random_density((2, 2, 3), rng)
        t = ppt_as_gamma("AB")
        b = decompose(rho)
        np.testing.assert_allclose(reconstruct(apply_gamma(apply_gamma(b, t), t)), rho.matrix, atol=1e-14)

    def test_b_on_separable_is_positive(self, rng):
        rho, _ = random_separable((2, 2, 2), 4, rng)
        assert min_eig(gamma_matrix(decompose(rho), ppt_as_gamma("B"))) >= -POS_TOL

    def test_isotropic_pure_detected(self):
        out = gamma_matrix(decompose(isotropic(3, 1.0)), TransformPair.bipartite(HALF_DIAG, 3))
        assert min_eig(out) < 0

    def test_trace_hermiticity_linearity(self, rng):
        r1, r2 = random_density((3, 2, 2), rng), random_density((3, 2, 2), rng)
        t = TransformPair(random_contraction(3, rng), random_contraction(2, rng), (3, 2))
        g1, g2 = gamma_matrix(decompose(r1), t), gamma_matrix(decompose(r2), t)
        assert np.trace(g1) == pytest.approx(1.0, abs=1e-12)
        assert is_hermitian(g1, 1e-12)
        mix = decompose(0.25 * r1.matrix + 0.75 * r2.matrix, (3, 2, 2))
        np.testing.assert_allclose(gamma_matrix(mix, t), 0.25 * g1 + 0.75 * g2, atol=1e-14)

    def test_dims_mismatch(self, rng):
        b = decompose(random_density((2, 2, 2), rng))
        with pytest.raises(ValueError):
            apply_gamma(b, TransformPair(HALF_DIAG, HALF_DIAG, (3, 3)))

    def test_ppt_pairs_need_qubits(self):
        with pytest.raises(ValueError):
            ppt_as_gamma("A", dims=(3, 2))
        with pytest.raises(ValueError):
            ppt_as_gamma("C")


@pytest.mark.parametrize("dims", [(2, 2, 2), (2, 2, 4), (3, 3, 2), (3, 1, 3)])
def test_separable_states_stay_positive(rng, dims):
    n1, n2, _ = dims
    for _ in range(10):
        rho, _ = random_separable(dims, int(rng.integers(1, 6)), rng)
        b = decompose(rho)
        for _ in range(10):
            r2 = random_contraction(n2, rng) if n2 > 1 else np.zeros((0, 0))
            t = TransformPair(random_contraction(n1, rng), r2, (n1, n2))
            assert min_eig(gamma_matrix(b, t)) >= -POS_TOL


def test_pair_serialization_roundtrip(rng):
    t = TransformPair(random_contraction(3, rng), random_contraction(2, rng), (3, 2))
    assert TransformPair.from_dict(t.to_dict()) == t
