import numpy as np
import pytest

from blochsep.bloch import BlochVector, decompose, outer_radius, reconstruct
from blochsep.linalg import POS_TOL, min_eig, partial_transpose
from blochsep.states import ghz_mixed, isotropic, random_density, random_separable


def test_isotropic_endpoints():
    np.testing.assert_allclose(isotropic(3, 0.0).matrix, np.eye(9) / 9)
    rho = isotropic(3, 1.0)
    phi = np.zeros(9)
    phi[[0, 4, 8]] = 1 / np.sqrt(3)
    np.testing.assert_allclose(rho.matrix, np.outer(phi, phi), atol=1e-16)
    assert rho.dims == (3, 1, 3)


def test_isotropic_range():
    with pytest.warns(UserWarning):
        isotropic(3, -1 / 8)
    for p in (-0.2, 1.01):
        with pytest.raises(ValueError):
            isotropic(3, p)


def test_ghz_endpoints():
    np.testing.assert_allclose(ghz_mixed(3, 0.0).matrix, np.eye(27) / 27)
    rho = ghz_mixed(3, 1.0)
    assert rho.purity() == pytest.approx(1.0)
    for i in range(3):
        assert rho.matrix[13 * i, 13 * i] == pytest.approx(1 / 3)
    with pytest.raises(ValueError):
        ghz_mixed(3, 1.5)


@pytest.mark.parametrize("make,n", [(isotropic, 3), (isotropic, 4), (ghz_mixed, 2), (ghz_mixed, 3)])
def test_affine_in_p(make, n):
    a, p1, p2 = 0.3, 0.2, 0.9
    np.testing.assert_allclose(
        make(n, a * p1 + (1 - a) * p2).matrix,
        a * make(n, p1).matrix + (1 - a) * make(n, p2).matrix,
        atol=1e-15,
    )


def test_random_density_valid_and_seeded():
    a = random_density((2, 2, 2), seed=5)
    b = random_density((2, 2, 2), seed=5)
    np.testing.assert_array_equal(a.matrix, b.matrix)
    assert min_eig(a.matrix) >= 0
    assert np.trace(a.matrix) == pytest.approx(1)


def test_single_term_is_pure_product(rng):
    rho, ens = random_separable((2, 2, 3), 1, rng)
    assert rho.purity() == pytest.approx(1.0)
    assert len(ens) == 1


@pytest.mark.parametrize("dims", [(2, 2, 3), (3, 3, 2), (3, 1, 3)])
def test_separable_is_ppt(rng, dims):
    rho, _ = random_separable(dims, 5, rng)
    for subset in ([0], [1], [2], [0, 1]):
        assert min_eig(partial_transpose(rho, subset)) >= -POS_TOL


@pytest.mark.parametrize("dims", [(2, 2, 3), (3, 3, 3), (3, 1, 3), (3, 2)])
def test_ensemble_bloch_norms(rng, dims):
    _, ens = random_separable(dims, 6, rng)
    np.testing.assert_allclose(np.sum(ens.a**2, axis=1), outer_radius(dims[0]) ** 2, atol=1e-10)
    if len(dims) == 3 and dims[1] > 1:
        np.testing.assert_allclose(np.sum(ens.b**2, axis=1), outer_radius(dims[1]) ** 2, atol=1e-10)


@pytest.mark.parametrize("dims", [(2, 2, 2), (2, 2, 4), (3, 3, 3), (3, 1, 3), (2, 3)])
def test_ensemble_coefficients_match_decomposition(rng, dims):
    rho, ens = random_separable(dims, 7, rng)
    b = ens.bloch_coefficients()
    np.testing.assert_allclose(reconstruct(b), rho.matrix, atol=1e-10)
    np.testing.assert_allclose(b.coefficient_tensor(), decompose(rho).coefficient_tensor(), atol=1e-10)


def test_ensemble_vectors_are_local_bloch_vectors(rng):
    _, ens = random_separable((3, 2, 2), 2, rng)
    v = ens.factors[0][0]
    np.testing.assert_allclose(BlochVector(ens.a[0], 3).to_matrix(), np.outer(v, v.conj()), atol=1e-14)


def test_terms_bounds(rng):
    for terms in (0, 65):
        with pytest.raises(ValueError):
            random_separable((2, 2, 2), terms, rng)
