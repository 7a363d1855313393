import numpy as np
import pytest

from blochsep.generators import build_generators


def test_qubit_basis_by_hand():
    expected = np.array(
        [
            [[-1, 0], [0, 1]],
            [[0, 1], [1, 0]],
            [[0, 1j], [-1j, 0]],
        ]
    )
    np.testing.assert_array_equal(build_generators(2).generators, expected)


def test_qutrit_diagonal_generators():
    g = build_generators(3)
    np.testing.assert_allclose(g[0], -np.diag([1, -1, 0]))
    np.testing.assert_allclose(g[1], -np.diag([1, 1, -2]) / np.sqrt(3))
    assert g.labels == ["w1", "w2", "u12", "u13", "u23", "v12", "v13", "v23"]


def test_qutrit_symmetric_split():
    # first five generators are real symmetric, the last three imaginary antisymmetric
    g = build_generators(3).generators
    for lam in g[:5]:
        np.testing.assert_array_equal(lam, lam.T)
    for lam in g[5:]:
        np.testing.assert_array_equal(lam, -lam.T)
    np.testing.assert_array_equal(build_generators(3).antisymmetric, [False] * 5 + [True] * 3)


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_traceless_hermitian_orthogonal(n):
    g = build_generators(n).generators
    assert g.shape == (n * n - 1, n, n)
    for lam in g:
        assert abs(np.trace(lam)) <= 1e-12
        np.testing.assert_array_equal(lam, lam.conj().T)
    gram = np.einsum("iab,jba->ij", g, g)
    np.testing.assert_allclose(gram, 2 * np.eye(n * n - 1), atol=1e-12)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_completeness(rng, n):
    basis = build_generators(n)
    a = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    h = a + a.conj().T
    h -= np.trace(h) / n * np.eye(n)
    coords = basis.coefficients(h) / 2
    np.testing.assert_allclose(basis.combine(coords), h, atol=1e-10)


def test_cached_and_read_only():
    assert build_generators(4) is build_generators(4)
    with pytest.raises(ValueError):
        build_generators(3).generators[0, 0, 0] = 1


@pytest.mark.parametrize("n", [1, 0, -2, 2.5])
def test_invalid_dimension(n):
    with pytest.raises(ValueError):
        build_generators(n)
