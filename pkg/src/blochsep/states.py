"""Example states, random states and random separable ensembles."""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field

import numpy as np

from .bloch import BlochVector, TripartiteBloch, tripartite_dims
from .linalg import DensityMatrix, kron

MAX_TERMS = 64


def _rng(seed):
    return seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)


def random_unit_vector(n: int, rng) -> np.ndarray:
    """Uniformly random pure state from a normalized complex Gaussian draw."""
    v = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    return v / np.linalg.norm(v)


def isotropic(n: int, p: float) -> DensityMatrix:
    """``(1-p)/n^2 I + p |Phi+><Phi+|`` on ``n x n``, returned with dims ``(n, 1, n)``.

    Negative ``p`` down to ``-1/(n^2-1)`` is still a state and is allowed
    with a warning.
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    lo = -1.0 / (n * n - 1)
    if not lo - 1e-15 <= p <= 1.0:
        raise ValueError(f"isotropic state needs {lo:.6g} <= p <= 1, got {p}")
    if p < 0:
        warnings.warn("negative isotropic weight; the state is separable", stacklevel=2)
    phi = np.zeros(n * n)
    phi[:: n + 1] = 1.0 / np.sqrt(n)
    mat = (1 - p) / n**2 * np.eye(n * n) + p * np.outer(phi, phi)
    return DensityMatrix((n, 1, n), mat)


def ghz_mixed(n: int, p: float) -> DensityMatrix:
    """``(1-p)/n^3 I + p |GHZ><GHZ|`` with ``|GHZ> = sum_i |iii> / sqrt(n)``."""
    if n < 2:
        raise ValueError("n must be >= 2")
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"ghz_mixed needs 0 <= p <= 1, got {p}")
    d = n**3
    ghz = np.zeros(d)
    ghz[:: n * n + n + 1] = 1.0 / np.sqrt(n)
    mat = (1 - p) / d * np.eye(d) + p * np.outer(ghz, ghz)
    return DensityMatrix((n, n, n), mat)


FAMILIES = {"isotropic": isotropic, "ghz-mixed": ghz_mixed}


def family(name: str):
    try:
        return FAMILIES[name]
    except KeyError:
        raise ValueError(f"unknown family {name!r}; choose from {sorted(FAMILIES)}") from None


def random_density(dims, seed=None) -> DensityMatrix:
    """``G G^dagger / Tr(G G^dagger)`` for a complex Gaussian ``G``."""
    rng = _rng(seed)
    dims = tuple(int(d) for d in dims)
    d = int(np.prod(dims))
    g = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
    rho = g @ g.conj().T
    rho = 0.5 * (rho + rho.conj().T)
    return DensityMatrix(dims, rho / np.trace(rho).real)


@dataclass(frozen=True)
class SeparableEnsemble:
    """A finite mixture of pure product states.

    ``factors[i]`` holds one unit vector per subsystem of ``dims``. Two-party
    ensembles are viewed as ``(N1, 1, N2)`` when mapped to coefficient
    operators, so the middle Bloch vectors are empty.
    """

    dims: tuple[int, ...]
    weights: np.ndarray
    factors: tuple[tuple[np.ndarray, ...], ...]
    a: np.ndarray = field(init=False, repr=False)
    b: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        w = np.asarray(self.weights, dtype=float)
        if np.any(w <= 0) or abs(w.sum() - 1) > 1e-12:
            raise ValueError("weights must be positive and sum to 1")
        object.__setattr__(self, "weights", w)
        n1, n2, _ = tripartite_dims(self.dims)
        a = np.array([BlochVector.of_state(np.outer(f[0], f[0].conj())).coords for f in self.factors])
        if len(self.dims) == 3:
            b = np.array([BlochVector.of_state(np.outer(f[1], f[1].conj())).coords for f in self.factors])
        else:
            b = np.zeros((len(self.factors), 0))
        object.__setattr__(self, "a", a.reshape(len(self.factors), n1 * n1 - 1))
        object.__setattr__(self, "b", b.reshape(len(self.factors), n2 * n2 - 1))

    def __len__(self) -> int:
        return len(self.weights)

    def third_projectors(self) -> np.ndarray:
        return np.array([np.outer(f[-1], f[-1].conj()) for f in self.factors])

    def density_matrix(self) -> DensityMatrix:
        d = int(np.prod(self.dims))
        rho = np.zeros((d, d), dtype=np.complex128)
        for w, f in zip(self.weights, self.factors):
            psi = kron(*[v.reshape(-1, 1) for v in f]).ravel()
            rho += w * np.outer(psi, psi.conj())
        return DensityMatrix(self.dims, rho)

    def bloch_coefficients(self) -> TripartiteBloch:
        """Coefficient operators assembled directly from the ensemble's Bloch vectors.

            M0   = sum_i p_i w_i / (N1 N2)
            M_k  = sum_i a_i[k] p_i w_i / (2 N2)
            Mt_l = sum_i b_i[l] p_i w_i / (2 N1)
            M_kl = sum_i a_i[k] b_i[l] p_i w_i / 4

        where ``w_i`` is the projector on the third factor.
        """
        n1, n2, n3 = tripartite_dims(self.dims)
        pw = self.weights[:, None, None] * self.third_projectors()
        M0 = pw.sum(axis=0) / (n1 * n2)
        M = np.einsum("ik,icd->kcd", self.a, pw) / (2 * n2)
        Mt = np.einsum("il,icd->lcd", self.b, pw) / (2 * n1)
        Mij = np.einsum("ik,il,icd->klcd", self.a, self.b, pw) / 4
        return TripartiteBloch((n1, n2, n3), M0, M, Mt, Mij)


def random_separable(dims, terms: int, seed=None) -> tuple[DensityMatrix, SeparableEnsemble]:
    """Random mixture of ``terms`` pure product states and its ensemble."""
    if not 1 <= terms <= MAX_TERMS:
        raise ValueError(f"terms must be in [1, {MAX_TERMS}], got {terms}")
    rng = _rng(seed)
    dims = tuple(int(d) for d in dims)
    w = rng.random(terms) + 1e-3
    w /= w.sum()
    factors = tuple(tuple(random_unit_vector(d, rng) for d in dims) for _ in range(terms))
    ens = SeparableEnsemble(dims, w, factors)
    return ens.density_matrix(), ens
