"""Operator-valued Bloch decomposition of tripartite states.

A state on ``N1 x N2 x N3`` is written as

    rho = I⊗I⊗M0 + sum_i l_i⊗I⊗M_i + sum_j I⊗l_j⊗Mt_j + sum_ij l_i⊗l_j⊗M_ij

with ``l`` the SU(N1), SU(N2) generators and every ``M`` an operator on the
third subsystem. Bipartite ``N1 x N2`` states are handled as
``(N1, 1, N2)``: SU(1) has no generators, so ``Mt`` and ``M_ij`` are empty.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .generators import generators_or_empty
from .linalg import DensityMatrix, as_matrix, min_eig


def inner_radius(n: int) -> float:
    """Radius of the largest ball of Bloch vectors that are all valid states."""
    if n < 2:
        raise ValueError("n must be >= 2")
    return float(np.sqrt(2.0 / (n * (n - 1))))


def outer_radius(n: int) -> float:
    """Radius of the smallest ball containing every valid Bloch vector."""
    if n < 2:
        raise ValueError("n must be >= 2")
    return float(np.sqrt(2.0 * (1.0 - 1.0 / n)))


@dataclass(frozen=True)
class BlochVector:
    coords: np.ndarray
    n: int

    def __post_init__(self):
        c = np.asarray(self.coords, dtype=float).reshape(-1)
        if c.size != self.n * self.n - 1:
            raise ValueError(f"a Bloch vector for n={self.n} has {self.n**2 - 1} entries, got {c.size}")
        if not np.all(np.isfinite(c)):
            raise ValueError("Bloch vector has non-finite entries")
        object.__setattr__(self, "coords", c)

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.coords))

    @classmethod
    def of_state(cls, rho) -> "BlochVector":
        """Bloch vector ``r_i = Tr(rho l_i)`` of a single-system state."""
        rho = as_matrix(rho)
        basis = generators_or_empty(rho.shape[0])
        return cls(basis.coefficients(rho), rho.shape[0])

    def to_matrix(self) -> np.ndarray:
        """``I/n + (1/2) sum_i r_i l_i``."""
        basis = generators_or_empty(self.n)
        return np.eye(self.n) / self.n + 0.5 * basis.combine(self.coords)


@dataclass(frozen=True)
class TripartiteBloch:
    """Coefficient operators of a tripartite operator.

    Shapes: ``M0`` is ``(N3, N3)``, ``M`` is ``(K1, N3, N3)``, ``Mt`` is
    ``(K2, N3, N3)`` and ``Mij`` is ``(K1, K2, N3, N3)`` where
    ``Kk = Nk**2 - 1``.
    """

    dims: tuple[int, int, int]
    M0: np.ndarray
    M: np.ndarray
    Mt: np.ndarray
    Mij: np.ndarray

    def __post_init__(self):
        n1, n2, n3 = (int(d) for d in self.dims)
        k1, k2 = n1 * n1 - 1, n2 * n2 - 1
        expected = {
            "M0": (n3, n3),
            "M": (k1, n3, n3),
            "Mt": (k2, n3, n3),
            "Mij": (k1, k2, n3, n3),
        }
        for name, shape in expected.items():
            arr = np.asarray(getattr(self, name), dtype=np.complex128)
            if arr.shape != shape:
                raise ValueError(f"{name} has shape {arr.shape}, expected {shape} for dims {self.dims}")
            arr = arr.copy()
            arr.setflags(write=False)
            object.__setattr__(self, name, arr)
        object.__setattr__(self, "dims", (n1, n2, n3))

    def coefficient_tensor(self) -> np.ndarray:
        """All coefficient operators as one ``(K1+1, K2+1, N3, N3)`` array, identity first."""
        k1, k2 = self.M.shape[0], self.Mt.shape[0]
        n3 = self.dims[2]
        c = np.empty((k1 + 1, k2 + 1, n3, n3), dtype=np.complex128)
        c[0, 0] = self.M0
        c[1:, 0] = self.M
        c[0, 1:] = self.Mt
        c[1:, 1:] = self.Mij
        return c

    @classmethod
    def from_tensor(cls, dims, c) -> "TripartiteBloch":
        return cls(tuple(dims), c[0, 0], c[1:, 0], c[0, 1:], c[1:, 1:])

    def __add__(self, other: "TripartiteBloch") -> "TripartiteBloch":
        if self.dims != other.dims:
            raise ValueError("dimension mismatch")
        return TripartiteBloch.from_tensor(self.dims, self.coefficient_tensor() + other.coefficient_tensor())

    def __mul__(self, x: float) -> "TripartiteBloch":
        return TripartiteBloch.from_tensor(self.dims, x * self.coefficient_tensor())

    __rmul__ = __mul__

    def norms(self) -> dict:
        """Frobenius norms of the coefficient operators, for reporting."""
        fro = lambda a, axes: np.sqrt(np.sum(np.abs(a) ** 2, axis=axes))  # noqa: E731
        return {
            "M0": float(np.linalg.norm(self.M0)),
            "M": fro(self.M, (1, 2)).tolist(),
            "Mt": fro(self.Mt, (1, 2)).tolist(),
            "Mij": fro(self.Mij, (2, 3)).tolist(),
        }


def tripartite_dims(dims) -> tuple[int, int, int]:
    dims = tuple(int(d) for d in dims)
    if len(dims) == 2:
        return dims[0], 1, dims[1]
    if len(dims) == 3:
        return dims
    raise ValueError(f"expected 2 or 3 subsystem dimensions, got {dims}")


def _extended_generators(n: int) -> np.ndarray:
    basis = generators_or_empty(n)
    return np.concatenate([np.eye(n, dtype=np.complex128)[None], basis.generators])


def decompose(rho, dims=None) -> TripartiteBloch:
    """Coefficient operators of a two- or three-party state.

    Extraction uses ``Tr(l_i l_j) = 2 delta_ij``::

        M0   = Tr_AB(rho) / (N1 N2)
        M_i  = Tr_AB((l_i⊗I⊗I) rho) / (2 N2)
        Mt_j = Tr_AB((I⊗l_j⊗I) rho) / (2 N1)
        M_ij = Tr_AB((l_i⊗l_j⊗I) rho) / 4
    """
    if isinstance(rho, DensityMatrix):
        mat, dims = rho.matrix, rho.dims if dims is None else dims
    else:
        if dims is None:
            raise ValueError("dims are required for a bare matrix")
        mat = as_matrix(rho)
    n1, n2, n3 = tripartite_dims(dims)
    if mat.shape[0] != n1 * n2 * n3:
        raise ValueError(f"matrix of size {mat.shape[0]} does not match dims {dims}")
    g1, g2 = _extended_generators(n1), _extended_generators(n2)
    t = mat.reshape(n1, n2, n3, n1, n2, n3)
    traces = np.einsum("iax,jby,xycabd->ijcd", g1, g2, t, optimize=True)
    norm1 = np.full(n1 * n1, 2.0)
    norm1[0] = n1
    norm2 = np.full(n2 * n2, 2.0)
    norm2[0] = n2
    c = traces / np.outer(norm1, norm2)[:, :, None, None]
    return TripartiteBloch.from_tensor((n1, n2, n3), c)


def reconstruct(b: TripartiteBloch) -> np.ndarray:
    """Evaluate the generator expansion back into an ``N1 N2 N3`` square matrix."""
    n1, n2, n3 = b.dims
    g1, g2 = _extended_generators(n1), _extended_generators(n2)
    c = b.coefficient_tensor()
    t = np.einsum("iax,jby,ijcd->abcxyd", g1, g2, c, optimize=True)
    d = n1 * n2 * n3
    return t.reshape(d, d)


def _as_bloch(v, n: int) -> np.ndarray:
    if isinstance(v, BlochVector):
        if v.n != n:
            raise ValueError(f"Bloch vector is for n={v.n}, expected {n}")
        return v.coords
    coords = np.asarray([] if v is None else v, dtype=float).reshape(-1)
    if coords.size != n * n - 1:
        raise ValueError(f"vector for n={n} must have {n * n - 1} entries, got {coords.size}")
    return coords


def conditional_operator(b: TripartiteBloch, r, s=None) -> np.ndarray:
    """``M0 - sum r_i M_i - sum s_j Mt_j + sum r_i s_j M_ij`` without the radius check."""
    n1, n2, _ = b.dims
    r = _as_bloch(r, n1)
    s = _as_bloch(s, n2)
    return (
        b.M0
        - np.tensordot(r, b.M, axes=1)
        - np.tensordot(s, b.Mt, axes=1)
        + np.einsum("i,j,ijcd->cd", r, s, b.Mij)
    )


def conditional_operator_check(b: TripartiteBloch, r, s=None) -> tuple[np.ndarray, float]:
    """Operator on the third subsystem that is positive for every state.

    ``r`` and ``s`` must lie in the closed inner Bloch balls of the first two
    subsystems. For a bipartite embedding (middle dimension 1) ``s`` is empty
    and may be omitted.

    Returns
    -------
    op : ndarray
        ``M0 - sum r_i M_i - sum s_j Mt_j + sum_ij r_i s_j M_ij``.
    min_eig : float
        Its smallest eigenvalue.
    """
    n1, n2, _ = b.dims
    for vec, n, name in ((r, n1, "r"), (s, n2, "s")):
        coords = _as_bloch(vec, n)
        if n >= 2 and np.linalg.norm(coords) > inner_radius(n) * (1 + 1e-12):
            raise ValueError(
                f"|{name}| = {np.linalg.norm(coords):.6g} exceeds the inner radius {inner_radius(n):.6g}"
            )
    op = conditional_operator(b, r, s)
    return op, min_eig(op)
