"""Dense Hermitian linear algebra on multipartite operators.

Operators are plain ``numpy`` complex arrays. Multipartite structure is
carried by a ``dims`` sequence; subsystem ``k`` is indexed ``0, 1, 2``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

POS_TOL = 1e-10
"""An operator is positive semidefinite iff its smallest eigenvalue is >= -POS_TOL."""

HERM_TOL = 1e-8
STATE_TOL = 1e-10


def as_matrix(a) -> np.ndarray:
    """Coerce ``a`` to a finite square complex matrix."""
    a = np.asarray(a, dtype=np.complex128)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix has non-finite entries")
    return a


def hermiticity_error(a: np.ndarray) -> tuple[float, tuple[int, int]]:
    """Largest ``|A[i,j] - conj(A[j,i])|`` and where it occurs."""
    diff = np.abs(a - a.conj().T)
    idx = np.unravel_index(int(np.argmax(diff)), diff.shape) if diff.size else (0, 0)
    return (float(diff[idx]) if diff.size else 0.0), (int(idx[0]), int(idx[1]))


def is_hermitian(a, tol: float = HERM_TOL) -> bool:
    return hermiticity_error(as_matrix(a))[0] <= tol


def _require_hermitian(a: np.ndarray, tol: float) -> None:
    err, (i, j) = hermiticity_error(a)
    if err > tol:
        raise ValueError(
            f"matrix is not Hermitian: |A[{i},{j}] - conj(A[{j},{i}])| = {err:.3e} > {tol:.1e}"
        )


def herm_eigvals(a, return_vectors: bool = False, tol: float = HERM_TOL):
    """Eigenvalues of a Hermitian matrix in ascending order.

    Parameters
    ----------
    a : array_like
        Square matrix, Hermitian within ``tol``.
    return_vectors : bool
        Also return the unitary whose columns are the eigenvectors.

    Raises
    ------
    ValueError
        If ``a`` is not Hermitian; the message names the worst entry.
    """
    a = as_matrix(a)
    _require_hermitian(a, tol)
    h = 0.5 * (a + a.conj().T)
    if return_vectors:
        return np.linalg.eigh(h)
    return np.linalg.eigvalsh(h)


def min_eig(a, tol: float = HERM_TOL) -> float:
    """Smallest eigenvalue of a Hermitian matrix."""
    return float(herm_eigvals(a, tol=tol)[0])


def is_psd(a, tol: float = POS_TOL) -> bool:
    return min_eig(a) >= -tol


def kron(*ops) -> np.ndarray:
    """Tensor product of one or more matrices, left factor most significant."""
    out = np.ones((1, 1), dtype=np.complex128)
    for op in ops:
        out = np.kron(out, np.asarray(op, dtype=np.complex128))
    return out


@dataclass(frozen=True)
class DensityMatrix:
    """A validated state on two or three subsystems.

    Validation (Hermitian, unit trace, positive semidefinite, all within
    ``1e-10``) happens once, at construction.
    """

    dims: tuple[int, ...]
    matrix: np.ndarray

    def __post_init__(self):
        dims = tuple(int(d) for d in self.dims)
        if len(dims) not in (2, 3) or any(d < 1 for d in dims):
            raise ValueError(f"dims must list 2 or 3 positive dimensions, got {self.dims}")
        mat = as_matrix(self.matrix)
        if mat.shape[0] != int(np.prod(dims)):
            raise ValueError(f"matrix of size {mat.shape[0]} does not match dims {dims}")
        err, (i, j) = hermiticity_error(mat)
        if err > STATE_TOL:
            raise ValueError(f"state is not Hermitian: entry ({i},{j}) off by {err:.3e}")
        tr = np.trace(mat)
        if abs(tr - 1.0) > STATE_TOL:
            raise ValueError(f"state trace is {tr.real:.12g}, expected 1")
        lo = float(np.linalg.eigvalsh(0.5 * (mat + mat.conj().T))[0])
        if lo < -STATE_TOL:
            raise ValueError(f"state has negative eigenvalue {lo:.3e}")
        mat = mat.copy()
        mat.setflags(write=False)
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "matrix", mat)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    @property
    def nparties(self) -> int:
        return len(self.dims)

    def purity(self) -> float:
        return float(np.real(np.trace(self.matrix @ self.matrix)))


def _unpack(rho, dims):
    if isinstance(rho, DensityMatrix):
        return rho.matrix, rho.dims if dims is None else tuple(dims)
    if dims is None:
        raise ValueError("dims are required for a bare matrix")
    mat = as_matrix(rho)
    dims = tuple(int(d) for d in dims)
    if mat.shape[0] != int(np.prod(dims)):
        raise ValueError(f"matrix of size {mat.shape[0]} does not match dims {dims}")
    return mat, dims


def _subsystems(subset: Iterable[int], nparties: int) -> list[int]:
    idx = sorted(set(int(k) for k in subset))
    if any(k < 0 or k >= nparties for k in idx):
        raise ValueError(f"subsystem indices {idx} out of range for {nparties} parties")
    return idx


def partial_trace(rho, keep: Iterable[int], dims: Sequence[int] | None = None) -> np.ndarray:
    """Reduced operator on the subsystems in ``keep`` (in increasing order)."""
    mat, dims = _unpack(rho, dims)
    n = len(dims)
    keep = _subsystems(keep, n)
    if not keep:
        raise ValueError("keep must name at least one subsystem")
    t = mat.reshape(dims + dims)
    traced = [k for k in range(n) if k not in keep]
    # trace from the highest index down so earlier axis numbers stay valid
    for k in reversed(traced):
        m = t.ndim // 2
        t = np.trace(t, axis1=k, axis2=k + m)
    d = int(np.prod([dims[k] for k in keep]))
    return t.reshape(d, d)


def partial_transpose(rho, subset: Iterable[int], dims: Sequence[int] | None = None) -> np.ndarray:
    """Transpose the row/column indices of the subsystems in ``subset``."""
    mat, dims = _unpack(rho, dims)
    n = len(dims)
    subset = _subsystems(subset, n)
    if not subset:
        raise ValueError("partial transpose needs a nonempty subset")
    perm = list(range(2 * n))
    for k in subset:
        perm[k], perm[k + n] = perm[k + n], perm[k]
    d = mat.shape[0]
    return mat.reshape(dims + dims).transpose(perm).reshape(d, d)
