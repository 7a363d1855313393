"""Contraction pairs ``(R1, R2)`` and the map they induce on coefficient operators.

For real ``R1``, ``R2`` whose singular values are at most ``1/(N1-1)`` and
``1/(N2-1)``, the map

    M0 -> M0,  M -> R1 M,  Mt -> R2 Mt,  Mij -> R1 Mij R2^T

sends every fully separable state to a positive operator. A negative
eigenvalue of the image therefore certifies entanglement.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .bloch import TripartiteBloch, reconstruct
from .linalg import min_eig

SV_TOL = 1e-10


def contraction_bound(n: int) -> float:
    """Largest singular value allowed for a transform on SU(n) coordinates."""
    return np.inf if n < 2 else 1.0 / (n - 1)


@dataclass(frozen=True)
class ConstraintResult:
    ok: bool
    max_singular_value: float
    bound: float

    def __bool__(self) -> bool:
        return self.ok


def constraint_check(R, n: int) -> ConstraintResult:
    """Check ``I/(n-1)^2 - R^T R >= 0`` through the singular values of ``R``."""
    R = np.asarray(R, dtype=float)
    k = n * n - 1
    if R.shape != (k, k):
        raise ValueError(f"transform for n={n} must be {k}x{k}, got {R.shape}")
    bound = contraction_bound(n)
    smax = float(np.linalg.norm(R, 2)) if k else 0.0
    return ConstraintResult(smax <= bound + SV_TOL, smax, bound)


@dataclass(frozen=True)
class TransformPair:
    """Real transforms on the first two subsystems' generator coordinates.

    For a bipartite embedding ``(N1, 1, N2)`` the second transform is the
    empty ``0x0`` matrix.
    """

    R1: np.ndarray
    R2: np.ndarray
    dims: tuple[int, int]

    def __post_init__(self):
        n1, n2 = (int(d) for d in self.dims)
        r1 = np.array(self.R1, dtype=float).reshape(n1 * n1 - 1, n1 * n1 - 1)
        r2 = np.array(self.R2, dtype=float).reshape(n2 * n2 - 1, n2 * n2 - 1)
        for name, r, n in (("R1", r1, n1), ("R2", r2, n2)):
            res = constraint_check(r, n)
            if not res:
                raise ValueError(
                    f"{name} violates the contraction constraint: largest singular value "
                    f"{res.max_singular_value:.12g} > {res.bound:.12g}"
                )
            r.setflags(write=False)
        object.__setattr__(self, "R1", r1)
        object.__setattr__(self, "R2", r2)
        object.__setattr__(self, "dims", (n1, n2))

    @classmethod
    def bipartite(cls, R, n1: int) -> "TransformPair":
        return cls(R, np.zeros((0, 0)), (n1, 1))

    def to_dict(self) -> dict:
        return {"dims": list(self.dims), "R1": self.R1.tolist(), "R2": self.R2.tolist()}

    @classmethod
    def from_dict(cls, d: dict) -> "TransformPair":
        return cls(np.array(d["R1"], dtype=float), np.array(d["R2"], dtype=float), tuple(d["dims"]))

    def __eq__(self, other):
        if not isinstance(other, TransformPair):
            return NotImplemented
        return (
            self.dims == other.dims
            and np.array_equal(self.R1, other.R1)
            and np.array_equal(self.R2, other.R2)
        )

    __hash__ = None


def apply_gamma(b: TripartiteBloch, t: TransformPair) -> TripartiteBloch:
    """Transform the coefficient operators of ``b`` by the pair ``t``."""
    if b.dims[:2] != t.dims:
        raise ValueError(f"transform dims {t.dims} do not match state dims {b.dims[:2]}")
    M = np.tensordot(t.R1, b.M, axes=1)
    Mt = np.tensordot(t.R2, b.Mt, axes=1)
    Mij = np.einsum("ki,ijcd,lj->klcd", t.R1, b.Mij, t.R2, optimize=True)
    return TripartiteBloch(b.dims, b.M0, M, Mt, Mij)


def gamma_matrix(b: TripartiteBloch, t: TransformPair) -> np.ndarray:
    return reconstruct(apply_gamma(b, t))


def gamma_min_eig(b: TripartiteBloch, t: TransformPair) -> float:
    return min_eig(gamma_matrix(b, t))


def transpose_signs(n: int) -> np.ndarray:
    """Diagonal of the map ``l_i -> l_i^T``: +1 on real generators, -1 on imaginary ones."""
    from .generators import build_generators

    return np.where(build_generators(n).antisymmetric, -1.0, 1.0)


def transpose_diagonal(n: int) -> np.ndarray:
    """``diag(+-1/(n-1))`` with the transpose sign pattern.

    For ``n = 3`` this is ``Diag{1/2 x5, -1/2 x3}``; for ``n = 2`` it is
    ``diag(1, 1, -1)``.
    """
    return np.diag(transpose_signs(n) * contraction_bound(n))


def transpose_pair(dims) -> TransformPair:
    """The diagonal transform on each non-trivial leading subsystem."""
    n1, n2 = int(dims[0]), int(dims[1])
    r2 = transpose_diagonal(n2) if n2 >= 2 else np.zeros((0, 0))
    return TransformPair(transpose_diagonal(n1), r2, (n1, n2))


def ppt_as_gamma(which: str, dims=(2, 2)) -> TransformPair:
    """Pair reproducing a partial transpose on ``2 x 2 x N`` states.

    ``which`` is ``"A"``, ``"B"`` or ``"AB"``; ``dims`` are the first two
    subsystem dimensions of the target state and must both be 2.
    """
    if tuple(int(d) for d in dims[:2]) != (2, 2):
        raise ValueError(f"partial-transpose pairs exist only for 2 x 2 x N, got {tuple(dims)}")
    flip = np.diag([1.0, 1.0, -1.0])
    eye = np.eye(3)
    table = {"A": (flip, eye), "B": (eye, flip), "AB": (flip, flip)}
    if which not in table:
        raise ValueError(f"which must be one of {sorted(table)}, got {which!r}")
    r1, r2 = table[which]
    return TransformPair(r1, r2, (2, 2))
