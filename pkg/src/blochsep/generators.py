"""Traceless Hermitian generators of SU(n).

Ordering is fixed for the whole package::

    [w_1, ..., w_{n-1}, u_12, u_13, ..., u_{n-1,n}, v_12, ..., v_{n-1,n}]

with the off-diagonal pairs ``j < k`` in lexicographic order and

    w_l  = -sqrt(2/(l(l+1))) (P_11 + ... + P_ll - l P_{l+1,l+1})
    u_jk = P_jk + P_kj
    v_jk = i (P_jk - P_kj)

so ``n = 2`` gives ``[-sigma_z, sigma_x, -sigma_y]``. Every row and column
index of a transform matrix refers to this ordering.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

import numpy as np


@dataclass(frozen=True)
class GeneratorBasis:
    n: int
    generators: np.ndarray  # shape (n*n - 1, n, n), read-only
    ordering: str = "diag-sym-antisym"

    def __len__(self) -> int:
        return self.generators.shape[0]

    def __getitem__(self, i: int) -> np.ndarray:
        return self.generators[i]

    @property
    def labels(self) -> list[str]:
        pairs = list(combinations(range(1, self.n + 1), 2))
        return (
            [f"w{l}" for l in range(1, self.n)]
            + [f"u{j}{k}" for j, k in pairs]
            + [f"v{j}{k}" for j, k in pairs]
        )

    @property
    def antisymmetric(self) -> np.ndarray:
        """Boolean mask of the imaginary (``v``) generators, which flip sign under transpose."""
        mask = np.zeros(len(self), dtype=bool)
        mask[self.n - 1 + (self.n * (self.n - 1)) // 2 :] = True
        return mask

    def coefficients(self, h) -> np.ndarray:
        """Real coordinates ``Tr(h g_i)`` of a Hermitian matrix ``h``."""
        return np.real(np.einsum("iab,ba->i", self.generators, np.asarray(h)))

    def combine(self, coords) -> np.ndarray:
        """``sum_i coords[i] * g_i``."""
        return np.tensordot(np.asarray(coords, dtype=float), self.generators, axes=1)


@lru_cache(maxsize=None)
def _build(n: int) -> GeneratorBasis:
    if n == 1:
        gens = np.zeros((0, 1, 1), dtype=np.complex128)
    else:
        out = []
        for l in range(1, n):
            diag = np.zeros(n)
            diag[:l] = 1.0
            diag[l] = -l
            out.append(-np.sqrt(2.0 / (l * (l + 1))) * np.diag(diag).astype(np.complex128))
        pairs = list(combinations(range(n), 2))
        for j, k in pairs:
            u = np.zeros((n, n), dtype=np.complex128)
            u[j, k] = u[k, j] = 1.0
            out.append(u)
        for j, k in pairs:
            v = np.zeros((n, n), dtype=np.complex128)
            v[j, k] = 1j
            v[k, j] = -1j
            out.append(v)
        gens = np.array(out)
    gens.setflags(write=False)
    return GeneratorBasis(n=n, generators=gens)


def build_generators(n: int) -> GeneratorBasis:
    """Cached generator basis for dimension ``n >= 2``."""
    if int(n) != n or n < 2:
        raise ValueError(f"SU(n) generators need n >= 2, got {n}")
    return _build(int(n))


def generators_or_empty(n: int) -> GeneratorBasis:
    """Like :func:`build_generators` but ``n = 1`` yields the empty basis."""
    if n == 1:
        return _build(1)
    return build_generators(n)
