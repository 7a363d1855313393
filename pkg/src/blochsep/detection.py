"""Searching for contraction pairs that expose entanglement.

Every constraint-satisfying pair maps separable states to positive
operators, so any pair whose image has a negative eigenvalue is a sound
entanglement certificate. The search never certifies separability.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from .bloch import TripartiteBloch, decompose
from .gamma import TransformPair, contraction_bound, gamma_min_eig
from .generators import generators_or_empty
from .linalg import DensityMatrix, min_eig, partial_transpose
from .states import family as family_factory

NEG_MARGIN = 1e-9
DEFAULT_BUDGET = 65536
_CHUNK = 2048


class Verdict(str, enum.Enum):
    ENTANGLED = "ENTANGLED"
    INCONCLUSIVE = "INCONCLUSIVE"


class StrategyKind(str, enum.Enum):
    SIGN_DIAGONAL = "sign-diag"
    RANDOM_ORTHOGONAL = "random"
    LOCAL_REFINE = "refine"


@dataclass(frozen=True)
class SearchStrategy:
    """How candidate pairs are generated.

    ``samples`` is the candidate budget for ``SIGN_DIAGONAL`` (exhaustive
    whenever every sign pattern fits), the number of random pairs for
    ``RANDOM_ORTHOGONAL`` and the number of refinement steps for
    ``LOCAL_REFINE``.
    """

    kind: StrategyKind = StrategyKind.SIGN_DIAGONAL
    samples: int = DEFAULT_BUDGET
    seed: int = 0

    def __post_init__(self):
        object.__setattr__(self, "kind", StrategyKind(self.kind))
        if int(self.samples) != self.samples or self.samples < 1:
            raise ValueError(f"samples must be a positive integer, got {self.samples}")
        object.__setattr__(self, "samples", int(self.samples))
        object.__setattr__(self, "seed", int(self.seed))


@dataclass(frozen=True)
class DetectionReport:
    verdict: Verdict
    witness: TransformPair | None
    min_eigenvalue: float
    strategy: SearchStrategy
    candidates_tested: int
    seed: int | None = None

    @property
    def entangled(self) -> bool:
        return self.verdict is Verdict.ENTANGLED


class GammaBatch:
    """Smallest eigenvalues of the transformed operator for many pairs at once."""

    def __init__(self, b: TripartiteBloch):
        self.dims = b.dims
        n1, n2, n3 = b.dims
        g1 = np.concatenate([np.eye(n1)[None], generators_or_empty(n1).generators])
        g2 = np.concatenate([np.eye(n2)[None], generators_or_empty(n2).generators])
        self._c = b.coefficient_tensor()
        # basis[k, l, a, b, x, y] = (g1[k] ⊗ g2[l])[(a,b),(x,y)]
        self._basis = np.einsum("kax,lby->klabxy", g1, g2).reshape(g1.shape[0] * g2.shape[0], -1)
        self._terms = None

    @staticmethod
    def _extend(rs: np.ndarray) -> np.ndarray:
        p, k = rs.shape[0], rs.shape[1]
        out = np.zeros((p, k + 1, k + 1))
        out[:, 0, 0] = 1.0
        out[:, 1:, 1:] = rs
        return out

    def _diagonal_terms(self) -> np.ndarray:
        if self._terms is None:
            n1, n2, n3 = self.dims
            k1, k2 = self._c.shape[:2]
            b6 = self._basis.reshape(k1, k2, n1, n2, n1, n2)
            t = np.einsum("klabxy,klcd->klabcxyd", b6, self._c)
            d = n1 * n2 * n3
            self._terms = t.reshape(k1 * k2, d * d)
        return self._terms

    def matrices(self, r1s: np.ndarray, r2s: np.ndarray) -> np.ndarray:
        n1, n2, n3 = self.dims
        d = n1 * n2 * n3
        if _all_diagonal(r1s) and _all_diagonal(r2s):
            e1 = np.concatenate([np.ones((len(r1s), 1)), np.diagonal(r1s, axis1=1, axis2=2)], axis=1)
            e2 = np.concatenate([np.ones((len(r2s), 1)), np.diagonal(r2s, axis1=1, axis2=2)], axis=1)
            w = (e1[:, :, None] * e2[:, None, :]).reshape(len(e1), -1)
            return (w @ self._diagonal_terms()).reshape(-1, d, d)
        e1, e2 = self._extend(r1s), self._extend(r2s)
        cp = np.einsum("pki,ijcd->pkjcd", e1, self._c, optimize=True)
        cp = np.einsum("plj,pkjcd->pklcd", e2, cp, optimize=True)
        p = cp.shape[0]
        cp = cp.reshape(p, -1, n3 * n3).transpose(0, 2, 1)
        full = np.matmul(cp, self._basis)  # (p, cd, abxy)
        full = full.reshape(p, n3, n3, n1, n2, n1, n2).transpose(0, 3, 4, 1, 5, 6, 2)
        return full.reshape(p, d, d)

    def min_eigs(self, r1s, r2s) -> np.ndarray:
        r1s, r2s = np.asarray(r1s, dtype=float), np.asarray(r2s, dtype=float)
        out = np.empty(r1s.shape[0])
        for s in range(0, r1s.shape[0], _CHUNK):
            mats = self.matrices(r1s[s : s + _CHUNK], r2s[s : s + _CHUNK])
            out[s : s + _CHUNK] = np.linalg.eigvalsh(mats)[:, 0]
        return out


def _all_diagonal(rs: np.ndarray) -> bool:
    k = rs.shape[1]
    return not np.any(rs[:, ~np.eye(k, dtype=bool)])


def _sign_patterns(k: int) -> np.ndarray:
    return np.array(list(itertools.product((1.0, -1.0), repeat=k))).reshape(-1, k)


def enumerate_sign_diagonals(n: int, samples: int | None = None, seed=None) -> np.ndarray:
    """Diagonal transforms with entries ``+-1/(n-1)``, shape ``(count, n^2-1, n^2-1)``.

    For ``n`` of 2 or 3 every sign pattern is returned, all-plus first. Larger
    ``n`` requires ``samples`` and draws that many random patterns.
    """
    k = n * n - 1
    if n == 1:
        return np.zeros((1, 0, 0))
    if n in (2, 3):
        signs = _sign_patterns(k)
    else:
        if samples is None:
            raise ValueError(f"n={n} has 2^{k} sign patterns; pass samples to draw a subset")
        rng = np.random.default_rng(seed)
        signs = rng.choice((1.0, -1.0), size=(samples, k))
    return np.einsum("pi,ij->pij", signs * contraction_bound(n), np.eye(k))


def _random_orthogonal(k: int, rng) -> np.ndarray:
    q, r = np.linalg.qr(rng.standard_normal((k, k)))
    return q * np.sign(np.diag(r))


def random_contraction(n: int, seed=None, singular_values=None) -> np.ndarray:
    """``Q1 diag(s) Q2^T`` with Haar orthogonal ``Q`` and ``s`` uniform in ``[0, 1/(n-1)]``.

    ``singular_values`` overrides the draw of ``s`` (they are not clamped).
    """
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    k = n * n - 1
    if k == 0:
        return np.zeros((0, 0))
    q1, q2 = _random_orthogonal(k, rng), _random_orthogonal(k, rng)
    if singular_values is None:
        s = rng.uniform(0.0, contraction_bound(n), size=k)
    else:
        s = np.broadcast_to(np.asarray(singular_values, dtype=float), (k,))
    return (q1 * s) @ q2.T


def _project(r: np.ndarray, n: int) -> np.ndarray:
    if r.size == 0:
        return r
    u, s, vt = np.linalg.svd(r)
    return (u * np.minimum(s, contraction_bound(n))) @ vt


def local_refine(rho, start: TransformPair, steps: int, seed=None, step_size: float = 0.1) -> TransformPair:
    """Random coordinate descent on the smallest eigenvalue of the transformed state.

    A perturbed pair is projected back onto the constraint set by clamping its
    singular values and is kept only if it strictly lowers the objective, so
    the result is never worse than ``start``.
    """
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    b = rho if isinstance(rho, TripartiteBloch) else decompose(rho)
    n1, n2 = start.dims
    best = start
    f_best = gamma_min_eig(b, best)
    sigma = [step_size * contraction_bound(n1), step_size * contraction_bound(n2) if n2 > 1 else 0.0]
    misses = 0
    sides = [0, 1] if n2 > 1 else [0]
    for _ in range(steps):
        side = sides[rng.integers(len(sides))]
        mats = [best.R1.copy(), best.R2.copy()]
        r = mats[side]
        i, j = rng.integers(r.shape[0], size=2)
        r[i, j] += sigma[side] * rng.standard_normal()
        mats[side] = _project(r, (n1, n2)[side])
        cand = TransformPair(mats[0], mats[1], (n1, n2))
        f = gamma_min_eig(b, cand)
        if f < f_best:
            best, f_best, misses = cand, f, 0
            sigma[side] *= 1.2
        else:
            misses += 1
            if misses % 10 == 0:
                sigma = [s * 0.7 for s in sigma]
    return best


def diagonal_unitary_flips(n: int) -> np.ndarray:
    """Sign flips of the generator coordinates induced by conjugation with ``diag(+-1)``.

    Conjugating by ``D = diag(d)`` leaves the diagonal generators alone and
    multiplies ``u_jk``, ``v_jk`` by ``d_j d_k``. Row 0 is the identity flip.
    """
    pairs = list(itertools.combinations(range(n), 2))
    flips = []
    for tail in itertools.product((1.0, -1.0), repeat=n - 1):
        d = (1.0,) + tail
        off = [d[j] * d[k] for j, k in pairs]
        flips.append([1.0] * (n - 1) + off + off)
    return np.array(flips).reshape(len(flips), n * n - 1)


def sign_orbit_representatives(n: int) -> np.ndarray:
    """Indices into :func:`enumerate_sign_diagonals` (n <= 3) of one pattern per flip orbit.

    Two patterns in one orbit give transformed states related by a local
    unitary, hence identical spectra. The representative is the orbit's
    lowest index.
    """
    if n == 1:
        return np.array([0])
    signs = _sign_patterns(n * n - 1)
    lookup = {tuple(row): i for i, row in enumerate(signs)}
    flips = diagonal_unitary_flips(n)
    reps = [i for i, row in enumerate(signs) if min(lookup[tuple(row * f)] for f in flips) == i]
    return np.array(reps)


def _sign_pair_candidates(n1: int, n2: int, budget: int, rng):
    """Return ``(r1s, r2s, covered)``; ``covered`` counts every sign pair the batch stands for."""
    d1 = enumerate_sign_diagonals(n1) if n1 <= 3 else None
    d2 = enumerate_sign_diagonals(n2) if n2 <= 3 else None
    if d1 is not None and d2 is not None and len(d1) * len(d2) <= budget:
        d1, d2 = d1[sign_orbit_representatives(n1)], d2[sign_orbit_representatives(n2)]
        r1s = np.repeat(d1, len(d2), axis=0)
        r2s = np.tile(d2, (len(d1), 1, 1))
        return r1s, r2s, len(enumerate_sign_diagonals(n1)) * len(enumerate_sign_diagonals(n2))
    r1s = enumerate_sign_diagonals(n1, samples=budget, seed=rng) if n1 > 3 else d1[rng.integers(len(d1), size=budget)]
    r2s = enumerate_sign_diagonals(n2, samples=budget, seed=rng) if n2 > 3 else d2[rng.integers(len(d2), size=budget)]
    return r1s, r2s, budget


def detect(
    rho: DensityMatrix,
    strategy: SearchStrategy | None = None,
    extra: Sequence[TransformPair] = (),
) -> DetectionReport:
    """Look for a contraction pair whose transformed state is not positive.

    ``extra`` pairs are tested after the strategy's own candidates. Among all
    candidates the most negative smallest eigenvalue wins, ties going to the
    earliest candidate.

    An exhaustive sign-diagonal search evaluates one pair per orbit of
    :func:`sign_orbit_representatives` on each side; ``candidates_tested``
    still counts every sign pair, since the skipped ones share a spectrum
    with their representative.
    """
    strategy = strategy or SearchStrategy()
    if not isinstance(rho, DensityMatrix):
        raise TypeError("detect needs a DensityMatrix")
    b = decompose(rho)
    n1, n2, _ = b.dims
    rng = np.random.default_rng(strategy.seed)
    batch = GammaBatch(b)

    if strategy.kind is StrategyKind.SIGN_DIAGONAL:
        r1s, r2s, covered = _sign_pair_candidates(n1, n2, strategy.samples, rng)
    elif strategy.kind is StrategyKind.RANDOM_ORTHOGONAL:
        r1s = np.array([random_contraction(n1, rng) for _ in range(strategy.samples)])
        r2s = np.array([random_contraction(n2, rng) for _ in range(strategy.samples)])
        covered = strategy.samples
    else:
        r1s, r2s, covered = _sign_pair_candidates(n1, n2, DEFAULT_BUDGET, rng)

    for t in extra:
        if t.dims != (n1, n2):
            raise ValueError(f"extra pair dims {t.dims} do not match state dims {(n1, n2)}")
    if extra:
        r1s = np.concatenate([r1s.reshape(-1, n1 * n1 - 1, n1 * n1 - 1), [t.R1 for t in extra]])
        r2s = np.concatenate([r2s.reshape(-1, n2 * n2 - 1, n2 * n2 - 1), [t.R2 for t in extra]])

    vals = batch.min_eigs(r1s, r2s)
    idx = int(np.argmin(vals))
    best = TransformPair(r1s[idx], r2s[idx], (n1, n2))
    best_val = float(vals[idx])
    tested = covered + len(extra)

    if strategy.kind is StrategyKind.LOCAL_REFINE:
        best = local_refine(b, best, strategy.samples, seed=rng)
        best_val = gamma_min_eig(b, best)
        tested += strategy.samples

    entangled = best_val < -NEG_MARGIN
    return DetectionReport(
        verdict=Verdict.ENTANGLED if entangled else Verdict.INCONCLUSIVE,
        witness=best if entangled else None,
        min_eigenvalue=best_val,
        strategy=strategy,
        candidates_tested=tested,
        seed=strategy.seed,
    )


def witness_min_eig(rho: DensityMatrix, t: TransformPair) -> float:
    """Recompute the certificate value of ``t`` through the unbatched path."""
    return gamma_min_eig(decompose(rho), t)


# ---------------------------------------------------------------------------
# one-parameter families


def _family_callable(fam, n):
    if callable(fam):
        return fam
    make = family_factory(fam)
    return lambda p: make(n, p)


@dataclass(frozen=True)
class Threshold:
    """Location of the sign change of ``f(p) = min_eig(gamma(rho(p)))``.

    ``status`` is ``"root"`` when the pre-scan saw a single sign change and
    ``"bracketed root"`` when it saw several (the first one is refined).
    """

    value: float
    status: str
    sign_changes: int
    monotone: bool
    bracket: tuple[float, float]

    def __float__(self) -> float:
        return self.value


def _bisect(f: Callable[[float], float], lo: float, hi: float, flo: float, tol: float) -> float:
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        fm = f(mid)
        if (fm < 0) == (flo < 0):
            lo, flo = mid, fm
        else:
            hi = mid
    return float(0.5 * (lo + hi))


def critical_parameter(fam, t: TransformPair, lo: float = 0.0, hi: float = 1.0, tol: float = 1e-4, n: int = 3):
    """Bisect for the parameter where the transformed family stops being positive.

    Returns ``None`` when ``f`` has the same sign at both ends.
    """
    make = _family_callable(fam, n)
    f = lambda p: gamma_min_eig(decompose(make(p)), t)  # noqa: E731
    grid = np.linspace(lo, hi, 16)
    vals = np.array([f(p) for p in grid])
    neg = vals < 0
    changes = np.flatnonzero(neg[1:] != neg[:-1])
    if neg[0] == neg[-1] and len(changes) == 0:
        return None
    diffs = np.diff(vals)
    monotone = bool(np.all(diffs <= 1e-15) or np.all(diffs >= -1e-15))
    if len(changes) == 0:
        return None
    k = int(changes[0])
    root = _bisect(f, grid[k], grid[k + 1], vals[k], tol)
    return Threshold(
        value=root,
        status="root" if len(changes) == 1 else "bracketed root",
        sign_changes=len(changes),
        monotone=monotone,
        bracket=(float(grid[k]), float(grid[k + 1])),
    )


@dataclass(frozen=True)
class SweepRow:
    p: float
    min_eig: float
    verdict: Verdict


@dataclass
class SweepResult:
    rows: list[SweepRow]
    roots: list[float] = field(default_factory=list)


def sweep(fam, t: TransformPair, lo: float, hi: float, steps: int, n: int = 3, tol: float = 1e-4) -> SweepResult:
    """Evaluate ``f`` on ``steps + 1`` uniform points and refine every sign change to ``tol``."""
    if not hi > lo or steps < 1:
        raise ValueError("sweep needs lo < hi and steps >= 1")
    make = _family_callable(fam, n)
    f = lambda p: gamma_min_eig(decompose(make(p)), t)  # noqa: E731
    grid = np.linspace(lo, hi, steps + 1)
    vals = [f(p) for p in grid]
    rows = [
        SweepRow(float(p), float(v), Verdict.ENTANGLED if v < -NEG_MARGIN else Verdict.INCONCLUSIVE)
        for p, v in zip(grid, vals)
    ]
    roots = []
    for k in range(steps):
        if (vals[k] < 0) != (vals[k + 1] < 0):
            roots.append(_bisect(f, grid[k], grid[k + 1], vals[k], tol))
    return SweepResult(rows, roots)


# ---------------------------------------------------------------------------
# partial transposes

PARTY_NAMES = "ABC"


def subset_name(subset) -> str:
    return "".join(PARTY_NAMES[k] for k in sorted(subset))


def parse_subset(name: str, nparties: int) -> tuple[int, ...]:
    name = name.strip().upper()
    if not name or any(ch not in PARTY_NAMES[:nparties] for ch in name):
        raise ValueError(f"invalid subset {name!r} for a {nparties}-party state")
    return tuple(sorted(set(PARTY_NAMES.index(ch) for ch in name)))


def ppt_check(rho: DensityMatrix, subsets=None) -> dict[str, float]:
    """Smallest eigenvalue of the partial transpose over each nonempty proper subset of parties."""
    n = rho.nparties
    if subsets is None:
        subsets = [s for r in range(1, n) for s in itertools.combinations(range(n), r)]
    return {subset_name(s): min_eig(partial_transpose(rho, s)) for s in subsets}


def is_npt(rho: DensityMatrix, margin: float = NEG_MARGIN) -> bool:
    return min(ppt_check(rho).values()) < -margin


__all__ = [
    "NEG_MARGIN",
    "DEFAULT_BUDGET",
    "Verdict",
    "StrategyKind",
    "SearchStrategy",
    "DetectionReport",
    "GammaBatch",
    "enumerate_sign_diagonals",
    "diagonal_unitary_flips",
    "sign_orbit_representatives",
    "random_contraction",
    "local_refine",
    "detect",
    "witness_min_eig",
    "Threshold",
    "critical_parameter",
    "sweep",
    "SweepRow",
    "SweepResult",
    "ppt_check",
    "is_npt",
    "parse_subset",
    "subset_name",
]
