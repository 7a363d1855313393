"""Mixed qutrit GHZ states: (1-p) I/27 + p |GHZ><GHZ|.

The transformed operator is affine in p, so its smallest eigenvalue is
(1-p)/27 + p mu with mu the smallest eigenvalue for the pure GHZ state. With
R1 = R2 = diag(1/2 x5, -1/2 x3) one finds mu = -2/27 and the onset at p = 1/3.

Run:  python demos/03_ghz_threshold.py
"""
import numpy as np

from blochsep import SearchStrategy, StrategyKind, critical_parameter, decompose, detect, ghz_mixed, gamma_matrix
from blochsep.gamma import transpose_pair

t = transpose_pair((3, 3))
mu = np.linalg.eigvalsh(gamma_matrix(decompose(ghz_mixed(3, 1.0)), t))[0]
print(f"mu = {mu:.6f}  (-2/27 = {-2 / 27:.6f})")
th = critical_parameter("ghz-mixed", t, 0.0, 1.0, 1e-6)
print(f"onset with R1 = R2 = scaled transpose diagonal: p = {th.value:.6f}")

# Searching every pair of sign diagonals (65536 pairs of 27 x 27 eigenproblems) does better.
for p in (0.2, 0.3):
    rep = detect(ghz_mixed(3, p), SearchStrategy(StrategyKind.SIGN_DIAGONAL))
    print(f"p={p}: {rep.verdict.value}, min eigenvalue {rep.min_eigenvalue:+.5f}")
