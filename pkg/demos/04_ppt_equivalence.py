"""On 2 x 2 x N states three sign pairs are exactly the partial transposes.

Run:  python demos/04_ppt_equivalence.py
"""
import numpy as np

from blochsep import SearchStrategy, decompose, detect, gamma_matrix, partial_transpose, ppt_as_gamma, ppt_check, random_density

rho = random_density((2, 2, 3), seed=3)
b = decompose(rho)
for which, subset in (("A", [0]), ("B", [1]), ("AB", [0, 1])):
    err = np.abs(gamma_matrix(b, ppt_as_gamma(which)) - partial_transpose(rho, subset)).max()
    print(f"{which:2s}: max |gamma - partial transpose| = {err:.1e}")

agree = 0
for seed in range(50):
    rho = random_density((2, 2, 3), seed=seed)
    npt = min(ppt_check(rho).values()) < -1e-9
    agree += detect(rho, SearchStrategy()).entangled == npt
print(f"detect agrees with the PPT test on {agree}/50 random states")
