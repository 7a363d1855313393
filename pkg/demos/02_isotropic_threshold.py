"""The 3 x 3 isotropic family and the scaled transpose diagonal.

With R = diag(1/2 x5, -1/2 x3) the transformed state turns negative for
p > 1/2. Searching every sign pattern finds witnesses down to p = 1/4,
which is where the family actually becomes separable.

Run:  python demos/02_isotropic_threshold.py
"""
from blochsep import SearchStrategy, critical_parameter, detect, isotropic
from blochsep.gamma import transpose_pair

t = transpose_pair((3, 1))
th = critical_parameter("isotropic", t, 0.0, 1.0, 1e-6)
print(f"onset with the scaled transpose diagonal: p = {th.value:.6f} ({th.status})")

for p in (0.2, 0.3, 0.4, 0.75):
    rep = detect(isotropic(3, p), SearchStrategy())
    print(f"p={p:.2f}: {rep.verdict.value:12s} min eigenvalue {rep.min_eigenvalue:+.5f}  ({rep.candidates_tested} pairs)")
