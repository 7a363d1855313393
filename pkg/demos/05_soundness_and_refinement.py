"""Separable states never produce a certificate; refinement helps on hard states.

Run:  python demos/05_soundness_and_refinement.py
"""
from blochsep import SearchStrategy, StrategyKind, detect, ghz_mixed, random_separable

flagged = 0
for seed in range(40):
    rho, ens = random_separable((3, 3, 2), terms=4, seed=seed)
    for kind in StrategyKind:
        flagged += detect(rho, SearchStrategy(kind, 200, seed)).entangled
print("certificates issued for separable states:", flagged)

rho = ghz_mixed(2, 0.25)
for kind, samples in ((StrategyKind.SIGN_DIAGONAL, 64), (StrategyKind.RANDOM_ORTHOGONAL, 500), (StrategyKind.LOCAL_REFINE, 400)):
    rep = detect(rho, SearchStrategy(kind, samples, 0))
    print(f"{kind.value:10s} {rep.verdict.value:12s} {rep.min_eigenvalue:+.6f}")
