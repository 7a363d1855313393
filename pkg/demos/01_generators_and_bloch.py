"""Generator bases, Bloch vectors and the coefficient-operator expansion.

Run:  python demos/01_generators_and_bloch.py
"""
import numpy as np

from blochsep import build_generators, decompose, inner_radius, outer_radius, random_density, reconstruct
from blochsep.bloch import BlochVector

# The SU(3) basis: two diagonal generators, three real symmetric, three imaginary.
basis = build_generators(3)
print("SU(3) labels:", basis.labels)
gram = np.einsum("iab,jba->ij", basis.generators, basis.generators)
print("Tr(l_i l_j) == 2 delta_ij:", np.allclose(gram, 2 * np.eye(8)))

# Bloch balls: every vector inside the inner ball is a state, every state is inside the outer ball.
for n in (2, 3, 4):
    print(f"n={n}: inner radius {inner_radius(n):.5f}, outer radius {outer_radius(n):.5f}")

v = np.zeros(8)
v[2] = inner_radius(3)
print("state on the inner sphere has eigenvalues", np.round(np.linalg.eigvalsh(BlochVector(v, 3).to_matrix()), 6))

# Any three-party state splits into operators on the last party.
rho = random_density((2, 2, 3), seed=1)
b = decompose(rho)
print("M0 trace:", np.trace(b.M0).real, "(1/(N1 N2) = 0.25)")
print("coefficient shapes:", b.M.shape, b.Mt.shape, b.Mij.shape)
print("roundtrip error:", np.abs(reconstruct(b) - rho.matrix).max())
