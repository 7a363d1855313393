import numpy as np
import pytest

from blochsep.generators import generators_or_empty

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def local_map(R, n):
    """Superoperator of X -> Tr(X) I/n + 1/2 sum_ij R_ij Tr(X l_j) l_i, built entrywise."""
    g = generators_or_empty(n).generators
    sup = np.zeros((n * n, n * n), dtype=complex)
    for a in range(n):
        for b in range(n):
            e = np.zeros((n, n))
            e[a, b] = 1.0
            out = np.trace(e) * np.eye(n) / n
            for i in range(g.shape[0]):
                for j in range(g.shape[0]):
                    out = out + 0.5 * R[i, j] * np.trace(e @ g[j]) * g[i]
            sup[:, a * n + b] = out.ravel()
    return sup


def apply_local_maps(rho, dims, R1, R2):
    """Apply the local maps of R1 (party A) and R2 (party B) directly to rho, block by block."""
    n1, n2, n3 = dims
    s1 = local_map(R1, n1) if n1 > 1 else np.eye(1)
    s2 = local_map(R2, n2) if n2 > 1 else np.eye(1)
    t = rho.reshape(n1, n2, n3, n1, n2, n3)
    out = np.zeros_like(t)
    for a in range(n1):
        for x in range(n1):
            for b in range(n2):
                for y in range(n2):
                    block = t[a, b, :, x, y, :]
                    img1 = s1[:, a * n1 + x].reshape(n1, n1)
                    img2 = s2[:, b * n2 + y].reshape(n2, n2)
                    out += np.einsum("ax,by,cd->abcxyd", img1, img2, block)
    d = n1 * n2 * n3
    return out.reshape(d, d)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
