"""Shared generators and independent numerical oracles for the test suite."""
import numpy as np

from qcorr import ModelParams


def jacobi_eigh(h, sweeps=60, tol=1e-14):
    """Two-sided complex Jacobi diagonalization; independent of LAPACK.

    Each sweep zeroes every off-diagonal pair with a phase-absorbed plane
    rotation; returns ascending eigenvalues and matching eigenvector columns.
    """
    a = np.array(h, dtype=complex)
    n = a.shape[0]
    v = np.eye(n, dtype=complex)
    scale = max(1.0, float(np.abs(a).max()))
    for _ in range(sweeps):
        off = max(
            (abs(a[p, q]) for p in range(n) for q in range(n) if p != q),
            default=0.0,
        )
        if off < tol * scale:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                b = abs(a[p, q])
                if b <= 1e-300:
                    continue
                alpha, gamma = a[p, p].real, a[q, q].real
                phi = np.angle(a[p, q])
                if alpha == gamma:
                    t = 1.0
                else:
                    tau = (gamma - alpha) / (2.0 * b)
                    t = np.sign(tau) / (abs(tau) + np.sqrt(1.0 + tau * tau))
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c
                g = np.eye(n, dtype=complex)
                g[p, p] = c
                g[p, q] = s
                g[q, p] = -s * np.exp(-1j * phi)
                g[q, q] = c * np.exp(-1j * phi)
                a = g.conj().T @ a @ g
                v = v @ g
    values = np.diag(a).real
    order = np.argsort(values, kind="stable")
    return values[order], v[:, order]


def random_hermitian(rng, dim=4, scale=5.0):
    g = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    return scale * (g + g.conj().T) / 2.0


def random_density(rng, dim=4):
    g = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    rho = g @ g.conj().T
    return rho / np.trace(rho).real


def random_x_state(rng):
    """Random valid X-shaped density matrix (PSD by block construction)."""
    d = rng.dirichlet(np.ones(4))
    rho = np.diag(d).astype(complex)
    r14 = np.sqrt(d[0] * d[3]) * rng.uniform() * np.exp(2j * np.pi * rng.uniform())
    r23 = np.sqrt(d[1] * d[2]) * rng.uniform() * np.exp(2j * np.pi * rng.uniform())
    rho[0, 3], rho[3, 0] = r14, r14.conjugate()
    rho[1, 2], rho[2, 1] = r23, r23.conjugate()
    return rho


def random_params(rng, bound=5.0):
    vals = rng.uniform(-bound, bound, size=7)
    return ModelParams(*vals)


def bell_phi_plus():
    rho = np.zeros((4, 4), dtype=complex)
    for i in (0, 3):
        for j in (0, 3):
            rho[i, j] = 0.5
    return rho
