"""Dense complex linear algebra on one- and two-qubit operators.

Everything here is exact 2x2 / 4x4 numerics: Kronecker composition,
Hermitian eigendecomposition, partial trace and entropies. All functions
are pure and operate on plain complex numpy arrays in the computational
basis {|00>, |01>, |10>, |11>} (qubit 1 is the left tensor factor).
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

# Centralized tolerances. ATOL_HERM guards input validation, ATOL_NUM
# guards reconstruction-grade identities, ATOL_PROB guards probability
# normalization.
ATOL_HERM = 1e-9
ATOL_NUM = 1e-10
ATOL_PROB = 1e-9

SIGMA_X = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
SIGMA_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex)
SIGMA_Z = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)
IDENTITY_2 = np.eye(2, dtype=complex)

for _m in (SIGMA_X, SIGMA_Y, SIGMA_Z, IDENTITY_2):
    _m.setflags(write=False)


class NonHermitianInput(ValueError):
    """Raised when an operator violates conjugate symmetry beyond tolerance."""


class NegativeEigenvalue(ValueError):
    """Raised when a supposed density matrix has a clearly negative eigenvalue."""


class NotADistribution(ValueError):
    """Raised when a probability vector fails normalization or positivity."""


@dataclass(frozen=True)
class EigenSystem:
    """Eigendecomposition of a Hermitian operator.

    values are real and ascending; vectors holds the matching orthonormal
    eigenvectors as columns, so reconstruction is
    vectors @ diag(values) @ vectors.conj().T.
    """

    values: np.ndarray
    vectors: np.ndarray

    def reconstruct(self) -> np.ndarray:
        return (self.vectors * self.values) @ self.vectors.conj().T


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product with qubit 1 as the left factor."""
    return np.kron(a, b)


def hermiticity_defect(m: np.ndarray) -> float:
    """Largest absolute deviation from conjugate symmetry."""
    return float(np.abs(m - m.conj().T).max())


def is_hermitian(m: np.ndarray, atol: float = ATOL_HERM) -> bool:
    return hermiticity_defect(m) <= atol


def eigen_hermitian(h: np.ndarray, atol: float = ATOL_HERM) -> EigenSystem:
    """Eigendecomposition of a Hermitian matrix, ascending and deterministic.

    Raises NonHermitianInput if conjugate symmetry is violated beyond atol.
    Within degenerate clusters (eigenvalue gap < ATOL_HERM) the columns are
    re-orthonormalized by Gram-Schmidt in ascending column order, and every
    eigenvector's phase is fixed so its largest-magnitude component is real
    and positive, making the output reproducible.
    """
    defect = hermiticity_defect(h)
    if defect > atol:
        raise NonHermitianInput(
            f"conjugate-symmetry violated by {defect:.3e} (limit {atol:.1e})"
        )
    values, vectors = np.linalg.eigh(h)
    vectors = np.array(vectors, dtype=complex)

    # Gram-Schmidt inside each degenerate cluster, in column order.
    start = 0
    n = values.size
    for stop in range(1, n + 1):
        if stop < n and values[stop] - values[stop - 1] < ATOL_HERM:
            continue
        if stop - start > 1:
            for j in range(start, stop):
                v = vectors[:, j]
                for k in range(start, j):
                    v = v - (vectors[:, k].conj() @ v) * vectors[:, k]
                vectors[:, j] = v / np.linalg.norm(v)
        start = stop

    # Deterministic global phase per column.
    for j in range(n):
        pivot = vectors[np.argmax(np.abs(vectors[:, j])), j]
        vectors[:, j] *= np.abs(pivot) / pivot

    values = values.copy()
    values.setflags(write=False)
    vectors.setflags(write=False)
    return EigenSystem(values=values, vectors=vectors)


def partial_trace(rho: np.ndarray, keep: int) -> np.ndarray:
    """Reduced density matrix of one qubit of a two-qubit state.

    keep=1 traces out qubit 2 and vice versa; the trace is preserved.
    """
    if keep not in (1, 2):
        raise ValueError(f"keep must be 1 or 2, got {keep!r}")
    r = rho.reshape(2, 2, 2, 2)
    if keep == 1:
        return np.einsum("ikjk->ij", r)
    return np.einsum("kikj->ij", r)


def _eigenvalue_distribution(rho: np.ndarray) -> np.ndarray:
    """Eigenvalues of a density matrix, validated and clamped to [0, 1]."""
    evals = np.linalg.eigvalsh(rho)
    low = float(evals.min())
    if low < -ATOL_HERM:
        raise NegativeEigenvalue(
            f"density matrix has eigenvalue {low:.3e} < -{ATOL_HERM:.1e}"
        )
    return np.clip(evals, 0.0, None)


def von_neumann_entropy(rho: np.ndarray, base: float = 2.0) -> float:
    """Spectral entropy -sum(lam * log(lam)) with the 0 log 0 = 0 convention.

    base=2 gives bits, base=e gives nats. Eigenvalues in [-1e-12, 0) are
    clamped to zero; anything below -ATOL_HERM raises NegativeEigenvalue.
    """
    p = _eigenvalue_distribution(rho)
    nz = p[p > 0.0]
    # Roundoff can push a top eigenvalue past 1; the sum is floored at 0.
    return max(0.0, float(-(nz * (np.log(nz) / np.log(base))).sum()))


def shannon_entropy(p: np.ndarray) -> float:
    """Shannon entropy in bits of a probability vector."""
    p = np.asarray(p, dtype=float)
    if p.min() < -1e-12:
        raise NotADistribution(f"negative probability {p.min():.3e}")
    total = float(p.sum())
    if abs(total - 1.0) > ATOL_PROB:
        raise NotADistribution(f"probabilities sum to {total!r}, not 1")
    nz = p[p > 0.0]
    return float(-(nz * np.log2(nz)).sum())
