"""Entropic steering and concurrence for arbitrary two-qubit density matrices.

Steering in the direction A->B is certified by violation of the three-axis
entropic inequality sum_i H(s_i^B | s_i^A) >= 2 bits, where the conditional
entropy per Pauli axis is H(joint) - H(marginal of the steering party). The
quantifier

    S(A->B) = max(0, (2 - sum_i H(s_i^B | s_i^A)) / 2)

is normalized so a Bell state yields exactly 1. All steering entropies are
in bits; distributions come from the Born rule with the axis eigenprojectors.

Concurrence has two independent routes: the closed form for X-shaped states
and the general spin-flip construction, which doubles as an oracle for the
first.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .qmath import IDENTITY_2, SIGMA_X, SIGMA_Y, SIGMA_Z, kron, shannon_entropy

# Steering values at or below this floor count as zero for classification.
STEERING_FLOOR = 1e-9

# Entries that must vanish for the X-state fast path.
_OFF_X = ((0, 1), (0, 2), (1, 0), (1, 3), (2, 0), (2, 3), (3, 1), (3, 2))

_PAULI = {"x": SIGMA_X, "y": SIGMA_Y, "z": SIGMA_Z}


class NotXState(ValueError):
    """Raised when the X-state concurrence formula is applied to a generic state."""


@dataclass(frozen=True)
class PauliDistribution:
    """Born-rule outcome statistics for one measurement axis on both qubits.

    joint is ordered (+,+), (+,-), (-,+), (-,-); the marginals are its row
    and column sums.
    """

    axis: str
    joint: np.ndarray
    marginal_a: np.ndarray
    marginal_b: np.ndarray


@dataclass(frozen=True)
class SteeringReport:
    """Both steering directions, their asymmetry and the resulting class.

    cond_entropy_ab / cond_entropy_ba hold the per-axis conditional
    entropies (x, y, z) in bits. steering_class is one of "two-way",
    "one-way-AtoB", "one-way-BtoA", "no-way".
    """

    s_ab: float
    s_ba: float
    delta12: float
    cond_entropy_ab: tuple[float, float, float]
    cond_entropy_ba: tuple[float, float, float]
    steering_class: str


def pauli_joint_distribution(rho: np.ndarray, axis: str) -> PauliDistribution:
    """Joint +/- outcome distribution of measuring the same Pauli axis on both qubits."""
    sigma = _PAULI[axis]
    proj = ((IDENTITY_2 + sigma) / 2.0, (IDENTITY_2 - sigma) / 2.0)
    joint = np.array(
        [
            float(np.trace(rho @ kron(pa, pb)).real)
            for pa in proj
            for pb in proj
        ]
    )
    joint = np.clip(joint, 0.0, None)
    marginal_a = np.array([joint[0] + joint[1], joint[2] + joint[3]])
    marginal_b = np.array([joint[0] + joint[2], joint[1] + joint[3]])
    for arr in (joint, marginal_a, marginal_b):
        arr.setflags(write=False)
    return PauliDistribution(
        axis=axis, joint=joint, marginal_a=marginal_a, marginal_b=marginal_b
    )


def _conditional_entropies(rho: np.ndarray, direction: str) -> tuple[float, float, float]:
    if direction not in ("AtoB", "BtoA"):
        raise ValueError(f"direction must be 'AtoB' or 'BtoA', got {direction!r}")
    out = []
    for axis in "xyz":
        d = pauli_joint_distribution(rho, axis)
        marg = d.marginal_a if direction == "AtoB" else d.marginal_b
        out.append(shannon_entropy(d.joint) - shannon_entropy(marg))
    return tuple(out)


def conditional_entropy_sum(rho: np.ndarray, direction: str) -> float:
    """Sum over the x, y, z axes of H(measured party | steering party), in bits."""
    return float(sum(_conditional_entropies(rho, direction)))


def steering(rho: np.ndarray) -> SteeringReport:
    """Entropic steering in both directions with asymmetry classification."""
    ce_ab = _conditional_entropies(rho, "AtoB")
    ce_ba = _conditional_entropies(rho, "BtoA")
    s_ab = max(0.0, (2.0 - sum(ce_ab)) / 2.0)
    s_ba = max(0.0, (2.0 - sum(ce_ba)) / 2.0)
    delta12 = abs(s_ab - s_ba)
    ab, ba = s_ab > STEERING_FLOOR, s_ba > STEERING_FLOOR
    if ab and ba:
        cls = "two-way"
    elif ab:
        cls = "one-way-AtoB"
    elif ba:
        cls = "one-way-BtoA"
    else:
        cls = "no-way"
    return SteeringReport(
        s_ab=s_ab,
        s_ba=s_ba,
        delta12=delta12,
        cond_entropy_ab=ce_ab,
        cond_entropy_ba=ce_ba,
        steering_class=cls,
    )


def concurrence_x(rho: np.ndarray, atol: float = 1e-9) -> float:
    """Concurrence of an X-shaped state, 2 max(0, |r14| - sqrt(r22 r33), |r23| - sqrt(r11 r44)).

    Raises NotXState when any off-X entry exceeds atol; generic states go
    through concurrence_wootters instead.
    """
    worst = max(abs(rho[i, j]) for i, j in _OFF_X)
    if worst > atol:
        raise NotXState(f"off-X entry of magnitude {worst:.3e} exceeds {atol:.1e}")
    d = np.clip(np.diag(rho).real, 0.0, None)
    return 2.0 * max(
        0.0,
        float(abs(rho[0, 3]) - np.sqrt(d[1] * d[2])),
        float(abs(rho[1, 2]) - np.sqrt(d[0] * d[3])),
    )


def concurrence_wootters(rho: np.ndarray) -> float:
    """General two-qubit concurrence via the spin-flip spectrum.

    C = max(0, sqrt(m1) - sqrt(m2) - sqrt(m3) - sqrt(m4)) with m_i the
    descending eigenvalues of rho (sy x sy) rho* (sy x sy), conjugation in
    the computational basis. Numerically the sqrt(m_i) are obtained as the
    singular values of A.T (sy x sy) A with rho = A A^dagger: that matrix is
    complex symmetric, so its Gram matrix is similar to the spin-flip
    product and the SVD delivers the roots without the sqrt-of-eigenvalue
    precision loss near zero.
    """
    yy = kron(SIGMA_Y, SIGMA_Y).real
    evals, evecs = np.linalg.eigh(rho)
    a = evecs * np.sqrt(np.clip(evals, 0.0, None))
    m = a.T @ yy @ a
    s = np.linalg.svd(m, compute_uv=False)
    return max(0.0, float(s[0] - s[1] - s[2] - s[3]))
