"""Two-qubit XYZ chain in a z field with DM and KSEA couplings, and its Gibbs state.

The full Hamiltonian is H = H1 + H2 + H12 with Zeeman terms
H1 = b1 sz x I, H2 = b2 I x sz and the interaction

    H12 = Jx sx.sx + Jy sy.sy + Jz sz.sz
        + Dz (sx.sy - sy.sx)        antisymmetric (DM) part
        + Kz (sx.sy + sy.sx)        symmetric (KSEA) part.

In the computational basis {|00>, |01>, |10>, |11>} this is the block matrix

    [ b1+b2+Jz       0             0        Jx-Jy-2iKz ]
    [    0        b1-b2-Jz     Jx+Jy+2iDz       0      ]
    [    0        Jx+Jy-2iDz  -b1+b2-Jz         0      ]
    [ Jx-Jy+2iKz      0             0       -b1-b2+Jz  ],

two decoupled 2x2 blocks over {|00>,|11>} and {|01>,|10>}. Units use
hbar = k_B = 1 throughout; all couplings carry energy units.

The thermal state is always produced from the numerical eigendecomposition.
Closed-form matrix elements exist for this family, but the production path
does not depend on them; `analytic_crosscheck` evaluates them purely as a
diagnostic overlay (see its docstring for the known defects in those forms).
"""
from __future__ import annotations

import math
from dataclasses import dataclass, fields

import numpy as np

from .qmath import (
    IDENTITY_2,
    SIGMA_X,
    SIGMA_Y,
    SIGMA_Z,
    EigenSystem,
    eigen_hermitian,
    kron,
)


class NonPositiveTemperature(ValueError):
    """Raised for T <= 0; the T -> 0 limit is ambiguous under degeneracy."""


@dataclass(frozen=True)
class ModelParams:
    """The seven real couplings of the model.

    b1, b2 are the Zeeman fields on qubits 1 and 2, (Jx, Jy, Jz) the
    exchange components, Dz and Kz the z components of the DM vector and
    the KSEA tensor. All values are energies (hbar = k_B = 1) and must be
    finite; temperature is passed separately to the operations that need it.
    """

    b1: float = 0.0
    b2: float = 0.0
    Jx: float = 0.0
    Jy: float = 0.0
    Jz: float = 0.0
    Dz: float = 0.0
    Kz: float = 0.0

    def __post_init__(self):
        for f in fields(self):
            v = getattr(self, f.name)
            if not math.isfinite(v):
                raise ValueError(f"{f.name} must be finite, got {v!r}")

    def replace(self, **overrides) -> "ModelParams":
        values = {f.name: getattr(self, f.name) for f in fields(self)}
        values.update(overrides)
        return ModelParams(**values)


@dataclass(frozen=True)
class ThermalState:
    """Gibbs state rho = exp(-H/T)/Z with the decomposition that built it.

    zs is the partition function sum_j exp(-lambda_j / T); log_zs is its
    logarithm computed with the spectrum shifted by its minimum, which stays
    finite even when zs itself overflows at large beta.
    """

    rho: np.ndarray
    t: float
    zs: float
    log_zs: float
    eigensystem: EigenSystem
    h: np.ndarray


def zeeman_hamiltonians(p: ModelParams) -> tuple[np.ndarray, np.ndarray]:
    """The two local Zeeman terms embedded in the two-qubit space."""
    return p.b1 * kron(SIGMA_Z, IDENTITY_2), p.b2 * kron(IDENTITY_2, SIGMA_Z)


def interaction_hamiltonian(p: ModelParams) -> np.ndarray:
    """Exchange + DM + KSEA part of the Hamiltonian (traceless)."""
    sym = kron(SIGMA_X, SIGMA_Y) + kron(SIGMA_Y, SIGMA_X)
    asym = kron(SIGMA_X, SIGMA_Y) - kron(SIGMA_Y, SIGMA_X)
    return (
        p.Jx * kron(SIGMA_X, SIGMA_X)
        + p.Jy * kron(SIGMA_Y, SIGMA_Y)
        + p.Jz * kron(SIGMA_Z, SIGMA_Z)
        + p.Dz * asym
        + p.Kz * sym
    )


def build_hamiltonian(p: ModelParams) -> np.ndarray:
    """Assemble the 4x4 Hamiltonian matrix directly from its block entries."""
    corner = p.Jx - p.Jy - 2j * p.Kz
    inner = p.Jx + p.Jy + 2j * p.Dz
    h = np.array(
        [
            [p.b1 + p.b2 + p.Jz, 0.0, 0.0, corner],
            [0.0, p.b1 - p.b2 - p.Jz, inner, 0.0],
            [0.0, np.conj(inner), -p.b1 + p.b2 - p.Jz, 0.0],
            [np.conj(corner), 0.0, 0.0, -p.b1 - p.b2 + p.Jz],
        ],
        dtype=complex,
    )
    h.setflags(write=False)
    return h


def _require_positive_temperature(t: float):
    if not (t > 0.0):
        raise NonPositiveTemperature(f"temperature must be > 0, got {t!r}")


def thermal_state(p: ModelParams, t: float) -> ThermalState:
    """Exact Gibbs state at temperature t from the eigendecomposition.

    Boltzmann weights are computed relative to the smallest eigenvalue so
    deep-quench sweeps (large coupling / small t) cannot overflow; zs may
    still evaluate to inf for extreme inputs, in which case log_zs remains
    the usable quantity.
    """
    _require_positive_temperature(t)
    h = build_hamiltonian(p)
    es = eigen_hermitian(h)
    shifted = np.exp(-(es.values - es.values[0]) / t)
    norm = float(shifted.sum())
    rho = (es.vectors * (shifted / norm)) @ es.vectors.conj().T
    rho = (rho + rho.conj().T) / 2.0
    rho.setflags(write=False)
    log_zs = float(-es.values[0] / t + np.log(norm))
    with np.errstate(over="ignore"):
        zs = float(np.exp(log_zs))
    return ThermalState(rho=rho, t=t, zs=zs, log_zs=log_zs, eigensystem=es, h=h)


def log_local_partition_functions(p: ModelParams, t: float) -> tuple[float, float]:
    """log Z_i for the bare Zeeman qubits, Z_i = Tr exp(-H_i/T) = 2 cosh(b_i/T)."""
    _require_positive_temperature(t)
    return (
        float(np.logaddexp(p.b1 / t, -p.b1 / t)),
        float(np.logaddexp(p.b2 / t, -p.b2 / t)),
    )


def local_partition_functions(p: ModelParams, t: float) -> tuple[float, float]:
    """Partition functions of the two isolated qubits, 2 cosh(b_i/T) each."""
    lz1, lz2 = log_local_partition_functions(p, t)
    with np.errstate(over="ignore"):
        return float(np.exp(lz1)), float(np.exp(lz2))


@dataclass(frozen=True)
class CrosscheckReport:
    """Entrywise gap between the closed-form Gibbs matrix and the numeric one.

    deviation_printed uses the closed forms exactly as transcribed (their
    normalizer carries a sinh(beta*Delta) term); deviation uses the single
    repair cosh(beta*Delta) that restores unit trace. Both are |analytic -
    numeric| per entry; the max_* fields are their maxima.
    """

    deviation: np.ndarray
    deviation_printed: np.ndarray
    max_abs: float
    max_abs_printed: float


def analytic_crosscheck(p: ModelParams, t: float) -> CrosscheckReport:
    """Evaluate the closed-form thermal matrix elements against the numeric state.

    Diagnostic only: the transcribed closed forms are known to be defective
    (the mixing-angle radicands carry coefficient 5 on Kz^2 / Dz^2 where the
    level splittings carry 4, and the normalizer mixes sinh with cosh), so
    the production path never uses them. The report quantifies how far the
    printed and the trace-repaired variants sit from the numeric state.
    """
    rho = thermal_state(p, t).rho
    beta = 1.0 / t
    j_minus = p.Jx - p.Jy
    j_plus = p.Jx + p.Jy
    delta = math.sqrt((p.b1 + p.b2) ** 2 + j_minus**2 + 4.0 * p.Kz**2)
    delta_p = math.sqrt((p.b1 - p.b2) ** 2 + j_plus**2 + 4.0 * p.Dz**2)
    theta1 = math.atan2(math.sqrt(j_minus**2 + 5.0 * p.Kz**2), p.b1 + p.b2)
    theta2 = math.atan2(math.sqrt(j_plus**2 + 5.0 * p.Dz**2), p.b1 - p.b2)
    phi1 = math.atan2(2.0 * p.Kz, j_minus)
    phi2 = math.atan2(-2.0 * p.Dz, j_plus)

    def entries(zs: float) -> np.ndarray:
        em, ep = math.exp(-beta * p.Jz), math.exp(beta * p.Jz)
        s1, c1 = math.sin(theta1 / 2) ** 2, math.cos(theta1 / 2) ** 2
        s2, c2 = math.sin(theta2 / 2) ** 2, math.cos(theta2 / 2) ** 2
        ed, edp = math.exp(beta * delta), math.exp(-beta * delta)
        eq, eqp = math.exp(beta * delta_p), math.exp(-beta * delta_p)
        m = np.zeros((4, 4), dtype=complex)
        m[0, 0] = em * (ed * s1 + edp * c1) / zs
        m[1, 1] = ep * (eq * c2 + eqp * s2) / zs
        m[2, 2] = ep * (eq * s2 + eqp * c2) / zs
        m[3, 3] = em * (ed * c1 + edp * s1) / zs
        m[3, 0] = -em * np.exp(1j * phi1) * math.sin(theta1) * math.sinh(beta * delta) / zs
        m[0, 3] = np.conj(m[3, 0])
        m[2, 1] = ep * np.exp(1j * phi2) * math.sin(theta2) * math.sinh(beta * delta_p) / zs
        m[1, 2] = np.conj(m[2, 1])
        return m

    zs_printed = 2.0 * math.exp(beta * p.Jz) * math.cosh(beta * delta_p) + 2.0 * math.exp(
        -beta * p.Jz
    ) * math.sinh(beta * delta)
    zs_repaired = 2.0 * math.exp(beta * p.Jz) * math.cosh(beta * delta_p) + 2.0 * math.exp(
        -beta * p.Jz
    ) * math.cosh(beta * delta)

    dev = np.abs(entries(zs_repaired) - rho)
    if zs_printed > 0.0:
        dev_printed = np.abs(entries(zs_printed) - rho)
    else:
        dev_printed = np.full((4, 4), np.inf)
    return CrosscheckReport(
        deviation=dev,
        deviation_printed=dev_printed,
        max_abs=float(dev.max()),
        max_abs_printed=float(dev_printed.max()),
    )


def commutator_defect(ts: ThermalState) -> float:
    """Max-abs entry of [H, rho]; a Gibbs state commutes with its Hamiltonian."""
    c = ts.h @ ts.rho - ts.rho @ ts.h
    return float(np.abs(c).max())
