"""Work extraction and entropic bookkeeping for the coupled-thermalization end state.

The protocol background: two bare Zeeman qubits equilibrate with a bath,
the interaction is switched on, and the pair rethermalizes jointly. All
quantities here refer to the final equilibrium, where the extracted work is

    W = T ln(Z1 Z2 / Z_S) - <H12>,

with Z_i the bare local partition functions, Z_S the coupled one, and
<H12> = Tr[H rho] - Tr[(H1 + H2) rho] the mean interaction energy in the
coupled thermal state. The ideal efficiency divides W by the interaction
cost -<H12> and is left undefined when that cost is not positive.

Entropy bookkeeping uses natural logs so T * S carries energy units:
S_G = T (S(rho) - S(rho1 x rho2)) against the bare local Gibbs states,
E_d = W + S_G, S_l compares reduced against bare local states, and the
local work W_l = W - T S(1:2) subtracts the mutual information stored in
the coupled state.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .model import (
    ModelParams,
    ThermalState,
    log_local_partition_functions,
    thermal_state,
    zeeman_hamiltonians,
)
from .qmath import partial_trace, von_neumann_entropy

# Below this interaction cost the efficiency ratio is reported as absent.
ETA_DENOM_FLOOR = 1e-12


@dataclass(frozen=True)
class ThermoReport:
    """All work-extraction quantities at one (params, T) point.

    Energies: w (extracted work), h12_mean (<H12>), s_g, e_d, s_l, w_l.
    eta is the ideal efficiency or None when the interaction cost is not
    positive. mutual_info is S(1:2) in nats. z1, z2, zs are the partition
    functions (zs may overflow to inf at extreme beta; the work itself is
    always computed in log space).
    """

    w: float
    eta: float | None
    h12_mean: float
    s_g: float
    e_d: float
    s_l: float
    w_l: float
    mutual_info: float
    z1: float
    z2: float
    zs: float


def interaction_energy(ts: ThermalState, p: ModelParams) -> float:
    """<H12> in the coupled thermal state, Tr[H rho] - Tr[(H1+H2) rho]."""
    h1, h2 = zeeman_hamiltonians(p)
    full = float(np.trace(ts.h @ ts.rho).real)
    local = float(np.trace((h1 + h2) @ ts.rho).real)
    return full - local


def _work(ts: ThermalState, p: ModelParams) -> tuple[float, float, float, float]:
    lz1, lz2 = log_local_partition_functions(p, ts.t)
    h12_mean = interaction_energy(ts, p)
    w = ts.t * (lz1 + lz2 - ts.log_zs) - h12_mean
    return w, h12_mean, lz1, lz2


def extracted_work(p: ModelParams, t: float) -> float:
    """Extracted work W = T ln(Z1 Z2 / Z_S) - <H12>, evaluated in log space."""
    ts = thermal_state(p, t)
    return _work(ts, p)[0]


def efficiency(p: ModelParams, t: float) -> float | None:
    """Ideal efficiency W / (-<H12>), or None when the cost -<H12> is not positive."""
    ts = thermal_state(p, t)
    w, h12_mean, _, _ = _work(ts, p)
    cost = -h12_mean
    if cost <= ETA_DENOM_FLOOR:
        return None
    return w / cost


def _bare_local_entropy(b: float, t: float) -> float:
    """Entropy in nats of the single-qubit Gibbs state exp(-b sz / T) / (2 cosh(b/T))."""
    x = b / t
    with np.errstate(over="ignore"):
        q = np.array([1.0 / (1.0 + np.exp(2.0 * x)), 1.0 / (1.0 + np.exp(-2.0 * x))])
    nz = q[q > 0.0]
    return float(-(nz * np.log(nz)).sum())


def entropic_terms(p: ModelParams, t: float) -> ThermoReport:
    """Full thermodynamic report: work, efficiency and all entropic terms."""
    ts = thermal_state(p, t)
    w, h12_mean, lz1, lz2 = _work(ts, p)
    cost = -h12_mean
    eta = w / cost if cost > ETA_DENOM_FLOOR else None

    # Global entropy from the Gibbs weights (exact eigenvalues of rho).
    lam = ts.eigensystem.values
    weights = np.exp(-(lam - lam[0]) / t)
    prob = weights / weights.sum()
    nz = prob[prob > 0.0]
    s_rho = float(-(nz * np.log(nz)).sum())

    s_bare = _bare_local_entropy(p.b1, t) + _bare_local_entropy(p.b2, t)
    s_red1 = von_neumann_entropy(partial_trace(ts.rho, 1), base=np.e)
    s_red2 = von_neumann_entropy(partial_trace(ts.rho, 2), base=np.e)

    s_g = t * (s_rho - s_bare)
    e_d = w + s_g
    s_l = t * ((s_red1 + s_red2) - s_bare)
    mutual_info = s_red1 + s_red2 - s_rho
    w_l = w - t * mutual_info

    with np.errstate(over="ignore"):
        z1, z2 = float(np.exp(lz1)), float(np.exp(lz2))
    return ThermoReport(
        w=w,
        eta=eta,
        h12_mean=h12_mean,
        s_g=s_g,
        e_d=e_d,
        s_l=s_l,
        w_l=w_l,
        mutual_info=mutual_info,
        z1=z1,
        z2=z2,
        zs=ts.zs,
    )
