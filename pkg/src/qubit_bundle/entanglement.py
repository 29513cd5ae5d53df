"""Concurrence, entanglement classification, Schmidt data, standard representatives.

The concurrence C = 2|c_pp c_mm - c_pm c_mp| of a normalized pure state lies
in [0, 1] and is invariant under local unitaries, so it labels the
entanglement class of the state.  The angle eta = arcsin(C) parametrizes the
one-parameter family of standard representatives
cos(eta/2)|++> + sin(eta/2)|-->, one per class.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from . import _backend, tolerances
from .linalg import TwoQubitState, _require_normalized, coefficient_matrix


class Stratum(enum.Enum):
    UNENTANGLED = "unentangled"
    PARTIAL = "partial"
    FULL = "full"


@dataclass(frozen=True)
class EntanglementClass:
    """Concurrence, the equivalent angle eta = arcsin(C), and the stratum tag."""

    concurrence: float
    eta: float
    stratum: Stratum


@dataclass(frozen=True)
class SchmidtData:
    """Schmidt coefficients and the orthonormal local bases.

    lambda1 >= lambda2 >= 0 with lambda1^2 + lambda2^2 = 1, and the state is
    sum_k lambda_k |basis1_k> (x) |basis2_k>.  The qubit-1 kets are
    phase-fixed so their first component above 1e-12 is real positive; the
    qubit-2 kets carry the compensating phase so the reassembly is exact.
    """

    lambda1: float
    lambda2: float
    basis1: tuple[np.ndarray, np.ndarray]
    basis2: tuple[np.ndarray, np.ndarray]


def concurrence(state: TwoQubitState) -> float:
    """C = 2|c_pp c_mm - c_pm c_mp|, clamped to [0, 1]."""
    _require_normalized(state)
    amps = state.amplitudes / state.norm
    raw = float(_backend.kernels.concurrence(amps))
    if raw > 1.0 + 1e-12:
        raise ValueError(f"concurrence {raw!r} exceeds 1 beyond tolerance")
    return min(raw, 1.0)


def classify(
    state: TwoQubitState, eps_class: float = tolerances.EPS_CLASS
) -> EntanglementClass:
    """Concurrence plus the stratum tag at the given classification threshold."""
    c = concurrence(state)
    if c <= eps_class:
        stratum = Stratum.UNENTANGLED
    elif c >= 1.0 - eps_class:
        stratum = Stratum.FULL
    else:
        stratum = Stratum.PARTIAL
    return EntanglementClass(concurrence=c, eta=math.asin(c), stratum=stratum)


def standard_state(eta: float) -> TwoQubitState:
    """The standard representative cos(eta/2)|++> + sin(eta/2)|--> of class sin(eta)."""
    eta = float(eta)
    if eta < -1e-12 or eta > 0.5 * math.pi + 1e-12:
        raise ValueError(f"eta must lie in [0, pi/2], got {eta!r}")
    eta = min(max(eta, 0.0), 0.5 * math.pi)
    return TwoQubitState([math.cos(0.5 * eta), 0.0, 0.0, math.sin(0.5 * eta)])


def _phase_fixed(u: np.ndarray, vh: np.ndarray) -> tuple[tuple, tuple]:
    basis1 = []
    basis2 = []
    for k in (0, 1):
        ket1 = u[:, k].copy()
        ket2 = vh[k, :].copy()
        idx = 0 if abs(ket1[0]) > 1e-12 else 1
        phase = ket1[idx] / abs(ket1[idx])
        ket1 /= phase
        ket2 *= phase
        ket1.setflags(write=False)
        ket2.setflags(write=False)
        basis1.append(ket1)
        basis2.append(ket2)
    return tuple(basis1), tuple(basis2)


def schmidt(state: TwoQubitState) -> SchmidtData:
    """Schmidt decomposition via the closed-form SVD of the coefficient matrix."""
    _require_normalized(state)
    u, s, vh = _backend.kernels.svd2x2(coefficient_matrix(state))
    basis1, basis2 = _phase_fixed(np.asarray(u), np.asarray(vh))
    return SchmidtData(
        lambda1=float(s[0]),
        lambda2=float(s[1]),
        basis1=basis1,
        basis2=basis2,
    )
