"""Circle-bundle coordinate charts for partially entangled states.

A partially entangled state is labeled by six numbers: the class angle eta,
a Bloch point (theta, phi) per qubit, and a fibre angle gamma.  Four
overlapping charts NN, NS, SN, SS cover the two base spheres, one
pole-deleted patch per qubit: an N patch excludes the south pole
(theta <= pi - DELTA_POLE) and an S patch excludes the north pole
(theta >= DELTA_POLE).  On overlaps the fibre angles of the same physical
state are related by unit-modulus transition factors built from exp(2i phi1)
and exp(2i phi2).
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass, replace

import numpy as np

from . import _backend, tolerances
from .entanglement import Stratum, classify, schmidt, standard_state
from .errors import ChartDomainError, StratumError
from .linalg import TwoQubitState, bloch_point_of_ket, normalize


class Chart(enum.Enum):
    NN = "NN"
    NS = "NS"
    SN = "SN"
    SS = "SS"

    @property
    def qubit1(self) -> str:
        return self.value[0]

    @property
    def qubit2(self) -> str:
        return self.value[1]


# Signs (s1, s2) of the factor exp(2i phi1 * s1) * exp(2i phi2 * s2) relating
# the fibre angles of overlapping charts, stored once per unordered pair in a
# canonical direction; the reverse direction is the complex conjugate.  The
# mutation canary in the acceptance suite flips entries here to prove the
# cocycle and transport checks are not vacuous.
_TRANSITION_EXPONENT_TABLE: dict[tuple[Chart, Chart], tuple[int, int]] = {
    (Chart.NN, Chart.SN): (1, 0),
    (Chart.NS, Chart.SS): (1, 0),
    (Chart.NN, Chart.NS): (0, 1),
    (Chart.SN, Chart.SS): (0, 1),
    (Chart.NN, Chart.SS): (1, 1),
    (Chart.NS, Chart.SN): (1, -1),
}

# exp(-i sigma_y pi / 2): the extra factor on every south-chart slot.
_SOUTH_FLIP = np.array([[0.0, -1.0], [1.0, 0.0]], dtype=np.complex128)


@dataclass(frozen=True)
class BundleCoords:
    """Chart tag plus the six real coordinates (eta, theta1, phi1, theta2, phi2, gamma).

    gamma is a fibre angle, meaningful mod 2*pi, stored in (-pi, pi].
    """

    chart: Chart
    eta: float
    theta1: float
    phi1: float
    theta2: float
    phi2: float
    gamma: float

    def __post_init__(self):
        eta = float(self.eta)
        if not 0.0 < eta < 0.5 * math.pi:
            raise ValueError(f"eta must lie strictly inside (0, pi/2), got {eta!r}")
        for name in ("theta1", "theta2"):
            th = float(getattr(self, name))
            if th < -1e-12 or th > math.pi + 1e-12:
                raise ValueError(f"{name} must lie in [0, pi], got {th!r}")
            object.__setattr__(self, name, min(max(th, 0.0), math.pi))
        object.__setattr__(self, "eta", eta)
        object.__setattr__(self, "phi1", float(self.phi1) % (2.0 * math.pi))
        object.__setattr__(self, "phi2", float(self.phi2) % (2.0 * math.pi))
        gamma = math.remainder(float(self.gamma), 2.0 * math.pi)
        if gamma <= -math.pi:
            gamma += 2.0 * math.pi
        object.__setattr__(self, "gamma", gamma)


def t_north(theta: float, phi: float) -> np.ndarray:
    """The north chart operator: exp(-i sz phi/2) exp(-i sy theta/2) exp(i sz phi/2)."""
    return _backend.kernels.t_north(float(theta), float(phi))


def t_south(theta: float, phi: float) -> np.ndarray:
    """The south chart operator: exp(-i sz phi/2) exp(-i sy (theta-pi)/2) exp(i sz phi/2)."""
    return _backend.kernels.t_south(float(theta), float(phi))


def _rotation_z(angle: float) -> np.ndarray:
    return _backend.kernels.su2_from_axis_angle(0.0, 0.0, 1.0, float(angle))


def _patch_contains(letter: str, theta: float, delta_pole: float) -> bool:
    if letter == "N":
        return theta <= math.pi - delta_pole
    return theta >= delta_pole


def chart_contains(
    chart: Chart,
    theta1: float,
    theta2: float,
    delta_pole: float = tolerances.DELTA_POLE,
) -> bool:
    """Whether both base points are inside the chart's coordinate domain."""
    return _patch_contains(chart.qubit1, theta1, delta_pole) and _patch_contains(
        chart.qubit2, theta2, delta_pole
    )


def _require_in_domain(coords: BundleCoords, delta_pole: float) -> None:
    if not chart_contains(coords.chart, coords.theta1, coords.theta2, delta_pole):
        raise ChartDomainError(
            f"chart domain violation: base point (theta1={coords.theta1!r}, "
            f"theta2={coords.theta2!r}) is outside chart {coords.chart.value}"
        )


def _slot_operators(
    chart: Chart, theta1: float, phi1: float, theta2: float, phi2: float, gamma: float
) -> tuple[np.ndarray, np.ndarray]:
    """The per-qubit operators of the chart formula, gamma in the qubit-1 slot.

    A north chart of qubit 1 carries exp(-i sz gamma/2); a south chart
    carries exp(+i sz gamma/2) followed by the south flip, and every south
    slot ends with the flip.
    """
    if chart.qubit1 == "N":
        op1 = t_north(theta1, phi1) @ _rotation_z(gamma)
    else:
        op1 = t_south(theta1, phi1) @ _rotation_z(-gamma) @ _SOUTH_FLIP
    if chart.qubit2 == "N":
        op2 = t_north(theta2, phi2)
    else:
        op2 = t_south(theta2, phi2) @ _SOUTH_FLIP
    return op1, op2


def reconstruct(coords: BundleCoords) -> TwoQubitState:
    """The state the chart formula assigns to the coordinates."""
    _require_in_domain(coords, tolerances.DELTA_POLE)
    op1, op2 = _slot_operators(
        coords.chart, coords.theta1, coords.phi1, coords.theta2, coords.phi2, coords.gamma
    )
    amps = _backend.kernels.apply_local(op1, op2, standard_state(coords.eta).amplitudes)
    return normalize(TwoQubitState(amps))


def extract(
    state: TwoQubitState,
    chart: Chart | None = None,
    *,
    eps_class: float = tolerances.EPS_CLASS,
    residual_tol: float = tolerances.RESIDUAL_TOL,
    delta_pole: float = tolerances.DELTA_POLE,
) -> BundleCoords:
    """Invert the chart formula for a partially entangled state.

    The Schmidt coefficients fix eta, the Bloch points of the dominant
    Schmidt kets fix the base point, and the fibre angle is read off the
    residual obtained by undoing the chart operators at gamma = 0.  When
    ``chart`` is None each qubit gets N if its base point has z >= 0, else S,
    which keeps the base point maximally far from the excluded pole.
    """
    cls = classify(state, eps_class)
    if cls.stratum is not Stratum.PARTIAL:
        raise StratumError(
            f"expected a partially entangled state, got {cls.stratum.value} "
            f"(concurrence {cls.concurrence!r})"
        )
    data = schmidt(state)
    eta = 2.0 * math.atan2(data.lambda2, data.lambda1)
    p1 = bloch_point_of_ket(data.basis1[0])
    p2 = bloch_point_of_ket(data.basis2[0])

    if chart is None:
        letter1 = "N" if p1.theta <= 0.5 * math.pi else "S"
        letter2 = "N" if p2.theta <= 0.5 * math.pi else "S"
        chart = Chart(letter1 + letter2)
    else:
        if not chart_contains(chart, p1.theta, p2.theta, delta_pole):
            raise ChartDomainError(
                f"chart domain violation: base point (theta1={p1.theta!r}, "
                f"theta2={p2.theta!r}) is outside chart {chart.value}"
            )

    op1, op2 = _slot_operators(chart, p1.theta, p1.phi, p2.theta, p2.phi, 0.0)
    residual = _backend.kernels.apply_local(
        op1.conj().T, op2.conj().T, state.amplitudes
    )
    off = max(abs(residual[1]), abs(residual[2]))
    if off > residual_tol:
        raise RuntimeError(
            "internal consistency error: chart residual has off-support "
            f"components of magnitude {off!r} (convention bug)"
        )
    z = residual[3] * residual[0].conjugate()
    gamma = math.atan2(z.imag, z.real)
    return BundleCoords(
        chart=chart,
        eta=eta,
        theta1=p1.theta,
        phi1=p1.phi,
        theta2=p2.theta,
        phi2=p2.phi,
        gamma=gamma,
    )


def _transition_exponents(source: Chart, target: Chart) -> tuple[int, int]:
    if source is target:
        return (0, 0)
    if (source, target) in _TRANSITION_EXPONENT_TABLE:
        return _TRANSITION_EXPONENT_TABLE[(source, target)]
    s1, s2 = _TRANSITION_EXPONENT_TABLE[(target, source)]
    return (-s1, -s2)


def transition_factor(source: Chart, target: Chart, phi1: float, phi2: float) -> complex:
    """The unit-modulus factor t with exp(i gamma_source) = t * exp(i gamma_target)."""
    s1, s2 = _transition_exponents(source, target)
    return cmath.exp(2j * (s1 * phi1 + s2 * phi2))


def transition(coords: BundleCoords, target: Chart) -> BundleCoords:
    """Re-express the same physical point in an overlapping chart.

    The base point and eta are unchanged; the fibre angle obeys
    exp(i gamma_target) = t_{target,source} exp(i gamma_source).
    """
    _require_in_domain(coords, tolerances.DELTA_POLE)
    _require_in_domain(replace(coords, chart=target), tolerances.DELTA_POLE)
    factor = transition_factor(target, coords.chart, coords.phi1, coords.phi2)
    gamma = cmath.phase(factor * cmath.exp(1j * coords.gamma))
    return replace(coords, chart=target, gamma=gamma)
