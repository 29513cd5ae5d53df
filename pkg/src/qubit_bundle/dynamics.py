"""Unitary time evolution and chart-managed coordinate trajectories.

``evolve`` integrates a time-independent Hermitian generator exactly through
its eigendecomposition.  ``coordinate_trajectory`` turns the resulting state
sequence into stratum-appropriate coordinates that stay continuous: within
the partial stratum the chart is kept by hysteresis until a pole guard is
violated, and at a switch the fibre angle of the new chart agrees with the
transported old one by construction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import _backend, tolerances
from .charts import BundleCoords, Chart, _patch_contains, chart_contains, extract, transition_factor
from .entanglement import Stratum
from .extremes import (
    AxisAngleRotation,
    BlochPair,
    factor_unentangled,
    rotation_from_state,
)
from .linalg import TwoQubitState, _require_normalized


@dataclass(frozen=True)
class HermitianGenerator:
    """A 4x4 Hermitian matrix driving the evolution (hbar = 1)."""

    matrix: np.ndarray

    def __post_init__(self):
        m = np.array(self.matrix, dtype=np.complex128, copy=True)
        if m.shape != (4, 4):
            raise ValueError(f"generator must be 4x4, got shape {m.shape}")
        if np.max(np.abs(m - m.conj().T)) > tolerances.HERMITIAN_TOL:
            raise ValueError("generator matrix is not Hermitian")
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)


def local_hamiltonian(a, b) -> HermitianGenerator:
    """A (x) I + I (x) B: a generator that cannot change the concurrence."""
    a = np.asarray(a, dtype=np.complex128)
    b = np.asarray(b, dtype=np.complex128)
    eye = np.eye(2)
    return HermitianGenerator(np.kron(a, eye) + np.kron(eye, b))


def evolve(
    h: HermitianGenerator,
    initial: TwoQubitState,
    t0: float,
    t1: float,
    dt: float,
) -> list[tuple[float, TwoQubitState]]:
    """States exp(-i H (t - t0))|initial> on the grid t0, t0+dt, ... up to t1."""
    if dt <= 0.0:
        raise ValueError(f"dt must be positive, got {dt!r}")
    if t1 <= t0:
        raise ValueError(f"t1 must exceed t0, got t0={t0!r}, t1={t1!r}")
    _require_normalized(initial)
    eigenvalues, eigenvectors = np.linalg.eigh(h.matrix)
    projected = eigenvectors.conj().T @ initial.amplitudes
    steps = int(math.floor((t1 - t0) / dt + 1e-9))
    out = []
    for k in range(steps + 1):
        t = t0 + k * dt
        amps = eigenvectors @ (np.exp(-1j * eigenvalues * (t - t0)) * projected)
        out.append((t, TwoQubitState(amps)))
    return out


@dataclass(frozen=True)
class TrajectoryPoint:
    """One sample: time, stratum tag, stratum-appropriate coordinates, concurrence.

    ``near_boundary`` marks samples whose concurrence falls between the exact
    classification threshold and the widened trajectory band, where the
    banded stratum tag coarsens the pointwise classification.
    """

    t: float
    stratum: Stratum
    coords: BlochPair | BundleCoords | AxisAngleRotation
    concurrence: float
    near_boundary: bool = False


@dataclass(frozen=True)
class TrajectoryEvent:
    """A recorded chart switch or stratum change at time t."""

    t: float
    kind: str
    before: str
    after: str
    gamma_mismatch: float | None = None


@dataclass(frozen=True)
class Trajectory:
    points: list[TrajectoryPoint]
    events: list[TrajectoryEvent]

    def __iter__(self):
        return iter(self.points)

    def __len__(self) -> int:
        return len(self.points)


def _banded_stratum(c: float, eps_band: float) -> Stratum:
    if c <= eps_band:
        return Stratum.UNENTANGLED
    if c >= 1.0 - eps_band:
        return Stratum.FULL
    return Stratum.PARTIAL


def coordinate_trajectory(
    states: list[tuple[float, TwoQubitState]],
    *,
    eps_class: float = tolerances.EPS_CLASS,
    eps_band: float = tolerances.EPS_BAND,
    delta_pole: float = tolerances.DELTA_POLE,
    max_step_infidelity: float = 0.01,
) -> Trajectory:
    """Coordinatize a state sequence, keeping charts stable by hysteresis.

    Consecutive states must overlap with fidelity at least
    1 - max_step_infidelity (the caller controls dt).  Within the partial
    stratum the previous chart is reused while the base point stays inside
    its domain; on a pole-guard violation, only the offending qubit's patch
    letter flips and the switch is recorded with the fibre-angle mismatch
    after transport, measured at the switch sample itself.
    """
    points: list[TrajectoryPoint] = []
    events: list[TrajectoryEvent] = []
    previous_chart: Chart | None = None
    previous_stratum: Stratum | None = None
    previous_amps = None

    for t, state in states:
        amps = state.amplitudes
        if previous_amps is not None:
            step_fidelity = abs(np.vdot(previous_amps, amps)) ** 2
            if step_fidelity < 1.0 - max_step_infidelity:
                raise ValueError(
                    f"consecutive states at t={t!r} overlap with fidelity "
                    f"{step_fidelity!r}; decrease dt"
                )
        previous_amps = amps

        c = min(float(_backend.kernels.concurrence(amps)), 1.0)
        stratum = _banded_stratum(c, eps_band)
        near = (eps_class < c <= eps_band) or (1.0 - eps_band <= c < 1.0 - eps_class)

        coords: BlochPair | BundleCoords | AxisAngleRotation
        if stratum is Stratum.UNENTANGLED:
            coords = factor_unentangled(state, eps_class=eps_band)
        elif stratum is Stratum.FULL:
            coords = rotation_from_state(state, eps_class=eps_band)
        else:
            coords = extract(state, eps_class=eps_class, delta_pole=delta_pole)
            if previous_chart is not None and previous_chart is not coords.chart:
                if chart_contains(previous_chart, coords.theta1, coords.theta2, delta_pole):
                    # Hysteresis: stay in the previous chart while it is valid.
                    coords = extract(
                        state, previous_chart, eps_class=eps_class, delta_pole=delta_pole
                    )
                else:
                    # Flip only the patch letters whose pole guard is violated.
                    letter1 = previous_chart.qubit1
                    letter2 = previous_chart.qubit2
                    if not _patch_contains(letter1, coords.theta1, delta_pole):
                        letter1 = "S" if letter1 == "N" else "N"
                    if not _patch_contains(letter2, coords.theta2, delta_pole):
                        letter2 = "S" if letter2 == "N" else "N"
                    new_chart = Chart(letter1 + letter2)
                    coords = extract(
                        state, new_chart, eps_class=eps_class, delta_pole=delta_pole
                    )
                    events.append(
                        TrajectoryEvent(
                            t=t,
                            kind="chart-switch",
                            before=previous_chart.value,
                            after=new_chart.value,
                            gamma_mismatch=_switch_gamma_mismatch(
                                state, previous_chart, coords, eps_class
                            ),
                        )
                    )
            previous_chart = coords.chart

        if previous_stratum is not None and stratum is not previous_stratum:
            events.append(
                TrajectoryEvent(
                    t=t,
                    kind="stratum-change",
                    before=previous_stratum.value,
                    after=stratum.value,
                )
            )
        previous_stratum = stratum
        points.append(
            TrajectoryPoint(
                t=t, stratum=stratum, coords=coords, concurrence=c, near_boundary=near
            )
        )
    return Trajectory(points=points, events=events)


def _switch_gamma_mismatch(
    state: TwoQubitState, old_chart: Chart, new_coords: BundleCoords, eps_class: float
) -> float | None:
    """|e^{i gamma_new} - t e^{i gamma_old}| re-extracted at the switch sample.

    The old chart's pole guard is bypassed: the base point is still strictly
    inside the mathematical domain unless it sits exactly on an excluded
    pole, in which case no comparison is possible and None is returned.
    """
    for letter, theta in (
        (old_chart.qubit1, new_coords.theta1),
        (old_chart.qubit2, new_coords.theta2),
    ):
        distance_to_excluded_pole = math.pi - theta if letter == "N" else theta
        if distance_to_excluded_pole < 1e-12:
            return None
    old = extract(state, old_chart, eps_class=eps_class, delta_pole=0.0)
    factor = transition_factor(new_coords.chart, old_chart, old.phi1, old.phi2)
    return abs(
        complex(math.cos(new_coords.gamma), math.sin(new_coords.gamma))
        - factor * complex(math.cos(old.gamma), math.sin(old.gamma))
    )


def _circle_distance(a: float, b: float) -> float:
    return abs(math.remainder(a - b, 2.0 * math.pi))


@dataclass(frozen=True)
class ContinuityReport:
    """Worst-case coordinate steps observed along a trajectory."""

    max_within_chart_step: float
    max_switch_gamma_mismatch: float
    chart_switches: int
    stratum_changes: int


def continuity_report(trajectory: Trajectory) -> ContinuityReport:
    """Largest per-component step between consecutive same-chart partial points.

    theta and eta are compared directly; phi1, phi2, and gamma are circle
    coordinates and are compared on the circle.
    """
    max_step = 0.0
    for prev, cur in zip(trajectory.points, trajectory.points[1:]):
        if prev.stratum is not Stratum.PARTIAL or cur.stratum is not Stratum.PARTIAL:
            continue
        a, b = prev.coords, cur.coords
        if a.chart is not b.chart:
            continue
        step = max(
            abs(a.eta - b.eta),
            abs(a.theta1 - b.theta1),
            abs(a.theta2 - b.theta2),
            _circle_distance(a.phi1, b.phi1),
            _circle_distance(a.phi2, b.phi2),
            _circle_distance(a.gamma, b.gamma),
        )
        max_step = max(max_step, step)
    switch_mismatches = [
        e.gamma_mismatch
        for e in trajectory.events
        if e.kind == "chart-switch" and e.gamma_mismatch is not None
    ]
    return ContinuityReport(
        max_within_chart_step=max_step,
        max_switch_gamma_mismatch=max(switch_mismatches, default=0.0),
        chart_switches=sum(1 for e in trajectory.events if e.kind == "chart-switch"),
        stratum_changes=sum(1 for e in trajectory.events if e.kind == "stratum-change"),
    )
