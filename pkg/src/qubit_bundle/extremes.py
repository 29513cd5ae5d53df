"""Closed-form coordinates for the two boundary strata.

Unentangled states factor into a pair of Bloch points, one per qubit.  Fully
entangled states correspond one-to-one to three-dimensional rotations: the
state assigned to a counterclockwise rotation by ``angle`` about the unit
axis ``n`` is (exp(-i (n . sigma) angle / 2) (x) I)|singlet>, with the
singlet itself assigned to the identity rotation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import _backend, tolerances
from .entanglement import Stratum, classify, schmidt
from .errors import StratumError
from .linalg import (
    BlochPoint,
    TwoQubitState,
    bloch_point_of_ket,
    coefficient_matrix,
    ket_of_bloch_point,
    su2_from_axis_angle,
)

SINGLET = TwoQubitState([0.0, 1.0 / math.sqrt(2.0), -1.0 / math.sqrt(2.0), 0.0])

# Inverse of the singlet's coefficient matrix, sqrt(2) * [[0, -1], [1, 0]].
_SINGLET_MATRIX_INV = np.array(
    [[0.0, -math.sqrt(2.0)], [math.sqrt(2.0), 0.0]], dtype=np.complex128
)


@dataclass(frozen=True)
class BlochPair:
    """The two Bloch points of a product state."""

    q1: BlochPoint
    q2: BlochPoint


@dataclass(frozen=True)
class AxisAngleRotation:
    """A rotation by angle in [0, pi] about a unit axis.

    At angle 0 the axis is canonicalized to z; at angle pi, where n and -n
    give the same rotation, the first axis component of magnitude above 1e-9
    is made positive.
    """

    axis: np.ndarray
    angle: float

    def __post_init__(self):
        ax = np.array(self.axis, dtype=np.float64, copy=True).reshape(3)
        n = float(np.linalg.norm(ax))
        if abs(n - 1.0) > tolerances.AXIS_TOL:
            raise ValueError(f"axis must be a unit vector (norm = {n!r})")
        ax /= n
        angle = float(self.angle)
        if angle < -1e-12 or angle > math.pi + 1e-12:
            raise ValueError(f"angle must lie in [0, pi], got {angle!r}")
        angle = min(max(angle, 0.0), math.pi)
        if angle == 0.0:
            ax = np.array([0.0, 0.0, 1.0])
        elif angle == math.pi:
            for component in ax:
                if abs(component) > 1e-9:
                    if component < 0.0:
                        ax = -ax
                    break
        ax.setflags(write=False)
        object.__setattr__(self, "axis", ax)
        object.__setattr__(self, "angle", angle)


IDENTITY_ROTATION = AxisAngleRotation(np.array([0.0, 0.0, 1.0]), 0.0)


def factor_unentangled(
    state: TwoQubitState, eps_class: float = tolerances.EPS_CLASS
) -> BlochPair:
    """Bloch points of the two tensor factors of a product state."""
    cls = classify(state, eps_class)
    if cls.stratum is not Stratum.UNENTANGLED:
        raise StratumError(
            f"not a product state: stratum {cls.stratum.value} "
            f"(concurrence {cls.concurrence!r})"
        )
    data = schmidt(state)
    return BlochPair(
        q1=bloch_point_of_ket(data.basis1[0]), q2=bloch_point_of_ket(data.basis2[0])
    )


def compose_unentangled(pair: BlochPair) -> TwoQubitState:
    """The product state with the given Bloch point on each qubit."""
    return TwoQubitState(np.kron(ket_of_bloch_point(pair.q1), ket_of_bloch_point(pair.q2)))


def state_from_rotation(rotation: AxisAngleRotation) -> TwoQubitState:
    """The fully entangled state labeled by the rotation."""
    u = su2_from_axis_angle(rotation.axis, rotation.angle)
    eye = np.eye(2, dtype=np.complex128)
    return TwoQubitState(_backend.kernels.apply_local(u, eye, SINGLET.amplitudes))


def rotation_from_state(
    state: TwoQubitState, eps_class: float = tolerances.EPS_CLASS
) -> AxisAngleRotation:
    """The rotation labeling a fully entangled state.

    The coefficient matrix times the inverse singlet matrix recovers the
    qubit-1 factor up to a phase; rescaling by 1/sqrt(det) projects onto the
    two SU(2) lifts, and the lift with nonnegative real trace gives the angle
    in [0, pi].
    """
    cls = classify(state, eps_class)
    if cls.stratum is not Stratum.FULL:
        raise StratumError(
            f"expected a fully entangled state, got {cls.stratum.value} "
            f"(concurrence {cls.concurrence!r})"
        )
    u0 = coefficient_matrix(state) @ _SINGLET_MATRIX_INV
    det = u0[0, 0] * u0[1, 1] - u0[0, 1] * u0[1, 0]
    u = u0 / np.sqrt(det)
    if (u[0, 0] + u[1, 1]).real < 0.0:
        u = -u
    half_trace = 0.5 * (u[0, 0] + u[1, 1]).real
    # u = cos(angle/2) I - i sin(angle/2) (n . sigma): the anti-Hermitian part
    # carries sin(angle/2) * n.
    k10 = 0.5j * (u[1, 0] - u[0, 1].conjugate())
    k00 = 0.5j * (u[0, 0] - u[0, 0].conjugate())
    raw = np.array([k10.real, k10.imag, k00.real])
    sin_half = float(np.linalg.norm(raw))
    angle = 2.0 * math.atan2(sin_half, half_trace)
    if sin_half > 1e-9:
        axis = raw / sin_half
    else:
        # Rotation within ~2e-9 of the identity; the axis is unresolvable and
        # the canonical z choice costs less than the angle itself.
        axis = np.array([0.0, 0.0, 1.0])
    return AxisAngleRotation(axis, angle)


def bell_table() -> list[tuple[str, AxisAngleRotation, TwoQubitState]]:
    """The four Bell basis states with their rotation labels.

    The singlet carries the identity rotation; the other three carry pi
    rotations about the x, y, and z axes.
    """
    rows = [("singlet", IDENTITY_ROTATION)]
    for name, axis in (
        ("pi-about-x", (1.0, 0.0, 0.0)),
        ("pi-about-y", (0.0, 1.0, 0.0)),
        ("pi-about-z", (0.0, 0.0, 1.0)),
    ):
        rows.append((name, AxisAngleRotation(np.array(axis), math.pi)))
    return [(name, rot, state_from_rotation(rot)) for name, rot in rows]


def _quaternion(rotation: AxisAngleRotation) -> np.ndarray:
    half = 0.5 * rotation.angle
    return np.concatenate(([math.cos(half)], math.sin(half) * rotation.axis))


def rotation_distance(a: AxisAngleRotation, b: AxisAngleRotation) -> float:
    """Angle of the relative rotation a b^{-1}, respecting the +-n identification.

    Computed from quaternion chords, which stays accurate for nearby
    rotations where an arccos of the quaternion dot product would lose half
    the significant digits.
    """
    qa = _quaternion(a)
    qb = _quaternion(b)
    chord = min(float(np.linalg.norm(qa - qb)), float(np.linalg.norm(qa + qb)))
    return 4.0 * math.asin(min(0.5 * chord, 1.0))
