"""Dense complex linear algebra for two-qubit states and single-qubit unitaries.

Amplitude order is fixed as (c_pp, c_pm, c_mp, c_mm) where ``p``/``m`` are the
+1/-1 eigenstates of sigma_z on each qubit and the first index belongs to
qubit 1.  States are projective: the overall amplitude and phase carry no
physical meaning, and two states are "the same" exactly when their fidelity
is 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import _backend, tolerances
from .errors import DegenerateStateError

BASIS_LABELS = ("++", "+-", "-+", "--")


def _as_complex_array(values, shape, what: str) -> np.ndarray:
    arr = np.array(values, dtype=np.complex128, copy=True)
    if arr.shape != shape:
        raise ValueError(f"{what} must have shape {shape}, got {arr.shape}")
    return arr


@dataclass(frozen=True)
class TwoQubitState:
    """Four complex amplitudes in the fixed (++, +-, -+, --) basis order."""

    amplitudes: np.ndarray

    def __post_init__(self):
        amps = _as_complex_array(self.amplitudes, (4,), "amplitudes")
        amps.setflags(write=False)
        object.__setattr__(self, "amplitudes", amps)

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))


def _require_normalized(state: TwoQubitState, tol: float = 1e-9) -> None:
    if abs(state.norm - 1.0) > tol:
        raise ValueError(f"state is not normalized (norm = {state.norm!r})")


def normalize(state: TwoQubitState) -> TwoQubitState:
    """Rescale to unit norm; the result equals the input up to a positive factor."""
    n = state.norm
    if n < 1e-150:
        raise DegenerateStateError("degenerate state: amplitudes have zero norm")
    return TwoQubitState(state.amplitudes / n)


def fidelity(a: TwoQubitState, b: TwoQubitState) -> float:
    """|<a|b>|^2 for normalized states; 1 exactly when projectively equal."""
    _require_normalized(a)
    _require_normalized(b)
    overlap = np.vdot(a.amplitudes, b.amplitudes)
    return min(abs(overlap) ** 2, 1.0)


def is_unitary(u: np.ndarray, tol: float = tolerances.UNITARY_TOL) -> bool:
    u = np.asarray(u)
    return bool(
        np.all(np.abs(u.conj().T @ u - np.eye(u.shape[0])) <= tol)
    )


@dataclass(frozen=True)
class LocalUnitaryPair:
    """A product operator u1 (x) u2 acting independently on the two qubits."""

    u1: np.ndarray
    u2: np.ndarray

    def __post_init__(self):
        for name in ("u1", "u2"):
            u = _as_complex_array(getattr(self, name), (2, 2), name)
            if not is_unitary(u):
                raise ValueError(f"{name} is not unitary within {tolerances.UNITARY_TOL}")
            u.setflags(write=False)
            object.__setattr__(self, name, u)


def apply_local(pair: LocalUnitaryPair, state: TwoQubitState) -> TwoQubitState:
    """(u1 (x) u2)|state>; preserves the norm."""
    return TwoQubitState(_backend.kernels.apply_local(pair.u1, pair.u2, state.amplitudes))


def su2_from_axis_angle(axis, angle: float) -> np.ndarray:
    """exp(-i (n . sigma) angle / 2): counterclockwise rotation about the unit axis n.

    The returned matrix is special unitary; angle and angle + 2*pi differ by an
    overall sign, which is projectively invisible.
    """
    ax = np.asarray(axis, dtype=np.float64)
    if ax.shape != (3,):
        raise ValueError(f"axis must be a 3-vector, got shape {ax.shape}")
    n = float(np.linalg.norm(ax))
    if abs(n - 1.0) > tolerances.AXIS_TOL:
        raise ValueError(f"axis must be a unit vector (norm = {n!r})")
    ax = ax / n
    return _backend.kernels.su2_from_axis_angle(ax[0], ax[1], ax[2], float(angle))


def coefficient_matrix(state: TwoQubitState) -> np.ndarray:
    """Reshape the amplitudes into the 2x2 matrix m[i, j] = c_ij (qubit-1 index first)."""
    return state.amplitudes.reshape(2, 2).copy()


def state_from_matrix(m) -> TwoQubitState:
    """Inverse of :func:`coefficient_matrix`."""
    return TwoQubitState(_as_complex_array(m, (2, 2), "coefficient matrix").reshape(4))


@dataclass(frozen=True)
class BlochPoint:
    """A point on the Bloch sphere, theta in [0, pi], phi in [0, 2*pi).

    phi is meaningless at the poles and is canonicalized to 0 there.
    """

    theta: float
    phi: float = 0.0

    def __post_init__(self):
        theta = float(self.theta)
        if theta < -1e-12 or theta > math.pi + 1e-12:
            raise ValueError(f"theta must lie in [0, pi], got {theta!r}")
        theta = min(max(theta, 0.0), math.pi)
        phi = float(self.phi) % (2.0 * math.pi)
        if theta <= tolerances.POLE_PHI_TOL or theta >= math.pi - tolerances.POLE_PHI_TOL:
            phi = 0.0
        object.__setattr__(self, "theta", theta)
        object.__setattr__(self, "phi", phi)

    @property
    def cartesian(self) -> np.ndarray:
        st = math.sin(self.theta)
        return np.array(
            [st * math.cos(self.phi), st * math.sin(self.phi), math.cos(self.theta)]
        )


def bloch_point_of_ket(ket) -> BlochPoint:
    """Bloch angles of a single-qubit ket, ket ~ (cos(theta/2), e^{i phi} sin(theta/2))."""
    k = np.asarray(ket, dtype=np.complex128).reshape(2)
    n = float(np.linalg.norm(k))
    if n < 1e-150:
        raise DegenerateStateError("degenerate ket: zero norm")
    a0, a1 = abs(k[0]) / n, abs(k[1]) / n
    theta = 2.0 * math.atan2(a1, a0)
    if a0 <= tolerances.POLE_PHI_TOL or a1 <= tolerances.POLE_PHI_TOL:
        return BlochPoint(theta, 0.0)
    z = k[1] * k[0].conjugate()
    return BlochPoint(theta, math.atan2(z.imag, z.real))


def ket_of_bloch_point(point: BlochPoint) -> np.ndarray:
    """The ket (cos(theta/2), e^{i phi} sin(theta/2)) at the given Bloch point."""
    half = 0.5 * point.theta
    return np.array(
        [math.cos(half), complex(math.cos(point.phi), math.sin(point.phi)) * math.sin(half)],
        dtype=np.complex128,
    )
