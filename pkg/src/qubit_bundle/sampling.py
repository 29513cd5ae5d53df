"""Seeded random sampling of states, unitaries, and rotations.

States are Haar-uniform (normalized complex Gaussian quadruples) and SU(2)
elements are Haar-uniform via random unit quaternions, so every property
check in the test suite and the verify subcommand is reproducible from a
single integer seed.
"""

from __future__ import annotations

import numpy as np

from . import _backend, tolerances
from .extremes import AxisAngleRotation
from .linalg import LocalUnitaryPair, TwoQubitState


def haar_state(rng: np.random.Generator) -> TwoQubitState:
    while True:
        v = rng.standard_normal(4) + 1j * rng.standard_normal(4)
        n = np.linalg.norm(v)
        if n > 1e-6:
            return TwoQubitState(v / n)


def haar_su2(rng: np.random.Generator) -> np.ndarray:
    """Haar-uniform SU(2) element from a random unit quaternion."""
    q = rng.standard_normal(4)
    q /= np.linalg.norm(q)
    a, b, c, d = q
    return np.array(
        [[a + 1j * b, c + 1j * d], [-c + 1j * d, a - 1j * b]], dtype=np.complex128
    )


def haar_local_pair(rng: np.random.Generator) -> LocalUnitaryPair:
    return LocalUnitaryPair(haar_su2(rng), haar_su2(rng))


def random_partial_state(
    rng: np.random.Generator, eps_class: float = tolerances.EPS_CLASS
) -> TwoQubitState:
    """Haar state redrawn until it is partially entangled at the given threshold."""
    while True:
        state = haar_state(rng)
        c = _backend.kernels.concurrence(state.amplitudes)
        if eps_class < c < 1.0 - eps_class:
            return state


def random_axis(rng: np.random.Generator) -> np.ndarray:
    while True:
        v = rng.standard_normal(3)
        n = np.linalg.norm(v)
        if n > 1e-6:
            return v / n


def random_rotation(rng: np.random.Generator, max_angle: float = np.pi) -> AxisAngleRotation:
    return AxisAngleRotation(random_axis(rng), rng.uniform(0.0, max_angle))
