import numpy as np
import pytest

from qubit_bundle import _backend


@pytest.fixture
def rng():
    return np.random.default_rng(20260811)


@pytest.fixture(params=_backend.available_backends())
def each_backend(request):
    """Run a test under every kernel backend that built on this machine."""
    with _backend.backend(request.param):
        yield request.param


# Pauli matrices and an eigendecomposition-based matrix exponential used as an
# independent oracle for su2 / chart-operator tests.
SX = np.array([[0, 1], [1, 0]], dtype=complex)
SY = np.array([[0, -1j], [1j, 0]], dtype=complex)
SZ = np.array([[1, 0], [0, -1]], dtype=complex)


def expm_herm(h, scale=1.0):
    """exp(-1j * h * scale) for Hermitian h via numpy's eigendecomposition."""
    w, v = np.linalg.eigh(h)
    return v @ np.diag(np.exp(-1j * w * scale)) @ v.conj().T


def fid4(a, b):
    """|<a|b>|^2 on raw 4-vectors."""
    return abs(np.vdot(np.asarray(a), np.asarray(b))) ** 2
