"""Pure numpy implementations of the numeric kernels.

``_kernels_cy`` provides the same six functions compiled with Cython; the
active module is chosen in ``_backend``.  The two implementations follow the
same algorithms and must stay in sync (``tests/test_backends.py`` compares
them).
"""

from __future__ import annotations

import math

import numpy as np

BACKEND_NAME = "python"


def concurrence(amps) -> float:
    """2|c0*c3 - c1*c2| for an amplitude 4-vector, unclamped."""
    a = np.asarray(amps)
    return 2.0 * abs(a[0] * a[3] - a[1] * a[2])


def apply_local(u1, u2, amps) -> np.ndarray:
    """Apply the product operator u1 (x) u2 to an amplitude 4-vector."""
    return np.kron(np.asarray(u1), np.asarray(u2)) @ np.asarray(amps)


def su2_from_axis_angle(nx: float, ny: float, nz: float, angle: float) -> np.ndarray:
    """exp(-i (n . sigma) angle / 2) for a unit axis n, counterclockwise."""
    c = math.cos(0.5 * angle)
    s = math.sin(0.5 * angle)
    return np.array(
        [
            [c - 1j * nz * s, (-1j * nx - ny) * s],
            [(-1j * nx + ny) * s, c + 1j * nz * s],
        ],
        dtype=np.complex128,
    )


def t_north(theta: float, phi: float) -> np.ndarray:
    """Rz(phi) Ry(theta) Rz(-phi) in closed form.

    Maps the north-pole ket (1, 0) to the ket at Bloch angles (theta, phi).
    """
    c = math.cos(0.5 * theta)
    s = math.sin(0.5 * theta)
    ph = complex(math.cos(phi), math.sin(phi))
    return np.array([[c, -s * ph.conjugate()], [s * ph, c]], dtype=np.complex128)


def t_south(theta: float, phi: float) -> np.ndarray:
    """Rz(phi) Ry(theta - pi) Rz(-phi) in closed form.

    Maps the south-pole ket (0, 1) to the ket at (theta, phi) up to phase.
    """
    c = math.cos(0.5 * theta)
    s = math.sin(0.5 * theta)
    ph = complex(math.cos(phi), math.sin(phi))
    return np.array([[s, c * ph.conjugate()], [-c * ph, s]], dtype=np.complex128)


def svd2x2(m):
    """Closed-form singular value decomposition of a 2x2 complex matrix.

    Returns (u, s, vh) with m = u @ diag(s) @ vh, s[0] >= s[1] >= 0 and
    u, vh unitary.  No iterative solver: the Gram matrix eigenproblem is
    solved with the quadratic formula and the left vectors are recovered by
    applying m.
    """
    m = np.asarray(m, dtype=np.complex128)
    m00, m01 = complex(m[0, 0]), complex(m[0, 1])
    m10, m11 = complex(m[1, 0]), complex(m[1, 1])

    # Gram matrix a = m^dagger m; its eigenvalues are the squared singular
    # values.  (a00-a11, 2|a01|) gives the discriminant without cancellation.
    a00 = abs(m00) ** 2 + abs(m10) ** 2
    a11 = abs(m01) ** 2 + abs(m11) ** 2
    a01 = m00.conjugate() * m01 + m10.conjugate() * m11
    disc = math.hypot(a00 - a11, 2.0 * abs(a01))
    lam1 = 0.5 * (a00 + a11 + disc)

    # Dominant right singular vector: the better conditioned of the two
    # eigenvector candidates of the Gram matrix.
    ra = lam1 - a00
    rb = lam1 - a11
    na = abs(a01) ** 2 + ra * ra
    nb = rb * rb + abs(a01) ** 2
    if na >= nb:
        w0, w1, nw = a01, complex(ra), math.sqrt(na)
    else:
        w0, w1, nw = complex(rb), a01.conjugate(), math.sqrt(nb)
    if nw > 0.0:
        v1 = np.array([w0 / nw, w1 / nw], dtype=np.complex128)
    else:
        # Gram matrix proportional to the identity: any orthonormal pair works.
        v1 = np.array([1.0, 0.0], dtype=np.complex128)
    v2 = np.array([-v1[1].conjugate(), v1[0].conjugate()], dtype=np.complex128)

    mv1 = np.array([m00 * v1[0] + m01 * v1[1], m10 * v1[0] + m11 * v1[1]])
    s1 = math.sqrt(abs(mv1[0]) ** 2 + abs(mv1[1]) ** 2)
    if s1 > 0.0:
        u1 = mv1 / s1
    else:
        u1 = np.array([1.0, 0.0], dtype=np.complex128)
    u2 = np.array([-u1[1].conjugate(), u1[0].conjugate()], dtype=np.complex128)

    # m v2 is orthogonal to u1, so it fixes both the second singular value
    # and the phase of u2.
    mv2 = np.array([m00 * v2[0] + m01 * v2[1], m10 * v2[0] + m11 * v2[1]])
    z = u2[0].conjugate() * mv2[0] + u2[1].conjugate() * mv2[1]
    s2 = abs(z)
    if s2 > 0.0:
        u2 = u2 * (z / s2)

    u = np.array([[u1[0], u2[0]], [u1[1], u2[1]]], dtype=np.complex128)
    vh = np.array(
        [
            [v1[0].conjugate(), v1[1].conjugate()],
            [v2[0].conjugate(), v2[1].conjugate()],
        ],
        dtype=np.complex128,
    )
    s = np.array([s1, s2])
    if s2 > s1:
        u = u[:, ::-1].copy()
        vh = vh[::-1].copy()
        s = s[::-1].copy()
    return u, s, vh
