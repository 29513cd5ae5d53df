# cython: boundscheck=False, wraparound=False, initializedcheck=False, cdivision=True
"""Cython implementations of the numeric kernels.

Mirrors ``_kernels_py`` function for function; keep the algorithms in sync.
"""

import numpy as np

from libc.math cimport cos, hypot, sin, sqrt

BACKEND_NAME = "compiled"


cdef inline double _cabs(double complex z) nogil:
    return hypot(z.real, z.imag)


def concurrence(amps):
    """2|c0*c3 - c1*c2| for an amplitude 4-vector, unclamped."""
    cdef const double complex[::1] a = np.ascontiguousarray(amps, dtype=np.complex128)
    cdef double complex d = a[0] * a[3] - a[1] * a[2]
    return 2.0 * _cabs(d)


def apply_local(u1, u2, amps):
    """Apply the product operator u1 (x) u2 to an amplitude 4-vector."""
    cdef const double complex[:, ::1] a = np.ascontiguousarray(u1, dtype=np.complex128)
    cdef const double complex[:, ::1] b = np.ascontiguousarray(u2, dtype=np.complex128)
    cdef const double complex[::1] p = np.ascontiguousarray(amps, dtype=np.complex128)
    out = np.empty(4, dtype=np.complex128)
    cdef double complex[::1] o = out
    cdef Py_ssize_t i, j, k, l
    cdef double complex acc
    for i in range(2):
        for j in range(2):
            acc = 0
            for k in range(2):
                for l in range(2):
                    acc = acc + a[i, k] * b[j, l] * p[2 * k + l]
            o[2 * i + j] = acc
    return out


def su2_from_axis_angle(double nx, double ny, double nz, double angle):
    """exp(-i (n . sigma) angle / 2) for a unit axis n, counterclockwise."""
    cdef double c = cos(0.5 * angle)
    cdef double s = sin(0.5 * angle)
    out = np.empty((2, 2), dtype=np.complex128)
    cdef double complex[:, ::1] o = out
    o[0, 0] = c - 1j * nz * s
    o[0, 1] = (-1j * nx - ny) * s
    o[1, 0] = (-1j * nx + ny) * s
    o[1, 1] = c + 1j * nz * s
    return out


def t_north(double theta, double phi):
    """Rz(phi) Ry(theta) Rz(-phi) in closed form.

    Maps the north-pole ket (1, 0) to the ket at Bloch angles (theta, phi).
    """
    cdef double c = cos(0.5 * theta)
    cdef double s = sin(0.5 * theta)
    cdef double complex ph = cos(phi) + 1j * sin(phi)
    out = np.empty((2, 2), dtype=np.complex128)
    cdef double complex[:, ::1] o = out
    o[0, 0] = c
    o[0, 1] = -s * ph.conjugate()
    o[1, 0] = s * ph
    o[1, 1] = c
    return out


def t_south(double theta, double phi):
    """Rz(phi) Ry(theta - pi) Rz(-phi) in closed form.

    Maps the south-pole ket (0, 1) to the ket at (theta, phi) up to phase.
    """
    cdef double c = cos(0.5 * theta)
    cdef double s = sin(0.5 * theta)
    cdef double complex ph = cos(phi) + 1j * sin(phi)
    out = np.empty((2, 2), dtype=np.complex128)
    cdef double complex[:, ::1] o = out
    o[0, 0] = s
    o[0, 1] = c * ph.conjugate()
    o[1, 0] = -c * ph
    o[1, 1] = s
    return out


def svd2x2(m):
    """Closed-form singular value decomposition of a 2x2 complex matrix.

    Returns (u, s, vh) with m = u @ diag(s) @ vh, s[0] >= s[1] >= 0 and
    u, vh unitary.
    """
    cdef const double complex[:, ::1] mm = np.ascontiguousarray(m, dtype=np.complex128)
    cdef double complex m00 = mm[0, 0], m01 = mm[0, 1]
    cdef double complex m10 = mm[1, 0], m11 = mm[1, 1]

    cdef double a00 = m00.real * m00.real + m00.imag * m00.imag \
        + m10.real * m10.real + m10.imag * m10.imag
    cdef double a11 = m01.real * m01.real + m01.imag * m01.imag \
        + m11.real * m11.real + m11.imag * m11.imag
    cdef double complex a01 = m00.conjugate() * m01 + m10.conjugate() * m11
    cdef double disc = hypot(a00 - a11, 2.0 * _cabs(a01))
    cdef double lam1 = 0.5 * (a00 + a11 + disc)

    cdef double ra = lam1 - a00
    cdef double rb = lam1 - a11
    cdef double aa = _cabs(a01)
    cdef double na = aa * aa + ra * ra
    cdef double nb = rb * rb + aa * aa
    cdef double complex w0, w1
    cdef double nw
    if na >= nb:
        w0 = a01
        w1 = ra
        nw = sqrt(na)
    else:
        w0 = rb
        w1 = a01.conjugate()
        nw = sqrt(nb)

    cdef double complex v10, v11
    if nw > 0.0:
        v10 = w0 / nw
        v11 = w1 / nw
    else:
        v10 = 1.0
        v11 = 0.0
    cdef double complex v20 = -v11.conjugate()
    cdef double complex v21 = v10.conjugate()

    cdef double complex mv10 = m00 * v10 + m01 * v11
    cdef double complex mv11 = m10 * v10 + m11 * v11
    cdef double s1 = hypot(_cabs(mv10), _cabs(mv11))
    cdef double complex u10, u11
    if s1 > 0.0:
        u10 = mv10 / s1
        u11 = mv11 / s1
    else:
        u10 = 1.0
        u11 = 0.0
    cdef double complex u20 = -u11.conjugate()
    cdef double complex u21 = u10.conjugate()

    cdef double complex mv20 = m00 * v20 + m01 * v21
    cdef double complex mv21 = m10 * v20 + m11 * v21
    cdef double complex z = u20.conjugate() * mv20 + u21.conjugate() * mv21
    cdef double s2 = _cabs(z)
    if s2 > 0.0:
        u20 = u20 * (z / s2)
        u21 = u21 * (z / s2)

    cdef double complex t
    cdef double ts
    if s2 > s1:
        t = u10; u10 = u20; u20 = t
        t = u11; u11 = u21; u21 = t
        t = v10; v10 = v20; v20 = t
        t = v11; v11 = v21; v21 = t
        ts = s1; s1 = s2; s2 = ts

    u_arr = np.empty((2, 2), dtype=np.complex128)
    vh_arr = np.empty((2, 2), dtype=np.complex128)
    s_arr = np.empty(2, dtype=np.float64)
    cdef double complex[:, ::1] u = u_arr
    cdef double complex[:, ::1] vh = vh_arr
    cdef double[::1] s = s_arr
    u[0, 0] = u10
    u[1, 0] = u11
    u[0, 1] = u20
    u[1, 1] = u21
    vh[0, 0] = v10.conjugate()
    vh[0, 1] = v11.conjugate()
    vh[1, 0] = v20.conjugate()
    vh[1, 1] = v21.conjugate()
    s[0] = s1
    s[1] = s2
    return u_arr, s_arr, vh_arr
