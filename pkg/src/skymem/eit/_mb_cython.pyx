# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled Maxwell-Bloch stepping kernel.

Semantics mirror skymem.eit._mb_numpy.integrate_mb (the fallback); keep
the two implementations in lockstep when changing either.
"""

import numpy as np

cimport numpy as cnp

cnp.import_array()

ctypedef double complex cplx


cdef inline void _rhs(cplx* r31, cplx* r21, cplx drive, double ctrl,
                      cplx half_step, cplx c31, cplx c21, int nz,
                      cplx* d31, cplx* d21, cplx* omega_end) nogil:
    cdef int j
    cdef cplx omega = drive
    cdef cplx half_ctrl = 0.5j * ctrl
    d31[0] = 0.5j * omega + half_ctrl * r21[0] + c31 * r31[0]
    d21[0] = half_ctrl * r31[0] + c21 * r21[0]
    for j in range(1, nz + 1):
        omega = omega + half_step * (r31[j - 1] + r31[j])
        d31[j] = 0.5j * omega + half_ctrl * r21[j] + c31 * r31[j]
        d21[j] = half_ctrl * r31[j] + c21 * r21[j]
    omega_end[0] = omega


def integrate_mb(cnp.ndarray[cplx, ndim=1] omega_in,
                 cnp.ndarray[cplx, ndim=1] omega_in_half,
                 cnp.ndarray[double, ndim=1] omega_c,
                 cnp.ndarray[double, ndim=1] omega_c_half,
                 double d_eff, double gamma_s, double delta1, double delta2,
                 double dt, int nz, long snapshot_index):
    cdef int nt = omega_in.shape[0]
    cdef double dz = 1.0 / nz
    cdef cplx half_step = 0.25j * d_eff * dz
    cdef cplx c31 = -(0.5 - 1j * delta1)
    cdef cplx c21 = -(gamma_s - 1j * delta2)

    cdef cnp.ndarray[cplx, ndim=1] rho31 = np.zeros(nz + 1, dtype=np.complex128)
    cdef cnp.ndarray[cplx, ndim=1] rho21 = np.zeros(nz + 1, dtype=np.complex128)
    cdef cnp.ndarray[cplx, ndim=1] omega_out = np.empty(nt, dtype=np.complex128)
    cdef cnp.ndarray[cplx, ndim=1] snapshot = np.zeros(nz + 1, dtype=np.complex128)

    cdef cnp.ndarray[cplx, ndim=1] y31 = np.empty(nz + 1, dtype=np.complex128)
    cdef cnp.ndarray[cplx, ndim=1] y21 = np.empty(nz + 1, dtype=np.complex128)
    cdef cnp.ndarray[cplx, ndim=1] a31 = np.empty(nz + 1, dtype=np.complex128)
    cdef cnp.ndarray[cplx, ndim=1] a21 = np.empty(nz + 1, dtype=np.complex128)
    cdef cnp.ndarray[cplx, ndim=1] b31 = np.empty(nz + 1, dtype=np.complex128)
    cdef cnp.ndarray[cplx, ndim=1] b21 = np.empty(nz + 1, dtype=np.complex128)
    cdef cnp.ndarray[cplx, ndim=1] g31 = np.empty(nz + 1, dtype=np.complex128)
    cdef cnp.ndarray[cplx, ndim=1] g21 = np.empty(nz + 1, dtype=np.complex128)
    cdef cnp.ndarray[cplx, ndim=1] e31 = np.empty(nz + 1, dtype=np.complex128)
    cdef cnp.ndarray[cplx, ndim=1] e21 = np.empty(nz + 1, dtype=np.complex128)

    cdef cplx omega_end
    cdef double sixth = dt / 6.0
    cdef double half_dt = 0.5 * dt
    cdef int k, j

    with nogil:
        for k in range(nt - 1):
            _rhs(&rho31[0], &rho21[0], omega_in[k], omega_c[k], half_step,
                 c31, c21, nz, &a31[0], &a21[0], &omega_end)
            omega_out[k] = omega_end
            if k == snapshot_index:
                for j in range(nz + 1):
                    snapshot[j] = rho21[j]

            for j in range(nz + 1):
                y31[j] = rho31[j] + half_dt * a31[j]
                y21[j] = rho21[j] + half_dt * a21[j]
            _rhs(&y31[0], &y21[0], omega_in_half[k], omega_c_half[k], half_step,
                 c31, c21, nz, &b31[0], &b21[0], &omega_end)

            for j in range(nz + 1):
                y31[j] = rho31[j] + half_dt * b31[j]
                y21[j] = rho21[j] + half_dt * b21[j]
            _rhs(&y31[0], &y21[0], omega_in_half[k], omega_c_half[k], half_step,
                 c31, c21, nz, &g31[0], &g21[0], &omega_end)

            for j in range(nz + 1):
                y31[j] = rho31[j] + dt * g31[j]
                y21[j] = rho21[j] + dt * g21[j]
            _rhs(&y31[0], &y21[0], omega_in[k + 1], omega_c[k + 1], half_step,
                 c31, c21, nz, &e31[0], &e21[0], &omega_end)

            for j in range(nz + 1):
                rho31[j] = rho31[j] + sixth * (a31[j] + 2.0 * b31[j] + 2.0 * g31[j] + e31[j])
                rho21[j] = rho21[j] + sixth * (a21[j] + 2.0 * b21[j] + 2.0 * g21[j] + e21[j])

        _rhs(&rho31[0], &rho21[0], omega_in[nt - 1], omega_c[nt - 1], half_step,
             c31, c21, nz, &a31[0], &a21[0], &omega_end)
        omega_out[nt - 1] = omega_end
        if snapshot_index >= nt - 1:
            for j in range(nz + 1):
                snapshot[j] = rho21[j]

    return omega_out, snapshot, rho31, rho21
