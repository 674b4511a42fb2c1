"""Pure-numpy Maxwell-Bloch stepping kernel (fallback backend).

State layout and update rule are shared with the compiled kernel in
_mb_cython.pyx; see skymem.eit.backends for selection.  All quantities
are dimensionless: time in 1/Gamma, Rabi frequencies in Gamma, z in
medium lengths (z in [0, 1] sampled on nz + 1 nodes).

Per node j the coherences obey

    d rho31/dt = i Omega(z_j)/2 + i (Omega_c/2) rho21 - (1/2 - i d1) rho31
    d rho21/dt = i (Omega_c/2) rho31 - (gamma_s - i d2) rho21

and the probe field follows from the spatial trapezoid of

    d Omega/d z = i (D/2) rho31

with boundary value Omega(0, t) supplied by the caller.  Time stepping is
classical fixed-step RK4; the control envelope is real.
"""

from __future__ import annotations

import numpy as np


def _field_profile(omega_in, rho31, half_step):
    """Omega on all nodes given the boundary value and rho31 (trapezoid)."""
    incr = half_step * (rho31[:-1] + rho31[1:])
    out = np.empty_like(rho31)
    out[0] = omega_in
    np.cumsum(incr, out=out[1:])
    out[1:] += omega_in
    return out


def integrate_mb(omega_in, omega_in_half, omega_c, omega_c_half,
                 d_eff, gamma_s, delta1, delta2, dt, nz, snapshot_index):
    """March the probe/coherence system over len(omega_in) time samples.

    Returns (omega_out, rho21_snapshot, rho31_final, rho21_final) where
    omega_out[k] is the probe amplitude at z = 1 at step time k and
    rho21_snapshot is the spin wave recorded at snapshot_index.
    """
    nt = omega_in.shape[0]
    dz = 1.0 / nz
    half_step = 0.25j * d_eff * dz  # i*(D/2) * dz/2, trapezoid increment
    c31 = -(0.5 - 1j * delta1)
    c21 = -(gamma_s - 1j * delta2)

    rho31 = np.zeros(nz + 1, dtype=np.complex128)
    rho21 = np.zeros(nz + 1, dtype=np.complex128)
    omega_out = np.empty(nt, dtype=np.complex128)
    snapshot = np.zeros(nz + 1, dtype=np.complex128)

    def rhs(r31, r21, drive, ctrl):
        omega = _field_profile(drive, r31, half_step)
        d31 = 0.5j * omega + (0.5j * ctrl) * r21 + c31 * r31
        d21 = (0.5j * ctrl) * r31 + c21 * r21
        return d31, d21, omega

    for k in range(nt - 1):
        a31, a21, omega = rhs(rho31, rho21, omega_in[k], omega_c[k])
        omega_out[k] = omega[-1]
        if k == snapshot_index:
            snapshot[:] = rho21

        b31, b21, _ = rhs(rho31 + 0.5 * dt * a31, rho21 + 0.5 * dt * a21,
                          omega_in_half[k], omega_c_half[k])
        g31, g21, _ = rhs(rho31 + 0.5 * dt * b31, rho21 + 0.5 * dt * b21,
                          omega_in_half[k], omega_c_half[k])
        e31, e21, _ = rhs(rho31 + dt * g31, rho21 + dt * g21,
                          omega_in[k + 1], omega_c[k + 1])

        rho31 += (dt / 6.0) * (a31 + 2.0 * b31 + 2.0 * g31 + e31)
        rho21 += (dt / 6.0) * (a21 + 2.0 * b21 + 2.0 * g21 + e21)

    omega = _field_profile(omega_in[nt - 1], rho31, half_step)
    omega_out[nt - 1] = omega[-1]
    if snapshot_index >= nt - 1:
        snapshot[:] = rho21

    return omega_out, snapshot, rho31, rho21
