"""Laguerre-Gaussian mode synthesis and skyrmion-state assembly.

The waist-plane LG amplitude used here is

    u_pl(r, phi) = C * (sqrt(2) r / w)^|l| * L_p^|l|(2 r^2 / w^2)
                     * exp(-r^2 / w^2) * exp(i l phi),
    C = sqrt(2 p! / (pi (p + |l|)!)) / w,

normalized to unit power on the continuum.  Lengths are in units of the
fundamental waist w0, so `waist` is dimensionless (1.0 = w0).
"""

from __future__ import annotations

import math
import warnings

import numpy as np
from scipy.special import eval_genlaguerre, gammaln

from .errors import DegenerateStateError, ParameterError, ResolutionWarning
from .fields import ScalarField, TransverseGrid, VectorBeam

# Samples per azimuthal fringe (at r = waist) below which the vortex
# phase is considered unresolved.
_MIN_SAMPLES_PER_FRINGE = 8


def lg_mode(grid: TransverseGrid, p: int, l: int, waist: float = 1.0) -> ScalarField:
    """LG_p^l amplitude at the waist plane, unit continuum power.

    Raises ParameterError for invalid p/waist; warns (ResolutionWarning)
    when the grid undersamples the azimuthal phase at r = waist.
    """
    if waist <= 0:
        raise ParameterError(f"waist must be positive, got {waist}")
    if p < 0:
        raise ParameterError(f"radial index must be >= 0, got {p}")

    if l != 0:
        step = max(grid.dx, grid.dy)
        samples_per_fringe = 2.0 * math.pi * waist / (step * abs(l))
        if samples_per_fringe < _MIN_SAMPLES_PER_FRINGE:
            warnings.warn(
                f"grid resolves only {samples_per_fringe:.1f} samples per "
                f"azimuthal fringe of l={l} at r={waist} (need "
                f"{_MIN_SAMPLES_PER_FRINGE})", ResolutionWarning)

    X, Y = grid.meshgrid()
    r2 = X * X + Y * Y
    la = abs(l)
    # sqrt(2 p! / (pi (p+|l|)!)) via gammaln to stay stable for large indices
    norm = math.sqrt(2.0 / math.pi) * math.exp(
        0.5 * (gammaln(p + 1) - gammaln(p + la + 1))) / waist
    arg = 2.0 * r2 / (waist * waist)
    radial = norm * np.exp(-r2 / (waist * waist)) * eval_genlaguerre(p, la, arg)
    if la:
        radial = radial * (np.sqrt(2.0 * r2) / waist) ** la
    if l == 0:
        values = radial.astype(np.complex128)
    else:
        values = radial * np.exp(1j * l * grid.phi)
    return ScalarField(grid, values)


def make_skyrmion_state(grid: TransverseGrid, l: int, waist: float = 1.0,
                        weight_ratio: float = 1.0, rel_phase: float = 0.0,
                        waist_minus: float | None = None) -> VectorBeam:
    """Two-mode state: a*LG_0^0 on sigma+ plus b*e^{i phase}*LG_0^l on sigma-.

    b/a = weight_ratio; the total discrete power is normalized to 1.
    Equal weights (ratio 1) give the a = b = 1/sqrt(2) superposition whose
    Stokes texture carries skyrmion number l.  `waist_minus` overrides the
    higher-order mode waist for perturbation studies (defaults to `waist`).
    """
    if l == 0:
        raise DegenerateStateError(
            "l = 0 gives a uniform polarization state with no texture")
    if weight_ratio <= 0:
        raise ParameterError(f"weight_ratio must be positive, got {weight_ratio}")

    if waist_minus is None:
        waist_minus = waist
    mode_plus = lg_mode(grid, 0, 0, waist)
    mode_minus = lg_mode(grid, 0, l, waist_minus)

    # Normalize against discrete powers so the sum is exactly 1 on this grid.
    pw_plus = mode_plus.power()
    pw_minus = mode_minus.power()
    a = 1.0 / math.sqrt(pw_plus + weight_ratio**2 * pw_minus)
    b = weight_ratio * a * complex(math.cos(rel_phase), math.sin(rel_phase))

    meta = {
        "l": l,
        "waist_plus": waist,
        "waist_minus": waist_minus,
        "amp_plus": complex(a),
        "amp_minus": b,
    }
    return VectorBeam(mode_plus.scaled(a), mode_minus.scaled(b), meta=meta)


def total_power(beam: VectorBeam) -> float:
    """Discrete sum of |E+|^2 + |E-|^2 times the cell area."""
    return beam.power()


def inner_product(a: ScalarField, b: ScalarField) -> complex:
    """Discrete <a|b> = sum conj(a) * b * dA on a shared grid."""
    if a.grid != b.grid:
        raise ParameterError("inner product requires a shared grid")
    return complex(np.vdot(a.values, b.values) * a.grid.cell_area)
