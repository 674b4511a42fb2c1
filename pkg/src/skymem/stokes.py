"""Spatially resolved Stokes parameters and vector-beam concurrence.

Sign conventions (fixed throughout the package):

    S0 = |E+|^2 + |E-|^2
    S1 = 2 Re(conj(E+) E-)
    S2 = 2 Im(conj(E+) E-)
    S3 = |E+|^2 - |E-|^2

so S3 = +S0 identifies a pure sigma+ beam.  These match the linear-basis
construction E_H = (E+ + E-)/sqrt(2), E_V = i (E+ - E-)/sqrt(2) used by
the tomography module.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import EmptySupportError, ParameterError
from .fields import TransverseGrid, VectorBeam


@dataclass(frozen=True)
class StokesField:
    """S0..S3 sampled on a grid.  S0 >= 0 everywhere."""

    grid: TransverseGrid
    s0: np.ndarray
    s1: np.ndarray
    s2: np.ndarray
    s3: np.ndarray

    def degree_of_polarization(self) -> np.ndarray:
        with np.errstate(divide="ignore", invalid="ignore"):
            dop = np.sqrt(self.s1**2 + self.s2**2 + self.s3**2) / self.s0
        return np.where(self.s0 > 0, dop, 0.0)


@dataclass(frozen=True)
class UnitStokesField:
    """Unit Poincare vector s = (sx, sy, sz) on masked-in samples.

    mask marks samples where S0 exceeded the support threshold; everything
    downstream (density, integrals) ignores masked-out samples.
    """

    grid: TransverseGrid
    sx: np.ndarray
    sy: np.ndarray
    sz: np.ndarray
    mask: np.ndarray


def stokes_from_beam(beam: VectorBeam) -> StokesField:
    """Circular-basis Stokes construction (conventions in module docstring)."""
    ep = beam.sigma_plus.values
    em = beam.sigma_minus.values
    ip = np.abs(ep) ** 2
    im = np.abs(em) ** 2
    cross = np.conj(ep) * em
    return StokesField(
        grid=beam.grid,
        s0=ip + im,
        s1=2.0 * cross.real,
        s2=2.0 * cross.imag,
        s3=ip - im,
    )


# Support threshold defaults, as fractions of peak S0.  Synthetic fields
# keep an analytically exact s arbitrarily far into the dark tail, so the
# synthetic default only rejects true numerical underflow; noisy
# tomographic data needs an aggressive cut because s = S/S0 amplifies
# noise on dark pixels.
SUPPORT_THRESHOLD_SYNTHETIC = 1e-30
SUPPORT_THRESHOLD_NOISY = 1e-2


def normalize_stokes(f: StokesField,
                     support_threshold: float = SUPPORT_THRESHOLD_SYNTHETIC
                     ) -> UnitStokesField:
    """Project (S1,S2,S3)/S0 onto the unit sphere where S0 is above threshold.

    The vector is renormalized to exactly unit length so that partially
    polarized (noisy) reconstructions still map onto the sphere.
    """
    if not 0.0 < support_threshold < 1.0:
        raise ParameterError(
            f"support_threshold must be in (0, 1), got {support_threshold}")
    peak = float(np.max(f.s0))
    if peak <= 0.0:
        raise EmptySupportError("all-dark Stokes field (peak S0 is zero)")
    mask = f.s0 >= support_threshold * peak
    if not mask.any():
        raise EmptySupportError("no sample exceeds the support threshold")

    norm = np.sqrt(f.s1**2 + f.s2**2 + f.s3**2)
    ok = mask & (norm > 0)
    safe = np.where(ok, norm, 1.0)
    return UnitStokesField(
        grid=f.grid,
        sx=np.where(ok, f.s1 / safe, 0.0),
        sy=np.where(ok, f.s2 / safe, 0.0),
        sz=np.where(ok, f.s3 / safe, 0.0),
        mask=ok,
    )


def integrated_stokes(f: StokesField) -> np.ndarray:
    """Globally integrated (S0bar, S1bar, S2bar, S3bar)."""
    area = f.grid.cell_area
    return np.array([
        np.sum(f.s0), np.sum(f.s1), np.sum(f.s2), np.sum(f.s3),
    ]) * area


def concurrence(beam: VectorBeam) -> float:
    """Non-separability of spatial mode and polarization, in [0, 1].

    C = sqrt(1 - (S1bar^2 + S2bar^2 + S3bar^2) / S0bar^2) with the globally
    integrated Stokes parameters: the complement of the beam's global
    degree of polarization.  C = 1 for an equal-power superposition of
    orthogonal modes on orthogonal polarizations; C = 0 for any product
    state.
    """
    if beam.power() <= 0.0:
        raise ParameterError("concurrence requires positive total power")
    s_bar = integrated_stokes(stokes_from_beam(beam))
    ratio = (s_bar[1] ** 2 + s_bar[2] ** 2 + s_bar[3] ** 2) / s_bar[0] ** 2
    return float(np.sqrt(max(0.0, 1.0 - ratio)))
