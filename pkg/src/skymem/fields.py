"""Transverse sampling grid and the scalar/vector field containers.

All transverse lengths are expressed in units of the fundamental beam
waist w0.  Fields live at the waist plane (z = 0); no propagator exists
in this package.

Grid convention: samples are cell-centered, x_i = (i + 0.5 - nx/2) * dx
with dx = 2 * extent / nx.  For even sample counts the beam axis
(x = y = 0) falls exactly between the four central samples, which keeps
the vortex-core singularity off the lattice.  Even counts are therefore
recommended (and are the default everywhere).

Array convention: 2D arrays are indexed [iy, ix]; x varies along axis 1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .errors import ParameterError


@dataclass(frozen=True)
class TransverseGrid:
    """Uniform 2D sampling of the transverse plane.

    nx, ny   : sample counts (>= 16)
    extent   : half-width of the sampled square, in units of w0
    """

    nx: int
    ny: int
    extent: float

    def __post_init__(self):
        if self.nx < 16 or self.ny < 16:
            raise ParameterError(f"grid must be at least 16x16, got {self.nx}x{self.ny}")
        if self.extent <= 0:
            raise ParameterError(f"extent must be positive, got {self.extent}")

    @property
    def dx(self) -> float:
        return 2.0 * self.extent / self.nx

    @property
    def dy(self) -> float:
        return 2.0 * self.extent / self.ny

    @property
    def cell_area(self) -> float:
        return self.dx * self.dy

    @property
    def x(self) -> np.ndarray:
        """1D x coordinates (cell centers)."""
        return (np.arange(self.nx) + 0.5 - self.nx / 2.0) * self.dx

    @property
    def y(self) -> np.ndarray:
        return (np.arange(self.ny) + 0.5 - self.ny / 2.0) * self.dy

    def meshgrid(self) -> tuple[np.ndarray, np.ndarray]:
        """(X, Y) arrays of shape (ny, nx)."""
        return np.meshgrid(self.x, self.y, indexing="xy")

    @property
    def r(self) -> np.ndarray:
        X, Y = self.meshgrid()
        return np.hypot(X, Y)

    @property
    def phi(self) -> np.ndarray:
        X, Y = self.meshgrid()
        return np.arctan2(Y, X)

    def descriptor(self) -> dict:
        return {"nx": self.nx, "ny": self.ny, "extent": self.extent}


def _check_same_grid(a: "TransverseGrid", b: "TransverseGrid"):
    if a != b:
        raise ParameterError(f"grids differ: {a.descriptor()} vs {b.descriptor()}")


@dataclass(frozen=True)
class ScalarField:
    """One complex amplitude component sampled on a TransverseGrid."""

    grid: TransverseGrid
    values: np.ndarray

    def __post_init__(self):
        vals = np.asarray(self.values, dtype=np.complex128)
        if vals.shape != (self.grid.ny, self.grid.nx):
            raise ParameterError(
                f"values shape {vals.shape} does not match grid "
                f"({self.grid.ny}, {self.grid.nx})")
        if not np.all(np.isfinite(vals.view(np.float64))):
            raise ParameterError("field contains non-finite values")
        object.__setattr__(self, "values", vals)

    def power(self) -> float:
        """Discrete power sum, approximates the continuum integral of |u|^2."""
        return float(np.sum(np.abs(self.values) ** 2)) * self.grid.cell_area

    def scaled(self, factor: complex) -> "ScalarField":
        return ScalarField(self.grid, self.values * factor)


@dataclass(frozen=True)
class VectorBeam:
    """Paraxial vector state in the circular basis (sigma+, sigma-).

    `meta`, when present, records the modal composition produced by
    make_skyrmion_state: keys l, waist_plus, waist_minus, amp_plus,
    amp_minus (complex amplitudes multiplying unit-power modes).
    """

    sigma_plus: ScalarField
    sigma_minus: ScalarField
    meta: Optional[dict] = field(default=None)

    def __post_init__(self):
        _check_same_grid(self.sigma_plus.grid, self.sigma_minus.grid)

    @property
    def grid(self) -> TransverseGrid:
        return self.sigma_plus.grid

    def power(self) -> float:
        return self.sigma_plus.power() + self.sigma_minus.power()
