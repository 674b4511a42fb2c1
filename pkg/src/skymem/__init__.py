"""Optical skyrmion synthesis, Stokes topology, and dual-path EIT memory."""

from .beams import inner_product, lg_mode, make_skyrmion_state, total_power
from .fields import ScalarField, TransverseGrid, VectorBeam
from .stokes import (StokesField, UnitStokesField, concurrence,
                     integrated_stokes, normalize_stokes, stokes_from_beam)
from .topology import TopologyReport, skyrmion_density, skyrmion_number

__version__ = "0.1.0"

__all__ = [
    "ScalarField", "TransverseGrid", "VectorBeam",
    "lg_mode", "make_skyrmion_state", "total_power", "inner_product",
    "StokesField", "UnitStokesField", "stokes_from_beam", "normalize_stokes",
    "integrated_stokes", "concurrence",
    "TopologyReport", "skyrmion_density", "skyrmion_number",
    "__version__",
]
