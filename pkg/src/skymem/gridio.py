"""File formats for field and image data.

Binary grid dump (little-endian throughout):

    header:  nx (uint32), ny (uint32), extent (float64), ncomp (uint32)
    body:    ncomp components, each ny*nx complex values in row-major
             [iy, ix] order, stored as (re, im) float64 pairs

Real-valued fields (Stokes components, densities, intensity images) are
stored with a zero imaginary part.  CSV export is meant for small grids:
one row per sample with x, y followed by re/im pairs per component.
PGM export writes binary 16-bit P5, max sample mapped to 65535.
"""

from __future__ import annotations

import struct
from pathlib import Path
from typing import Sequence

import numpy as np

from .errors import ParameterError
from .fields import ScalarField, TransverseGrid, VectorBeam

_HEADER = struct.Struct("<IIdI")


def save_grid_dump(path, grid: TransverseGrid, components: Sequence[np.ndarray]):
    comps = [np.asarray(c) for c in components]
    for c in comps:
        if c.shape != (grid.ny, grid.nx):
            raise ParameterError(
                f"component shape {c.shape} does not match grid")
    with open(path, "wb") as fh:
        fh.write(_HEADER.pack(grid.nx, grid.ny, grid.extent, len(comps)))
        for c in comps:
            np.ascontiguousarray(c, dtype="<c16").tofile(fh)


def load_grid_dump(path) -> tuple[TransverseGrid, list[np.ndarray]]:
    with open(path, "rb") as fh:
        raw = fh.read(_HEADER.size)
        if len(raw) != _HEADER.size:
            raise ParameterError(f"{path}: truncated grid dump header")
        nx, ny, extent, ncomp = _HEADER.unpack(raw)
        grid = TransverseGrid(nx=nx, ny=ny, extent=extent)
        comps = []
        for _ in range(ncomp):
            data = np.fromfile(fh, dtype="<c16", count=ny * nx)
            if data.size != ny * nx:
                raise ParameterError(f"{path}: truncated grid dump body")
            comps.append(data.reshape(ny, nx).astype(np.complex128))
    return grid, comps


def save_beam(path, beam: VectorBeam):
    save_grid_dump(path, beam.grid, [beam.sigma_plus.values, beam.sigma_minus.values])


def load_beam(path) -> VectorBeam:
    grid, comps = load_grid_dump(path)
    if len(comps) != 2:
        raise ParameterError(f"{path}: expected 2 components, found {len(comps)}")
    return VectorBeam(ScalarField(grid, comps[0]), ScalarField(grid, comps[1]))


def save_grid_csv(path, grid: TransverseGrid, components: Sequence[np.ndarray],
                  max_samples: int = 1 << 16):
    comps = [np.asarray(c, dtype=np.complex128) for c in components]
    if grid.nx * grid.ny > max_samples:
        raise ParameterError(
            f"CSV export limited to {max_samples} samples; "
            f"grid has {grid.nx * grid.ny} (use the binary dump)")
    X, Y = grid.meshgrid()
    header = ["x", "y"]
    cols = [X.ravel(), Y.ravel()]
    for k, c in enumerate(comps):
        header += [f"re{k}", f"im{k}"]
        cols += [c.real.ravel(), c.imag.ravel()]
    table = np.column_stack(cols)
    np.savetxt(path, table, delimiter=",", header=",".join(header), comments="")


def save_pgm16(path, image: np.ndarray):
    """16-bit binary PGM for quick visual inspection (peak -> 65535)."""
    img = np.asarray(image, dtype=np.float64)
    if img.ndim != 2:
        raise ParameterError("PGM export needs a 2D image")
    lo = float(img.min())
    hi = float(img.max())
    span = hi - lo
    if span <= 0:
        scaled = np.zeros_like(img)
    else:
        scaled = (img - lo) / span * 65535.0
    data = scaled.round().astype(">u2")
    with open(path, "wb") as fh:
        fh.write(f"P5\n{img.shape[1]} {img.shape[0]}\n65535\n".encode())
        data.tofile(fh)


def load_pgm16(path) -> np.ndarray:
    with open(path, "rb") as fh:
        magic = fh.readline().strip()
        if magic != b"P5":
            raise ParameterError(f"{path}: not a binary PGM file")
        dims = fh.readline().split()
        width, height = int(dims[0]), int(dims[1])
        maxval = int(fh.readline())
        dtype = ">u2" if maxval > 255 else "u1"
        data = np.fromfile(fh, dtype=dtype, count=width * height)
    return data.reshape(height, width).astype(np.float64)


def ensure_dir(path) -> Path:
    p = Path(path)
    p.mkdir(parents=True, exist_ok=True)
    return p
