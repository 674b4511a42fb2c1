"""Configuration records for the Lambda-type EIT storage simulation.

User-facing quantities are in SI units (seconds, rad/s); the solver
converts to its internal dimensionless system (time in 1/Gamma, Rabi
frequencies in Gamma, z in medium lengths).  GAMMA_RB_D1 is a physical
default for the excited-state decay rate (the Rb D1 natural linewidth),
not a fitted value.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Mapping, Optional, Union

import numpy as np

from ..errors import ParameterError

GAMMA_RB_D1 = 2.0 * math.pi * 5.75e6  # rad/s

OdModel = Union[None, Mapping[int, float], Callable[[float, int], float]]


def effective_od(d0: float, l: int, od_model: OdModel = None) -> float:
    """Effective optical depth seen by the LG_0^l mode.

    The default captures the sqrt(l+1) waist growth of LG modes: the
    intensity overlap with the atomic column shrinks with mode area, so
    D_l = D0 / (l + 1).  `od_model` may be a {l: D_l} table or a callable
    (d0, l) -> D_l for calibration overrides.
    """
    if l < 0:
        raise ParameterError(f"mode order must be >= 0, got {l}")
    if od_model is None:
        return d0 / (l + 1)
    if callable(od_model):
        return float(od_model(d0, l))
    try:
        return float(od_model[l])
    except KeyError:
        raise ParameterError(f"od_model table has no entry for l={l}") from None


@dataclass(frozen=True)
class MediumParams:
    """Atomic-medium configuration.

    d0       : effective optical depth of the fundamental mode
    gamma    : decay rate of the excited state (rad/s)
    gamma_s  : spin-wave decoherence rate (rad/s)
    l_cells  : spatial cells along the medium (nodes = l_cells + 1)
    od_model : mode-order -> OD mapping override (see effective_od)
    delta1   : one-photon probe detuning (rad/s), 0 on resonance
    delta2   : two-photon detuning (rad/s), 0 on resonance
    """

    d0: float
    gamma: float = GAMMA_RB_D1
    gamma_s: float = 0.0
    l_cells: int = 160
    od_model: OdModel = None
    delta1: float = 0.0
    delta2: float = 0.0

    def __post_init__(self):
        if self.d0 <= 0:
            raise ParameterError(f"optical depth must be positive, got {self.d0}")
        if self.gamma <= 0:
            raise ParameterError(f"gamma must be positive, got {self.gamma}")
        if self.gamma_s < 0:
            raise ParameterError(f"gamma_s must be >= 0, got {self.gamma_s}")
        if self.l_cells < 50:
            raise ParameterError(f"need at least 50 spatial cells, got {self.l_cells}")


@dataclass(frozen=True)
class ControlSchedule:
    """Control-beam timing.  The raised-cosine switch-off occupies
    [off_time - ramp, off_time]; switch-on occupies [on_time, on_time + ramp].
    """

    omega_c_peak: float          # rad/s
    off_time: float              # s
    on_time: float               # s
    ramp: float = 0.1e-6         # s
    shape: str = "raised_cosine"

    def __post_init__(self):
        if self.omega_c_peak <= 0:
            raise ParameterError("control Rabi frequency must be positive")
        if not self.off_time < self.on_time:
            raise ParameterError(
                f"off_time ({self.off_time}) must precede on_time ({self.on_time})")
        if self.ramp <= 0:
            raise ParameterError(f"ramp must be positive, got {self.ramp}")
        if self.shape != "raised_cosine":
            raise ParameterError(f"unknown ramp shape {self.shape!r}")

    @property
    def storage_time(self) -> float:
        return self.on_time - self.off_time

    def envelope(self, t: np.ndarray) -> np.ndarray:
        """Dimensionless control envelope in [0, 1] at times t (seconds)."""
        t = np.asarray(t, dtype=np.float64)
        out = np.ones_like(t)
        falling = (t > self.off_time - self.ramp) & (t < self.off_time)
        out[falling] = 0.5 * (1.0 + np.cos(
            np.pi * (t[falling] - self.off_time + self.ramp) / self.ramp))
        out[(t >= self.off_time) & (t <= self.on_time)] = 0.0
        rising = (t > self.on_time) & (t < self.on_time + self.ramp)
        out[rising] = 0.5 * (1.0 - np.cos(
            np.pi * (t[rising] - self.on_time) / self.ramp))
        return out


@dataclass(frozen=True)
class ProbePulse:
    """Weak Gaussian probe.  `width` is the FWHM of the intensity profile
    |Omega(t)|^2; the amplitude envelope is exp(-(t-t0)^2 / (2 sigma^2))
    with sigma = width / (2 sqrt(ln 2)).
    """

    peak_rabi: float     # rad/s
    width: float         # s
    center_time: float   # s

    WEAK_PROBE_LIMIT = 0.1

    def __post_init__(self):
        if self.peak_rabi <= 0:
            raise ParameterError("probe Rabi frequency must be positive")
        if self.width <= 0:
            raise ParameterError(f"pulse width must be positive, got {self.width}")

    @property
    def sigma(self) -> float:
        return self.width / (2.0 * math.sqrt(math.log(2.0)))

    def envelope(self, t: np.ndarray) -> np.ndarray:
        t = np.asarray(t, dtype=np.float64)
        return self.peak_rabi * np.exp(-((t - self.center_time) ** 2)
                                       / (2.0 * self.sigma ** 2))


@dataclass(frozen=True)
class StorageResult:
    """Time-resolved storage record.

    Traces hold |Omega/Gamma|^2 on t_axis (seconds): input at z = 0, and
    the output at z = L split into its leak window [0, off_time] and
    retrieval window [on_time, end].  `retrieval_amp` is the complex
    overlap of the retrieved envelope with the delayed input template.
    """

    t_axis: np.ndarray
    input_trace: np.ndarray
    leak_trace: np.ndarray
    retrieved_trace: np.ndarray
    efficiency: float
    retrieval_amp: complex
    spinwave_snapshot: np.ndarray
    params: dict = field(default_factory=dict)

    @property
    def input_energy(self) -> float:
        return float(np.trapezoid(self.input_trace, self.t_axis))

    @property
    def leak_energy(self) -> float:
        return float(np.trapezoid(self.leak_trace, self.t_axis))

    @property
    def retrieved_energy(self) -> float:
        return float(np.trapezoid(self.retrieved_trace, self.t_axis))

    def energy_balance(self) -> float:
        """(leak + retrieved) / input; passivity demands <= 1 + solver tol."""
        return (self.leak_energy + self.retrieved_energy) / self.input_energy

    def summary(self) -> dict:
        return {
            "efficiency": self.efficiency,
            "retrieval_phase": float(np.angle(self.retrieval_amp))
            if self.efficiency > 0 else None,
            "retrieval_amp": [self.retrieval_amp.real, self.retrieval_amp.imag],
            "input_energy": self.input_energy,
            "leak_energy": self.leak_energy,
            "retrieved_energy": self.retrieved_energy,
            "energy_balance": self.energy_balance(),
            "params": self.params,
        }
