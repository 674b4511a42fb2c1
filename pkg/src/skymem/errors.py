"""Exception and warning types shared across the package."""


class SkymemError(Exception):
    """Base class for all package-specific errors."""


class ParameterError(SkymemError, ValueError):
    """A supplied parameter is outside its valid range."""


class DegenerateStateError(ParameterError):
    """Requested state has uniform polarization and carries no texture."""


class EmptySupportError(SkymemError):
    """No sample exceeds the support threshold (all-dark field)."""


class NonBasisBeamError(SkymemError):
    """Beam cannot be decomposed onto the stored two-mode basis."""


class RegimeError(SkymemError):
    """Simulation requested outside the validity regime (weak probe)."""


class SolverError(SkymemError):
    """Time step violates the stability bound or integration failed."""


class WindowingError(SkymemError):
    """Input/retrieval time windows overlap or are inconsistent."""


class UndefinedPhaseError(SkymemError):
    """Retrieval phase requested for a run that retrieved nothing."""


class ConfigError(SkymemError):
    """Scenario configuration failed schema or range validation.

    `path` points at the offending key, e.g. "medium.d0".
    """

    def __init__(self, path: str, message: str):
        self.path = path
        super().__init__(f"{path}: {message}")


class ResolutionWarning(UserWarning):
    """Grid too coarse to resolve the requested structure."""


class BoundaryWarning(UserWarning):
    """Integration window boundary does not close on a Poincare pole."""


class CalibrationWarning(UserWarning):
    """Tomographic projections are mutually inconsistent."""
