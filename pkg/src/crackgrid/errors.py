"""Exception types shared across the package."""


class CrackgridError(Exception):
    """Base class for all package errors."""


class ConfigurationError(CrackgridError):
    """Invalid or inconsistent configuration/data input."""


class SimulationError(CrackgridError):
    """Reactor integration failed (blow-up, non-convergence)."""

    def __init__(self, message: str, diagnostics: dict | None = None):
        super().__init__(message)
        self.diagnostics = diagnostics or {}


class InfeasibleError(CrackgridError):
    """No feasible solution; carries the best attempt found."""

    def __init__(self, message: str, best: dict | None = None):
        super().__init__(message)
        self.best = best or {}


class SolverError(CrackgridError):
    """MILP backend failure; carries a dump path for reproduction."""

    def __init__(self, message: str, mps_path: str | None = None):
        super().__init__(message)
        self.mps_path = mps_path


class ValidationError(CrackgridError):
    """Solution validation could not be performed."""
