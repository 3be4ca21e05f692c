"""crackgrid: ethane-cracking energy model + microgrid scheduling MILP."""

__version__ = "0.1.0"

from .errors import (
    ConfigurationError,
    CrackgridError,
    InfeasibleError,
    SimulationError,
    SolverError,
    ValidationError,
)

__all__ = [
    "ConfigurationError",
    "CrackgridError",
    "InfeasibleError",
    "SimulationError",
    "SolverError",
    "ValidationError",
    "__version__",
]
