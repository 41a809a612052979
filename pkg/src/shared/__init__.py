"""Shared errors for the engine."""

from .errors import (
    EngineError,
    ValidationError,
    DiscrepancyError,
    SizeGuardError,
)
