from typing import List, Optional


class ContextualityError(Exception):
    """Base class for every error raised by ctxdegree"""


class LabelParseError(ContextualityError, ValueError):
    """A Pauli label contains a character outside {I, X, Y, Z}"""

    def __init__(self, label: str, position: int):
        self.label = label
        self.position = position
        if not label:
            super().__init__("Empty Pauli label")
            return
        super().__init__(
            f"Invalid Pauli character {label[position]!r} at position {position} in {label!r}"
        )


class DimensionError(ContextualityError, ValueError):
    """Operands disagree on qubit count or assignment length"""


class GeometryError(ContextualityError, ValueError):
    def __init__(self, message: str, violations: Optional[List[str]] = None):
        self.violations = violations or []
        if self.violations:
            message = f"{message}: " + "; ".join(self.violations)
        super().__init__(message)


class LimitExceededError(ContextualityError):
    """A configured size limit would be exceeded"""


class SimulationError(ContextualityError):
    """Invalid circuit: unsupported gate, bad qubit index, register overflow"""
