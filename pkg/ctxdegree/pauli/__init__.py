from .algebra import (
    PauliOperator,
    all_operators,
    commutes,
    context_sign,
    multiply,
    parse_label,
)

__all__ = [
    "PauliOperator",
    "all_operators",
    "commutes",
    "context_sign",
    "multiply",
    "parse_label",
]
