"""Frobenius norm and trace of rank-two Drinfeld modules over finite fields."""

from .charpoly import (
    CharPolyResult,
    RetriesExhausted,
    solve,
    solve_deterministic,
    solve_gekeler,
    solve_monte_carlo,
    solve_oracle,
    verify_charpoly,
)
from .field import ExtField
from .module import DrinfeldModule

__all__ = [
    "CharPolyResult",
    "DrinfeldModule",
    "ExtField",
    "RetriesExhausted",
    "solve",
    "solve_deterministic",
    "solve_gekeler",
    "solve_monte_carlo",
    "solve_oracle",
    "verify_charpoly",
]
