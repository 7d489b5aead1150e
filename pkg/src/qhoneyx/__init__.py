"""Honey-X deception in two-player zero-sum quantum games."""

from .deception import (
    DeceptionConfig,
    DeceptionInstance,
    DeceptionResult,
    clip_to_budget,
    deceptive_game,
    naive_victim_response,
    robust_victim_response,
    solve_deception,
    verify_theorem1,
)
from .equilibrium import (
    EquilibriumResult,
    NonConvergenceError,
    SolverConfig,
    brute_force_value,
    is_security_policy,
    solve_equilibrium,
)
from .estimators import HoneyXDeceiver, ZeroSumSolver
from .game import QuantumGame, density_matrix, payoff
from .hamiltonians import canned_game, load_game, random_game, save_game

__version__ = "0.1.0"

__all__ = [
    "QuantumGame",
    "density_matrix",
    "payoff",
    "canned_game",
    "random_game",
    "load_game",
    "save_game",
    "SolverConfig",
    "EquilibriumResult",
    "NonConvergenceError",
    "solve_equilibrium",
    "is_security_policy",
    "brute_force_value",
    "DeceptionConfig",
    "DeceptionInstance",
    "DeceptionResult",
    "deceptive_game",
    "clip_to_budget",
    "naive_victim_response",
    "robust_victim_response",
    "verify_theorem1",
    "solve_deception",
    "ZeroSumSolver",
    "HoneyXDeceiver",
]
