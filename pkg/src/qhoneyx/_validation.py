"""Input checks shared by the estimators and the CLI."""

import numbers

import numpy as np

from .game import QuantumGame


def check_game(game, n_a=None, n_b=None):
    """Coerce ``game`` to a :class:`QuantumGame`.

    Accepts a game, or a square array together with ``n_a`` and ``n_b``
    (a 4x4 array defaults to two qubits).
    """
    if isinstance(game, QuantumGame):
        return game
    H = np.asarray(game)
    if H.ndim != 2 or H.shape[0] != H.shape[1]:
        raise ValueError(f"expected a square payoff matrix, got shape {H.shape}")
    if not np.all(np.isfinite(H)):
        raise ValueError("payoff matrix has non-finite entries")
    if not np.allclose(H, H.conj().T, atol=1e-8):
        raise ValueError("payoff matrix must be Hermitian")
    d = H.shape[0]
    if n_a is None and n_b is None:
        if d != 4:
            raise ValueError("n_a and n_b are required unless the matrix is 4x4")
        n_a = n_b = 2
    elif n_a is None:
        n_a = d // n_b
    elif n_b is None:
        n_b = d // n_a
    return QuantumGame(H, n_a, n_b)


def check_budget(budget):
    if not isinstance(budget, numbers.Real) or isinstance(budget, bool):
        raise TypeError(f"budget must be a real number, got {type(budget).__name__}")
    budget = float(budget)
    if not np.isfinite(budget) or budget < 0:
        raise ValueError(f"budget must be finite and non-negative, got {budget}")
    return budget


def check_positive(value, name):
    if not value > 0:
        raise ValueError(f"{name} must be positive, got {value}")
    return value
