"""Payoff Hamiltonians: the Penny Flip subgames, the Hamiltonian-formalism
lift of a classical payoff operator, and the JSON game-file format."""

import json
from dataclasses import dataclass
from itertools import product
from pathlib import Path

import numpy as np

from .game import QuantumGame, density_matrix
from .linalg import hermitian

__all__ = [
    "PAULI",
    "CANNED_GAMES",
    "StrategyBasis",
    "LiftSpec",
    "canned_game",
    "lift_classical",
    "classical_embed",
    "game_from_dict",
    "game_to_dict",
    "load_game",
    "save_game",
    "random_game",
]

PAULI = {
    "I": np.array([[1, 0], [0, 1]], dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
}

_PENNY_FLIP = {
    "pure": np.array(
        [
            [100, 0, 0, 100],
            [0, -100, -100, 0],
            [0, -100, -100, 0],
            [100, 0, 0, 100],
        ],
        dtype=complex,
    ),
    "diagonal": np.diag([100, -100, -100, 100]).astype(complex),
    "quantum": np.array(
        [
            [100, -100j, -100j, 100],
            [100j, -100, -100, -100j],
            [100j, -100, -100, -100j],
            [100, 100j, 100j, 100],
        ],
        dtype=complex,
    ),
}

CANNED_GAMES = tuple(_PENNY_FLIP)

HERMITIAN_FILE_TOL = 1e-8


def canned_game(name):
    """One of the 4x4 Penny Flip subgames: ``pure``, ``diagonal`` or ``quantum``.

    ``pure`` uses moves {I, X}, ``quantum`` uses {I, Z}; ``diagonal`` is the
    classical game embedded without off-diagonal terms.  Payoffs are scaled
    by 100.
    """
    try:
        H = _PENNY_FLIP[name]
    except KeyError:
        raise ValueError(
            f"unknown game {name!r}; choose one of {', '.join(CANNED_GAMES)}"
        ) from None
    return QuantumGame(H.copy(), 2, 2, label=name)


@dataclass(frozen=True)
class StrategyBasis:
    elements: tuple
    labels: tuple

    def __post_init__(self):
        mats = tuple(np.asarray(U, dtype=complex) for U in self.elements)
        if len(mats) != len(self.labels):
            raise ValueError("one label per basis element is required")
        if not mats:
            raise ValueError("a strategy basis needs at least one element")
        for U, lab in zip(mats, self.labels):
            if U.ndim != 2 or U.shape[0] != U.shape[1]:
                raise ValueError(f"strategy {lab!r} is not square")
            if not np.allclose(U.conj().T @ U, np.eye(U.shape[0]), atol=1e-10):
                raise ValueError(f"strategy {lab!r} is not unitary")
        object.__setattr__(self, "elements", mats)
        object.__setattr__(self, "labels", tuple(self.labels))

    @classmethod
    def pauli(cls, names="IX"):
        return cls(tuple(PAULI[c] for c in names), tuple(names))

    def __len__(self):
        return len(self.elements)


@dataclass(frozen=True)
class LiftSpec:
    """Inputs of the Hamiltonian-formalism lift.

    ``payoff_operator`` acts on the shared coin space, ``initial_state`` is
    the coin's starting density matrix.
    """

    payoff_operator: np.ndarray
    initial_state: np.ndarray
    basis_a: StrategyBasis
    basis_b: StrategyBasis
    scale: float = 1.0

    def __post_init__(self):
        P = hermitian(self.payoff_operator)
        d = P.shape[0]
        rho0 = density_matrix(self.initial_state, d)
        for U in self.basis_a.elements + self.basis_b.elements:
            if U.shape != (d, d):
                raise ValueError("strategy and payoff operator dimensions differ")
        if not self.scale > 0:
            raise ValueError("scale must be positive")
        object.__setattr__(self, "payoff_operator", P)
        object.__setattr__(self, "initial_state", rho0)


def lift_classical(spec, label="lifted"):
    """Build ``H`` entrywise from ``tr(P nu_b nu_a rho0 mu_a^H mu_b^H)``.

    Rows enumerate the pair ``(mu_a, mu_b)`` and columns ``(nu_a, nu_b)`` in
    lexicographic order of basis indices; player A's move acts first on the
    coin.
    """
    A, B = spec.basis_a.elements, spec.basis_b.elements
    pairs = list(product(range(len(A)), range(len(B))))
    P, rho0 = spec.payoff_operator, spec.initial_state
    H = np.empty((len(pairs), len(pairs)), dtype=complex)
    for i, (ma, mb) in enumerate(pairs):
        left = A[ma].conj().T @ B[mb].conj().T
        for j, (na, nb) in enumerate(pairs):
            H[i, j] = np.trace(P @ B[nb] @ A[na] @ rho0 @ left)
    return QuantumGame(spec.scale * H, len(A), len(B), label=label)


def classical_embed(A, scale=1.0, label="classical"):
    """Classical ``m x n`` payoff matrix as a diagonal quantum game."""
    A = np.atleast_2d(np.asarray(A, dtype=float))
    m, n = A.shape
    return QuantumGame(np.diag(scale * A.ravel()).astype(complex), m, n, label=label)


def random_game(n_a=2, n_b=2, rng=None, scale=100.0, label="random"):
    """Hermitian game with i.i.d. Gaussian entries, Frobenius norm ``scale``."""
    rng = np.random.default_rng(rng)
    d = n_a * n_b
    M = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
    H = hermitian(M)
    H *= scale / np.linalg.norm(H)
    return QuantumGame(H, n_a, n_b, label=label)


def _matrix_field(obj, key, d):
    arr = np.asarray(obj[key], dtype=float)
    if arr.size != d * d:
        raise ValueError(f"field {key!r} has {arr.size} entries, expected {d * d}")
    return arr.reshape(d, d)


def game_from_dict(obj):
    """Parse the game-file schema ``{n_a, n_b, h_re, h_im, label?}``."""
    try:
        n_a, n_b = int(obj["n_a"]), int(obj["n_b"])
        d = n_a * n_b
        H = _matrix_field(obj, "h_re", d) + 1j * _matrix_field(obj, "h_im", d)
    except KeyError as exc:
        raise ValueError(f"game file is missing field {exc.args[0]!r}") from None
    asym = np.abs(H - H.conj().T).max() if H.size else 0.0
    if asym > HERMITIAN_FILE_TOL:
        raise ValueError(f"Hamiltonian is not Hermitian (max |H - H^H| = {asym:.3e})")
    return QuantumGame(H, n_a, n_b, label=str(obj.get("label", "")))


def game_to_dict(g):
    return {
        "n_a": g.n_a,
        "n_b": g.n_b,
        "h_re": g.H.real.ravel().tolist(),
        "h_im": g.H.imag.ravel().tolist(),
        "label": g.label,
    }


def load_game(path):
    with open(path) as fh:
        obj = json.load(fh)
    g = game_from_dict(obj)
    if not g.label:
        g = QuantumGame(g.H, g.n_a, g.n_b, label=Path(path).stem)
    return g


def save_game(g, path):
    with open(path, "w") as fh:
        json.dump(game_to_dict(g), fh, indent=2)
