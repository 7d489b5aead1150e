"""Two-player zero-sum quantum games over product (unentangled) states.

Player A is the row factor of the joint space and minimizes the payoff;
player B is the column factor and maximizes it.  The payoff of a strategy
profile is ``tr((rho_a kron rho_b) H)``.
"""

from dataclasses import dataclass, field

import numpy as np

from .linalg import eig_hermitian, frobenius_norm, hermitian, kron, project_psd

__all__ = [
    "QuantumGame",
    "density_matrix",
    "is_density_matrix",
    "pure_state",
    "projector",
    "maximally_mixed",
    "payoff",
    "payoff_pure",
    "conditioned_operator_a",
    "conditioned_operator_b",
]

# states this far off the density-matrix set are repaired, not rejected
REPAIR_TOL = 1e-7
STATE_TOL = 1e-9


@dataclass(frozen=True, eq=False)
class QuantumGame:
    """Payoff Hamiltonian ``H`` on ``C^{n_a} kron C^{n_b}``."""

    H: np.ndarray
    n_a: int
    n_b: int
    label: str = field(default="")

    def __post_init__(self):
        n_a, n_b = int(self.n_a), int(self.n_b)
        if n_a < 1 or n_b < 1:
            raise ValueError("subsystem dimensions must be positive")
        H = hermitian(self.H)
        if H.shape != (n_a * n_b, n_a * n_b):
            raise ValueError(
                f"Hamiltonian of shape {H.shape} does not match n_a*n_b = {n_a * n_b}"
            )
        H.setflags(write=False)
        object.__setattr__(self, "H", H)
        object.__setattr__(self, "n_a", n_a)
        object.__setattr__(self, "n_b", n_b)

    @property
    def dim(self):
        return self.n_a * self.n_b

    @property
    def scale(self):
        """Frobenius norm of ``H``; the reference scale for tolerances."""
        return frobenius_norm(self.H)

    @property
    def tensor(self):
        """``H`` reshaped to ``(n_a, n_b, n_a, n_b)``."""
        return self.H.reshape(self.n_a, self.n_b, self.n_a, self.n_b)

    def shifted(self, c):
        return QuantumGame(self.H + c * np.eye(self.dim), self.n_a, self.n_b, self.label)

    def scaled(self, alpha):
        return QuantumGame(alpha * self.H, self.n_a, self.n_b, self.label)

    def perturbed(self, D, label=None):
        return QuantumGame(self.H + D, self.n_a, self.n_b, self.label if label is None else label)

    def swap_roles(self):
        """Same game with the minimizer and maximizer exchanged.

        Player B becomes the row (minimizing) player; payoffs are negated so
        that both players keep their original interests.
        """
        T = self.tensor.transpose(1, 0, 3, 2).reshape(self.dim, self.dim)
        return QuantumGame(-T, self.n_b, self.n_a, self.label)

    def __repr__(self):
        return f"QuantumGame(label={self.label!r}, n_a={self.n_a}, n_b={self.n_b})"


def density_matrix(M, n=None):
    """Validate ``M`` as a density matrix, repairing tiny violations.

    Inputs within ``1e-7`` of the state set (eigenvalues and trace) are
    projected onto the PSD cone and renormalized; anything further off
    raises ``ValueError``.
    """
    R = hermitian(M)
    if n is not None and R.shape != (n, n):
        raise ValueError(f"expected a {n}x{n} density matrix, got {R.shape}")
    w, _ = eig_hermitian(R)
    tr = float(np.trace(R).real)
    if w[0] < -REPAIR_TOL or abs(tr - 1.0) > REPAIR_TOL:
        raise ValueError(
            f"not a density matrix (min eigenvalue {w[0]:.3e}, trace {tr:.12g})"
        )
    if w[0] < 0.0 or tr != 1.0:
        R = project_psd(R)
        R = R / np.trace(R).real
    return R


def is_density_matrix(M, tol=STATE_TOL):
    M = np.asarray(M)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        return False
    if not np.allclose(M, M.conj().T, atol=tol):
        return False
    w, _ = eig_hermitian(M)
    return bool(w[0] >= -tol and abs(np.trace(M).real - 1.0) <= tol)


def pure_state(psi):
    """Normalize-checked state vector; raises unless ``||psi||_2 = 1``."""
    psi = np.asarray(psi, dtype=complex).ravel()
    nrm = np.linalg.norm(psi)
    if abs(nrm - 1.0) > STATE_TOL:
        raise ValueError(f"state vector has norm {nrm:.12g}, expected 1")
    return psi


def projector(psi):
    psi = np.asarray(psi, dtype=complex).ravel()
    return hermitian(np.outer(psi, psi.conj()))


def maximally_mixed(n):
    return np.eye(n, dtype=complex) / n


def _check_states(g, rho_a, rho_b):
    if np.shape(rho_a) != (g.n_a, g.n_a):
        raise ValueError(f"rho_a has shape {np.shape(rho_a)}, expected ({g.n_a}, {g.n_a})")
    if np.shape(rho_b) != (g.n_b, g.n_b):
        raise ValueError(f"rho_b has shape {np.shape(rho_b)}, expected ({g.n_b}, {g.n_b})")


def payoff(g, rho_a, rho_b):
    """``tr((rho_a kron rho_b) H)``; the imaginary residue is checked."""
    _check_states(g, rho_a, rho_b)
    val = np.trace(kron(rho_a, rho_b) @ g.H)
    if abs(val.imag) > max(1e-9 * g.scale, 1e-12):
        raise ArithmeticError(f"payoff has imaginary part {val.imag:.3e}")
    return float(val.real)


def payoff_pure(g, psi_a, psi_b):
    """``<psi_a psi_b| H |psi_a psi_b>`` for unit state vectors."""
    psi_a = pure_state(psi_a)
    psi_b = pure_state(psi_b)
    if psi_a.size != g.n_a or psi_b.size != g.n_b:
        raise ValueError("state vector dimensions do not match the game")
    v = kron(psi_a[:, None], psi_b[:, None]).ravel()
    return float(np.vdot(v, g.H @ v).real)


def conditioned_operator_a(g, rho_b):
    """``K_A(rho_b) = tr_B((I kron rho_b) H)``, so ``tr(rho_a K_A) = payoff``."""
    if np.shape(rho_b) != (g.n_b, g.n_b):
        raise ValueError(f"rho_b has shape {np.shape(rho_b)}, expected ({g.n_b}, {g.n_b})")
    return hermitian(np.einsum("ikjl,lk->ij", g.tensor, rho_b))


def conditioned_operator_b(g, rho_a):
    """``K_B(rho_a) = tr_A((rho_a kron I) H)``, so ``tr(rho_b K_B) = payoff``."""
    if np.shape(rho_a) != (g.n_a, g.n_a):
        raise ValueError(f"rho_a has shape {np.shape(rho_a)}, expected ({g.n_a}, {g.n_a})")
    return hermitian(np.einsum("ikjl,ji->kl", g.tensor, rho_a))
