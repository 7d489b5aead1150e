"""Security policies and values of zero-sum quantum games.

For a fixed opponent state the best response is an extreme eigenvector of
the conditioned payoff operator, so the game value is the common optimum of

    max_{rho_b} lambda_min(K_A(rho_b))   and   min_{rho_a} lambda_max(K_B(rho_a)).

Both players run matrix multiplicative weights (a Gibbs state of their
accumulated conditioned operators).  Every ``check_every`` iterations the
candidates are scored with the exact eigenvalue bounds above; the best
upper bound (player A) and the best lower bound (player B) form a duality
certificate, and iteration stops once their gap is below tolerance.
"""

import logging
import math
from dataclasses import dataclass, field

import numpy as np

from .game import maximally_mixed, projector
from .linalg import _eig_jacobi, _sym, hermitian

logger = logging.getLogger(__name__)

__all__ = [
    "SolverConfig",
    "EquilibriumResult",
    "NonConvergenceError",
    "best_response_a",
    "best_response_b",
    "solve_equilibrium",
    "is_security_policy",
    "certificate_residuals",
    "brute_force_value",
    "grid_tolerance",
    "bloch_grid",
]

METHODS = ("extragradient", "mmw")


class NonConvergenceError(RuntimeError):
    """The duality gap did not close within the iteration budget."""

    def __init__(self, msg, best_gap=math.inf, result=None):
        super().__init__(msg)
        self.best_gap = best_gap
        self.result = result


@dataclass(frozen=True)
class SolverConfig:
    """Iteration budget and tolerances.

    ``tolerance`` is relative to ``||H||_F``.  The step size is
    ``step_scale / ||H||_F``; the ``mmw`` method additionally decays it as
    ``1/sqrt(t)`` while ``extragradient`` keeps it constant.
    """

    max_iterations: int = 200_000
    tolerance: float = 1e-4
    method: str = "extragradient"
    step_scale: float = 1.0
    check_every: int = 10
    grid_resolution: int = 64
    seed: int = 0

    def __post_init__(self):
        if not self.tolerance > 0:
            raise ValueError("tolerance must be positive")
        if self.max_iterations < 1:
            raise ValueError("max_iterations must be at least 1")
        if self.method not in METHODS:
            raise ValueError(f"method must be one of {METHODS}")
        if self.check_every < 1:
            raise ValueError("check_every must be at least 1")

    def abs_tol(self, g):
        return max(self.tolerance * g.scale, 1e-12)


@dataclass
class EquilibriumResult:
    value: float
    rho_a: np.ndarray
    rho_b: np.ndarray
    duality_gap: float
    iterations: int
    certificate: tuple
    upper: float
    lower: float
    tolerance: float = 0.0
    ties: dict = field(default_factory=dict)

    @property
    def converged(self):
        return self.certificate[0] >= -self.tolerance and self.certificate[1] <= self.tolerance


def _cond_a(T, rho_b):
    return np.einsum("ikjl,lk->ij", T, rho_b)


def _cond_b(T, rho_a):
    return np.einsum("ikjl,ji->kl", T, rho_a)


def _eig(M):
    return _eig_jacobi(_sym(M))


def _gibbs(S):
    """Normalized ``exp(S)`` for Hermitian ``S``."""
    if S.shape[0] == 2:
        # S = a I + r.sigma  gives  (I + tanh(|r|) r.sigma / |r|) / 2
        x, y = S[0, 1].real, -S[0, 1].imag
        z = 0.5 * (S[0, 0].real - S[1, 1].real)
        r = math.sqrt(x * x + y * y + z * z)
        f = 0.5 * math.tanh(r) / r if r > 0 else 0.0
        return np.array([[0.5 + f * z, f * (x - 1j * y)], [f * (x + 1j * y), 0.5 - f * z]])
    w, V = _eig(S)
    e = np.exp(w - w[-1])
    return (V * (e / e.sum())) @ V.conj().T


def _lmin(M):
    return _eig(M)[0][0]


def _lmax(M):
    return _eig(M)[0][-1]


def best_response_a(g, rho_b):
    """Minimizer's best response: projector on a ``lambda_min`` eigenvector of ``K_A``.

    Ties resolve to the first eigenvector in Jacobi order.
    """
    if np.shape(rho_b) != (g.n_b, g.n_b):
        raise ValueError("rho_b does not match the game")
    w, V = _eig(_cond_a(g.tensor, rho_b))
    return projector(V[:, 0]), float(w[0])


def best_response_b(g, rho_a):
    """Maximizer's best response: projector on a ``lambda_max`` eigenvector of ``K_B``."""
    if np.shape(rho_a) != (g.n_a, g.n_a):
        raise ValueError("rho_a does not match the game")
    w, V = _eig(_cond_b(g.tensor, rho_a))
    return projector(V[:, -1]), float(w[-1])


def certificate_residuals(g, rho_a, rho_b, value):
    """``(lambda_min(K_A(rho_b)) - u, lambda_max(K_B(rho_a)) - u)``.

    Both operator inequalities of the value SDP pair hold within ``tol``
    when the first entry is ``>= -tol`` and the second ``<= tol``.
    """
    T = g.tensor
    return (
        float(_lmin(_cond_a(T, rho_b)) - value),
        float(_lmax(_cond_b(T, rho_a)) - value),
    )


def _multiplicity(w, at, tol):
    return int(np.sum(np.abs(w - at) <= tol))


def _linear_maps(T):
    """Matrices ``MA``, ``MB`` with ``K_A(r) = MA @ vec(r)`` and ``K_B(r) = MB @ vec(r)``."""
    na, nb = T.shape[0], T.shape[1]
    MA = T.transpose(0, 2, 3, 1).reshape(na * na, nb * nb)
    MB = T.transpose(1, 3, 2, 0).reshape(nb * nb, na * na)
    return MA, MB


def solve_equilibrium(g, cfg=None):
    """Value and security policies of ``g`` to within ``cfg.tolerance * ||H||_F``.

    The solver iterates on the trace-free part of ``H``: a constant shift
    changes neither the strategies nor the step size.
    """
    cfg = cfg or SolverConfig()
    T = g.tensor
    tol = cfg.abs_tol(g)
    shift = float(np.trace(g.H).real) / g.dim
    Hc = g.H - shift * np.eye(g.dim)
    MA, MB = _linear_maps(Hc.reshape(T.shape))
    na, nb = g.n_a, g.n_b

    def KA(r):
        return (MA @ r.ravel()).reshape(na, na)

    def KB(r):
        return (MB @ r.ravel()).reshape(nb, nb)

    eta0 = cfg.step_scale / max(float(np.linalg.norm(Hc)), 1e-300)

    ra = maximally_mixed(na)
    rb = maximally_mixed(nb)
    best_up, best_a = _lmax(KB(ra)), ra
    best_lo, best_b = _lmin(KA(rb)), rb

    SA = np.zeros((na, na), dtype=complex)
    SB = np.zeros((nb, nb), dtype=complex)
    sum_a = np.zeros_like(SA)
    sum_b = np.zeros_like(SB)
    weight = 0.0
    it = 0
    extragradient = cfg.method == "extragradient"
    while best_up - best_lo > tol and it < cfg.max_iterations:
        it += 1
        if extragradient:
            eta = eta0
            ya = _gibbs(SA - eta * KA(rb))
            yb = _gibbs(SB + eta * KB(ra))
            SA = SA - eta * KA(yb)
            SB = SB + eta * KB(ya)
            ra, rb = _gibbs(SA), _gibbs(SB)
        else:
            eta = eta0 / math.sqrt(it)
            SA = SA - eta * KA(rb)
            SB = SB + eta * KB(ra)
            ra, rb = _gibbs(SA), _gibbs(SB)
            ya, yb = ra, rb
        sum_a += eta * ya
        sum_b += eta * yb
        weight += eta
        if it % cfg.check_every and it != cfg.max_iterations:
            continue
        for cand_a, cand_b in ((sum_a / weight, sum_b / weight), (ya, yb)):
            up = _lmax(KB(cand_a))
            lo = _lmin(KA(cand_b))
            if up < best_up:
                best_up, best_a = up, cand_a
            if lo > best_lo:
                best_lo, best_b = lo, cand_b

    best_up += shift
    best_lo += shift
    rho_a, rho_b = hermitian(best_a), hermitian(best_b)
    value = 0.5 * (best_up + best_lo)
    gap = best_up - best_lo
    wa, _ = _eig(_cond_a(T, rho_b))
    wb, _ = _eig(_cond_b(T, rho_a))
    result = EquilibriumResult(
        value=float(value),
        rho_a=rho_a,
        rho_b=rho_b,
        duality_gap=float(max(gap, 0.0)),
        iterations=it,
        certificate=certificate_residuals(g, rho_a, rho_b, value),
        upper=float(best_up),
        lower=float(best_lo),
        ties={
            "a_min_multiplicity": _multiplicity(wa, wa[0], tol),
            "b_max_multiplicity": _multiplicity(wb, wb[-1], tol),
        },
        tolerance=tol,
    )
    if gap > tol:
        raise NonConvergenceError(
            f"duality gap {gap:.3e} above tolerance {tol:.3e} after {it} iterations",
            best_gap=gap,
            result=result,
        )
    logger.debug("solved %r: value %.6g gap %.2e in %d iterations", g, value, gap, it)
    return result


def is_security_policy(g, rho, player, tol=None, value=None, cfg=None):
    """Membership test for a player's optimal strategy set.

    ``player`` is ``"a"`` (minimizer) or ``"b"`` (maximizer).  The strategy
    qualifies when its guaranteed payoff is within ``tol`` of the game value.
    """
    cfg = cfg or SolverConfig()
    if tol is None:
        tol = cfg.abs_tol(g)
    if value is None:
        value = solve_equilibrium(g, cfg).value
    if player == "a":
        return bool(_lmax(_cond_b(g.tensor, rho)) <= value + tol)
    if player == "b":
        return bool(_lmin(_cond_a(g.tensor, rho)) >= value - tol)
    raise ValueError("player must be 'a' or 'b'")


def bloch_grid(resolution):
    """Pure qubit states ``cos(t/2)|0> + exp(i p) sin(t/2)|1>`` on a ``t x p`` grid."""
    theta = np.linspace(0.0, math.pi, resolution)
    phi = np.linspace(0.0, 2.0 * math.pi, resolution, endpoint=False)
    t, p = np.meshgrid(theta, phi, indexing="ij")
    t, p = t.ravel(), p.ravel()
    return np.stack([np.cos(t / 2), np.exp(1j * p) * np.sin(t / 2)], axis=1)


def grid_tolerance(g, resolution):
    """Discretization allowance for :func:`brute_force_value`.

    Neighbouring grid states are within one grid step of angle, and the
    pure-state payoff is Lipschitz with constant ``||H||_F`` in that angle.
    """
    step = max(math.pi / max(resolution - 1, 1), 2.0 * math.pi / resolution)
    return g.scale * step


def brute_force_value(g, resolution=64, chunk=512):
    """Bracket ``(lower, upper)`` on the value from pure-state grid enumeration.

    ``upper`` is the min over A's grid of the max over B's grid of the
    payoff, ``lower`` the max over B of the min over A.  Both are exact
    bounds up to :func:`grid_tolerance`.  Qubit games only.
    """
    if g.n_a != 2 or g.n_b != 2:
        raise ValueError("brute_force_value supports qubit games (n_a = n_b = 2) only")
    psi = bloch_grid(resolution)
    T = g.tensor
    n = psi.shape[0]
    # outer[b, k, l] = conj(psi_b[k]) psi_b[l]
    outer = (psi.conj()[:, :, None] * psi[:, None, :]).reshape(n, 4)
    row_max = np.empty(n)
    col_min = np.full(n, np.inf)
    for start in range(0, n, chunk):
        pa = psi[start : start + chunk]
        # K[a, k, l] = sum_ij conj(psi_a[i]) H[i, k, j, l] psi_a[j]
        K = np.einsum("ikjl,aj,ai->akl", T, pa, pa.conj()).reshape(-1, 4)
        P = (K @ outer.T).real
        row_max[start : start + chunk] = P.max(axis=1)
        np.minimum(col_min, P.min(axis=0), out=col_min)
    return float(col_min.max()), float(row_max.min())
