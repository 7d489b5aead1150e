"""Randomized invariant checks.

Each ``check_*`` function runs ``n`` independent cases from a fixed seed and
returns a list of failure messages (empty on success).  The unit suite runs
them with a small ``n``; the acceptance suite runs every one at 1000.
"""

import numpy as np

from qhoneyx.deception import (
    DeceptionConfig,
    DeceptionInstance,
    clip_to_budget,
    feasibility_residuals,
    seed_deceptions,
    solve_deception,
)
from qhoneyx.equilibrium import (
    SolverConfig,
    brute_force_value,
    grid_tolerance,
    is_security_policy,
    solve_equilibrium,
)
from qhoneyx.game import (
    QuantumGame,
    conditioned_operator_a,
    conditioned_operator_b,
    payoff,
    payoff_pure,
    projector,
)
from qhoneyx.hamiltonians import canned_game, classical_embed, random_game
from qhoneyx.linalg import (
    eig_hermitian,
    frobenius_norm,
    induced_one_norm,
    kron,
    partial_trace_a,
    partial_trace_b,
)
from oracles import random_density, random_hermitian, random_unit, zero_sum_2x2

CFG = SolverConfig()
# deception search light enough for 1000 cases: two random seeds, no refinement
LIGHT = DeceptionConfig(restarts=2, structured=False, refine=False)


def _rng(seed):
    return np.random.default_rng(seed)


def _game(rng, n_a=2, n_b=2):
    return random_game(n_a, n_b, rng=rng, scale=rng.uniform(1, 300))


# -- linear algebra


def check_kron(n, seed=0):
    rng, bad = _rng(seed), []
    for k in range(n):
        s = rng.integers(1, 4, size=4)
        A, B = rng.normal(size=(s[0], s[1])), rng.normal(size=(s[2], s[3])) * 1j
        C, D = rng.normal(size=(s[1], 2)), rng.normal(size=(s[3], 3))
        E = rng.normal(size=(2, 2))
        if not np.allclose(kron(A, B) @ kron(C, D), kron(A @ C, B @ D), atol=1e-10):
            bad.append(f"case {k}: mixed product")
        if not np.allclose(kron(kron(A, B), E), kron(A, kron(B, E)), atol=1e-10):
            bad.append(f"case {k}: associativity")
    return bad


def check_trace_identity(n, seed=1):
    rng, bad = _rng(seed), []
    for k in range(n):
        na, nb = rng.integers(1, 4, size=2)
        H = random_hermitian(na * nb, rng, 100)
        ra, rb = random_density(na, rng), random_density(nb, rng)
        full = np.trace(kron(ra, rb) @ H)
        via_a = np.trace(rb @ partial_trace_a(kron(ra, np.eye(nb)) @ H, na, nb))
        via_b = np.trace(ra @ partial_trace_b(kron(np.eye(na), rb) @ H, na, nb))
        if abs(full - via_a) > 1e-9 * max(1, abs(full)) or abs(full - via_b) > 1e-9 * max(1, abs(full)):
            bad.append(f"case {k}: {full} {via_a} {via_b}")
    return bad


def check_partial_trace_linear(n, seed=2):
    rng, bad = _rng(seed), []
    for k in range(n):
        na, nb = rng.integers(1, 4, size=2)
        M1, M2 = random_hermitian(na * nb, rng), random_hermitian(na * nb, rng)
        a, b = rng.normal(size=2)
        for pt in (partial_trace_a, partial_trace_b):
            lhs = pt(a * M1 + b * M2, na, nb)
            rhs = a * pt(M1, na, nb) + b * pt(M2, na, nb)
            if not np.allclose(lhs, rhs, atol=1e-12):
                bad.append(f"case {k}: {pt.__name__} not linear")
            if abs(np.trace(pt(M1, na, nb)) - np.trace(M1)) > 1e-12 * max(1, frobenius_norm(M1)):
                bad.append(f"case {k}: {pt.__name__} not trace preserving")
    return bad


def check_eig_reconstruction(n, seed=3):
    rng, bad = _rng(seed), []
    for k in range(n):
        d = int(rng.integers(1, 7))
        M = random_hermitian(d, rng, rng.uniform(1e-3, 1e3))
        w, V = eig_hermitian(M)
        err = np.abs(V @ np.diag(w) @ V.conj().T - M).max()
        if err > 1e-9 * frobenius_norm(M) or np.any(np.diff(w) < 0):
            bad.append(f"case {k}: reconstruction error {err:.2e}")
        if not np.allclose(V.conj().T @ V, np.eye(d), atol=1e-10):
            bad.append(f"case {k}: eigenvectors not unitary")
    return bad


def check_rayleigh_bound(n, seed=4):
    """Spectral radius of a Hermitian matrix never exceeds its induced 1-norm."""
    rng, bad = _rng(seed), []
    for k in range(n):
        d = int(rng.integers(1, 9))
        D = random_hermitian(d, rng, rng.uniform(0.1, 100))
        if rng.random() < 0.3:
            D = clip_to_budget(D, rng.uniform(0, 50))
        w, _ = eig_hermitian(D)
        if max(abs(w[0]), abs(w[-1])) > induced_one_norm(D) * (1 + 1e-12) + 1e-12:
            bad.append(f"case {k}: spectral radius above induced 1-norm")
        v = random_unit(d, rng)
        if np.vdot(v, D @ v).real > induced_one_norm(D) * (1 + 1e-12) + 1e-12:
            bad.append(f"case {k}: Rayleigh quotient above induced 1-norm")
    return bad


def check_worst_case_deception(n, seed=5):
    """Over budget-feasible deceptions the Rayleigh quotient peaks at the budget."""
    rng, bad = _rng(seed), []
    g = canned_game("pure")
    for k in range(n):
        budget = rng.uniform(0, 100)
        psi = kron(random_unit(2, rng)[:, None], random_unit(2, rng)[:, None]).ravel()
        fam = seed_deceptions(g, budget, restarts=3, rng=rng)
        fam += [budget * np.eye(4), clip_to_budget(budget * projector(psi), budget)]
        vals = [np.vdot(psi, D @ psi).real for D in fam]
        if abs(max(vals) - budget) > 1e-9 * max(1, budget):
            bad.append(f"case {k}: max quadratic form {max(vals)} vs budget {budget}")
    return bad


# -- game model


def check_payoff_identities(n, seed=6):
    rng, bad = _rng(seed), []
    for k in range(n):
        na, nb = rng.integers(1, 4, size=2)
        g = QuantumGame(random_hermitian(na * nb, rng, 100), na, nb)
        r1, r2, s = random_density(na, rng), random_density(na, rng), random_density(nb, rng)
        a = rng.random()
        lhs = payoff(g, a * r1 + (1 - a) * r2, s)
        rhs = a * payoff(g, r1, s) + (1 - a) * payoff(g, r2, s)
        if abs(lhs - rhs) > 1e-9 * g.scale:
            bad.append(f"case {k}: bilinearity")
        if abs(np.trace(r1 @ conditioned_operator_a(g, s)) - payoff(g, r1, s)) > 1e-9 * max(1, g.scale):
            bad.append(f"case {k}: K_A consistency")
        if abs(np.trace(s @ conditioned_operator_b(g, r1)) - payoff(g, r1, s)) > 1e-9 * max(1, g.scale):
            bad.append(f"case {k}: K_B consistency")
        pa, pb = random_unit(na, rng), random_unit(nb, rng)
        if abs(payoff_pure(g, pa, pb) - payoff(g, projector(pa), projector(pb))) > 1e-9 * max(1, g.scale):
            bad.append(f"case {k}: pure payoff")
        val = np.trace(kron(r1, s) @ g.H)
        if abs(val.imag) > 1e-9 * max(1, g.scale):
            bad.append(f"case {k}: complex payoff")
    return bad


# -- equilibrium


def check_classical_embed(n, seed=7):
    rng, bad = _rng(seed), []
    for k in range(n):
        A = rng.normal(size=(2, 2))
        g = classical_embed(A, 100)
        v, _, _ = zero_sum_2x2(A)
        res = solve_equilibrium(g, CFG)
        if abs(res.value - 100 * v) > CFG.abs_tol(g):
            bad.append(f"case {k}: {res.value} vs {100 * v}")
    return bad


def check_equilibrium_invariants(n, seed=8):
    """Minimax equality, best-response bounds, shift and scale equivariance."""
    rng, bad = _rng(seed), []
    for k in range(n):
        g = _game(rng)
        tol = CFG.abs_tol(g)
        res = solve_equilibrium(g, CFG)
        if res.duality_gap > tol:
            bad.append(f"case {k}: duality gap {res.duality_gap:.2e}")
        lo, hi = res.certificate
        if lo < -tol or hi > tol:
            bad.append(f"case {k}: certificate {lo:.2e} {hi:.2e}")

        c = rng.uniform(-200, 200)
        gs = g.shifted(c)
        rs = solve_equilibrium(gs, CFG)
        tol_s = tol + CFG.abs_tol(gs)
        if abs(rs.value - (res.value + c)) > tol_s:
            bad.append(f"case {k}: shift value {rs.value} vs {res.value + c}")
        # argmax invariance: each solution is optimal in the other game
        if not (
            is_security_policy(gs, res.rho_b, "b", tol_s, rs.value)
            and is_security_policy(gs, res.rho_a, "a", tol_s, rs.value)
            and is_security_policy(g, rs.rho_b, "b", tol_s, res.value)
            and is_security_policy(g, rs.rho_a, "a", tol_s, res.value)
        ):
            bad.append(f"case {k}: shift changed the optimal sets")

        alpha = rng.uniform(0.05, 20)
        ga = g.scaled(alpha)
        ra = solve_equilibrium(ga, CFG)
        tol_a = CFG.abs_tol(ga)
        if abs(ra.value - alpha * res.value) > tol_a + alpha * tol:
            bad.append(f"case {k}: scale value {ra.value} vs {alpha * res.value}")
        if not (
            is_security_policy(ga, res.rho_b, "b", tol_a + alpha * tol, ra.value)
            and is_security_policy(g, ra.rho_b, "b", tol + tol_a / alpha, res.value)
        ):
            bad.append(f"case {k}: scale changed the optimal sets")
    return bad


def check_brute_force_bracket(n, seed=9, resolution=16):
    rng, bad = _rng(seed), []
    for k in range(n):
        g = _game(rng)
        res = solve_equilibrium(g, CFG)
        lo, hi = brute_force_value(g, resolution)
        gt = grid_tolerance(g, resolution)
        if not (lo - gt <= res.value <= hi + gt) or lo > hi + 1e-9:
            bad.append(f"case {k}: value {res.value} outside [{lo}, {hi}] +- {gt}")
    return bad


# -- deception


def check_deception_baseline(n, seed=10):
    """The undeceived equilibrium is feasible and never beaten in the wrong direction."""
    rng, bad = _rng(seed), []
    for k in range(n):
        g = _game(rng)
        budget = rng.uniform(0, 0.5 * g.scale)
        eq = solve_equilibrium(g, CFG)
        res0 = feasibility_residuals(
            g, np.zeros((4, 4)), eq.rho_a, eq.rho_b, eq.rho_a, eq.value, budget
        )
        tol = CFG.abs_tol(g)
        if max(res0.values()) > tol:
            bad.append(f"case {k}: trivial point infeasible {res0}")
        out = solve_deception(DeceptionInstance(g, budget, CFG, LIGHT))
        if out.realized_payoff > eq.lower + tol:
            bad.append(f"case {k}: deception {out.realized_payoff} worse than baseline {eq.lower}")
        if not out.feasible or not np.array_equal(out.D, out.D.conj().T):
            bad.append(f"case {k}: infeasible or non-Hermitian result")
    return bad


def check_budget_monotone(n, seed=11):
    """Nested seeds plus warm start: a larger budget is never worse."""
    rng, bad = _rng(seed), []
    for k in range(n):
        g = _game(rng)
        b1 = rng.uniform(0, 0.4 * g.scale)
        b2 = b1 + rng.uniform(0, 0.4 * g.scale)
        search = DeceptionConfig(restarts=2, structured=False, refine=False, seed=k)
        r1 = solve_deception(DeceptionInstance(g, b1, CFG, search))
        r2 = solve_deception(DeceptionInstance(g, b2, CFG, search), initial_points=(r1,))
        if r2.realized_payoff > r1.realized_payoff + CFG.abs_tol(g):
            bad.append(f"case {k}: {r2.realized_payoff} at {b2} > {r1.realized_payoff} at {b1}")
        # consistency and strong duality of the larger-budget solution
        h = g.perturbed(r2.D)
        v = solve_equilibrium(h, CFG)
        tol = 2 * CFG.abs_tol(g)
        if not is_security_policy(h, r2.rho_b, "b", tol, v.value):
            bad.append(f"case {k}: victim strategy not a security policy of H + D")
        if abs(r2.perceived_value - v.value) > tol:
            bad.append(f"case {k}: perceived {r2.perceived_value} vs value {v.value}")
    return bad


CHECKS = {
    "kron identities": check_kron,
    "trace identity": check_trace_identity,
    "partial trace linear": check_partial_trace_linear,
    "eig reconstruction": check_eig_reconstruction,
    "spectral radius <= induced 1-norm": check_rayleigh_bound,
    "worst-case deception = budget": check_worst_case_deception,
    "payoff identities": check_payoff_identities,
    "classical embedding value": check_classical_embed,
    "equilibrium shift/scale/minimax": check_equilibrium_invariants,
    "grid bracket": check_brute_force_bracket,
    "deception baseline": check_deception_baseline,
    "budget monotonicity": check_budget_monotone,
}
