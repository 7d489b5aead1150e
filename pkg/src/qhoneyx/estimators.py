"""scikit-learn style wrappers around the equilibrium and deception solvers.

``fit`` takes a game (or a Hermitian payoff matrix) and stores the
solution in trailing-underscore attributes; hyperparameters live in
``__init__`` so ``get_params``/``set_params``/``clone`` work as usual.
"""

from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from ._validation import check_budget, check_game
from .deception import DeceptionConfig, DeceptionInstance, solve_deception
from .equilibrium import SolverConfig, solve_equilibrium

__all__ = ["ZeroSumSolver", "HoneyXDeceiver"]


class ZeroSumSolver(BaseEstimator):
    """Value and security policies of a zero-sum quantum game.

    Parameters
    ----------
    tolerance : float
        Duality-gap target relative to ``||H||_F``.
    max_iterations : int
    method : {"extragradient", "mmw"}
    """

    def __init__(self, tolerance=1e-4, max_iterations=200_000, method="extragradient"):
        self.tolerance = tolerance
        self.max_iterations = max_iterations
        self.method = method

    def _config(self):
        return SolverConfig(
            max_iterations=self.max_iterations, tolerance=self.tolerance, method=self.method
        )

    def fit(self, game, y=None, n_a=None, n_b=None):
        g = check_game(game, n_a, n_b)
        res = solve_equilibrium(g, self._config())
        self.game_ = g
        self.result_ = res
        self.value_ = res.value
        self.rho_a_ = res.rho_a
        self.rho_b_ = res.rho_b
        self.duality_gap_ = res.duality_gap
        self.n_iter_ = res.iterations
        self.certificate_ = res.certificate
        return self

    def score(self, game=None, y=None):
        """Game value of the fitted game."""
        check_is_fitted(self, "value_")
        return self.value_


class HoneyXDeceiver(TransformerMixin, BaseEstimator):
    """Budgeted payoff deception against an equilibrium-playing victim.

    ``fit`` finds the deception ``D`` and the resulting strategy profile;
    ``transform`` returns the announced game ``H + D``.

    Parameters
    ----------
    budget : float
        Induced 1-norm bound on ``D``.
    restarts : int
        Random seeds on top of the structured ones.
    tolerance : float
        Equilibrium and feasibility tolerance relative to ``||H||_F``.
    refine : bool
        Run the local nonlinear-programming step from each seed.
    time_cap_s : float
    random_state : int
    """

    def __init__(
        self,
        budget=20.0,
        restarts=16,
        tolerance=1e-4,
        refine=True,
        time_cap_s=120.0,
        random_state=0,
    ):
        self.budget = budget
        self.restarts = restarts
        self.tolerance = tolerance
        self.refine = refine
        self.time_cap_s = time_cap_s
        self.random_state = random_state

    def fit(self, game, y=None, n_a=None, n_b=None, initial_points=()):
        g = check_game(game, n_a, n_b)
        budget = check_budget(self.budget)
        inst = DeceptionInstance(
            g,
            budget,
            config=SolverConfig(tolerance=self.tolerance),
            search=DeceptionConfig(
                restarts=self.restarts,
                refine=self.refine,
                time_cap_s=self.time_cap_s,
                seed=self.random_state,
            ),
        )
        res = solve_deception(inst, initial_points=initial_points)
        self.game_ = g
        self.result_ = res
        self.deception_ = res.D
        self.rho_a_ = res.rho_a
        self.rho_b_ = res.rho_b
        self.omega_ = res.omega
        self.perceived_value_ = res.perceived_value
        self.realized_payoff_ = res.realized_payoff
        return self

    def transform(self, X=None):
        """The announced game ``X + D``; ``X=None`` means the fitted game."""
        check_is_fitted(self, "deception_")
        g = self.game_ if X is None else check_game(X, self.game_.n_a, self.game_.n_b)
        return g.perturbed(self.deception_, label=f"{g.label}+D" if g.label else "")
