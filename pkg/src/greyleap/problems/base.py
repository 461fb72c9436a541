"""Box-bounded continuous minimisation problems."""

from __future__ import annotations

import numpy as np

from ..core import ContractError


class Problem:
    """A named benchmark problem.

    ``evaluator`` maps an (N, n_var) batch of decision vectors to an
    (N, n_obj) matrix of objective values. It must be deterministic and
    side-effect free; callers are expected to pass in-bounds vectors
    (repair happens upstream).
    """

    def __init__(self, name, n_var, n_obj, lower, upper, evaluator):
        self.name = str(name)
        self.n_var = int(n_var)
        self.n_obj = int(n_obj)
        self.lower = np.asarray(lower, dtype=float)
        self.upper = np.asarray(upper, dtype=float)
        self._evaluator = evaluator
        if self.lower.shape != (self.n_var,) or self.upper.shape != (self.n_var,):
            raise ContractError(f"{self.name}: bounds must have length {self.n_var}")
        # equal bounds pin a coordinate (e.g. an exhausted supply); only
        # inverted intervals are impossible
        if np.any(self.lower > self.upper):
            raise ContractError(f"{self.name}: lower bounds must not exceed upper bounds")

    def evaluate(self, x) -> np.ndarray:
        """Objective vector for a single decision vector."""
        x = np.asarray(x, dtype=float)
        if x.shape != (self.n_var,):
            raise ContractError(
                f"{self.name} expects {self.n_var} variables, got shape {x.shape}"
            )
        return self._evaluator(x[None, :])[0]

    def evaluate_batch(self, X) -> np.ndarray:
        """Objective matrix for an (N, n_var) batch."""
        X = np.asarray(X, dtype=float)
        if X.ndim != 2 or X.shape[1] != self.n_var:
            raise ContractError(
                f"{self.name} expects an (N, {self.n_var}) batch, got shape {X.shape}"
            )
        return self._evaluator(X)

    def __repr__(self):
        return f"Problem({self.name}, n_var={self.n_var}, n_obj={self.n_obj})"
