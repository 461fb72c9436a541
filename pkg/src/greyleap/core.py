"""Foundational pieces shared by every other module: Pareto dominance,
box-bound repair and the seeded random source.

Populations are represented throughout the library as parallel numpy
arrays: decision vectors as an (N, D) float64 array and objective values
as an (N, M) float64 array (minimization in every objective).
"""

from __future__ import annotations

import numpy as np


class ContractError(ValueError):
    """Raised when an operation is called with inputs that violate its
    documented preconditions (e.g. mismatched vector lengths)."""


def dominates(a, b) -> bool:
    """Pareto dominance for minimization: ``a`` dominates ``b`` when it is
    no worse in every objective and strictly better in at least one.

    Both arguments are 1-D array-likes of equal length with finite entries.
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if a.shape != b.shape or a.ndim != 1:
        raise ContractError(
            f"objective vectors must be 1-D and of equal length, got {a.shape} vs {b.shape}"
        )
    return bool(np.all(a <= b) and np.any(a < b))


def repair_bounds(x, lower, upper):
    """Clamp every coordinate of ``x`` into its closed interval.

    Total on finite inputs; in-bounds vectors come back unchanged. Works on
    a single vector or a batch (rows are vectors), always returning a new
    array.
    """
    return np.clip(np.asarray(x, dtype=float), lower, upper)


class RandomSource:
    """Deterministic random stream owned by exactly one optimizer run.

    The same 64-bit seed and the same call sequence reproduce the exact
    same outputs. Parallel work derives independent child seeds instead of
    sharing a source.
    """

    def __init__(self, seed: int):
        if not 0 <= int(seed) < 2**64:
            raise ContractError(f"seed must be a 64-bit unsigned integer, got {seed}")
        self.seed = int(seed)
        self._gen = np.random.Generator(np.random.PCG64(self.seed))

    def random(self, size=None):
        """Uniform float64 draws in [0, 1)."""
        return self._gen.random(size)

    def integers(self, low, high=None, size=None):
        """Uniform integers in [low, high), numpy semantics."""
        return self._gen.integers(low, high, size=size)

    def normal(self, size=None):
        """Standard normal deviates."""
        return self._gen.standard_normal(size)

    def permutation(self, n: int):
        """A uniformly random permutation of range(n)."""
        return self._gen.permutation(n)

    def child_seed(self, index: int) -> int:
        """Derive a decorrelated 64-bit seed for independent parallel work."""
        mix = np.random.SeedSequence([self.seed, int(index)])
        return int(mix.generate_state(1, np.uint64)[0])
