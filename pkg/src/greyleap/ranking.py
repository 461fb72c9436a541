"""Fast non-dominated sorting, crowding distance and the crowded total
order ("front first, crowding second") used to sort populations best-first
before memeplex partitioning.
"""

from __future__ import annotations

import numpy as np

from . import kernels


def nondominated_ranks(F) -> np.ndarray:
    """Front index (int32) per row of the (N, M) objective matrix."""
    return kernels.nondominated_ranks(np.asarray(F, dtype=float))


def fast_nondominated_sort(F) -> list[np.ndarray]:
    """Partition row indices into fronts.

    Front 0 is the non-dominated set; every member of front i > 0 is
    dominated by someone in an earlier front. Indices within a front are
    ascending. An empty population gives an empty partition.
    """
    F = np.asarray(F, dtype=float)
    ranks = kernels.nondominated_ranks(F)
    if ranks.size == 0:
        return []
    return [np.flatnonzero(ranks == k) for k in range(int(ranks.max()) + 1)]


def crowding_distance(front_F) -> np.ndarray:
    """Crowding distances for one front's (n, M) objective matrix."""
    return kernels.crowding_distances(np.asarray(front_F, dtype=float))


def crowding_by_front(F, ranks) -> np.ndarray:
    """Crowding distances for a whole population, computed front by front."""
    F = np.asarray(F, dtype=float)
    d = np.empty(F.shape[0])
    for k in range(int(ranks.max()) + 1 if ranks.size else 0):
        idx = np.flatnonzero(ranks == k)
        d[idx] = kernels.crowding_distances(F[idx])
    return d


def crowded_sort(F) -> np.ndarray:
    """Permutation ordering rows best-first.

    Lower front index wins; within a front larger crowding wins; remaining
    ties keep input order (stable).
    """
    F = np.asarray(F, dtype=float)
    ranks = kernels.nondominated_ranks(F)
    if ranks.size == 0:
        return np.empty(0, dtype=np.int64)
    d = crowding_by_front(F, ranks)
    return np.lexsort((-d, ranks))
