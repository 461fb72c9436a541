"""Pure-numpy implementations of the hot kernels.

These are the reference semantics; the compiled backend in ``_speedups.pyx``
must reproduce them bit for bit (same comparison rules, same tie-breaks,
same accumulation order). Anything that changes here has to change there.
"""

from __future__ import annotations

import numpy as np

INF = float("inf")


def nondominated_ranks(F: np.ndarray) -> np.ndarray:
    """Front index per row of the (N, M) objective matrix, 0 = best front.

    A row dominates another when it is <= everywhere and < somewhere.
    """
    F = np.ascontiguousarray(F, dtype=np.float64)
    n = F.shape[0]
    ranks = np.empty(n, dtype=np.int32)
    if n == 0:
        return ranks
    a = F[:, None, :]
    b = F[None, :, :]
    # dom[i, j]: row i dominates row j
    dom = np.logical_and((a <= b).all(axis=2), (a < b).any(axis=2))
    n_dominators = dom.sum(axis=0).astype(np.int64)
    assigned = np.zeros(n, dtype=bool)
    rank = 0
    while not assigned.all():
        front = (n_dominators == 0) & ~assigned
        ranks[front] = rank
        assigned |= front
        n_dominators -= dom[front].sum(axis=0)
        n_dominators[assigned] = -1
        rank += 1
    return ranks


def crowding_distances(F: np.ndarray) -> np.ndarray:
    """NSGA-II crowding distance of one front given as an (n, M) matrix.

    Per-objective boundary members get +inf; interior members accumulate
    (next neighbour - previous neighbour) / range per objective, with a
    zero-range objective contributing nothing. Fronts of size <= 2 are all
    +inf. Ties in the per-objective sort are broken by row index.
    """
    F = np.ascontiguousarray(F, dtype=np.float64)
    n, m = F.shape
    if n <= 2:
        return np.full(n, INF)
    d = np.zeros(n)
    for j in range(m):
        col = F[:, j]
        order = np.argsort(col, kind="stable")
        d[order[0]] = INF
        d[order[-1]] = INF
        vrange = col[order[-1]] - col[order[0]]
        if vrange > 0.0:
            interior = order[1:-1]
            d[interior] += (col[order[2:]] - col[order[:-2]]) / vrange
    return d


def truncate_by_crowding(F: np.ndarray, capacity: int) -> np.ndarray:
    """Indices (ascending) of the rows kept after iteratively evicting the
    member with the smallest crowding distance until only ``capacity``
    remain. Crowding is recomputed after every removal; the first index
    attaining the minimum is evicted on ties.
    """
    F = np.ascontiguousarray(F, dtype=np.float64)
    keep = np.arange(F.shape[0], dtype=np.int64)
    while keep.size > capacity:
        d = crowding_distances(F[keep])
        keep = np.delete(keep, int(np.argmin(d)))
    return keep


def hv2d(F: np.ndarray, ref: np.ndarray) -> float:
    """Exact bi-objective hypervolume by a sweep over f1-sorted points.

    Points that do not strictly dominate the reference point contribute
    nothing. Accumulation runs in sorted order (f1 asc, f2 asc) so the
    result is reproducible to the bit.
    """
    F = np.ascontiguousarray(F, dtype=np.float64)
    ref = np.asarray(ref, dtype=np.float64)
    if F.shape[0] == 0:
        return 0.0
    mask = (F[:, 0] < ref[0]) & (F[:, 1] < ref[1])
    pts = F[mask]
    if pts.shape[0] == 0:
        return 0.0
    order = np.lexsort((pts[:, 1], pts[:, 0]))
    pts = pts[order]
    area = 0.0
    best2 = ref[1]
    for x, y in pts:
        if y < best2:
            area += (ref[0] - x) * (best2 - y)
            best2 = y
    return float(area)
