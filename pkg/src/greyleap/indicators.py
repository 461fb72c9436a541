"""Quality indicators for approximation sets: hypervolume (2 and 3
objectives, exact), inverted generational distance, generational distance
and the spread measure, plus a settings bundle that fixes the conventions
(reference points, normalisation) for a whole experiment.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.spatial.distance import cdist

from . import kernels
from .core import ContractError


def _as_set(F, name: str) -> np.ndarray:
    F = np.asarray(F, dtype=float)
    if F.ndim == 1:
        F = F[None, :]
    if F.ndim != 2:
        raise ContractError(f"{name} must be a 2-d array of objective vectors")
    return F


def hypervolume(F, ref) -> float:
    """Exact hypervolume dominated by F and bounded by the reference point.

    Measures the volume of the union of boxes [f, ref] over all points f
    that strictly dominate ref in every objective; other points contribute
    nothing. Supports 2 and 3 objectives.
    """
    ref = np.asarray(ref, dtype=float)
    F = _as_set(F, "approximation set")
    if F.shape[0] and F.shape[1] != ref.shape[0]:
        raise ContractError("objective count does not match reference point")
    m = ref.shape[0]
    if m == 2:
        return kernels.hv2d(F, ref)
    if m == 3:
        return _hv3d(F, ref)
    raise ContractError("hypervolume supports 2 or 3 objectives")


def _hv3d(F, ref) -> float:
    """Sweep the third objective; each slab's cross-section is a 2-d
    hypervolume over the points at or below the slab floor."""
    pts = F[(F < ref).all(axis=1)]
    if pts.shape[0] == 0:
        return 0.0
    z = pts[:, 2]
    levels = np.unique(z)
    bounds = np.append(levels, ref[2])
    vol = 0.0
    for i, z0 in enumerate(levels):
        height = bounds[i + 1] - z0
        if height > 0.0:
            vol += kernels.hv2d(pts[z <= z0, :2], ref[:2]) * height
    return float(vol)


def igd(approx, reference) -> float:
    """Inverted generational distance from a reference front to F.

    Uses the power-2 aggregation: the square root of the summed squared
    nearest-member distances, divided by the reference front size.
    """
    A = _as_set(approx, "approximation set")
    R = _as_set(reference, "reference front")
    if A.shape[0] == 0 or R.shape[0] == 0:
        raise ContractError("igd needs non-empty sets")
    dmin = cdist(R, A).min(axis=1)
    return float(np.sqrt(np.sum(dmin * dmin)) / R.shape[0])


def generational_distance(approx, reference) -> float:
    """Mean Euclidean distance from each member of F to its nearest
    reference-front point."""
    A = _as_set(approx, "approximation set")
    R = _as_set(reference, "reference front")
    if A.shape[0] == 0 or R.shape[0] == 0:
        raise ContractError("generational distance needs non-empty sets")
    return float(cdist(A, R).min(axis=1).mean())


def _sorted_by_first(F) -> np.ndarray:
    return F[np.lexsort((F[:, 1], F[:, 0]))]


def spread(approx, reference) -> float:
    """Distribution uniformity of F against a reference front.

    Two objectives use the classic delta measure over consecutive gaps of
    the f1-sorted set plus the distances to the reference extremes. Three
    objectives use the generalised form: nearest-neighbour distances
    replace consecutive gaps and the extremes are the reference points
    maximising each objective. Lower is better; below 2 members scores 1.
    """
    A = _as_set(approx, "approximation set")
    R = _as_set(reference, "reference front")
    if R.shape[0] == 0:
        raise ContractError("spread needs a non-empty reference front")
    if A.shape[0] < 2:
        return 1.0
    m = A.shape[1]
    if m == 2:
        return _spread_2d(A, R)
    return _spread_general(A, R)


def _spread_2d(A, R) -> float:
    A = _sorted_by_first(A)
    R = _sorted_by_first(R)
    gaps = np.linalg.norm(np.diff(A, axis=0), axis=1)
    mean_gap = gaps.mean()
    d_first = np.linalg.norm(A[0] - R[0])
    d_last = np.linalg.norm(A[-1] - R[-1])
    num = d_first + d_last + np.abs(gaps - mean_gap).sum()
    den = d_first + d_last + gaps.shape[0] * mean_gap
    if den == 0.0:
        return 0.0
    return float(num / den)


def _spread_general(A, R) -> float:
    extremes = R[np.argmax(R, axis=0)]
    d_ext = cdist(extremes, A).min(axis=1).sum()
    pair = cdist(A, A)
    np.fill_diagonal(pair, np.inf)
    nn = pair.min(axis=1)
    mean_nn = nn.mean()
    num = d_ext + np.abs(nn - mean_nn).sum()
    den = d_ext + A.shape[0] * mean_nn
    if den == 0.0:
        return 0.0
    return float(num / den)


@dataclass
class IndicatorSettings:
    """Fixed conventions for scoring one problem's approximation sets.

    ``reference`` is the problem's reference front in raw objective space.
    ``hv_mode`` selects how hypervolume is anchored: "raw" measures against
    ``hv_reference_point`` (default: the all-ones point) in raw space,
    "normalized" rescales objectives by the reference front's ideal and
    nadir points and measures against 1.1 per objective.
    """

    reference: np.ndarray
    hv_mode: str = "raw"
    hv_reference_point: np.ndarray | None = None
    _ideal: np.ndarray = field(init=False, repr=False)
    _nadir: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        self.reference = _as_set(self.reference, "reference front")
        if self.hv_mode not in ("raw", "normalized"):
            raise ContractError("hv_mode must be 'raw' or 'normalized'")
        self._ideal = self.reference.min(axis=0)
        span = self.reference.max(axis=0) - self._ideal
        span[span == 0.0] = 1.0
        self._nadir = self._ideal + span
        if self.hv_reference_point is not None:
            self.hv_reference_point = np.asarray(self.hv_reference_point, dtype=float)

    def hypervolume_of(self, F) -> float:
        F = _as_set(F, "approximation set")
        m = self.reference.shape[1]
        if self.hv_mode == "raw":
            ref = self.hv_reference_point
            if ref is None:
                ref = np.ones(m)
            return hypervolume(F, ref)
        scaled = (F - self._ideal) / (self._nadir - self._ideal)
        return hypervolume(scaled, np.full(m, 1.1))

    def igd_of(self, F) -> float:
        return igd(F, self.reference)

    def gd_of(self, F) -> float:
        return generational_distance(F, self.reference)

    def spread_of(self, F) -> float:
        return spread(F, self.reference)
