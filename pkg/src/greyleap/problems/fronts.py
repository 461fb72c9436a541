"""Reference Pareto fronts for the benchmark problems.

ZDT and DTLZ fronts have simple closed forms and are sampled on demand.
WFG and LZ09 fronts are shipped as bundled data files (one objective
vector per line, space separated, 10 decimal places) generated once by
dense sampling of the closed-form shapes plus non-dominated filtering;
:func:`write_bundled_fronts` regenerates them.
"""

import io
from bisect import bisect_right, insort
from importlib import resources
from itertools import combinations

import numpy as np

from ..core import ContractError
from .wfg import front_shape

_WFG_NAMES = ("WFG1", "WFG2", "WFG3", "WFG4", "WFG5", "WFG6", "WFG7", "WFG9")
_LZ09_NAMES = tuple(f"LZ09_F{i}" for i in range(1, 10))


def _nondominated_filter(F):
    """Deduplicated non-dominated subset, via sorted sweeps.

    Cheaper than a full front ranking, which matters for the dense scans
    used during front generation.
    """
    if F.shape[1] == 2:
        F = F[np.lexsort((F[:, 1], F[:, 0]))]
        best = np.minimum.accumulate(F[:, 1])
        keep = np.ones(F.shape[0], dtype=bool)
        keep[1:] = F[1:, 1] < best[:-1]
        return F[keep]
    F = F[np.lexsort((F[:, 2], F[:, 1], F[:, 0]))]
    # staircase of kept (f2, f3) pairs: f2 ascending, f3 descending
    stairs = []
    keep = []
    for i, (_, f2, f3) in enumerate(F):
        pos = bisect_right(stairs, (f2, np.inf))
        if pos and stairs[pos - 1][1] <= f3:
            continue
        # remove entries with f2' >= f2 made redundant by the new point,
        # starting at equal f2 to preserve the descending-f3 invariant
        lo = bisect_right(stairs, (f2,))
        while lo < len(stairs) and stairs[lo][1] >= f3:
            del stairs[lo]
        insort(stairs, (f2, f3))
        keep.append(i)
    return F[np.array(keep)]


def _downsample(F, n):
    """At most ``n`` rows spread evenly along the first objective."""
    F = F[np.argsort(F[:, 0], kind="stable")]
    if F.shape[0] <= n:
        return F
    idx = np.round(np.linspace(0, F.shape[0] - 1, n)).astype(int)
    return F[idx]


def _das_dennis(h, m):
    """Simplex lattice weights: all m-part compositions of h, over h."""
    pts = []
    for dividers in combinations(range(h + m - 1), m - 1):
        prev = -1
        parts = []
        for d in dividers:
            parts.append(d - prev - 1)
            prev = d
        parts.append(h + m - 2 - prev)
        pts.append(parts)
    return np.asarray(pts, dtype=float) / h


def _simplex_weights(n, m):
    h = 1
    while (h + 1 + m - 1) * (h + 1 + m - 2) // 2 <= n:
        h += 1
    # loop above is specific to m = 3; fall back to a search otherwise
    if m != 3:
        h = 1
        while _das_dennis(h + 1, m).shape[0] <= n:
            h += 1
    return _das_dennis(h, m)


def _sphere_octant(n):
    w = _simplex_weights(n, 3)
    return w / np.linalg.norm(w, axis=1, keepdims=True)


def _zdt1_front(n):
    t = np.linspace(0.0, 1.0, n)
    return np.column_stack([t**2, 1.0 - t])


def _zdt2_front(n):
    t = np.linspace(0.0, 1.0, n)
    return np.column_stack([t, 1.0 - t**2])


def _zdt3_front(n):
    x = np.linspace(0.0, 1.0, 200 * n + 1)
    F = np.column_stack([x, 1.0 - np.sqrt(x) - x * np.sin(10.0 * np.pi * x)])
    return _downsample(_nondominated_filter(F), n)


def _zdt6_front(n):
    x = np.linspace(0.0, 1.0, 200 * n + 1)
    f1 = 1.0 - np.exp(-4.0 * x) * np.sin(6.0 * np.pi * x) ** 6
    F = np.column_stack([f1, 1.0 - f1**2])
    return _downsample(_nondominated_filter(F), n)


def _dtlz1_front(n):
    return 0.5 * _simplex_weights(n, 3)


def _dtlz2_front(n):
    return _sphere_octant(n)


def _dtlz5_front(n):
    t = np.linspace(0.0, np.pi / 2.0, n)
    c = np.cos(t) / np.sqrt(2.0)
    return np.column_stack([c, c, np.sin(t)])


def _dtlz7_front(n):
    side = max(41, int(round(np.sqrt(40.0 * n))))
    g1, g2 = np.meshgrid(
        np.linspace(0.0, 1.0, side), np.linspace(0.0, 1.0, side)
    )
    f1, f2 = g1.ravel(), g2.ravel()
    # distance term has a built-in offset, so 1 + g = 2 at the optimum
    f3 = 6.0 - f1 * (1.0 + np.sin(3.0 * np.pi * f1)) - f2 * (
        1.0 + np.sin(3.0 * np.pi * f2)
    )
    F = np.column_stack([f1, f2, f3])
    return _downsample(_nondominated_filter(F), n)


_ANALYTIC = {
    "ZDT1": _zdt1_front,
    "ZDT2": _zdt2_front,
    "ZDT3": _zdt3_front,
    "ZDT4": _zdt1_front,
    "ZDT6": _zdt6_front,
    "DTLZ1": _dtlz1_front,
    "DTLZ2": _dtlz2_front,
    "DTLZ4": _dtlz2_front,
    "DTLZ5": _dtlz5_front,
    "DTLZ6": _dtlz5_front,
    "DTLZ7": _dtlz7_front,
}


def _generate_bundled(name, n=1000):
    if name in _WFG_NAMES:
        x1 = np.linspace(0.0, 1.0, 400 * n + 1)
        return _downsample(_nondominated_filter(front_shape(name, x1)), n)
    if name == "LZ09_F6":
        return _sphere_octant(n)
    if name == "LZ09_F9":
        t = np.linspace(0.0, 1.0, n)
        return np.column_stack([t, 1.0 - t**2])
    if name in _LZ09_NAMES:
        t = np.linspace(0.0, 1.0, n)
        return np.column_stack([t**2, 1.0 - t])
    raise ContractError(f"no bundled front defined for {name!r}")


def write_bundled_fronts(target_dir=None, n=1000):
    """Regenerate every bundled front file; returns the paths written."""
    if target_dir is None:
        target_dir = resources.files("greyleap.problems") / "data"
    paths = []
    for name in _WFG_NAMES + _LZ09_NAMES:
        F = _generate_bundled(name, n)
        path = target_dir / f"{name}.txt"
        lines = "\n".join(" ".join(f"{v:.10f}" for v in row) for row in F)
        path.write_text(lines + "\n")
        paths.append(path)
    return paths


def _load_bundled(name):
    ref = resources.files("greyleap.problems") / "data" / f"{name}.txt"
    try:
        text = ref.read_text()
    except FileNotFoundError:
        raise ContractError(
            f"bundled reference front for {name} is missing; "
            "run 'greyleap fronts generate' to rebuild the data files"
        ) from None
    return np.loadtxt(io.StringIO(text), ndmin=2)


def reference_front(name, n=1000):
    """Reference front for ``name`` with roughly ``n`` points.

    Bundled fronts are stored at 1000 points; asking for fewer
    downsamples, asking for more returns the stored resolution.
    """
    if name in _ANALYTIC:
        return _ANALYTIC[name](n)
    if name in _WFG_NAMES or name in _LZ09_NAMES:
        F = _load_bundled(name)
        if F.shape[0] > n:
            F = _downsample(F, n)
        return F
    raise ContractError(f"no reference front defined for {name!r}")
