"""WFG benchmark family (WFG1-7, WFG9).

Each instance composes the standard transformation pipeline (shift, bias,
reduction) with a shape function on normalised variables. Variable i lives
on [0, 2i]; objective m is scaled by 2m. Registry instances use two
objectives with k=4 position and l=20 distance parameters; the builders
also accept other (n_obj, k, l) configurations.
"""

import numpy as np

from ..core import ContractError
from .base import Problem


def _clip01(v):
    return np.clip(v, 0.0, 1.0)


def _s_linear(y, A):
    return _clip01(np.abs(y - A) / np.abs(np.floor(A - y) + A))


def _s_decept(y, A, B, C):
    t1 = np.floor(y - A + B) * (1.0 - C + (A - B) / B) / (A - B)
    t2 = np.floor(A + B - y) * (1.0 - C + (1.0 - A - B) / B) / (1.0 - A - B)
    return _clip01(1.0 + (np.abs(y - A) - B) * (t1 + t2 + 1.0 / B))


def _s_multi(y, A, B, C):
    t1 = np.abs(y - C) / (2.0 * (np.floor(C - y) + C))
    t2 = (4.0 * A + 2.0) * np.pi * (0.5 - t1)
    return _clip01((1.0 + np.cos(t2) + 4.0 * B * t1**2) / (B + 2.0))


def _b_flat(y, A, B, C):
    v = (
        A
        + np.minimum(0.0, np.floor(y - B)) * A * (B - y) / B
        - np.minimum(0.0, np.floor(C - y)) * (1.0 - A) * (y - C) / (1.0 - C)
    )
    return _clip01(v)


def _b_poly(y, alpha):
    return _clip01(y**alpha)


def _b_param(y, u, A=0.98 / 49.98, B=0.02, C=50.0):
    v = A - (1.0 - 2.0 * u) * np.abs(np.floor(0.5 - u) + A)
    return _clip01(y ** (B + (C - B) * v))


def _r_sum(Y, w):
    return _clip01(Y @ w / w.sum())


def _r_nonsep(Y, A):
    m = Y.shape[1]
    num = Y.sum(axis=1)
    if A > 1:
        j_idx, p_idx = [], []
        for j in range(m):
            for p in range(A - 1):
                j_idx.append(j)
                p_idx.append((1 + j + p) % m)
        num = num + np.abs(Y[:, j_idx] - Y[:, p_idx]).sum(axis=1)
    half = np.ceil(A / 2.0)
    denom = m * half * (1.0 + 2.0 * A - 2.0 * half) / A
    return _clip01(num / denom)


def _shape_concave(P):
    n, mm = P.shape
    sin = np.sin(P * np.pi / 2.0)
    cos = np.cos(P * np.pi / 2.0)
    h = np.empty((n, mm + 1))
    for m in range(1, mm + 2):
        v = sin[:, : mm + 1 - m].prod(axis=1)
        if m > 1:
            v = v * cos[:, mm + 1 - m]
        h[:, m - 1] = v
    return h


def _shape_convex(P):
    n, mm = P.shape
    one_cos = 1.0 - np.cos(P * np.pi / 2.0)
    one_sin = 1.0 - np.sin(P * np.pi / 2.0)
    h = np.empty((n, mm + 1))
    for m in range(1, mm + 2):
        v = one_cos[:, : mm + 1 - m].prod(axis=1)
        if m > 1:
            v = v * one_sin[:, mm + 1 - m]
        h[:, m - 1] = v
    return h


def _shape_linear(P):
    n, mm = P.shape
    h = np.empty((n, mm + 1))
    for m in range(1, mm + 2):
        v = P[:, : mm + 1 - m].prod(axis=1)
        if m > 1:
            v = v * (1.0 - P[:, mm + 1 - m])
        h[:, m - 1] = v
    return h


def _shape_mixed(x1, A=5.0, alpha=1.0):
    w = 2.0 * A * np.pi
    return (1.0 - x1 - np.cos(w * x1 + np.pi / 2.0) / w) ** alpha


def _shape_disconnected(x1, alpha=1.0, beta=1.0, A=5.0):
    return 1.0 - x1**alpha * np.cos(A * np.pi * x1**beta) ** 2


class _WfgConfig:
    def __init__(self, n_obj, k, l):
        if k % (n_obj - 1) != 0:
            raise ContractError("position parameter count must divide by n_obj - 1")
        self.n_obj = n_obj
        self.k = k
        self.l = l
        self.n_var = k + l
        self.upper = 2.0 * np.arange(1, self.n_var + 1)
        self.S = 2.0 * np.arange(1, n_obj + 1)
        self.A = np.ones(n_obj - 1)

    def normalize(self, Z):
        return Z / self.upper

    def position_chunks(self):
        gap = self.k // (self.n_obj - 1)
        return [(m * gap, (m + 1) * gap) for m in range(self.n_obj - 1)]

    def post(self, T):
        tM = T[:, -1]
        left = np.maximum(tM[:, None], self.A[None, :]) * (T[:, :-1] - 0.5) + 0.5
        return np.column_stack([left, tM])

    def assemble(self, X, h):
        return X[:, -1][:, None] + self.S[None, :] * h


def _reduce_means(cfg, Y, dist_slice=None):
    """Weight-1 reduction: position chunk means plus one distance mean."""
    lo_hi = cfg.position_chunks()
    cols = [Y[:, lo:hi].mean(axis=1) for lo, hi in lo_hi]
    if dist_slice is None:
        cols.append(Y[:, cfg.k :].mean(axis=1))
    else:
        cols.append(Y[:, dist_slice[0] : dist_slice[1]].mean(axis=1))
    return _clip01(np.column_stack(cols))


def _eval_wfg1(cfg, Z):
    Y = cfg.normalize(Z)
    Y[:, cfg.k :] = _s_linear(Y[:, cfg.k :], 0.35)
    Y[:, cfg.k :] = _b_flat(Y[:, cfg.k :], 0.8, 0.75, 0.85)
    Y = _b_poly(Y, 0.02)
    w = 2.0 * np.arange(1, cfg.n_var + 1)
    cols = [
        _r_sum(Y[:, lo:hi], w[lo:hi]) for lo, hi in cfg.position_chunks()
    ]
    cols.append(_r_sum(Y[:, cfg.k :], w[cfg.k :]))
    X = cfg.post(np.column_stack(cols))
    h = _shape_convex(X[:, :-1])
    h[:, -1] = _shape_mixed(X[:, 0])
    return cfg.assemble(X, h)


def _nonsep_pairs(cfg, Y):
    """Collapse adjacent distance-variable pairs non-separably."""
    cols = [Y[:, i] for i in range(cfg.k)]
    for j in range(cfg.l // 2):
        lo = cfg.k + 2 * j
        cols.append(_r_nonsep(Y[:, lo : lo + 2], 2))
    return np.column_stack(cols)


def _eval_wfg2(cfg, Z, linear_shape=False):
    Y = cfg.normalize(Z)
    Y[:, cfg.k :] = _s_linear(Y[:, cfg.k :], 0.35)
    Y = _nonsep_pairs(cfg, Y)
    T = _reduce_means(cfg, Y, dist_slice=(cfg.k, cfg.k + cfg.l // 2))
    X = cfg.post(T)
    if linear_shape:
        h = _shape_linear(X[:, :-1])
    else:
        h = _shape_convex(X[:, :-1])
        h[:, -1] = _shape_disconnected(X[:, 0])
    return cfg.assemble(X, h)


def _eval_wfg4(cfg, Z):
    Y = _s_multi(cfg.normalize(Z), 30.0, 10.0, 0.35)
    X = cfg.post(_reduce_means(cfg, Y))
    return cfg.assemble(X, _shape_concave(X[:, :-1]))


def _eval_wfg5(cfg, Z):
    Y = _s_decept(cfg.normalize(Z), 0.35, 0.001, 0.05)
    X = cfg.post(_reduce_means(cfg, Y))
    return cfg.assemble(X, _shape_concave(X[:, :-1]))


def _eval_wfg6(cfg, Z):
    Y = cfg.normalize(Z)
    Y[:, cfg.k :] = _s_linear(Y[:, cfg.k :], 0.35)
    gap = cfg.k // (cfg.n_obj - 1)
    cols = [_r_nonsep(Y[:, lo:hi], gap) for lo, hi in cfg.position_chunks()]
    cols.append(_r_nonsep(Y[:, cfg.k :], cfg.l))
    X = cfg.post(np.column_stack(cols))
    return cfg.assemble(X, _shape_concave(X[:, :-1]))


def _eval_wfg7(cfg, Z):
    Y = cfg.normalize(Z)
    for i in range(cfg.k):
        Y[:, i] = _b_param(Y[:, i], Y[:, i + 1 :].mean(axis=1))
    Y[:, cfg.k :] = _s_linear(Y[:, cfg.k :], 0.35)
    X = cfg.post(_reduce_means(cfg, Y))
    return cfg.assemble(X, _shape_concave(X[:, :-1]))


def _eval_wfg9(cfg, Z):
    Y = cfg.normalize(Z)
    n = cfg.n_var
    tail_sum = np.cumsum(Y[:, ::-1], axis=1)[:, ::-1]
    lead = np.empty_like(Y[:, : n - 1])
    for i in range(n - 1):
        u = tail_sum[:, i + 1] / (n - 1 - i)
        lead[:, i] = _b_param(Y[:, i], u)
    Y = np.column_stack([lead, Y[:, -1]])
    Y[:, : cfg.k] = _s_decept(Y[:, : cfg.k], 0.35, 0.001, 0.05)
    Y[:, cfg.k :] = _s_multi(Y[:, cfg.k :], 30.0, 95.0, 0.35)
    gap = cfg.k // (cfg.n_obj - 1)
    cols = [_r_nonsep(Y[:, lo:hi], gap) for lo, hi in cfg.position_chunks()]
    cols.append(_r_nonsep(Y[:, cfg.k :], cfg.l))
    X = cfg.post(np.column_stack(cols))
    return cfg.assemble(X, _shape_concave(X[:, :-1]))


_EVALUATORS = {
    "WFG1": _eval_wfg1,
    "WFG2": _eval_wfg2,
    "WFG3": lambda cfg, Z: _eval_wfg2(cfg, Z, linear_shape=True),
    "WFG4": _eval_wfg4,
    "WFG5": _eval_wfg5,
    "WFG6": _eval_wfg6,
    "WFG7": _eval_wfg7,
    "WFG9": _eval_wfg9,
}


def make_wfg(name, n_obj=2, k=4, l=20):
    """Build a WFG problem instance by name with explicit sizing."""
    if name not in _EVALUATORS:
        raise ContractError(f"unknown WFG problem {name!r}")
    if name in ("WFG2", "WFG3") and l % 2 != 0:
        raise ContractError(f"{name} needs an even distance parameter count")
    cfg = _WfgConfig(n_obj, k, l)
    if name == "WFG3":
        cfg.A[1:] = 0.0
    ev = _EVALUATORS[name]

    def evaluator(Z):
        return ev(cfg, np.array(Z, dtype=float))

    return Problem(name, cfg.n_var, n_obj, np.zeros(cfg.n_var), cfg.upper, evaluator)


def _exact_ratio(target, scale):
    """A raw value z with z / scale == target exactly, searched by ulp.

    Normalisation divides by the variable's upper bound; without the snap
    the roundtrip leaves 1-ulp noise at the shift optimum, which the
    0.02-power bias of WFG1 amplifies catastrophically.
    """
    z = target * scale
    lo = hi = z
    for _ in range(4):
        for cand in (lo, hi):
            if cand / scale == target:
                return cand
        lo = np.nextafter(lo, -np.inf)
        hi = np.nextafter(hi, np.inf)
    return z


def optimal_preimages(name, n_obj=2, k=4, l=20, n_dense=4001):
    """Decision vectors lying on the problem's Pareto set.

    Position parameters are swept through patterns dense enough to cover
    the front after non-dominated filtering; distance parameters take
    their optimal values (0.35 normalised, except WFG9 where the chained
    bias requires a backward recursion).
    """
    cfg = _WfgConfig(n_obj, k, l)
    if name == "WFG9":
        norm = np.zeros(cfg.n_var)
        norm[-1] = 0.35
        for i in range(cfg.n_var - 2, k - 1, -1):
            u = norm[i + 1 :].mean()
            norm[i] = 0.35 ** (1.0 / (0.02 + 1.96 * u))
        dist_norm = norm[k:]
    else:
        dist_norm = np.full(l, 0.35)
    dist_raw = np.array(
        [_exact_ratio(v, u) for v, u in zip(dist_norm, cfg.upper[k:])]
    )

    t = np.linspace(0.0, 1.0, n_dense)
    if name == "WFG1":
        # The 0.02-power bias makes a uniform raw sweep collapse toward 1;
        # pre-compensating keeps the transformed coordinate uniform.
        sweeps = [np.tile((t**50)[:, None], (1, k))]
    else:
        sweeps = [np.tile(t[:, None], (1, k))]
    if name in ("WFG6", "WFG9"):
        # Non-separable position reduction: equal values reach only part
        # of [0,1], so add alternating patterns and a coarse 2-d grid.
        alt = np.zeros((n_dense, k))
        alt[:, 0::2] = t[:, None]
        sweeps.append(alt)
        g = np.linspace(0.0, 1.0, 151)
        s_grid, t_grid = np.meshgrid(g, g)
        grid = np.zeros((g.size * g.size, k))
        grid[:, 0::2] = s_grid.ravel()[:, None]
        grid[:, 1::2] = t_grid.ravel()[:, None]
        sweeps.append(grid)
    P = np.vstack(sweeps)
    Z = np.empty((P.shape[0], cfg.n_var))
    Z[:, :k] = P * cfg.upper[:k]
    Z[:, k:] = dist_raw
    return Z


def front_shape(name, x1):
    """Closed-form Pareto front points for the two-objective instances.

    ``x1`` is the normalised front coordinate in [0, 1]; the returned
    curve still needs a non-dominated filter for the problems with
    oscillating second shapes (WFG1, WFG2).
    """
    x1 = np.asarray(x1, dtype=float)
    if name == "WFG1":
        f1 = 1.0 - np.cos(x1 * np.pi / 2.0)
        f2 = _shape_mixed(x1)
    elif name == "WFG2":
        f1 = 1.0 - np.cos(x1 * np.pi / 2.0)
        f2 = _shape_disconnected(x1)
    elif name == "WFG3":
        f1, f2 = x1, 1.0 - x1
    elif name in ("WFG4", "WFG5", "WFG6", "WFG7", "WFG9"):
        f1 = np.sin(x1 * np.pi / 2.0)
        f2 = np.cos(x1 * np.pi / 2.0)
    else:
        raise ContractError(f"unknown WFG problem {name!r}")
    return np.column_stack([2.0 * f1, 4.0 * f2])


def wfg1():
    return make_wfg("WFG1")


def wfg2():
    return make_wfg("WFG2")


def wfg3():
    return make_wfg("WFG3")


def wfg4():
    return make_wfg("WFG4")


def wfg5():
    return make_wfg("WFG5")


def wfg6():
    return make_wfg("WFG6")


def wfg7():
    return make_wfg("WFG7")


def wfg9():
    return make_wfg("WFG9")
