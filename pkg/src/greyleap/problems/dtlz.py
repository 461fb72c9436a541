"""DTLZ three-objective benchmark family (DTLZ1, 2, 4, 5, 6, 7).

All instances use M=3 objectives and D = M + k - 1 variables on [0, 1],
where k is the distance-variable count conventional for each problem.
"""

import numpy as np

from .base import Problem

M = 3


def _g_rastrigin(Xm):
    z = Xm - 0.5
    return 100.0 * (Xm.shape[1] + (z**2 - np.cos(20.0 * np.pi * z)).sum(axis=1))


def _g_sphere(Xm):
    return ((Xm - 0.5) ** 2).sum(axis=1)


def _dtlz1(X):
    g = _g_rastrigin(X[:, M - 1 :])
    s = 0.5 * (1.0 + g)
    x1, x2 = X[:, 0], X[:, 1]
    return np.column_stack([s * x1 * x2, s * x1 * (1.0 - x2), s * (1.0 - x1)])


def _sphere_objectives(theta, g):
    c = np.cos(theta * np.pi / 2.0)
    s = np.sin(theta * np.pi / 2.0)
    scale = 1.0 + g
    f1 = scale * c[:, 0] * c[:, 1]
    f2 = scale * c[:, 0] * s[:, 1]
    f3 = scale * s[:, 0]
    return np.column_stack([f1, f2, f3])


def _dtlz2(X):
    return _sphere_objectives(X[:, : M - 1], _g_sphere(X[:, M - 1 :]))


def _dtlz4(X):
    return _sphere_objectives(X[:, : M - 1] ** 100, _g_sphere(X[:, M - 1 :]))


def _bent_theta(pos, g):
    # First angle is free; later ones are squeezed toward pi/4 as g
    # shrinks, degenerating the front into a curve at g = 0.
    theta = np.empty_like(pos)
    theta[:, 0] = pos[:, 0]
    ratio = (1.0 + 2.0 * g[:, None] * pos[:, 1:]) / (2.0 * (1.0 + g[:, None]))
    theta[:, 1:] = ratio
    return theta


def _dtlz5(X):
    g = _g_sphere(X[:, M - 1 :])
    return _sphere_objectives(_bent_theta(X[:, : M - 1], g), g)


def _dtlz6(X):
    g = (X[:, M - 1 :] ** 0.1).sum(axis=1)
    return _sphere_objectives(_bent_theta(X[:, : M - 1], g), g)


def _dtlz7(X):
    g = 1.0 + 9.0 * X[:, M - 1 :].mean(axis=1)
    lead = X[:, : M - 1]
    h = M - (lead / (1.0 + g[:, None]) * (1.0 + np.sin(3.0 * np.pi * lead))).sum(axis=1)
    return np.column_stack([lead, (1.0 + g) * h])


def _make(name, k, evaluator):
    d = M + k - 1
    return Problem(name, d, M, np.zeros(d), np.ones(d), evaluator)


def dtlz1():
    return _make("DTLZ1", 5, _dtlz1)


def dtlz2():
    return _make("DTLZ2", 10, _dtlz2)


def dtlz4():
    return _make("DTLZ4", 10, _dtlz4)


def dtlz5():
    return _make("DTLZ5", 10, _dtlz5)


def dtlz6():
    return _make("DTLZ6", 10, _dtlz6)


def dtlz7():
    return _make("DTLZ7", 20, _dtlz7)
