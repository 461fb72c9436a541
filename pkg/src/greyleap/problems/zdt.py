"""ZDT two-objective benchmark family (ZDT1-4, ZDT6)."""

import numpy as np

from .base import Problem


def _g_linear(X):
    return 1.0 + 9.0 * X[:, 1:].sum(axis=1) / (X.shape[1] - 1)


def _zdt1(X):
    f1 = X[:, 0]
    g = _g_linear(X)
    return np.column_stack([f1, g * (1.0 - np.sqrt(f1 / g))])


def _zdt2(X):
    f1 = X[:, 0]
    g = _g_linear(X)
    return np.column_stack([f1, g * (1.0 - (f1 / g) ** 2)])


def _zdt3(X):
    f1 = X[:, 0]
    g = _g_linear(X)
    r = f1 / g
    return np.column_stack([f1, g * (1.0 - np.sqrt(r) - r * np.sin(10.0 * np.pi * f1))])


def _zdt4(X):
    f1 = X[:, 0]
    tail = X[:, 1:]
    g = (
        1.0
        + 10.0 * tail.shape[1]
        + (tail**2 - 10.0 * np.cos(4.0 * np.pi * tail)).sum(axis=1)
    )
    return np.column_stack([f1, g * (1.0 - np.sqrt(f1 / g))])


def _zdt6(X):
    x1 = X[:, 0]
    f1 = 1.0 - np.exp(-4.0 * x1) * np.sin(6.0 * np.pi * x1) ** 6
    g = 1.0 + 9.0 * (X[:, 1:].sum(axis=1) / (X.shape[1] - 1)) ** 0.25
    return np.column_stack([f1, g * (1.0 - (f1 / g) ** 2)])


def zdt1():
    return Problem("ZDT1", 30, 2, np.zeros(30), np.ones(30), _zdt1)


def zdt2():
    return Problem("ZDT2", 30, 2, np.zeros(30), np.ones(30), _zdt2)


def zdt3():
    return Problem("ZDT3", 30, 2, np.zeros(30), np.ones(30), _zdt3)


def zdt4():
    lower = np.full(10, -5.0)
    upper = np.full(10, 5.0)
    lower[0], upper[0] = 0.0, 1.0
    return Problem("ZDT4", 10, 2, lower, upper, _zdt4)


def zdt6():
    return Problem("ZDT6", 10, 2, np.zeros(10), np.ones(10), _zdt6)
