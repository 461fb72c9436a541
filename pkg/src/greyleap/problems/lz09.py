"""LZ09 test suite: problems with complicated Pareto set shapes.

Every instance uses 30 decision variables.  The tail variables are split
by index parity into two groups (three groups for the three-objective
F6), and each objective adds the mean squared deviation of its group
from a curve through decision space parameterised by the first
variable(s).  The Pareto set is exactly that curve, so the front shape
is determined by the head terms alone.
"""

import numpy as np

from .base import Problem

_N_VAR = 30


def _index_groups(n):
    """1-based tail indices 2..n split by parity: odd first, even second."""
    j = np.arange(2, n + 1)
    return j, j % 2 == 1, j % 2 == 0


def _group_means(sq, odd, even):
    return 2.0 * sq[:, odd].mean(axis=1), 2.0 * sq[:, even].mean(axis=1)


def _power_curve(x1, n):
    """Per-index targets x1 ** (0.5 * (1 + 3 (j - 2) / (n - 2)))."""
    j = np.arange(2, n + 1)
    expo = 0.5 * (1.0 + 3.0 * (j - 2.0) / (n - 2.0))
    return x1[:, None] ** expo[None, :]


def _lz09_f1(X):
    n = X.shape[1]
    _, odd, even = _index_groups(n)
    x1 = X[:, 0]
    sq = (X[:, 1:] - _power_curve(x1, n)) ** 2
    m1, m2 = _group_means(sq, odd, even)
    return np.column_stack([x1 + m1, 1.0 - np.sqrt(x1) + m2])


def _lz09_f2(X):
    n = X.shape[1]
    j, odd, even = _index_groups(n)
    x1 = X[:, 0]
    beta = np.sin(6.0 * np.pi * x1[:, None] + j[None, :] * np.pi / n)
    sq = (X[:, 1:] - beta) ** 2
    m1, m2 = _group_means(sq, odd, even)
    return np.column_stack([x1 + m1, 1.0 - np.sqrt(x1) + m2])


def _lz09_f3(X):
    n = X.shape[1]
    j, odd, even = _index_groups(n)
    x1 = X[:, 0]
    theta = 6.0 * np.pi * x1[:, None] + j[None, :] * np.pi / n
    amp = 0.8 * x1[:, None]
    beta = np.where(odd[None, :], amp * np.cos(theta), amp * np.sin(theta))
    sq = (X[:, 1:] - beta) ** 2
    m1, m2 = _group_means(sq, odd, even)
    return np.column_stack([x1 + m1, 1.0 - np.sqrt(x1) + m2])


def _lz09_f4(X):
    n = X.shape[1]
    j, odd, even = _index_groups(n)
    x1 = X[:, 0]
    theta = 6.0 * np.pi * x1[:, None] + j[None, :] * np.pi / n
    amp = 0.8 * x1[:, None]
    beta = np.where(odd[None, :], amp * np.cos(theta / 3.0), amp * np.sin(theta))
    sq = (X[:, 1:] - beta) ** 2
    m1, m2 = _group_means(sq, odd, even)
    return np.column_stack([x1 + m1, 1.0 - np.sqrt(x1) + m2])


def _lz09_f5(X):
    n = X.shape[1]
    j, odd, even = _index_groups(n)
    x1 = X[:, 0]
    theta = 6.0 * np.pi * x1[:, None] + j[None, :] * np.pi / n
    amp = 0.3 * x1[:, None] ** 2 * np.cos(4.0 * theta) + 0.6 * x1[:, None]
    beta = np.where(odd[None, :], amp * np.cos(theta), amp * np.sin(theta))
    sq = (X[:, 1:] - beta) ** 2
    m1, m2 = _group_means(sq, odd, even)
    return np.column_stack([x1 + m1, 1.0 - np.sqrt(x1) + m2])


def _lz09_f6(X):
    n = X.shape[1]
    j = np.arange(3, n + 1)
    groups = [j[j % 3 == 1], j[j % 3 == 2], j[j % 3 == 0]]
    x1, x2 = X[:, 0], X[:, 1]
    beta = 2.0 * x2[:, None] * np.sin(
        2.0 * np.pi * x1[:, None] + j[None, :] * np.pi / n
    )
    sq = (X[:, 2:] - beta) ** 2
    c1, s1 = np.cos(x1 * np.pi / 2.0), np.sin(x1 * np.pi / 2.0)
    c2, s2 = np.cos(x2 * np.pi / 2.0), np.sin(x2 * np.pi / 2.0)
    heads = [c1 * c2, c1 * s2, s1]
    out = np.empty((X.shape[0], 3))
    for i, (head, grp) in enumerate(zip(heads, groups)):
        cols = grp - 3
        out[:, i] = head + 2.0 * sq[:, cols].mean(axis=1)
    return out


def _lz09_f7(X):
    n = X.shape[1]
    _, odd, even = _index_groups(n)
    x1 = X[:, 0]
    y = X[:, 1:] - _power_curve(x1, n)
    term = 4.0 * y**2 - np.cos(8.0 * np.pi * y) + 1.0
    m1 = 2.0 * term[:, odd].mean(axis=1)
    m2 = 2.0 * term[:, even].mean(axis=1)
    return np.column_stack([x1 + m1, 1.0 - np.sqrt(x1) + m2])


def _lz09_f8(X):
    n = X.shape[1]
    j, odd, even = _index_groups(n)
    x1 = X[:, 0]
    y = X[:, 1:] - _power_curve(x1, n)
    cosine = np.cos(20.0 * np.pi * y / np.sqrt(j)[None, :])
    out = np.empty((X.shape[0], 2))
    heads = [x1, 1.0 - np.sqrt(x1)]
    for i, mask in enumerate([odd, even]):
        bracket = (
            4.0 * (y[:, mask] ** 2).sum(axis=1)
            - 2.0 * cosine[:, mask].prod(axis=1)
            + 2.0
        )
        out[:, i] = heads[i] + 2.0 / mask.sum() * bracket
    return out


def _lz09_f9(X):
    n = X.shape[1]
    j, odd, even = _index_groups(n)
    x1 = X[:, 0]
    beta = np.sin(6.0 * np.pi * x1[:, None] + j[None, :] * np.pi / n)
    sq = (X[:, 1:] - beta) ** 2
    m1, m2 = _group_means(sq, odd, even)
    return np.column_stack([x1 + m1, 1.0 - x1**2 + m2])


def pareto_set_samples(name, count, rng=None):
    """Decision vectors lying exactly on the problem's Pareto set.

    The leading variable(s) are spaced uniformly (or drawn from ``rng``
    when given) and the tail variables are set to the curve the
    objectives penalise deviations from.
    """
    n = _N_VAR
    if rng is None:
        lead = np.linspace(0.0, 1.0, count)
    else:
        lead = rng.random(count)
    X = np.zeros((count, n))
    X[:, 0] = lead
    if name == "LZ09_F6":
        if rng is None:
            second = np.linspace(0.0, 1.0, count)[::-1]
        else:
            second = rng.random(count)
        X[:, 1] = second
        j = np.arange(3, n + 1)
        X[:, 2:] = 2.0 * second[:, None] * np.sin(
            2.0 * np.pi * lead[:, None] + j[None, :] * np.pi / n
        )
        return X
    j = np.arange(2, n + 1)
    if name in ("LZ09_F1", "LZ09_F7", "LZ09_F8"):
        X[:, 1:] = _power_curve(lead, n)
    elif name in ("LZ09_F2", "LZ09_F9"):
        X[:, 1:] = np.sin(6.0 * np.pi * lead[:, None] + j[None, :] * np.pi / n)
    elif name in ("LZ09_F3", "LZ09_F4", "LZ09_F5"):
        theta = 6.0 * np.pi * lead[:, None] + j[None, :] * np.pi / n
        odd = j % 2 == 1
        if name == "LZ09_F3":
            amp = 0.8 * lead[:, None]
            X[:, 1:] = np.where(odd, amp * np.cos(theta), amp * np.sin(theta))
        elif name == "LZ09_F4":
            amp = 0.8 * lead[:, None]
            X[:, 1:] = np.where(
                odd, amp * np.cos(theta / 3.0), amp * np.sin(theta)
            )
        else:
            amp = 0.3 * lead[:, None] ** 2 * np.cos(4.0 * theta) + 0.6 * lead[:, None]
            X[:, 1:] = np.where(odd, amp * np.cos(theta), amp * np.sin(theta))
    else:
        raise ValueError(f"unknown LZ09 problem {name!r}")
    return X


def _bounds(lead_dims, tail_low, tail_high):
    lower = np.full(_N_VAR, tail_low)
    upper = np.full(_N_VAR, tail_high)
    lower[:lead_dims] = 0.0
    upper[:lead_dims] = 1.0
    return lower, upper


def _make(name, evaluator, n_obj, lead_dims, tail_low, tail_high):
    lower, upper = _bounds(lead_dims, tail_low, tail_high)
    return Problem(name, _N_VAR, n_obj, lower, upper, evaluator)


def lz09_f1():
    return _make("LZ09_F1", _lz09_f1, 2, 1, 0.0, 1.0)


def lz09_f2():
    return _make("LZ09_F2", _lz09_f2, 2, 1, -1.0, 1.0)


def lz09_f3():
    return _make("LZ09_F3", _lz09_f3, 2, 1, -1.0, 1.0)


def lz09_f4():
    return _make("LZ09_F4", _lz09_f4, 2, 1, -1.0, 1.0)


def lz09_f5():
    return _make("LZ09_F5", _lz09_f5, 2, 1, -1.0, 1.0)


def lz09_f6():
    return _make("LZ09_F6", _lz09_f6, 3, 2, -2.0, 2.0)


def lz09_f7():
    return _make("LZ09_F7", _lz09_f7, 2, 1, 0.0, 1.0)


def lz09_f8():
    return _make("LZ09_F8", _lz09_f8, 2, 1, 0.0, 1.0)


def lz09_f9():
    return _make("LZ09_F9", _lz09_f9, 2, 1, -1.0, 1.0)
