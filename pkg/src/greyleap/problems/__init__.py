"""Benchmark problem registry.

Problems are registered under canonical names; :func:`get_problem`
builds a fresh instance per call so callers may not share state.
"""

from ..core import ContractError
from .base import Problem
from . import dtlz, lz09, wfg, zdt

_BUILDERS = {
    "ZDT1": zdt.zdt1,
    "ZDT2": zdt.zdt2,
    "ZDT3": zdt.zdt3,
    "ZDT4": zdt.zdt4,
    "ZDT6": zdt.zdt6,
    "WFG1": wfg.wfg1,
    "WFG2": wfg.wfg2,
    "WFG3": wfg.wfg3,
    "WFG4": wfg.wfg4,
    "WFG5": wfg.wfg5,
    "WFG6": wfg.wfg6,
    "WFG7": wfg.wfg7,
    "WFG9": wfg.wfg9,
    "DTLZ1": dtlz.dtlz1,
    "DTLZ2": dtlz.dtlz2,
    "DTLZ4": dtlz.dtlz4,
    "DTLZ5": dtlz.dtlz5,
    "DTLZ6": dtlz.dtlz6,
    "DTLZ7": dtlz.dtlz7,
    "LZ09_F1": lz09.lz09_f1,
    "LZ09_F2": lz09.lz09_f2,
    "LZ09_F3": lz09.lz09_f3,
    "LZ09_F4": lz09.lz09_f4,
    "LZ09_F5": lz09.lz09_f5,
    "LZ09_F6": lz09.lz09_f6,
    "LZ09_F7": lz09.lz09_f7,
    "LZ09_F8": lz09.lz09_f8,
    "LZ09_F9": lz09.lz09_f9,
}


def problem_names():
    """Canonical benchmark names in registry order."""
    return list(_BUILDERS)


def get_problem(name):
    """Build the named benchmark problem.

    Raises :class:`ContractError` listing the valid names when ``name``
    is not registered.
    """
    try:
        builder = _BUILDERS[name]
    except KeyError:
        known = ", ".join(_BUILDERS)
        raise ContractError(
            f"unknown problem {name!r}; valid names: {known}"
        ) from None
    return builder()


__all__ = ["Problem", "get_problem", "problem_names"]
