"""Hot-loop kernels with a compiled backend and a pure-numpy fallback.

The compiled extension (``_speedups``, Cython) is preferred when it built;
otherwise the numpy fallback is used transparently. Both produce identical
results. Set ``GREYLEAP_KERNELS=python`` or ``GREYLEAP_KERNELS=compiled``
to force a backend (the latter raises if the extension is unavailable).
"""

from __future__ import annotations

import os

from . import _fallback

_requested = os.environ.get("GREYLEAP_KERNELS", "").strip().lower()

if _requested == "python":
    _impl = _fallback
    BACKEND = "python"
else:
    try:
        from . import _speedups as _impl  # type: ignore[attr-defined]

        BACKEND = "compiled"
    except ImportError:
        if _requested == "compiled":
            raise
        _impl = _fallback
        BACKEND = "python"

nondominated_ranks = _impl.nondominated_ranks
crowding_distances = _impl.crowding_distances
truncate_by_crowding = _impl.truncate_by_crowding
hv2d = _impl.hv2d


def available_backends():
    """Names of the backends importable in this environment."""
    names = ["python"]
    try:
        from . import _speedups  # noqa: F401

        names.insert(0, "compiled")
    except ImportError:
        pass
    return names


def get_backend(name: str):
    """Return the kernel module for ``name`` ("python" or "compiled")."""
    if name == "python":
        return _fallback
    if name == "compiled":
        from . import _speedups

        return _speedups
    raise ValueError(f"unknown kernel backend {name!r}")
