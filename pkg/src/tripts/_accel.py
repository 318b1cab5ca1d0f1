"""Optional numba acceleration.

Kernels in :mod:`tripts.kernels` are written twice: an explicit-loop version
compiled with ``numba.njit`` and a vectorised numpy version. Which one runs is
decided here, once, at import time.

Set ``TRIPTS_NUMBA=0`` to force the numpy path (useful for debugging and for
benchmarking the two against each other).
"""
from __future__ import annotations

import os

_FLAG = os.environ.get("TRIPTS_NUMBA", "1").strip().lower()

try:
    import numba as _nb
except ImportError:  # pragma: no cover - numba is a declared dependency
    _nb = None

NUMBA_AVAILABLE = _nb is not None
NUMBA_ENABLED = NUMBA_AVAILABLE and _FLAG not in ("0", "false", "off", "no")


def njit(*args, **kwargs):
    """``numba.njit`` when numba is importable, identity otherwise."""
    if _nb is None:
        if len(args) == 1 and callable(args[0]) and not kwargs:
            return args[0]
        return lambda fn: fn
    return _nb.njit(*args, **kwargs)
