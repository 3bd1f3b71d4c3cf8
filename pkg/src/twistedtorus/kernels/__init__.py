"""Hot loops: the coprime-pair scan and the Kauffman state sum.

Two interchangeable implementations with identical signatures and outputs:
``_numba`` (compiled loops) and ``_numpy`` (vectorized, no compiler). The numba
path is used when numba imports and ``TWISTEDTORUS_DISABLE_NUMBA`` is unset.
"""
from __future__ import annotations

import os

# record codes emitted by scan_range
NO_CERTIFICATE = 1
WALK_MISMATCH = 2
PREFIX_VIOLATION = 3
ANOMALY = 4
STAR_WITNESS = 5
DOUBLESTAR_WITNESS = 6
N_CODES = 7

# label classes: index 0 -> label 1, 1 -> label 2, 2 -> label -1
LABELS_SIGNED = (1, 2, -1)


def _numba_disabled() -> bool:
    return os.environ.get("TWISTEDTORUS_DISABLE_NUMBA", "").strip().lower() in {"1", "true", "yes", "on"}


def _load():
    if not _numba_disabled():
        try:
            from . import _numba as mod
            return "numba", mod
        except ImportError:
            pass
    from . import _numpy as mod
    return "numpy", mod


BACKEND, _impl = _load()

scan_range = _impl.scan_range
bracket_counts = _impl.bracket_counts


def get_backend(name: str):
    """Return the kernel module ``name`` ("numba" or "numpy") regardless of the env flag."""
    if name == "numba":
        from . import _numba as mod
    elif name == "numpy":
        from . import _numpy as mod
    else:
        raise ValueError(f"unknown backend {name!r}")
    return mod
