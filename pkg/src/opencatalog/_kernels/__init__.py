"""Kernel backend selection.

Imports the compiled extension when available, otherwise the pure-Python
twin. ``OC_PURE_KERNELS=1`` forces the fallback (used by the benchmark
and the backend-parity tests).
"""

from __future__ import annotations

import os

if os.environ.get("OC_PURE_KERNELS"):
    from . import _pure as _impl

    BACKEND = "pure"
else:
    try:
        from . import _speedups as _impl  # type: ignore[no-redef]

        BACKEND = "native"
    except ImportError:
        from . import _pure as _impl  # type: ignore[no-redef]

        BACKEND = "pure"

jaccard_sorted = _impl.jaccard_sorted
bm25_accumulate = _impl.bm25_accumulate

__all__ = ["BACKEND", "jaccard_sorted", "bm25_accumulate"]
