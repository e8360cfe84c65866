"""Kernel selection: compiled extension when available, pure Python otherwise.

Set DCDECOMP_PURE=1 to force the Python kernel (used by the parity tests and
the benchmark).
"""

from __future__ import annotations

import os

if os.environ.get("DCDECOMP_PURE"):
    from ._dd_py import BACKEND, insert_halfspace
else:
    try:
        from ._dd_cy import BACKEND, insert_halfspace  # type: ignore[no-redef]
    except ImportError:
        from ._dd_py import BACKEND, insert_halfspace  # type: ignore[no-redef]

__all__ = ["BACKEND", "insert_halfspace"]
