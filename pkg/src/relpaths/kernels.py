"""Kernel backend selection.

The compiled ``_ckernels`` extension is used when it imports; otherwise the
pure-Python kernels run.  Setting ``RELPATHS_PURE_PYTHON=1`` forces the
fallback, which the benchmark and the backend-agreement tests rely on.
"""

from __future__ import annotations

import os

from relpaths import _pykernels

if os.environ.get("RELPATHS_PURE_PYTHON", "") not in ("", "0"):
    _impl = _pykernels
    BACKEND = "python"
else:
    try:
        from relpaths import _ckernels as _impl
    except ImportError:
        _impl = _pykernels
        BACKEND = "python"
    else:
        BACKEND = "cython"

compose = _impl.compose
converse = _impl.converse
star = _impl.star
row_fill = _impl.row_fill
fill_compose_table = _impl.fill_compose_table

__all__ = ["BACKEND", "compose", "converse", "star", "row_fill", "fill_compose_table"]
