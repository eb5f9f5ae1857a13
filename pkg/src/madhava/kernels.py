"""Summation kernel selection.

The compiled ``_ckernels`` extension is used when it imports; otherwise the
pure-Python ``_pykernels`` module is used.  Setting ``MADHAVA_PURE_PYTHON=1``
forces the fallback.  Both produce bit-identical integers.
"""

from __future__ import annotations

import os

from . import _pykernels as pykernels
from ._pykernels import (  # noqa: F401
    EQ38,
    EQ39,
    EQ40,
    EQ41,
    EQ42A,
    EQ42B,
    LEIBNIZ,
    PUTUMANA,
    SQRT12,
    rhe,
)

ckernels = None
if not os.environ.get("MADHAVA_PURE_PYTHON"):
    try:
        from . import _ckernels as ckernels
    except ImportError:
        ckernels = None

_impl = ckernels if ckernels is not None else pykernels
BACKEND = "cython" if ckernels is not None else "python"

term_parts = _impl.term_parts
block_sum = _impl.block_sum
block_prefix = _impl.block_prefix
