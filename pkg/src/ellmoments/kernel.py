"""Pick the census kernel: compiled Cython when built, pure Python otherwise.

Set ``ELLMOMENTS_PURE=1`` to force the fallback.
"""

import os

from . import _census_py

if os.environ.get("ELLMOMENTS_PURE"):
    tally = _census_py.tally
    BACKEND = "python"
else:
    try:
        from ._census_c import tally
        BACKEND = "cython"
    except ImportError:
        tally = _census_py.tally
        BACKEND = "python"

__all__ = ["tally", "BACKEND"]
