"""Row-echelon kernel backend selection.

The compiled Cython kernel is preferred; the pure-Python twin is used
when the extension is unavailable or ``COMETRIC_PURE_PYTHON=1`` is set.
"""

import os

if os.environ.get("COMETRIC_PURE_PYTHON") == "1":
    from ._echelon_py import BACKEND, row_echelon
else:
    try:
        from ._echelon_c import BACKEND, row_echelon  # type: ignore[attr-defined]
    except ImportError:
        from ._echelon_py import BACKEND, row_echelon

__all__ = ["BACKEND", "row_echelon"]
