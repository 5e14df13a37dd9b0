"""Kernel selection: compiled lane when present, pure lane otherwise.

Set CHROMABRAID_PURE to any non-empty value to force the pure lane even
when the extension module is installed (used by the benchmark and tests).
"""

from __future__ import annotations

import os

if os.environ.get("CHROMABRAID_PURE"):
    from . import _garside_py as _impl

    KERNEL = "pure"
else:
    try:
        from . import _garside_cy as _impl  # type: ignore[no-redef]

        KERNEL = "compiled"
    except ImportError:
        from . import _garside_py as _impl  # type: ignore[no-redef]

        KERNEL = "pure"

left_normal_form = _impl.left_normal_form
crossing_counts = _impl.crossing_counts
