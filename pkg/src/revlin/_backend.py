"""Kernel backend selection.

The compiled Cython kernel is preferred when it imports; otherwise the
pure-Python twin is used.  ``REVLIN_BACKEND=py`` forces the fallback and
``REVLIN_BACKEND=c`` makes a missing compiled kernel a hard error.
"""

import os

_forced = os.environ.get("REVLIN_BACKEND", "").strip().lower()

if _forced in ("py", "python"):
    from . import _kernel_py as kernel
elif _forced in ("c", "cy", "cython"):
    from . import _kernel_cy as kernel  # type: ignore[no-redef]
else:
    try:
        from . import _kernel_cy as kernel  # type: ignore[no-redef]
    except ImportError:
        from . import _kernel_py as kernel  # type: ignore[no-redef]


def backend_name() -> str:
    """Name of the arithmetic kernel in use ("python" or "cython")."""
    return kernel.BACKEND_NAME
