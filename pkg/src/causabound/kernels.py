"""Backend selection for the scan kernels.

Prefers the compiled extension, falls back to the pure-Python twin when
the build skipped it, and honors CAUSABOUND_PURE_PYTHON=1 for forcing the
fallback (benchmarks and the backend-equality tests use that).  Both
backends are bit-equal by construction.
"""

from __future__ import annotations

import os

if os.environ.get("CAUSABOUND_PURE_PYTHON"):
    from . import _kernels_py as _impl
else:
    try:
        from . import _kernels as _impl  # type: ignore[no-redef]
    except ImportError:
        from . import _kernels_py as _impl  # type: ignore[no-redef]

scan_single = _impl.scan_single
scan_pair = _impl.scan_pair


def backend_name() -> str:
    """Which implementation is live: "compiled" or "python"."""
    return _impl.BACKEND
