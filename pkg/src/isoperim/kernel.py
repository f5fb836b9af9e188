"""Kernel backend selection.

The compiled extension is preferred when importable; the pure-Python twin is
the fallback.  Both expose the same API and produce bit-identical results;
only throughput differs.  Set ``ISOPERIM_FORCE_PYTHON_KERNEL=1`` to force the
fallback (used by the benchmark and the agreement tests).
"""

from __future__ import annotations

import os

from . import _kernel_py

if os.environ.get("ISOPERIM_FORCE_PYTHON_KERNEL") == "1":
    _impl = _kernel_py
else:
    try:
        from . import _kernel as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _kernel_py

BACKEND: str = _impl.BACKEND
BnbCore = _impl.BnbCore
classify_batch = _impl.classify_batch
eval_svg = _impl.eval_svg

# record layout constants live in the pure module regardless of backend
STATUS_INFEASIBLE = _kernel_py.STATUS_INFEASIBLE
STATUS_VERIFIED = _kernel_py.STATUS_VERIFIED
STATUS_UNRESOLVED = _kernel_py.STATUS_UNRESOLVED
BOUND_PLAIN = _kernel_py.BOUND_PLAIN
BOUND_CURVATURE = _kernel_py.BOUND_CURVATURE


def backends() -> dict:
    """Map of available backend name -> module (for benchmarks/tests)."""
    out = {"python": _kernel_py}
    try:
        from . import _kernel

        out["compiled"] = _kernel
    except ImportError:
        pass
    return out
