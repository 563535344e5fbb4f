"""Backend selection for the hot loops.

The compiled ``_core`` extension is used when it imports; otherwise the
numpy implementation in ``_pycore``.  Set ``FD2P_PURE_PYTHON=1`` to force the
fallback.
"""
import os

from . import _pycore

BACKEND = "python"
_impl = _pycore
if os.environ.get("FD2P_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _core as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        pass

mul = _impl.mul
left_matrix = _impl.left_matrix
rref_inplace = _impl.rref_inplace
scan = _impl.scan


def backends():
    """All importable kernel modules keyed by name (for tests/benchmarks)."""
    out = {"python": _pycore}
    try:
        from . import _core

        out["cython"] = _core
    except ImportError:
        pass
    return out
