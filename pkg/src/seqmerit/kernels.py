"""Kernel backend selection.

The compiled ``_core`` extension is used when it is importable; otherwise,
or when ``SEQMERIT_PURE_PYTHON`` is set to a non-empty value other than
"0", the pure-Python ``_core_py`` module is used. ``BACKEND`` names the
module in use.
"""

import os

from . import _core_py

_force_pure = os.environ.get("SEQMERIT_PURE_PYTHON", "") not in ("", "0")

if _force_pure:
    _impl = _core_py
else:
    try:
        from . import _core as _impl
    except ImportError:
        _impl = _core_py

BACKEND = "compiled" if _impl is not _core_py else "python"
MAX_KERNEL_N = _impl.MAX_KERNEL_N

aperiodic_pm = _impl.aperiodic_pm
bounded_leaves = _impl.bounded_leaves
min_energy = _impl.min_energy
perfect_rows = _impl.perfect_rows


def compiled_available() -> bool:
    try:
        from . import _core  # noqa: F401
    except ImportError:
        return False
    return True


def backends():
    """Mapping of backend name to kernel module, for tests and benchmarks."""
    out = {"python": _core_py}
    if compiled_available():
        from . import _core

        out["compiled"] = _core
    return out
