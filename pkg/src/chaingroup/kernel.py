"""Backend selection for the word-rewriting kernel.

Prefers the compiled extension chaingroup._speedups when it imported cleanly,
otherwise falls back to the pure-Python implementation. Both expose the same
apply_letters contract and are cross-checked in the test suite. Set
CHAINGROUP_PURE=1 to force the pure backend (used by the benchmark).
"""

from __future__ import annotations

import os

from . import _kernel_py

if os.environ.get("CHAINGROUP_PURE"):
    _impl = _kernel_py
else:
    try:
        from . import _speedups as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _kernel_py

apply_letters = _impl.apply_letters
reduce_word = _kernel_py.reduce_word


def backend() -> str:
    """Name of the active kernel backend: 'c' or 'python'."""
    return _impl.BACKEND


def backends() -> dict[str, object]:
    """All importable kernels keyed by name, for benchmarks and tests."""
    found: dict[str, object] = {"python": _kernel_py}
    try:
        from . import _speedups

        found["c"] = _speedups
    except ImportError:
        pass
    return found
