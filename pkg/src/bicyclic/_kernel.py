"""Kernel selection: compiled extension when available, pure Python otherwise.

Set ``BICYCLIC_KERNEL=pure`` to force the fallback, ``BICYCLIC_KERNEL=compiled``
to fail loudly when the extension is missing.
"""

from __future__ import annotations

import os

_choice = os.environ.get("BICYCLIC_KERNEL", "auto")

if _choice not in ("auto", "compiled", "pure"):
    raise RuntimeError(f"BICYCLIC_KERNEL must be auto, compiled or pure, not {_choice!r}")

if _choice == "pure":
    from . import _kernel_py as _impl

    KERNEL = "pure"
else:
    try:
        from . import _core as _impl  # type: ignore[no-redef]

        KERNEL = "compiled"
    except ImportError:
        if _choice == "compiled":
            raise
        from . import _kernel_py as _impl  # type: ignore[no-redef]

        KERNEL = "pure"

ord_cmp = _impl.ord_cmp
ord_add = _impl.ord_add
ord_sub = _impl.ord_sub
pair_mul = _impl.pair_mul
coeff_at = _impl.coeff_at


def active_kernel() -> str:
    """Name of the kernel backing the arithmetic: "compiled" or "pure"."""
    return KERNEL
