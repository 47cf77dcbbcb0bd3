"""Backend selection for the numeric kernels.

The compiled extension is used when it imports; setting the environment
variable ``RECIPCIRCLE_PURE=1`` forces the pure-Python fallback.  ``BACKEND``
names the active implementation.
"""

from __future__ import annotations

import os

from . import _kernels_py as pure

compiled = None
if os.environ.get("RECIPCIRCLE_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _kernels as compiled  # type: ignore[no-redef]
    except ImportError:
        compiled = None

_impl = compiled if compiled is not None else pure
BACKEND = "cython" if compiled is not None else "python"

gcd_mod_p = _impl.gcd_mod_p
trig_pair = _impl.trig_pair
rotation_product = _impl.rotation_product
simpson_kernel = _impl.simpson_kernel
aberth = _impl.aberth

__all__ = ["BACKEND", "aberth", "compiled", "gcd_mod_p", "pure", "rotation_product",
           "simpson_kernel", "trig_pair"]
