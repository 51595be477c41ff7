"""Select the compiled kernels when available.

Set ``PPFORGE_PURE=1`` to force the pure-Python loops (used by the
benchmark and by the equivalence tests).
"""

import os

from . import _kernels as pure

compiled = None
if os.environ.get("PPFORGE_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernels as compiled  # type: ignore[no-redef]
    except ImportError:  # extension not built
        compiled = None

kernels = compiled if compiled is not None else pure
BACKEND = "cython" if compiled is not None else "python"

__all__ = ["kernels", "pure", "compiled", "BACKEND"]
