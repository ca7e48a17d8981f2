"""Backend selection for the hot loops.

The compiled extension is used when it was built; otherwise the pure-Python
module with the same API is loaded. Set ``PLANE_RECONFIG_PURE=1`` to force
the fallback.
"""

import os

if os.environ.get("PLANE_RECONFIG_PURE") == "1":
    from . import _kernels_py as impl
    BACKEND = "python"
else:
    try:
        from . import _kernels as impl
        BACKEND = "compiled"
    except ImportError:
        from . import _kernels_py as impl
        BACKEND = "python"

from . import _kernels_py as pure  # noqa: E402  (always available for cross-checks)

FAMILY_ALL = pure.FAMILY_ALL
FAMILY_CATERPILLARS = pure.FAMILY_CATERPILLARS
FAMILY_PATHS = pure.FAMILY_PATHS

OP_FLIP = pure.OP_FLIP
OP_COMPATIBLE_FLIP = pure.OP_COMPATIBLE_FLIP
OP_ROTATION = pure.OP_ROTATION
OP_EMPTY_ROTATION = pure.OP_EMPTY_ROTATION
OP_SLIDE = pure.OP_SLIDE

MAX_COMPILED_N = 10
