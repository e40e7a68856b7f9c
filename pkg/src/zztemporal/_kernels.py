"""Select the reduction backend at import time.

The compiled module ``_reduce_ext`` is used when it was built; otherwise the
pure-Python implementation in ``_reduce_py`` takes over. Setting the
environment variable ``ZZTEMPORAL_PURE=1`` forces the fallback.
"""

import os

from zztemporal import _reduce_py

BACKEND = "python"
reduce_boundary = _reduce_py.reduce_boundary

if os.environ.get("ZZTEMPORAL_PURE", "") not in ("1", "true", "yes"):
    try:
        from zztemporal import _reduce_ext
    except ImportError:
        _reduce_ext = None
    if _reduce_ext is not None:
        BACKEND = "compiled"
        reduce_boundary = _reduce_ext.reduce_boundary


def available_backends():
    out = {"python": _reduce_py.reduce_boundary}
    try:
        from zztemporal import _reduce_ext as ext
    except ImportError:
        return out
    out["compiled"] = ext.reduce_boundary
    return out
