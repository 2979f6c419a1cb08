"""Backend selection for the hot kernels.

The compiled extension is used when it imports; set ``LINKIRR_PURE=1`` to
force the pure-Python twin (same results, much slower).
"""

from __future__ import annotations

import os

if os.environ.get("LINKIRR_PURE"):
    from . import _pykernels as _impl

    BACKEND = "python"
else:
    try:
        from . import _ckernels as _impl

        BACKEND = "compiled"
    except ImportError:  # extension not built
        from . import _pykernels as _impl

        BACKEND = "python"

canon = _impl.canon
canon_code = _impl.canon_code
rows_from_code = _impl.rows_from_code
extend_children = _impl.extend_children
regular_children = _impl.regular_children
graphical_sequence = _impl.graphical_sequence
count_labeled_classes = _impl.count_labeled_classes

__all__ = [
    "BACKEND",
    "canon",
    "canon_code",
    "rows_from_code",
    "extend_children",
    "regular_children",
    "graphical_sequence",
    "count_labeled_classes",
]
