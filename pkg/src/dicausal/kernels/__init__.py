"""Kernel backend selection.

The hot inner loops (dense linear layers, sigmoid, softmax cross-entropy,
Adam updates) exist twice: a compiled Cython extension (``_core``) and a
NumPy fallback (``numpy_ref``). One backend is chosen at import time:

* ``DICAUSAL_BACKEND=numpy``    force the NumPy fallback
* ``DICAUSAL_BACKEND=compiled`` require the extension (ImportError if absent)
* unset / ``auto``              prefer the extension, fall back silently

``python -m dicausal.bench`` compares the two.
"""

import os

_requested = os.environ.get("DICAUSAL_BACKEND", "auto").lower()

if _requested == "numpy":
    from . import numpy_ref as impl
elif _requested == "compiled":
    from . import _core as impl  # type: ignore[no-redef]
elif _requested == "auto":
    try:
        from . import _core as impl  # type: ignore[no-redef]
    except ImportError:
        from . import numpy_ref as impl  # type: ignore[no-redef]
else:
    raise ImportError(
        f"DICAUSAL_BACKEND must be 'auto', 'numpy' or 'compiled', got {_requested!r}"
    )

BACKEND = impl.NAME

linear_fwd = impl.linear_fwd
linear_bwd = impl.linear_bwd
sigmoid_fwd = impl.sigmoid_fwd
sigmoid_bwd = impl.sigmoid_bwd
tanh_fwd = impl.tanh_fwd
tanh_bwd = impl.tanh_bwd
softmax_xent_fwd = impl.softmax_xent_fwd
softmax_xent_bwd = impl.softmax_xent_bwd
adam_update = impl.adam_update
