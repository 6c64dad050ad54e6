"""Generation-phase kernels in two interchangeable, bit-identical backends.

The numba backend is the default. Set ``GA32_BACKEND=numpy`` to force the
pure numpy fallback (or ``numba`` to fail loudly when numba is unusable);
``auto`` falls back to numpy when numba cannot be imported.
"""

from __future__ import annotations

import os

ENV_VAR = "GA32_BACKEND"
BACKENDS = ("auto", "numba", "numpy")


def get_kernels(name: str | None = None):
    """Return the kernel module for ``name``, defaulting to the env selection."""
    if name is None:
        name = os.environ.get(ENV_VAR, "auto").strip().lower() or "auto"
    if name not in BACKENDS:
        raise ValueError(f"unknown backend {name!r}; expected one of {BACKENDS}")
    if name == "numpy":
        from . import _python

        return _python
    if name == "numba":
        from . import _numba

        return _numba
    try:
        from . import _numba

        return _numba
    except ImportError:
        from . import _python

        return _python
