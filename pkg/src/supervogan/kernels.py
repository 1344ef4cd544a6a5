"""Kernel backend selection.

The compiled extension is used when it imports; ``SUPERVOGAN_PURE=1`` forces
the pure-Python reference implementation.
"""
from __future__ import annotations

import os

from . import _kernels_py

if os.environ.get("SUPERVOGAN_PURE") == "1":
    _impl = _kernels_py
    BACKEND = "python"
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]

        BACKEND = "cython"
    except ImportError:
        _impl = _kernels_py
        BACKEND = "python"

graph_automorphisms = _impl.graph_automorphisms
flip_orbit = _impl.flip_orbit
flip_orbits = _impl.flip_orbits
