"""Integer convolution kernel with compiled and pure Python backends.

The compiled extension is used when it imported successfully; setting the
environment variable VVMF_PURE_PYTHON=1 forces the pure backend.  BACKEND
records which one is active.
"""

import os

from . import _convolve_py

if os.environ.get("VVMF_PURE_PYTHON"):
    convolve = _convolve_py.convolve
    BACKEND = "python"
else:
    try:
        from . import _convolve

        convolve = _convolve.convolve
        BACKEND = "c"
    except ImportError:
        convolve = _convolve_py.convolve
        BACKEND = "python"

__all__ = ["convolve", "BACKEND"]
