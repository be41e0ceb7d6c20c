"""Kernel dispatch: compiled extension if importable, numpy fallback otherwise.

Set ``PADIC_FRAMES_PURE_PYTHON=1`` to force the fallback.
"""

import os

from . import _pykernels

BACKEND = "python"
_impl = _pykernels

if os.environ.get("PADIC_FRAMES_PURE_PYTHON", "") in ("", "0"):
    try:
        from . import _ckernels as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:  # extension not built
        _impl = _pykernels

dft = _impl.dft
fft_radix = _impl.fft_radix
jacobi_eigvalsh = _impl.jacobi_eigvalsh
twiddles = _pykernels.twiddles

__all__ = ["BACKEND", "dft", "fft_radix", "jacobi_eigvalsh", "twiddles"]
