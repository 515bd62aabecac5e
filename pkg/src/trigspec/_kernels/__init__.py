"""Hot-kernel backend selection.

The compiled extension (``_fast``, Cython) is preferred when built; the
NumPy implementation (``_ref``) is the always-available fallback. Set
``TRIGSPEC_KERNELS=python`` or ``TRIGSPEC_KERNELS=c`` to force a backend;
the default ``auto`` picks the extension if it imports.
"""

import os

from . import _ref

_requested = os.environ.get("TRIGSPEC_KERNELS", "auto")
if _requested not in ("auto", "c", "python"):
    raise RuntimeError(
        f"TRIGSPEC_KERNELS must be one of auto|c|python, got {_requested!r}"
    )

_impl = None
if _requested in ("auto", "c"):
    try:
        from . import _fast as _impl
    except ImportError:
        if _requested == "c":
            raise RuntimeError(
                "TRIGSPEC_KERNELS=c but the compiled extension is not built; "
                "run `pip install -e .` with Cython available"
            )

if _impl is None:
    _impl = _ref

BACKEND = "c" if _impl is not _ref else "python"

synth = _impl.synth
dft = _impl.dft


def available_backends():
    """Map of importable backend name -> module, for benchmarks and parity tests."""
    found = {"python": _ref}
    try:
        from . import _fast

        found["c"] = _fast
    except ImportError:
        pass
    return found
