"""Kernel backend selection.

The compiled extension is used when it imports; otherwise, or when the
environment variable ``TORICEXT_PURE_PYTHON`` is set to a non-empty value,
the pure-Python kernels are used.  :func:`get_backend` hands out either
module explicitly, which the tests and the benchmark rely on.
"""

import os

from . import _pykernels

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None

BACKENDS = {"python": _pykernels}
if _ckernels is not None:
    BACKENDS["cython"] = _ckernels

if _ckernels is not None and not os.environ.get("TORICEXT_PURE_PYTHON"):
    _active = _ckernels
else:
    _active = _pykernels


def get_backend(name=None):
    """Kernel module by name (``"python"`` or ``"cython"``); default is the active one."""
    if name is None:
        return _active
    try:
        return BACKENDS[name]
    except KeyError:
        raise ValueError(f"kernel backend {name!r} is not available") from None


def backend_name():
    return _active.BACKEND


def make_reducer(nvars, backend=None):
    return get_backend(backend).BinomialReducer(nvars)


def representations(gens, m, backend=None):
    kern = get_backend(backend)
    try:
        return kern.representations(gens, m)
    except OverflowError:
        return _pykernels.representations(gens, m)
