"""Hot kernels: damped Newton on the pole equations and truncated-series loops.

Two interchangeable backends exist. The compiled ``_ckernels`` extension is
used when it was built; otherwise the pure-Python ``_pykernels`` module is.
Setting ``RESONANCES_PURE_PYTHON=1`` forces the fallback at import.

Callers go through :data:`impl` (looked up at call time) so that
:func:`set_backend` switches every module at once.
"""

import os

from . import _pykernels

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None

_BACKENDS = {"python": _pykernels}
if _ckernels is not None:
    _BACKENDS["cython"] = _ckernels

if os.environ.get("RESONANCES_PURE_PYTHON", "") not in ("", "0") or _ckernels is None:
    impl = _pykernels
else:
    impl = _ckernels


def available_backends():
    return sorted(_BACKENDS)


def get_backend(name):
    try:
        return _BACKENDS[name]
    except KeyError:
        raise ValueError(
            f"kernel backend {name!r} is not available (have: {', '.join(available_backends())})"
        ) from None


def set_backend(name):
    """Select the active backend by name; returns the previous backend's name."""
    global impl
    previous = impl.NAME
    impl = get_backend(name)
    return previous


def backend_name():
    return impl.NAME
