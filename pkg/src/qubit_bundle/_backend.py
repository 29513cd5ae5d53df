"""Selection of the active kernel backend.

The compiled extension is preferred when it built successfully; the pure
numpy module is the fallback.  Set ``QUBIT_BUNDLE_BACKEND`` to ``python`` or
``compiled`` to force one (``compiled`` raises if the extension is missing).
Call sites access the kernels through the module attribute, e.g.
``_backend.kernels.svd2x2(...)``, so tests and benchmarks can swap the
backend at runtime.
"""

from __future__ import annotations

import os
from contextlib import contextmanager

from . import _kernels_py


def _load(name: str):
    if name == "python":
        return _kernels_py
    if name == "compiled":
        from . import _kernels_cy  # noqa: PLC0415 - deferred, may be missing

        return _kernels_cy
    if name == "auto":
        try:
            return _load("compiled")
        except ImportError:
            return _kernels_py
    raise ValueError(f"unknown backend {name!r}; expected python, compiled, or auto")


kernels = _load(os.environ.get("QUBIT_BUNDLE_BACKEND", "auto"))


def active_backend() -> str:
    """Name of the kernel implementation currently in use."""
    return kernels.BACKEND_NAME


def use_backend(name: str) -> None:
    """Switch the active backend; mainly for tests and benchmarks."""
    global kernels
    kernels = _load(name)


def available_backends() -> tuple[str, ...]:
    names = ["python"]
    try:
        _load("compiled")
        names.append("compiled")
    except ImportError:
        pass
    return tuple(names)


@contextmanager
def backend(name: str):
    """Temporarily switch the active backend."""
    previous = kernels.BACKEND_NAME
    use_backend(name)
    try:
        yield
    finally:
        use_backend(previous)
