"""Backend selection for the hot loops.

The compiled ``_kernels`` extension is used when it imports; otherwise the
pure-Python ``_kernels_py`` module.  Compiled calls that would overflow
64-bit arithmetic raise ``OverflowError`` and are rerun in Python, so the
results never depend on the backend.
"""
from __future__ import annotations

from contextlib import contextmanager

from intcayley import _kernels_py

try:
    from intcayley import _kernels as _compiled
except ImportError:  # pragma: no cover - depends on the build
    _compiled = None

_active = _compiled if _compiled is not None else _kernels_py


def available_backends() -> list[str]:
    return ["python"] + (["cython"] if _compiled is not None else [])


def backend() -> str:
    return "cython" if _active is _compiled else "python"


def set_backend(name: str) -> None:
    global _active
    if name == "python":
        _active = _kernels_py
    elif name == "cython":
        if _compiled is None:
            raise RuntimeError("the compiled kernels are not built")
        _active = _compiled
    else:
        raise ValueError(f"unknown backend {name!r}")


@contextmanager
def using(name: str):
    previous = backend()
    set_backend(name)
    try:
        yield
    finally:
        set_backend(previous)


def _dispatch(fname):
    fallback = getattr(_kernels_py, fname)

    def call(*args):
        impl = getattr(_active, fname)
        if impl is fallback:
            return fallback(*args)
        try:
            return impl(*args)
        except OverflowError:
            return fallback(*args)

    call.__name__ = fname
    call.__doc__ = fallback.__doc__
    return call


psi_exponents = _dispatch("psi_exponents")
reduce_monic = _dispatch("reduce_monic")
char_sum_table = _dispatch("char_sum_table")
eigen_rows_hold = _dispatch("eigen_rows_hold")
