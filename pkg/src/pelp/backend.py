"""Kernel backend selection.

At import the compiled extension ``pelp._kern`` is preferred when it is
present and the field fits its constraints (p < 2^31 so products stay in
int64); otherwise the pure-Python kernels run.  ``PELP_BACKEND=pure`` or
``PELP_BACKEND=compiled`` in the environment forces the choice, and
benchmarks/tests can switch at runtime with `set_backend`.
"""

from __future__ import annotations

import os
from array import array

from . import _kern_py
from .gf import Field

try:
    from . import _kern  # type: ignore[attr-defined]
except ImportError:
    _kern = None

_EMPTY = array("q")
_MODE = os.environ.get("PELP_BACKEND", "auto")
if _MODE not in ("auto", "pure", "compiled"):
    raise RuntimeError(f"PELP_BACKEND must be auto|pure|compiled, got {_MODE!r}")
if _MODE == "compiled" and _kern is None:
    raise RuntimeError("PELP_BACKEND=compiled but the extension is not built")


def set_backend(mode: str) -> None:
    """Force 'pure' or 'compiled', or restore 'auto'."""
    global _MODE
    if mode not in ("auto", "pure", "compiled"):
        raise ValueError(mode)
    if mode == "compiled" and _kern is None:
        raise RuntimeError("compiled backend unavailable")
    _MODE = mode


def backend_name() -> str:
    return "compiled" if _kern is not None and _MODE in ("auto", "compiled") else "pure"


def has_compiled() -> bool:
    return _kern is not None


def _use_compiled(field: Field) -> bool:
    if _kern is None or _MODE == "pure":
        return False
    return field.p < 2**31


def _field_tables(field: Field) -> tuple[array, array]:
    tables = getattr(field, "_kern_tables", None)
    if tables is None:
        exp = getattr(field, "_exp", None)
        log = getattr(field, "_log", None)
        if exp is not None:
            tables = (array("q", exp), array("q", log))
        else:
            tables = (_EMPTY, _EMPTY)
        field._kern_tables = tables  # type: ignore[attr-defined]
    return tables


def _mod_digits(field: Field) -> array:
    mod = getattr(field, "_kern_mod", None)
    if mod is None:
        mod = array("q", field.modulus)
        field._kern_mod = mod  # type: ignore[attr-defined]
    return mod


def rref_inplace(field: Field, data: list[list[int]]) -> tuple[int, list[int]]:
    nrows = len(data)
    ncols = len(data[0]) if nrows else 0
    if nrows == 0 or ncols == 0:
        return 0, []
    if not _use_compiled(field):
        return _kern_py.rref_inplace(field, data)
    buf = array("q")
    for row in data:
        buf.extend(row)
    exp, log = _field_tables(field)
    rank, pivots = _kern.rref(buf, nrows, ncols, field.p, field.m,
                              _mod_digits(field), exp, log, field.order)
    flat = buf.tolist()
    for i in range(nrows):
        data[i][:] = flat[i * ncols:(i + 1) * ncols]
    return rank, list(pivots)


def matmul(field: Field, a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    n, inner = len(a), len(b)
    ncols = len(b[0]) if inner else 0
    if n == 0 or inner == 0 or ncols == 0:
        return [[0] * ncols for _ in range(n)]
    if not _use_compiled(field):
        return _kern_py.matmul(field, a, b)
    abuf = array("q")
    for row in a:
        abuf.extend(row)
    bbuf = array("q")
    for row in b:
        bbuf.extend(row)
    out = array("q", bytes(8 * n * ncols))
    exp, log = _field_tables(field)
    _kern.matmul(abuf, bbuf, out, n, inner, ncols, field.p, field.m,
                 _mod_digits(field), exp, log, field.order)
    flat = out.tolist()
    return [flat[i * ncols:(i + 1) * ncols] for i in range(n)]
