"""Pure-Python elimination kernels.

Same contract as the compiled module ``pelp._kern``: matrices are lists of
row lists holding packed field elements, and `rref_inplace` performs exactly
the same pivot choices as the C version so both backends produce identical
canonical forms.
"""

from __future__ import annotations

from .gf import Field


def rref_inplace(field: Field, data: list[list[int]]) -> tuple[int, list[int]]:
    """Reduce to reduced row echelon form in place; return (rank, pivots)."""
    nrows = len(data)
    ncols = len(data[0]) if nrows else 0
    fmul = field.mul
    fsub = field.sub
    finv = field.inv
    r = 0
    pivots: list[int] = []
    for col in range(ncols):
        pivot_row = -1
        for i in range(r, nrows):
            if data[i][col]:
                pivot_row = i
                break
        if pivot_row < 0:
            continue
        if pivot_row != r:
            data[pivot_row], data[r] = data[r], data[pivot_row]
        row_r = data[r]
        pv = row_r[col]
        if pv != 1:
            c = finv(pv)
            for j in range(col, ncols):
                if row_r[j]:
                    row_r[j] = fmul(c, row_r[j])
        for i in range(nrows):
            if i == r:
                continue
            row_i = data[i]
            f = row_i[col]
            if f:
                for j in range(col, ncols):
                    v = row_r[j]
                    if v:
                        row_i[j] = fsub(row_i[j], fmul(f, v))
        pivots.append(col)
        r += 1
        if r == nrows:
            break
    return r, pivots


def matmul(field: Field, a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    """Plain matrix product over the field."""
    n = len(a)
    inner = len(b)
    ncols = len(b[0]) if inner else 0
    fmul = field.mul
    fadd = field.add
    out = []
    for i in range(n):
        row_a = a[i]
        acc = [0] * ncols
        for k in range(inner):
            v = row_a[k]
            if v:
                row_b = b[k]
                for j in range(ncols):
                    w = row_b[j]
                    if w:
                        acc[j] = fadd(acc[j], fmul(v, w))
        out.append(acc)
    return out
