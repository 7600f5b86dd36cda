"""Reed-Solomon evaluation codes and their locating-pair construction.

Evaluation points may be any distinct field elements; full support
(n = q, all elements in packed order) is the default used by the CLI and
the benchmarks, which is also the regime where RS(k)-dual = RS(n-k) holds
with trivial column multipliers.  Polynomial coefficients are low-degree
first everywhere.
"""

from __future__ import annotations

from typing import Sequence

from . import decoders
from .codes import LinearCode, dual
from .gf import Field
from .linalg import Matrix


class RsCode:
    """RS_q(x, k): evaluations of polynomials of degree < k at x."""

    __slots__ = ("field", "x", "k", "code", "eval_matrix")

    def __init__(self, field: Field, x: tuple[int, ...], k: int,
                 code: LinearCode, eval_matrix: Matrix):
        self.field = field
        self.x = x
        self.k = k
        self.code = code
        self.eval_matrix = eval_matrix  # raw rows ev(1), ev(X), ..., ev(X^{k-1})

    @property
    def n(self) -> int:
        return len(self.x)

    @property
    def d(self) -> int:
        """Minimum distance n - k + 1 (MDS)."""
        return self.n - self.k + 1

    def __repr__(self):
        return f"RsCode[{self.n}, {self.k}] over {self.field!r}"


def rs_code(field: Field, x: Sequence[int] | None = None, k: int = 1) -> RsCode:
    """Build RS_q(x, k); x defaults to all field elements (full support)."""
    if x is None:
        x = tuple(field.elements())
    xs = tuple(field.elem(v) for v in x)
    if len(set(xs)) != len(xs):
        raise ValueError("evaluation points must be distinct")
    n = len(xs)
    if not 1 <= k <= n:
        raise ValueError(f"dimension k={k} out of range 1..{n}")
    rows = []
    row = [1] * n
    rows.append(row[:])
    for _ in range(k - 1):
        row = [field.mul(v, xi) for v, xi in zip(row, xs)]
        rows.append(row[:])
    M = Matrix(field, rows, n)
    return RsCode(field, xs, k, LinearCode.from_rows(field, rows, n), M)


def encode(C: RsCode, f: Sequence[int]) -> tuple[int, ...]:
    """Evaluate the message polynomial f (deg < k, low-first) at the points."""
    coeffs = [C.field.elem(c) for c in f]
    if len(coeffs) > C.k and any(c for c in coeffs[C.k:]):
        raise ValueError(f"message degree must be < k={C.k}")
    word = []
    for xi in C.x:
        acc = 0
        for c in reversed(coeffs):
            acc = C.field.add(C.field.mul(acc, xi), c)
        word.append(acc)
    return tuple(word)


def rs_pelp_pair(C: RsCode, t: int, ell: int = 2) -> "decoders.PelpPair":
    """Locating pair A = RS(t+1), B = RS(t+k)-dual for decoding radius t.

    The construction is valid whenever t + k <= n; whether it satisfies
    the power locating-pair conditions for (t, ell) is reported by
    decoders.validate_pelp_pair, not enforced here.
    """
    if t < 0:
        raise ValueError("t must be >= 0")
    if t + C.k > C.n:
        raise ValueError(f"t + k = {t + C.k} exceeds n = {C.n}")
    A = rs_code(C.field, C.x, t + 1).code
    B = dual(rs_code(C.field, C.x, t + C.k).code)
    return decoders.PelpPair(
        A=A, B=B, C=C.code, ell=ell, t=t,
        family="rs",
        meta={"k": C.k, "n": C.n, "source": C},
    )
