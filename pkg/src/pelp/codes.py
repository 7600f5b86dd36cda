"""Linear codes as first-class values, with the star-product algebra.

A LinearCode is canonicalised at construction (RREF generator basis), so
equality, hashing and inclusion tests are cheap and deterministic.
Index sets for puncturing/shortening are 0-based here; the CLI layer
renders them 1-based.

Shortening keeps the full length n (the subcode vanishing on J) rather
than deleting coordinates -- star products need all operands to share a
length.  Puncturing keeps exactly the coordinates in J, in ascending
order.
"""

from __future__ import annotations

from itertools import product as _iproduct
from typing import Iterable, Sequence

from .gf import Field
from .linalg import (Matrix, Subspace, kernel, vec_star, weight)

MIN_DISTANCE_BUDGET = 2**24


class LinearCode:
    """A subspace of F_q^n with its canonical RREF generator matrix."""

    __slots__ = ("field", "n", "gen")

    def __init__(self, field: Field, n: int, gen: Subspace):
        if gen.ambient != n:
            raise ValueError("generator ambient does not match length")
        self.field = field
        self.n = n
        self.gen = gen

    @classmethod
    def from_rows(cls, field: Field, rows: Iterable[Sequence[int]], n: int) -> "LinearCode":
        return cls(field, n, Subspace.from_rows(field, rows, n))

    @classmethod
    def zero(cls, field: Field, n: int) -> "LinearCode":
        return cls(field, n, Subspace.zero(field, n))

    @classmethod
    def full(cls, field: Field, n: int) -> "LinearCode":
        return cls(field, n, Subspace.full(field, n))

    @property
    def k(self) -> int:
        return self.gen.dim

    def generator_rows(self) -> list[tuple[int, ...]]:
        return self.gen.basis.rows()

    def contains(self, word: Sequence[int]) -> bool:
        return self.gen.contains(word)

    def is_subcode_of(self, other: "LinearCode") -> bool:
        return self.gen.is_subspace_of(other.gen)

    def __eq__(self, other):
        return (isinstance(other, LinearCode) and self.field is other.field
                and self.n == other.n and self.gen == other.gen)

    def __hash__(self):
        return hash((id(self.field), self.n, self.gen))

    def __repr__(self):
        return f"LinearCode[{self.n}, {self.k}] over {self.field!r}"

    def codewords(self) -> Iterable[tuple[int, ...]]:
        """All codewords (enumeration oracle; guard the budget yourself)."""
        f = self.field
        rows = self.generator_rows()
        for coeffs in _iproduct(range(f.order), repeat=len(rows)):
            w = [0] * self.n
            for c, row in zip(coeffs, rows):
                if c:
                    for j, v in enumerate(row):
                        if v:
                            w[j] = f.add(w[j], f.mul(c, v))
            yield tuple(w)

    # -- text format ------------------------------------------------------------

    def to_text(self) -> str:
        return f"code n={self.n} k={self.k}\n" + self.gen.basis.to_text()

    @classmethod
    def from_text(cls, text: str) -> "LinearCode":
        lines = text.strip().splitlines()
        head = lines[0].split()
        if head[0] != "code":
            raise ValueError("missing 'code' header line")
        n = int(head[1].split("=")[1])
        k = int(head[2].split("=")[1])
        M = Matrix.from_text("\n".join(lines[1:]))
        if M.ncols != n:
            raise ValueError("matrix width does not match code length")
        code = cls.from_rows(M.field, M.data, n)
        if code.k != k:
            raise ValueError(f"stored k={k} but matrix has rank {code.k}")
        return code


# ---------------------------------------------------------------------------
# the star-product algebra
# ---------------------------------------------------------------------------

def dual(C: LinearCode) -> LinearCode:
    """Dual code under the standard inner product; dim n - k."""
    return LinearCode(C.field, C.n, C.gen.dual())


def parity_matrix(C: LinearCode) -> Matrix:
    return C.gen.dual().basis


def puncture(C: LinearCode, J: Iterable[int]) -> LinearCode:
    """Projection onto the coordinates of J (kept, ascending)."""
    J = _validated(J, C.n, allow_empty=False)
    rows = [[row[j] for j in J] for row in C.gen.basis.data]
    return LinearCode.from_rows(C.field, rows, len(J))


def shorten(C: LinearCode, J: Iterable[int]) -> LinearCode:
    """Subcode of words vanishing on J, kept at full length n."""
    J = _validated(J, C.n, allow_empty=True)
    if not J:
        return C
    G = C.gen.basis
    if G.nrows == 0:
        return C
    # coefficient vectors u with (u G) zero on J: kernel of G_J^T
    constraints = Matrix(C.field, [[G.data[i][j] for i in range(G.nrows)] for j in J],
                         G.nrows)
    coeff = kernel(constraints)
    rows = [_combine(C.field, u, G) for u in coeff.basis.data]
    return LinearCode.from_rows(C.field, rows, C.n)


def zero_set(C: LinearCode) -> tuple[int, ...]:
    """Coordinates where every codeword vanishes."""
    out = []
    for j in range(C.n):
        if all(row[j] == 0 for row in C.gen.basis.data):
            out.append(j)
    return tuple(out)


def star_product(A: LinearCode, B: LinearCode) -> LinearCode:
    """Span of all coordinate-wise products of codewords of A and B."""
    _check(A, B)
    rows = []
    for a in A.gen.basis.data:
        for b in B.gen.basis.data:
            rows.append(vec_star(A.field, a, b))
    return LinearCode.from_rows(A.field, rows, A.n)


def power(C: LinearCode, i: int) -> LinearCode:
    """Star power C^i, defined inductively; i >= 1."""
    if i < 1:
        raise ValueError("power must be >= 1")
    acc = C
    for _ in range(i - 1):
        acc = star_product(acc, C)
    return acc


def stabilizer(C: LinearCode) -> LinearCode:
    """Stab(C) = {x : x * C <= C}; always contains the all-ones vector."""
    f = C.field
    n = C.n
    H = parity_matrix(C)  # rows span the dual
    rows = []
    for g in C.gen.basis.data:
        for h in H.data:
            rows.append(vec_star(f, g, h))
    if not rows:
        return LinearCode.full(f, n)  # zero code: everything stabilises it
    return LinearCode(f, n, kernel(Matrix(f, [list(r) for r in rows], n)))


def is_degenerated(C: LinearCode) -> bool:
    """True iff dim Stab(C) > 1 (zero column or disjoint-support sum)."""
    if C.k == 0:
        raise ValueError("degeneracy is undefined for the zero code")
    return stabilizer(C).k > 1


def kneser_check(A: LinearCode, B: LinearCode) -> tuple[int, int, bool]:
    """dim(A*B) vs dim A + dim B - dim Stab(A*B); holds is a theorem."""
    _check(A, B)
    AB = star_product(A, B)
    lhs = AB.k
    rhs = A.k + B.k - stabilizer(AB).k
    return lhs, rhs, lhs >= rhs


def min_distance(C: LinearCode) -> int:
    """Brute-force minimum distance; enumeration is the point, so the
    budget q^k <= 2^24 is enforced."""
    if C.k == 0:
        raise ValueError("minimum distance of the zero code is undefined")
    if C.field.order**C.k > MIN_DISTANCE_BUDGET:
        raise ValueError("enumeration budget exceeded")
    best = C.n + 1
    for w in C.codewords():
        wt = weight(w)
        if 0 < wt < best:
            best = wt
    return best


# ---------------------------------------------------------------------------

def _check(A: LinearCode, B: LinearCode) -> None:
    if A.field is not B.field:
        raise ValueError("field mismatch")
    if A.n != B.n:
        raise ValueError("length mismatch")


def _validated(J: Iterable[int], n: int, allow_empty: bool) -> list[int]:
    J = sorted(set(int(j) for j in J))
    if not J and not allow_empty:
        raise ValueError("index set must be nonempty")
    if J and (J[0] < 0 or J[-1] >= n):
        raise ValueError("index out of range")
    return J


def _combine(field: Field, u: Sequence[int], G: Matrix) -> list[int]:
    out = [0] * G.ncols
    for c, row in zip(u, G.data):
        if c:
            for j, v in enumerate(row):
                if v:
                    out[j] = field.add(out[j], field.mul(c, v))
    return out
