"""Exact dense linear algebra over a Field.

Matrices hold packed field elements (see pelp.gf) in row-major lists.
Everything here is deterministic: RREF always picks the first nonzero
pivot in column order, so canonical forms agree between the pure and the
compiled backend, across runs and platforms.

Vectors are tuples of packed elements; the module-level vec_* helpers
implement coordinate-wise operations shared by the code algebra and the
decoders.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from . import backend
from .gf import Field, parse_descriptor


class Matrix:
    """Dense matrix over a Field; treat instances as immutable."""

    __slots__ = ("field", "nrows", "ncols", "data")

    def __init__(self, field: Field, data: list[list[int]], ncols: int | None = None):
        self.field = field
        self.data = data
        self.nrows = len(data)
        if self.nrows:
            self.ncols = len(data[0])
        else:
            if ncols is None:
                raise ValueError("empty matrix needs an explicit column count")
            self.ncols = ncols

    # -- construction ---------------------------------------------------------

    @classmethod
    def from_rows(cls, field: Field, rows: Iterable[Sequence[int]], ncols: int | None = None) -> "Matrix":
        data = [[field.elem(v) for v in row] for row in rows]
        widths = {len(r) for r in data}
        if len(widths) > 1:
            raise ValueError("ragged rows")
        return cls(field, data, ncols if not data else None)

    @classmethod
    def zeros(cls, field: Field, nrows: int, ncols: int) -> "Matrix":
        return cls(field, [[0] * ncols for _ in range(nrows)], ncols)

    @classmethod
    def identity(cls, field: Field, n: int) -> "Matrix":
        data = [[0] * n for _ in range(n)]
        for i in range(n):
            data[i][i] = 1
        return cls(field, data, n)

    # -- views ------------------------------------------------------------------

    def copy_data(self) -> list[list[int]]:
        return [row[:] for row in self.data]

    def row(self, i: int) -> tuple[int, ...]:
        return tuple(self.data[i])

    def rows(self) -> list[tuple[int, ...]]:
        return [tuple(r) for r in self.data]

    def transpose(self) -> "Matrix":
        data = [[self.data[i][j] for i in range(self.nrows)] for j in range(self.ncols)]
        return Matrix(self.field, data, self.nrows)

    def columns(self, cols: Sequence[int]) -> "Matrix":
        data = [[row[c] for c in cols] for row in self.data]
        return Matrix(self.field, data, len(cols))

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.field is not other.field:
            raise ValueError("field mismatch")
        if self.ncols != other.nrows:
            raise ValueError("inner dimensions do not match")
        return Matrix(self.field, backend.matmul(self.field, self.data, other.data),
                      other.ncols)

    def mul_vec(self, v: Sequence[int]) -> tuple[int, ...]:
        if len(v) != self.ncols:
            raise ValueError("dimension mismatch")
        f = self.field
        out = []
        for row in self.data:
            acc = 0
            for a, b in zip(row, v):
                if a and b:
                    acc = f.add(acc, f.mul(a, b))
            out.append(acc)
        return tuple(out)

    def __eq__(self, other):
        return (isinstance(other, Matrix) and self.field is other.field
                and self.ncols == other.ncols and self.data == other.data)

    def __hash__(self):
        return hash((id(self.field), self.ncols, tuple(tuple(r) for r in self.data)))

    def __repr__(self):
        return f"Matrix({self.field!r}, {self.nrows}x{self.ncols})"

    # -- text format --------------------------------------------------------------
    # header: "p m c0,...,cm rows cols", then one line per row; entries are
    # coefficient tuples "c0:c1:..." (bare residue for prime fields).

    def to_text(self) -> str:
        f = self.field
        head = f"{f.p} {f.m} {','.join(map(str, f.modulus))} {self.nrows} {self.ncols}"
        lines = [head]
        for row in self.data:
            if f.m == 1:
                lines.append(" ".join(str(v) for v in row))
            else:
                lines.append(" ".join(":".join(map(str, f.coeffs(v))) for v in row))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "Matrix":
        lines = [ln for ln in text.strip().splitlines() if ln.strip()]
        p_s, m_s, mod_s, rows_s, cols_s = lines[0].split()
        p, m, nrows, ncols = int(p_s), int(m_s), int(rows_s), int(cols_s)
        field = parse_descriptor(f"GF({p}^{m}; {mod_s})")
        data = []
        for ln in lines[1:1 + nrows]:
            entries = ln.split()
            if len(entries) != ncols:
                raise ValueError("row width does not match header")
            row = []
            for e in entries:
                if ":" in e:
                    row.append(field.pack([int(c) for c in e.split(":")]))
                else:
                    row.append(field.elem(int(e)))
            data.append(row)
        if len(data) != nrows:
            raise ValueError("row count does not match header")
        return cls(field, data, ncols)


# ---------------------------------------------------------------------------
# canonical forms and solvers
# ---------------------------------------------------------------------------

def rref(M: Matrix) -> tuple[Matrix, int, list[int]]:
    """Unique reduced row echelon form, with rank and pivot columns."""
    data = M.copy_data()
    rank, pivots = backend.rref_inplace(M.field, data)
    return Matrix(M.field, data, M.ncols), rank, pivots


def kernel(M: Matrix) -> "Subspace":
    """Right kernel {x : M x^T = 0} as a canonical subspace of F^ncols."""
    R, rank, pivots = rref(M)
    n = M.ncols
    f = M.field
    pivset = set(pivots)
    free = [j for j in range(n) if j not in pivset]
    rows = []
    for fc in free:
        v = [0] * n
        v[fc] = 1
        for r, pc in enumerate(pivots):
            coef = R.data[r][fc]
            if coef:
                v[pc] = f.neg(coef)
        rows.append(v)
    return Subspace.from_rows(f, rows, n)


@dataclass
class LinearSolution:
    """Outcome of solve(): kind is 'unique', 'none' or 'underdetermined'."""

    kind: str
    x: tuple[int, ...] | None = None
    kernel: "Subspace | None" = None


def solve(A: Matrix, b: Sequence[int]) -> LinearSolution:
    """Solve A x = b over the field.

    Returns a unique solution, reports inconsistency, or hands back a
    particular solution together with the kernel.
    """
    if len(b) != A.nrows:
        raise ValueError("dimension mismatch between matrix and rhs")
    f = A.field
    n = A.ncols
    aug = [row[:] + [f.elem(v)] for row, v in zip(A.data, b)]
    if not aug:
        ker = kernel(A)
        x0 = tuple([0] * n)
        if ker.dim == 0:
            return LinearSolution("unique", x0)
        return LinearSolution("underdetermined", x0, ker)
    backend.rref_inplace(f, aug)
    Raug = Matrix(f, aug, n + 1)
    # pivot in the last column <=> inconsistent
    pivots = []
    for i in range(Raug.nrows):
        lead = next((j for j in range(n + 1) if Raug.data[i][j]), None)
        if lead is None:
            break
        if lead == n:
            return LinearSolution("none")
        pivots.append(lead)
    x = [0] * n
    for r, pc in enumerate(pivots):
        x[pc] = Raug.data[r][n]
    if len(pivots) == n:
        return LinearSolution("unique", tuple(x))
    ker = kernel(A)
    return LinearSolution("underdetermined", tuple(x), ker)


class Subspace:
    """Subspace of F^ambient held as its unique RREF basis, no zero rows."""

    __slots__ = ("field", "ambient", "basis")

    def __init__(self, field: Field, basis: Matrix, ambient: int):
        self.field = field
        self.basis = basis
        self.ambient = ambient

    @classmethod
    def from_rows(cls, field: Field, rows: Iterable[Sequence[int]], ambient: int) -> "Subspace":
        rows = list(rows)
        if not rows:
            return cls(field, Matrix(field, [], ambient), ambient)
        M = Matrix.from_rows(field, rows)
        if M.ncols != ambient:
            raise ValueError("row length does not match ambient dimension")
        R, rank, _ = rref(M)
        return cls(field, Matrix(field, R.data[:rank], ambient), ambient)

    @classmethod
    def zero(cls, field: Field, ambient: int) -> "Subspace":
        return cls(field, Matrix(field, [], ambient), ambient)

    @classmethod
    def full(cls, field: Field, ambient: int) -> "Subspace":
        return cls(field, Matrix.identity(field, ambient), ambient)

    @property
    def dim(self) -> int:
        return self.basis.nrows

    def contains(self, v: Sequence[int]) -> bool:
        return self.reduce(v) is None

    def reduce(self, v: Sequence[int]):
        """Residual of v after elimination by the basis; None if v inside."""
        f = self.field
        w = [f.elem(x) for x in v]
        if len(w) != self.ambient:
            raise ValueError("vector length mismatch")
        for row in self.basis.data:
            lead = next(j for j in range(self.ambient) if row[j])
            c = w[lead]
            if c:
                for j in range(lead, self.ambient):
                    if row[j]:
                        w[j] = f.sub(w[j], f.mul(c, row[j]))
        return None if all(x == 0 for x in w) else tuple(w)

    def is_subspace_of(self, other: "Subspace") -> bool:
        if self.ambient != other.ambient:
            raise ValueError("ambient mismatch")
        return all(other.contains(row) for row in self.basis.data)

    def dual(self) -> "Subspace":
        """Orthogonal complement under the standard bilinear form."""
        if self.dim == 0:
            return Subspace.full(self.field, self.ambient)
        return kernel(self.basis)

    def __eq__(self, other):
        return (isinstance(other, Subspace) and self.field is other.field
                and self.ambient == other.ambient and self.basis == other.basis)

    def __hash__(self):
        return hash((id(self.field), self.ambient, self.basis))

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient}, {self.field!r})"


def subspace_sum(U: Subspace, V: Subspace) -> Subspace:
    _check_pair(U, V)
    return Subspace.from_rows(U.field, U.basis.data + V.basis.data, U.ambient)


def intersect(U: Subspace, V: Subspace) -> Subspace:
    """U cap V via stacked parity: dualise both, stack, dualise back."""
    _check_pair(U, V)
    Hu = U.dual()
    Hv = V.dual()
    stacked = Matrix(U.field, Hu.basis.copy_data() + Hv.basis.copy_data(), U.ambient)
    if stacked.nrows == 0:
        return Subspace.full(U.field, U.ambient)
    return kernel(stacked)


def intersect_all(spaces: Sequence[Subspace]) -> Subspace:
    if not spaces:
        raise ValueError("need at least one subspace")
    acc = spaces[0]
    for s in spaces[1:]:
        acc = intersect(acc, s)
    return acc


def _check_pair(U: Subspace, V: Subspace) -> None:
    if U.field is not V.field:
        raise ValueError("field mismatch")
    if U.ambient != V.ambient:
        raise ValueError("ambient dimension mismatch")


# ---------------------------------------------------------------------------
# vector helpers
# ---------------------------------------------------------------------------

def vec_add(field: Field, a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    return tuple(field.add(x, y) for x, y in zip(a, b, strict=True))


def vec_sub(field: Field, a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    return tuple(field.sub(x, y) for x, y in zip(a, b, strict=True))


def vec_star(field: Field, a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    """Coordinate-wise (star/Schur) product."""
    return tuple(field.mul(x, y) for x, y in zip(a, b, strict=True))


def vec_pow(field: Field, a: Sequence[int], i: int) -> tuple[int, ...]:
    return tuple(field.pow(x, i) for x in a)


def vec_dot(field: Field, a: Sequence[int], b: Sequence[int]) -> int:
    acc = 0
    for x, y in zip(a, b, strict=True):
        if x and y:
            acc = field.add(acc, field.mul(x, y))
    return acc


def weight(a: Sequence[int]) -> int:
    return sum(1 for x in a if x)


def support(a: Sequence[int]) -> tuple[int, ...]:
    return tuple(i for i, x in enumerate(a) if x)


def hamming_distance(a: Sequence[int], b: Sequence[int]) -> int:
    return sum(1 for x, y in zip(a, b, strict=True) if x != y)
