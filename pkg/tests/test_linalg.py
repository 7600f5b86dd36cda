import random

import pytest

from pelp.backend import has_compiled, set_backend
from pelp.gf import GF
from pelp.linalg import (Matrix, Subspace, intersect, kernel, rref, solve,
                         subspace_sum, vec_dot, vec_star, weight)


def random_matrix(field, nrows, ncols, rng):
    return Matrix(field, [[rng.randrange(field.order) for _ in range(ncols)]
                          for _ in range(nrows)], ncols)


def test_rref_examples():
    f2 = GF(2)
    R, rank, piv = rref(Matrix.from_rows(f2, [[1, 1], [0, 1]]))
    assert R.data == [[1, 0], [0, 1]] and rank == 2
    Z, rank, piv = rref(Matrix.zeros(GF(5), 3, 4))
    assert rank == 0 and Z.data == [[0] * 4] * 3


def test_rref_idempotent_and_canonical(rng):
    f = GF(7)
    for _ in range(25):
        M = random_matrix(f, 5, 9, rng)
        R1, rank, _ = rref(M)
        R2, rank2, _ = rref(R1)
        assert R1.data == R2.data and rank == rank2
        # row-equivalent matrix: random invertible row operations
        data = M.copy_data()
        for _ in range(10):
            i, j = rng.randrange(5), rng.randrange(5)
            c = rng.randrange(1, 7)
            if i != j:
                data[i] = [f.add(a, f.mul(c, b)) for a, b in zip(data[i], data[j])]
            else:
                data[i] = [f.mul(c, a) for a in data[i]]
        R3, _, _ = rref(Matrix(f, data, 9))
        assert R3.data == R1.data


def test_rank_transpose_crosscheck(rng):
    f = GF(7)
    for _ in range(10):
        M = random_matrix(f, 5, 9, rng)
        _, rank, _ = rref(M)
        _, rank_t, _ = rref(M.transpose())
        assert rank == rank_t


def test_kernel():
    f2 = GF(2)
    K = kernel(Matrix.from_rows(f2, [[1, 1, 1]]))
    assert K.dim == 2
    for v in [(1, 1, 0), (1, 0, 1)]:
        assert K.contains(v)
    assert kernel(Matrix.identity(GF(3), 4)).dim == 0


def test_kernel_rank_nullity(rng):
    f = GF(5)
    for _ in range(20):
        M = random_matrix(f, 4, 10, rng)
        _, rank, _ = rref(M)
        K = kernel(M)
        assert K.dim + rank == 10
        for row in K.basis.data:
            assert all(v == 0 for v in M.mul_vec(row))


def test_solve_cases():
    f7 = GF(7)
    s = solve(Matrix.identity(f7, 3), [1, 2, 3])
    assert s.kind == "unique" and s.x == (1, 2, 3)
    s = solve(Matrix.from_rows(GF(2), [[1, 1]]), [1])
    assert s.kind == "underdetermined" and s.kernel.dim == 1
    xk = s.x
    assert (xk[0] + xk[1]) % 2 == 1
    s = solve(Matrix.from_rows(GF(3), [[1, 0], [1, 0]]), [1, 2])
    assert s.kind == "none"
    with pytest.raises(ValueError):
        solve(Matrix.identity(f7, 3), [1, 2])


def test_solve_random_consistency(rng):
    f = GF(13)
    for _ in range(20):
        A = random_matrix(f, 6, 4, rng)
        x = [rng.randrange(13) for _ in range(4)]
        b = A.mul_vec(x)
        s = solve(A, b)
        assert s.kind in ("unique", "underdetermined")
        assert A.mul_vec(s.x) == b


def test_subspace_canonical():
    f = GF(5)
    U = Subspace.from_rows(f, [[2, 4, 0], [1, 2, 0]], 3)
    assert U.dim == 1
    assert U.basis.data == [[1, 2, 0]]
    assert U == Subspace.from_rows(f, [[4, 3, 0]], 3)


def test_intersect_properties(rng):
    f = GF(5)
    full = Subspace.full(f, 8)
    for _ in range(15):
        U = Subspace.from_rows(f, [[rng.randrange(5) for _ in range(8)]
                                   for _ in range(3)], 8)
        V = Subspace.from_rows(f, [[rng.randrange(5) for _ in range(8)]
                                   for _ in range(4)], 8)
        W = intersect(U, V)
        assert W == intersect(V, U)
        assert intersect(U, U) == U
        assert intersect(U, full) == U
        for row in W.basis.data:
            assert U.contains(row) and V.contains(row)
        # dimension formula
        assert W.dim == U.dim + V.dim - subspace_sum(U, V).dim
        assert W.is_subspace_of(U)


def test_intersect_disjoint():
    f2 = GF(2)
    U = Subspace.from_rows(f2, [[1, 0, 0]], 3)
    V = Subspace.from_rows(f2, [[0, 1, 0]], 3)
    assert intersect(U, V).dim == 0


def test_dual_of_subspace(rng):
    f = GF(7)
    U = Subspace.from_rows(f, [[rng.randrange(7) for _ in range(6)]
                               for _ in range(2)], 6)
    D = U.dual()
    assert D.dim == 6 - U.dim
    for u in U.basis.data:
        for d in D.basis.data:
            assert vec_dot(f, u, d) == 0
    assert D.dual() == U


def test_matrix_text_roundtrip():
    for f in (GF(13), GF(2, 2), GF(5, 16)):
        rng = random.Random(5)
        M = random_matrix(f, 3, 5, rng)
        M2 = Matrix.from_text(M.to_text())
        assert M2.field is f and M2.data == M.data


def test_matmul(rng):
    f = GF(13)
    A = random_matrix(f, 3, 4, rng)
    B = random_matrix(f, 4, 5, rng)
    C = A @ B
    for i in range(3):
        for j in range(5):
            expect = 0
            for k in range(4):
                expect = f.add(expect, f.mul(A.data[i][k], B.data[k][j]))
            assert C.data[i][j] == expect


def test_vec_helpers():
    f = GF(5)
    assert vec_star(f, (1, 2, 3), (2, 2, 2)) == (2, 4, 1)
    assert weight((0, 1, 0, 4)) == 2


@pytest.mark.skipif(not has_compiled(), reason="compiled kernel not built")
def test_backend_parity(rng):
    for (p, m) in [(13, 1), (2, 6), (3, 2), (5, 16)]:
        f = GF(p, m)
        rows = [[rng.randrange(f.order) for _ in range(12)] for _ in range(9)]
        try:
            set_backend("pure")
            R1, k1, p1 = rref(Matrix(f, [r[:] for r in rows], 12))
            set_backend("compiled")
            R2, k2, p2 = rref(Matrix(f, [r[:] for r in rows], 12))
        finally:
            set_backend("auto")
        assert (R1.data, k1, p1) == (R2.data, k2, p2)
