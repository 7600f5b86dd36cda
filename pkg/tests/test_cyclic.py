import pytest

from pelp.codes import LinearCode, dual, star_product
from pelp.cyclic import (CyclicPairReport, bch_run_bound, code_from_defining_set,
                         code_from_generating_set, cyclic_pelp_pair, index_set,
                         interval_hull_size, nondegeneracy_check, roos_check,
                         root_matrix, scale_set, sum_set)
from pelp.gf import GF, FieldElem
from pelp.linalg import rref


def gamma_for(n, p, m):
    f = GF(p, m)
    return FieldElem(f, f.nth_root_of_unity(n))


def test_index_set_normalisation():
    S = index_set(5, [7, 1, 1, -1])
    assert S.elems == (1, 2, 4)
    assert 7 in S and 3 not in S


def test_sum_and_scale_sets():
    S = index_set(4, [0, 1])
    R = index_set(4, [0, 2])
    assert sum_set(S, R).elems == (0, 1, 2, 3)
    assert scale_set(1, R) is not None and scale_set(1, R).elems == R.elems
    with pytest.raises(ValueError):
        scale_set(2, R)  # gcd(2,4) != 1
    # the worked n=51 sum set
    S = index_set(51, list(range(25)) + [30])
    R = index_set(51, list(range(14)) + [19])
    SR = sum_set(S, R)
    assert len(SR) == 45
    assert SR.elems == tuple(list(range(44)) + [49])


def test_hull_and_runs():
    S = index_set(51, list(range(25)) + [30])
    R = index_set(51, list(range(14)) + [19])
    assert interval_hull_size(S) == 31
    assert interval_hull_size(R) == 20
    assert bch_run_bound(S) == 26
    assert bch_run_bound(R) == 15
    # circular wrap
    W = index_set(10, [8, 9, 0, 1])
    assert bch_run_bound(W) == 5
    assert interval_hull_size(W) == 4
    assert interval_hull_size(index_set(9, [4])) == 1


def test_roos_check():
    S = index_set(51, list(range(25)) + [30])
    R = index_set(51, list(range(14)) + [19])
    ok, d_roos = roos_check(S, R, 15)
    assert ok and d_roos == 40 and (d_roos - 1) // 2 == 19
    # interval S and R: reduces to a BCH-style statement, |hull| = |S|
    S2 = index_set(20, range(5))
    assert interval_hull_size(S2) == len(S2)
    ok, _ = roos_check(S2, index_set(20, range(3)), 4)
    assert ok
    # violated hypothesis
    ok, _ = roos_check(index_set(51, [0, 25]), index_set(51, [0]), 2)
    assert not ok
    with pytest.raises(ValueError):
        roos_check(S, R, 1)


def test_nondegeneracy():
    assert not nondegeneracy_check(index_set(51, [0, 17, 34]))
    assert nondegeneracy_check(index_set(51, list(range(14)) + [19]))
    # prime modulus: any proper nonempty subset passes
    assert nondegeneracy_check(index_set(13, [0, 5, 7]))
    assert not nondegeneracy_check(index_set(13, range(13)))
    with pytest.raises(ValueError):
        nondegeneracy_check(index_set(13, []))


def test_root_matrix():
    g = gamma_for(3, 2, 2)        # order-3 element of GF(4)
    M = root_matrix(index_set(3, [0]), g)
    assert M.data == [[1, 1, 1]]
    M = root_matrix(index_set(3, [0, 1]), g)
    assert M.data[0] == [1, 1, 1]
    assert M.data[1] == [1, g.value, g.field.mul(g.value, g.value)]
    bad = FieldElem(g.field, 1)
    with pytest.raises(ValueError):
        root_matrix(index_set(3, [0]), bad)


def test_root_matrix_rank_gf516():
    f = GF(5, 16)
    gamma = FieldElem(f, f.nth_root_of_unity(51))
    R = index_set(51, [0, 3, 7, 20, 33, 50])
    _, rank, _ = rref(root_matrix(R, gamma))
    assert rank == len(R)


def test_codes_from_sets():
    g = gamma_for(3, 2, 2)
    rep = code_from_generating_set(index_set(3, [0]), g)
    assert rep == LinearCode.from_rows(g.field, [[1, 1, 1]], 3)
    R = index_set(3, [0, 1])
    assert dual(code_from_generating_set(R, g)) == code_from_defining_set(R, g)
    # full Vandermonde: zero code
    assert code_from_defining_set(index_set(3, [0, 1, 2]), g).k == 0


def test_star_product_of_generating_sets():
    # generating sets S, R: A * B equals the code generated by S + R
    n, p, m = 15, 2, 4
    g = gamma_for(n, p, m)
    for S_el, R_el in [([0, 1, 2], [0, 5]), ([1, 7], [2, 3, 4]), ([0], [0, 1])]:
        S, R = index_set(n, S_el), index_set(n, R_el)
        A = code_from_generating_set(S, g)
        B = code_from_generating_set(R, g)
        W = code_from_generating_set(sum_set(S, R), g)
        assert star_product(A, B) == W


def test_small_cyclic_pair():
    # n = 15 over GF(16): intervals S, R produce a BCH-like pair.
    # Condition (i) needs B-dual * C to miss part of the space, which
    # forces 2|R| + |S| > n for interval sets; (7, 5) works.
    n = 15
    g = gamma_for(n, 2, 4)
    S = index_set(n, range(7))
    R = index_set(n, range(5))
    rep = cyclic_pelp_pair(S, R, 1, 1, 2, g)
    assert isinstance(rep, CyclicPairReport)
    assert rep.k == n - len(sum_set(S, R))
    assert rep.delta == (n - rep.k) - (len(S) + len(R) - 1)
    assert rep.delta >= 0 and all(gi >= 0 for gi in rep.gammas)
    assert rep.radius == rep.pair.t
    # jointly scaled variant keeps all dimensions
    rep2 = cyclic_pelp_pair(S, R, 2, 2, 2, g)
    assert rep2.k == rep.k and rep2.radius == rep.radius


def test_cyclic_pair_rejections():
    n = 15
    g = gamma_for(n, 2, 4)
    S = index_set(n, range(6))
    with pytest.raises(ValueError, match="coprime"):
        cyclic_pelp_pair(S, index_set(n, range(4)), 3, 1, 2, g)
    with pytest.raises(ValueError, match="Roos"):
        cyclic_pelp_pair(index_set(n, [0, 7]), index_set(n, [0, 1]), 1, 1, 2, g)
    # degenerate B: full coset {0, 5, 10} of the order-3 subgroup
    with pytest.raises(ValueError, match="condition \\(ii\\)"):
        cyclic_pelp_pair(S, index_set(n, [0, 5, 10]), 1, 1, 2, g,
                         d_r_lower=2)


def test_degenerate_b_rejected_n51():
    g = gamma_for(51, 5, 16)
    S = index_set(51, list(range(25)) + [30])
    with pytest.raises(ValueError, match="condition \\(ii\\)"):
        cyclic_pelp_pair(S, index_set(51, [0, 17, 34]), 1, 1, 2, g)


def test_report_dict():
    n = 15
    g = gamma_for(n, 2, 4)
    rep = cyclic_pelp_pair(index_set(n, range(7)), index_set(n, range(5)),
                           1, 1, 2, g)
    doc = rep.as_dict()
    assert doc["k"] == rep.k and doc["t"] == rep.pair.t
    assert "validation" in doc
