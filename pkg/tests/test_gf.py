import random

import pytest

from pelp.gf import (GF, FieldElem, is_irreducible, parse_descriptor,
                     poly_divmod, poly_eval, poly_mul, smallest_irreducible)

# frozen canonical moduli (low-to-high coefficients); independently
# verified against sympy in test_modulus_irreducible_sympy below
KNOWN_MODULI = {
    (2, 2): (1, 1, 1),
    (2, 4): (1, 0, 0, 1, 1),
    (2, 6): (1, 0, 0, 0, 0, 1, 1),
    (3, 2): (1, 0, 1),
    (5, 1): (0, 1),
    (5, 16): (1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1),
}


@pytest.mark.parametrize("key,mod", sorted(KNOWN_MODULI.items()))
def test_canonical_modulus(key, mod):
    assert GF(*key).modulus == mod


def test_modulus_irreducible_sympy():
    sympy = pytest.importorskip("sympy")
    from sympy.abc import x
    for (p, m), mod in KNOWN_MODULI.items():
        if m == 1:
            continue
        poly = sympy.Poly(list(reversed(mod)), x, domain=sympy.GF(p))
        assert poly.is_irreducible, (p, m)


def test_modulus_minimality_small():
    # independent oracle: trial division by all lower-degree monic polys
    def reducible(cand, p):
        m = len(cand) - 1
        for d in range(1, m):
            for tail in range(p**d):
                div = []
                v = tail
                for _ in range(d):
                    div.append(v % p)
                    v //= p
                div.append(1)
                q, r = _polydiv(cand, div, p)
                if all(c == 0 for c in r):
                    return True
        return False

    def _polydiv(a, b, p):
        a = list(a)
        db = len(b) - 1
        q = [0] * (len(a) - db)
        for i in range(len(a) - db - 1, -1, -1):
            c = a[i + db]  # b monic
            q[i] = c
            for j in range(db + 1):
                a[i + j] = (a[i + j] - c * b[j]) % p
        return q, a

    for (p, m) in [(2, 2), (2, 4), (3, 2), (3, 3), (7, 2)]:
        found = smallest_irreducible(p, m)
        assert not reducible(found, p)
        # everything lexicographically smaller must be reducible
        import itertools
        for tail in itertools.product(range(p), repeat=m):
            cand = tail + (1,)
            if cand >= found:
                break
            assert cand[0] == 0 or reducible(cand, p), cand


def test_field_new_guards():
    with pytest.raises(ValueError):
        GF(4)
    with pytest.raises(ValueError):
        GF(2, 0)
    with pytest.raises(ValueError):
        GF(2, 64)
    assert GF(5, 1).modulus == (0, 1)


def test_interning_and_pickle():
    import pickle
    f1 = GF(13)
    assert f1 is GF(13)
    f2 = pickle.loads(pickle.dumps(GF(2, 4)))
    assert f2 is GF(2, 4)


@pytest.mark.parametrize("p,m", [(2, 1), (5, 1), (13, 1), (2, 2), (2, 6),
                                 (3, 2), (5, 16)])
def test_field_axioms(p, m):
    f = GF(p, m)
    rng = random.Random(p * 1000 + m)
    pick = lambda: rng.randrange(f.order)
    for _ in range(40):
        a, b, c = pick(), pick(), pick()
        assert f.add(a, b) == f.add(b, a)
        assert f.mul(a, b) == f.mul(b, a)
        assert f.add(f.add(a, b), c) == f.add(a, f.add(b, c))
        assert f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c))
        assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))
        assert f.add(a, 0) == a and f.mul(a, 1) == a
        assert f.add(a, f.neg(a)) == 0
        assert f.sub(a, b) == f.add(a, f.neg(b))
        if a:
            assert f.mul(a, f.inv(a)) == 1


@pytest.mark.parametrize("p,m", [(5, 1), (2, 6), (3, 2), (5, 16)])
def test_fermat(p, m):
    f = GF(p, m)
    rng = random.Random(99)
    for _ in range(8):
        a = rng.randrange(1, f.order)
        assert f.pow(a, f.order - 1) == 1


def test_specific_values():
    f5 = GF(5)
    assert f5.mul(3, 4) == 2
    assert f5.add(3, 0) == 3
    assert f5.inv(2) == 3
    assert GF(7).inv(1) == 1
    f4 = GF(2, 2)
    alpha = 2
    assert f4.mul(alpha, alpha) == 3            # alpha^2 = alpha + 1
    assert f4.inv(alpha) == 3                   # alpha * (alpha+1) = 1


def test_nth_roots():
    f4 = GF(2, 2)
    g = f4.nth_root_of_unity(3)
    assert f4.pow(g, 3) == 1 and g != 1
    assert GF(5).nth_root_of_unity(2) == 4
    f = GF(5, 16)
    g = f.nth_root_of_unity(51)
    assert f.pow(g, 51) == 1
    for k in (3, 17):                            # proper divisors of 51
        assert f.pow(g, k) != 1
    with pytest.raises(ValueError):
        GF(7).nth_root_of_unity(5)               # 5 does not divide 6
    with pytest.raises(ValueError):
        GF(5, 2).nth_root_of_unity(5)            # gcd(n, p) != 1


def test_root_order_divisor_property():
    f = GF(2, 6)
    for n in (3, 7, 9, 21, 63):
        g = f.nth_root_of_unity(n)
        assert f.pow(g, n) == 1
        for k in range(1, n):
            if n % k == 0:
                assert f.pow(g, k) != 1


def test_field_elem_wrapper():
    f4 = GF(2, 2)
    a = FieldElem(f4, 2)
    assert (a * a).value == 3
    assert (a + a).value == 0
    assert a.inverse().value == 3
    assert (a ** 3).value == 1
    assert a.coeffs == (0, 1)
    b = FieldElem(GF(5), 2)
    with pytest.raises(ValueError):
        _ = a + b
    with pytest.raises(ValueError):
        FieldElem(f4, 7)
    with pytest.raises(ZeroDivisionError):
        FieldElem(f4, 0).inverse()


def test_descriptor_roundtrip():
    for f in (GF(5), GF(2, 6), GF(5, 16)):
        assert parse_descriptor(f.descriptor()) is f
    assert parse_descriptor("GF(7)") is GF(7)
    with pytest.raises(ValueError):
        parse_descriptor("GF(2^2; 1,0,1)")  # x^2+1 is not the canonical modulus


def test_pack_coeffs_roundtrip():
    f = GF(3, 3)
    for v in range(f.order):
        assert f.pack(f.coeffs(v)) == v


def test_poly_helpers():
    f = GF(7)
    a = (1, 2, 3)            # 3x^2 + 2x + 1
    b = (0, 1)               # x
    assert poly_mul(f, a, b) == (0, 1, 2, 3)
    q, r = poly_divmod(f, poly_mul(f, a, b), a)
    assert q == (0, 1) and r == ()
    q, r = poly_divmod(f, (1, 1, 1), (1, 1))
    assert poly_eval(f, (1, 1, 1), 3) == (1 + 3 + 2) % 7
    # remainder correctness: a = q*b + r
    from pelp.gf import poly_trim
    recombined = poly_mul(f, q, (1, 1))
    total = tuple(f.add(x, y) for x, y in
                  zip(recombined + (0,) * 3, tuple(r) + (0,) * 3))
    assert poly_trim(total) == (1, 1, 1)


def test_is_irreducible_rejects():
    assert not is_irreducible((1, 0, 1), 2)     # (x+1)^2
    assert not is_irreducible((0, 1, 1), 2)     # x(x+1)
    assert is_irreducible((1, 1, 1), 2)
