"""Exact arithmetic in GF(p) and GF(p^m).

Field elements are plain Python integers in ``[0, p**m)`` encoding the
coefficient vector of the residue polynomial in base ``p`` (low degree
digit first, so the constant term is ``value % p``).  For a prime field
this is just the residue itself.  The encoding keeps every element inside
a machine word (construction enforces ``p**m <= 2**63``), which lets the
compiled elimination kernel and the pure-Python one share matrix buffers.

The reduction modulus of GF(p^m) is pinned deterministically: it is the
lexicographically smallest monic irreducible polynomial of degree m over
GF(p), coefficients compared low-to-high degree.  Fields with at most
2^16 elements precompute discrete log/antilog tables; larger fields use
coefficient-vector arithmetic (no tables -- they would not fit).
"""

from __future__ import annotations

import itertools
from typing import Iterator, Sequence

MAX_ORDER = 2**63
TABLE_LIMIT = 2**16


# ---------------------------------------------------------------------------
# integer helpers (primality / factoring, used for moduli and element orders)
# ---------------------------------------------------------------------------

def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid for all n < 3.3e24."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n: int) -> int:
    if n % 2 == 0:
        return 2
    from math import gcd

    c = 1
    while True:
        x = y = 2
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = gcd(abs(x - y), n)
        if d != n:
            return d
        c += 1


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n, ascending."""
    out: set[int] = set()
    stack = [n]
    while stack:
        v = stack.pop()
        if v < 2:
            continue
        if is_prime(v):
            out.add(v)
            continue
        d = 2
        found = False
        while d * d <= v and d < 10000:
            if v % d == 0:
                stack.extend([d, v // d])
                found = True
                break
            d += 1
        if not found:
            d = _pollard_rho(v)
            stack.extend([d, v // d])
    return sorted(out)


# ---------------------------------------------------------------------------
# dense polynomial arithmetic over GF(p) (modulus search only)
# ---------------------------------------------------------------------------

def _pdeg(a: Sequence[int], p: int) -> int:
    d = len(a) - 1
    while d >= 0 and a[d] % p == 0:
        d -= 1
    return d


def _pmulmod(a, b, f, p):
    m = len(f) - 1
    res = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                res[i + j] = (res[i + j] + ai * bj) % p
    for i in range(len(res) - 1, m - 1, -1):
        c = res[i]
        if c:
            res[i] = 0
            for j in range(m):
                res[i - m + j] = (res[i - m + j] - c * f[j]) % p
    res = res[:m]
    return tuple(res) + (0,) * (m - len(res))


def _ppowmod(base, e, f, p):
    m = len(f) - 1
    r = (1,) + (0,) * (m - 1)
    b = tuple(base)
    while e:
        if e & 1:
            r = _pmulmod(r, b, f, p)
        b = _pmulmod(b, b, f, p)
        e >>= 1
    return r


def _pgcd(a, b, p):
    a = [v % p for v in a]
    b = [v % p for v in b]
    while _pdeg(b, p) >= 0:
        db = _pdeg(b, p)
        inv = pow(b[db], p - 2, p)
        while _pdeg(a, p) >= db:
            da = _pdeg(a, p)
            c = a[da] * inv % p
            for i in range(db + 1):
                a[da - db + i] = (a[da - db + i] - c * b[i]) % p
        a, b = b, a
    return a


def is_irreducible(coeffs: Sequence[int], p: int) -> bool:
    """Rabin test for a monic polynomial given low-to-high over GF(p)."""
    m = len(coeffs) - 1
    if m == 1:
        return True
    x = (0, 1) + (0,) * (m - 2)
    h = x
    for _ in range(m):
        h = _ppowmod(h, p, coeffs, p)
    if any((h[i] - x[i]) % p for i in range(m)):
        return False
    for r in prime_factors(m):
        h = x
        for _ in range(m // r):
            h = _ppowmod(h, p, coeffs, p)
        diff = [(h[i] - x[i]) % p for i in range(m)]
        if _pdeg(_pgcd(diff, list(coeffs), p), p) != 0:
            return False
    return True


def smallest_irreducible(p: int, m: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree m over GF(p).

    Coefficient tuples (c0, ..., cm) are compared low-to-high degree; the
    leading coefficient is fixed to 1.  c0 = 0 is skipped outright (such a
    polynomial is divisible by x, except for degree 1 where x itself is
    the minimum).
    """
    if m == 1:
        return (0, 1)
    for c0 in range(1, p):
        for rest in itertools.product(range(p), repeat=m - 1):
            cand = (c0,) + rest + (1,)
            if is_irreducible(cand, p):
                return cand
    raise ArithmeticError(f"no irreducible of degree {m} over GF({p})")


# ---------------------------------------------------------------------------
# fields
# ---------------------------------------------------------------------------

class Field:
    """Base class; use the GF() factory rather than instantiating directly.

    Subclasses implement add/sub/neg/mul/inv on packed integer elements.
    Instances are immutable and interned per (p, m).
    """

    p: int
    m: int
    order: int
    modulus: tuple[int, ...]

    # -- element plumbing ---------------------------------------------------

    def elem(self, value) -> int:
        """Validate/convert an element given as int or coefficient vector."""
        if isinstance(value, FieldElem):
            if value.field is not self:
                raise ValueError("field mismatch")
            return value.value
        if isinstance(value, int):
            if not 0 <= value < self.order:
                raise ValueError(f"{value} is not an element of {self}")
            return value
        return self.pack(value)

    def pack(self, coeffs: Sequence[int]) -> int:
        if len(coeffs) != self.m:
            raise ValueError(f"expected {self.m} coefficients")
        v = 0
        for c in reversed(list(coeffs)):
            c = int(c) % self.p
            v = v * self.p + c
        return v

    def coeffs(self, a: int) -> tuple[int, ...]:
        out = []
        p = self.p
        for _ in range(self.m):
            a, r = divmod(a, p)
            out.append(r)
        return tuple(out)

    def zero(self) -> int:
        return 0

    def one(self) -> int:
        return 1

    def elements(self) -> Iterator[int]:
        return iter(range(self.order))

    # -- arithmetic (subclass responsibility) -------------------------------

    def add(self, a: int, b: int) -> int:
        raise NotImplementedError

    def sub(self, a: int, b: int) -> int:
        raise NotImplementedError

    def neg(self, a: int) -> int:
        raise NotImplementedError

    def mul(self, a: int, b: int) -> int:
        raise NotImplementedError

    def inv(self, a: int) -> int:
        raise NotImplementedError

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        r = 1
        while e:
            if e & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            e >>= 1
        return r

    # -- multiplicative structure -------------------------------------------

    def element_order(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("zero has no multiplicative order")
        n = self.order - 1
        for r in prime_factors(n):
            while n % r == 0 and self.pow(a, n // r) == 1:
                n //= r
        return n

    def smallest_primitive_element(self) -> int:
        """Smallest packed value generating the multiplicative group."""
        if self._primitive is None:
            n = self.order - 1
            checks = [n // r for r in prime_factors(n)]
            g = 2 if self.order > 2 else 1
            while True:
                if all(self.pow(g, e) != 1 for e in checks):
                    self._primitive = g
                    break
                g += 1
        return self._primitive

    def nth_root_of_unity(self, n: int) -> int:
        """Deterministic primitive n-th root of unity.

        Requires gcd(n, p) = 1 and n | p^m - 1; derived as g^((p^m-1)/n)
        for g the smallest primitive element, so it is stable across runs.
        """
        if n < 1:
            raise ValueError("n must be positive")
        from math import gcd

        if gcd(n, self.p) != 1:
            raise ValueError(f"gcd(n, p) != 1 for n={n}, p={self.p}")
        if (self.order - 1) % n != 0:
            raise ValueError(f"{n} does not divide {self.p}^{self.m} - 1")
        g = self.smallest_primitive_element()
        return self.pow(g, (self.order - 1) // n)

    # -- misc ----------------------------------------------------------------

    def descriptor(self) -> str:
        """Textual descriptor ``GF(p^m; c_0,...,c_m)`` (modulus low-to-high)."""
        return f"GF({self.p}^{self.m}; {','.join(map(str, self.modulus))})"

    def __repr__(self) -> str:
        return f"GF({self.p})" if self.m == 1 else f"GF({self.p}^{self.m})"

    def __reduce__(self):
        return (GF, (self.p, self.m))

    # filled by GF()
    _primitive: int | None = None


class PrimeField(Field):
    def __init__(self, p: int):
        self.p = p
        self.m = 1
        self.order = p
        self.modulus = (0, 1)
        self._primitive = None

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return -a % self.p

    def mul(self, a, b):
        return a * b % self.p

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, self.p - 2, self.p)

    def pow(self, a, e):
        if e < 0:
            return pow(self.inv(a), -e, self.p)
        return pow(a, e, self.p)


class ExtensionField(Field):
    """GF(p^m), m >= 2, elements packed base-p into a single integer.

    Multiplication packs both digit vectors into wide-lane integers so the
    convolution happens in one bignum product; lanes are then reduced mod p
    and folded through the (monic) modulus.  Fields with at most 2^16
    elements replace all of that with log/antilog tables.
    """

    def __init__(self, p: int, m: int, modulus: tuple[int, ...]):
        self.p = p
        self.m = m
        self.order = p**m
        self.modulus = modulus
        self._primitive = None
        # lane width: products of m digit pairs must not overflow a lane
        self._w = max((m * (p - 1) * (p - 1)).bit_length(), (2 * p).bit_length())
        self._mask = (1 << self._w) - 1
        # modulus tail: x^m = -(tail); list of (exponent, coefficient)
        self._tail = [(j, (-modulus[j]) % p) for j in range(m) if modulus[j] % p]
        self._exp: list[int] | None = None
        self._log: list[int] | None = None
        if self.order <= TABLE_LIMIT:
            self._build_tables()

    # -- table construction ---------------------------------------------------

    def _build_tables(self):
        g = self.smallest_primitive_element()
        q1 = self.order - 1
        exp = [1] * (2 * q1)
        log = [0] * self.order
        v = 1
        for i in range(q1):
            exp[i] = v
            log[v] = i
            v = self._mul_raw(v, g)
        for i in range(q1, 2 * q1):
            exp[i] = exp[i - q1]
        self._exp = exp
        self._log = log

    # -- digit helpers ----------------------------------------------------------

    def _digits(self, a: int) -> list[int]:
        p = self.p
        out = []
        for _ in range(self.m):
            a, r = divmod(a, p)
            out.append(r)
        return out

    def _mul_raw(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        p, m, w, mask = self.p, self.m, self._w, self._mask
        da = self._digits(a)
        db = self._digits(b)
        la = 0
        for d in reversed(da):
            la = (la << w) | d
        lb = 0
        for d in reversed(db):
            lb = (lb << w) | d
        prod = la * lb
        ext = [(prod >> (w * i)) & mask for i in range(2 * m - 1)]
        for i in range(2 * m - 2, m - 1, -1):
            c = ext[i] % p
            if c:
                for j, t in self._tail:
                    ext[i - m + j] += c * t
        v = 0
        for i in range(m - 1, -1, -1):
            v = v * p + ext[i] % p
        return v

    # -- arithmetic -------------------------------------------------------------

    def add(self, a, b):
        p = self.p
        v = 0
        mult = 1
        for _ in range(self.m):
            a, ra = divmod(a, p)
            b, rb = divmod(b, p)
            v += (ra + rb) % p * mult
            mult *= p
        return v

    def sub(self, a, b):
        p = self.p
        v = 0
        mult = 1
        for _ in range(self.m):
            a, ra = divmod(a, p)
            b, rb = divmod(b, p)
            v += (ra - rb) % p * mult
            mult *= p
        return v

    def neg(self, a):
        p = self.p
        v = 0
        mult = 1
        for _ in range(self.m):
            a, r = divmod(a, p)
            v += -r % p * mult
            mult *= p
        return v

    def mul(self, a, b):
        if self._exp is not None:
            if a == 0 or b == 0:
                return 0
            return self._exp[self._log[a] + self._log[b]]
        return self._mul_raw(a, b)

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        if self._exp is not None:
            return self._exp[self.order - 1 - self._log[a]]
        # extended Euclid on digit polynomials
        p = self.p
        r0 = list(self.modulus)
        r1 = self._digits(a) + [0]
        s0, s1 = [0] * (self.m + 1), [1] + [0] * self.m
        while _pdeg(r1, p) > 0:
            d0, d1 = _pdeg(r0, p), _pdeg(r1, p)
            if d0 < d1:
                r0, r1, s0, s1 = r1, r0, s1, s0
                continue
            c = r0[d0] * pow(r1[d1], p - 2, p) % p
            shift = d0 - d1
            for i in range(d1 + 1):
                r0[i + shift] = (r0[i + shift] - c * r1[i]) % p
            for i in range(self.m + 1 - shift):
                s0[i + shift] = (s0[i + shift] - c * s1[i]) % p
            if _pdeg(r0, p) < _pdeg(r1, p):
                r0, r1, s0, s1 = r1, r0, s1, s0
        if _pdeg(r1, p) < 0:
            raise ZeroDivisionError("element not invertible")  # cannot happen
        c = pow(r1[0], p - 2, p)
        v = 0
        for i in range(self.m - 1, -1, -1):
            v = v * p + s1[i] * c % p
        return v


class FieldElem:
    """Convenience wrapper pairing a packed value with its field.

    The linear algebra layer works on raw integers; this class exists for
    scalar-level work and the textual interfaces, where mixing elements of
    different fields must fail loudly.
    """

    __slots__ = ("field", "value")

    def __init__(self, field: Field, value):
        self.field = field
        self.value = field.elem(value)

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.field.coeffs(self.value)

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElem):
            if other.field is not self.field:
                raise ValueError("field mismatch")
            return other.value
        if isinstance(other, int):
            return self.field.elem(other)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other):
        v = self._coerce(other)
        return FieldElem(self.field, self.field.add(self.value, v))

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        return FieldElem(self.field, self.field.sub(self.value, v))

    def __rsub__(self, other):
        v = self._coerce(other)
        return FieldElem(self.field, self.field.sub(v, self.value))

    def __mul__(self, other):
        v = self._coerce(other)
        return FieldElem(self.field, self.field.mul(self.value, v))

    __rmul__ = __mul__

    def __truediv__(self, other):
        v = self._coerce(other)
        return FieldElem(self.field, self.field.div(self.value, v))

    def __pow__(self, e: int):
        return FieldElem(self.field, self.field.pow(self.value, e))

    def __neg__(self):
        return FieldElem(self.field, self.field.neg(self.value))

    def inverse(self) -> "FieldElem":
        return FieldElem(self.field, self.field.inv(self.value))

    def __eq__(self, other):
        if isinstance(other, FieldElem):
            return self.field is other.field and self.value == other.value
        if isinstance(other, int):
            return self.value == other
        return NotImplemented

    def __hash__(self):
        return hash((id(self.field), self.value))

    def __repr__(self):
        return f"FieldElem({self.field!r}, {self.value})"


_FIELD_CACHE: dict[tuple[int, int], Field] = {}


def GF(p: int, m: int = 1) -> Field:
    """Return the canonical field GF(p^m).

    The modulus is pinned (smallest monic irreducible, low-to-high lex), so
    the returned object is identical across runs; instances are interned.
    """
    key = (p, m)
    cached = _FIELD_CACHE.get(key)
    if cached is not None:
        return cached
    if m < 1:
        raise ValueError("extension degree must be >= 1")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p**m > MAX_ORDER:
        raise ValueError(f"field order {p}^{m} exceeds 2^63")
    if m == 1:
        f: Field = PrimeField(p)
    else:
        f = ExtensionField(p, m, smallest_irreducible(p, m))
    _FIELD_CACHE[key] = f
    return f


def parse_descriptor(text: str) -> Field:
    """Parse ``GF(p^m; c0,...,cm)`` (or the shorthand ``GF(p)``)."""
    s = text.strip()
    if not (s.startswith("GF(") and s.endswith(")")):
        raise ValueError(f"bad field descriptor: {text!r}")
    body = s[3:-1]
    head = body.split(";")[0].strip()
    if "^" in head:
        p_str, m_str = head.split("^")
        p, m = int(p_str), int(m_str)
    else:
        p, m = int(head), 1
    field = GF(p, m)
    if ";" in body:
        coeffs = tuple(int(c) for c in body.split(";")[1].split(","))
        if coeffs != field.modulus:
            raise ValueError(
                f"descriptor modulus {coeffs} differs from canonical {field.modulus}"
            )
    return field


# ---------------------------------------------------------------------------
# polynomials with coefficients in a Field (packed values, low degree first)
# ---------------------------------------------------------------------------

def poly_trim(coeffs: Sequence[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def poly_deg(coeffs: Sequence[int]) -> int:
    """Degree, with deg 0 = -1 for the zero polynomial."""
    d = len(coeffs) - 1
    while d >= 0 and coeffs[d] == 0:
        d -= 1
    return d


def poly_eval(field: Field, coeffs: Sequence[int], x: int) -> int:
    acc = 0
    for c in reversed(list(coeffs)):
        acc = field.add(field.mul(acc, x), c)
    return acc


def poly_mul(field: Field, a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    if not a or not b:
        return ()
    res = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    res[i + j] = field.add(res[i + j], field.mul(ai, bj))
    return poly_trim(res)


def poly_divmod(field: Field, a: Sequence[int], b: Sequence[int]):
    """Return (quotient, remainder) of a / b; b must be nonzero."""
    db = poly_deg(b)
    if db < 0:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    da = poly_deg(r)
    if da < db:
        return (), poly_trim(r)
    q = [0] * (da - db + 1)
    inv_lead = field.inv(b[db])
    for i in range(da - db, -1, -1):
        c = field.mul(r[i + db], inv_lead)
        if c:
            q[i] = c
            for j in range(db + 1):
                r[i + j] = field.sub(r[i + j], field.mul(c, b[j]))
    return poly_trim(q), poly_trim(r)
