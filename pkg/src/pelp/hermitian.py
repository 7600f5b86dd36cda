"""One-point codes on the Hermitian curve y^q0 + y = x^(q0+1) over GF(q0^2).

The curve has q0^3 affine rational points and genus g = q0(q0-1)/2.  The
function space L(m P_inf) has the explicit monomial basis
{x^a y^b : 0 <= b <= q0-1, a q0 + b (q0+1) <= m}, which makes these codes
implementable without general Riemann-Roch machinery.  The dual of the
code of divisor degree m is the code of degree n + 2g - 2 - m; the pair
construction below never assumes this -- duals are always computed
matricially -- but the tests confirm it, and it is what realises the
divisor D + W - F - G without an explicit differential.

Points are ordered lexicographically by their packed (x, y) coordinates,
monomials by pole order at infinity, so all generator matrices are
reproducible bit-for-bit.
"""

from __future__ import annotations

from . import decoders
from .codes import LinearCode, dual
from .gf import GF, Field
from .linalg import Matrix


def _base_prime(q0: int) -> tuple[int, int]:
    """Split a prime power q0 = p^e; error if q0 is not one."""
    for p in range(2, q0 + 1):
        if q0 % p == 0:
            e = 0
            v = q0
            while v % p == 0:
                v //= p
                e += 1
            if v != 1:
                raise ValueError(f"q0 = {q0} is not a prime power")
            return p, e
    raise ValueError(f"q0 = {q0} is not a prime power")


def genus(q0: int) -> int:
    return q0 * (q0 - 1) // 2


def hermitian_field(q0: int) -> Field:
    p, e = _base_prime(q0)
    return GF(p, 2 * e)


def hermitian_points(q0: int) -> list[tuple[int, int]]:
    """The q0^3 affine points of the curve, lexicographic in (x, y)."""
    f = hermitian_field(q0)
    pts = []
    for a in f.elements():
        rhs = f.pow(a, q0 + 1)
        for b in f.elements():
            if f.add(f.pow(b, q0), b) == rhs:
                pts.append((a, b))
    if len(pts) != q0**3:
        raise AssertionError("curve point count mismatch")
    return pts


def rr_basis(q0: int, m: int) -> list[tuple[int, int]]:
    """Monomial exponents (a, b) spanning L(m P_inf), by pole order.

    Pole orders a*q0 + b*(q0+1) are pairwise distinct on this range, so
    the ordering is strict and the basis triangular by pole order.
    """
    if m < 0:
        return []
    out = []
    for b in range(q0):
        wb = b * (q0 + 1)
        if wb > m:
            break
        for a in range((m - wb) // q0 + 1):
            out.append((a, b))
    out.sort(key=lambda ab: ab[0] * q0 + ab[1] * (q0 + 1))
    return out


class HermitianCode:
    """Evaluation code C_L(P, m P_inf) with its raw monomial evaluations."""

    __slots__ = ("q0", "m", "field", "points", "monomials", "eval_matrix",
                 "code", "genus", "_rr_cache")

    def __init__(self, q0: int, m: int):
        n = q0**3
        if not 0 <= m < n:
            raise ValueError(f"divisor degree must be in [0, {n})")
        self.q0 = q0
        self.m = m
        self.field = hermitian_field(q0)
        self.points = hermitian_points(q0)
        self.genus = genus(q0)
        self.monomials, rows = _evaluate_monomials(self.field, self.points,
                                                   rr_basis(q0, m), q0)
        self.eval_matrix = Matrix(self.field, rows, n)
        self.code = LinearCode.from_rows(self.field, rows, n)
        self._rr_cache: dict[int, tuple[list[tuple[int, int]], list[list[int]]]] = {}

    @property
    def n(self) -> int:
        return len(self.points)

    @property
    def designed_distance(self) -> int:
        return self.n - self.m

    def rr_eval(self, bound: int):
        """Monomials of L(bound * P_inf) and their point evaluations."""
        cached = self._rr_cache.get(bound)
        if cached is None:
            cached = _evaluate_monomials(self.field, self.points,
                                         rr_basis(self.q0, bound), self.q0)
            self._rr_cache[bound] = cached
        return cached

    def __repr__(self):
        return f"HermitianCode(q0={self.q0}, m={self.m})[{self.n}, {self.code.k}]"


def _evaluate_monomials(field: Field, points, monomials, q0: int):
    # shared power tables keep the q0=4 construction quick
    xs = [p[0] for p in points]
    ys = [p[1] for p in points]
    max_a = max((a for a, _ in monomials), default=0)
    xpow = [[1] * len(points)]
    for _ in range(max_a):
        xpow.append([field.mul(v, x) for v, x in zip(xpow[-1], xs)])
    ypow = [[1] * len(points)]
    for _ in range(q0 - 1):
        ypow.append([field.mul(v, y) for v, y in zip(ypow[-1], ys)])
    rows = [[field.mul(xa, yb) for xa, yb in zip(xpow[a], ypow[b])]
            for a, b in monomials]
    return list(monomials), rows


def one_point_code(q0: int, m: int) -> HermitianCode:
    return HermitianCode(q0, m)


def ag_pelp_pair(q0: int, degG: int, t: int, ell: int = 2) -> "decoders.PelpPair":
    """Locating pair for C = C_L(degG * P_inf) at radius t and power ell.

    A has divisor degree t + 2g; B is the matricial dual of the code of
    degree t + 2g + degG.  Raises naming the violated condition when the
    divisor-degree preconditions fail; borderline regimes (the strict
    radius inequality, or B-dual * C^(ell-1) filling the whole space) are
    reported as warnings on the pair, not errors.
    """
    g = genus(q0)
    n = q0**3
    if degG < 2 * g:
        raise ValueError(f"additional condition 2 violated: degG = {degG} < 2g = {2 * g}")
    if t < 0:
        raise ValueError("t must be >= 0")
    if t > n - ell * degG - 2 * g:
        raise ValueError(
            f"additional condition 3 violated: t = {t} > n - ell*degG - 2g = "
            f"{n - ell * degG - 2 * g}")
    degF = t + 2 * g
    if degF >= n - degG:
        raise ValueError(f"deg F = t + 2g = {degF} must be < n - degG = {n - degG}")
    Ch = one_point_code(q0, degG)
    Ah = one_point_code(q0, degF)
    Bsrc = one_point_code(q0, degF + degG)
    pair = decoders.PelpPair(
        A=Ah.code, B=dual(Bsrc.code), C=Ch.code, ell=ell, t=t,
        family="hermitian",
        meta={
            "genus": g, "degF": degF, "degG": degG,
            "deg_dualB": degF + degG, "q0": q0,
            "source": Ch,
        },
    )
    warnings = []
    if t == n - ell * degG - 2 * g:
        warnings.append("strict radius condition t < n - ell*degG - 2g not met")
    if any(pair.vspace(i).k == 0 for i in range(2, ell + 1)):
        warnings.append("B-dual * C^(i-1) fills the full space for some i")
    elif ell == 2 and t >= n - 2 * degG - g - 1:
        warnings.append("t >= n - 2*degG - g - 1: B-dual * C may fill the space")
    pair.meta["warnings"] = warnings
    return pair
