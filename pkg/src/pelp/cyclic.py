"""Cyclic codes over the splitting field, sum-set algebra and the Roos bound.

A set R of exponents modulo n, together with a primitive n-th root of
unity gamma in F = GF(p^m), determines the root matrix M(R) with rows
(1, gamma^i, gamma^(2i), ...).  R acts as a *defining set* (M(R) is a
parity check) or as a *generating set* (M(R) is a generator matrix); the
two codes are mutual duals.  Everything here works with the code over
the extension field F, never with its subfield restriction.

Index sets hold 0-based residues mod n.  Minimum distances over F are
never enumerated; certified lower bounds come from the longest circular
run of consecutive exponents (BCH) and from the Roos bound.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from math import gcd
from typing import Iterable

from . import decoders
from .codes import LinearCode
from .gf import Field, FieldElem
from .linalg import Matrix, kernel


@dataclass(frozen=True)
class IndexSet:
    """A sorted subset of Z/nZ."""

    n: int
    elems: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("modulus must be positive")
        cleaned = tuple(sorted(set(e % self.n for e in self.elems)))
        object.__setattr__(self, "elems", cleaned)

    def __len__(self) -> int:
        return len(self.elems)

    def __iter__(self):
        return iter(self.elems)

    def __contains__(self, v: int) -> bool:
        return v % self.n in set(self.elems)


def index_set(n: int, elems: Iterable[int]) -> IndexSet:
    return IndexSet(n, tuple(elems))


def sum_set(S: IndexSet, R: IndexSet) -> IndexSet:
    """{s + r mod n}."""
    if S.n != R.n:
        raise ValueError("modulus mismatch")
    return IndexSet(S.n, tuple((s + r) % S.n for s in S for r in R))


def scale_set(a: int, R: IndexSet) -> IndexSet:
    """{a r mod n}; a must be invertible mod n."""
    if gcd(a, R.n) != 1:
        raise ValueError(f"gcd({a}, {R.n}) != 1")
    return IndexSet(R.n, tuple(a * r % R.n for r in R))


def interval_hull_size(S: IndexSet) -> int:
    """Size of the smallest set of consecutive residues mod n containing S."""
    if len(S) == 0:
        return 0
    e = list(S.elems)
    n = S.n
    max_gap = max((e[(i + 1) % len(e)] - e[i]) % n for i in range(len(e))) \
        if len(e) > 1 else n
    if len(e) == 1:
        return 1
    return n - max_gap + 1


def bch_run_bound(S: IndexSet) -> int:
    """BCH-style distance bound: longest circular consecutive run, plus 1."""
    if len(S) == 0:
        return 1
    if len(S) == S.n:
        return S.n + 1
    present = set(S.elems)
    best = 0
    for s in S.elems:
        if (s - 1) % S.n in present:
            continue  # not the start of a run
        length = 1
        while (s + length) % S.n in present:
            length += 1
        best = max(best, length)
    return best + 1


def roos_check(S: IndexSet, R: IndexSet, d_r_lower: int) -> tuple[bool, int]:
    """Evaluate the Roos bound hypothesis and the bound it yields.

    With |hull(S)| <= |S| + d_R - 2, the code with defining set S + R has
    distance at least |S| + d_R - 1.  d_r_lower is a certified lower
    bound for the distance of the defining-set-R code (.e.g. its BCH run
    bound) and must be at least 2.
    """
    if d_r_lower < 2:
        raise ValueError("need a certified d_R lower bound >= 2")
    hypothesis_ok = interval_hull_size(S) <= len(S) + d_r_lower - 2
    return hypothesis_ok, len(S) + d_r_lower - 1


def nondegeneracy_check(R: IndexSet) -> bool:
    """True iff no nonempty subset of R is invariant under a nonzero shift.

    Shift-invariant subsets are unions of cosets of a nontrivial subgroup
    of Z/nZ, so it suffices to check whether R contains a full coset of
    the subgroup generated by some divisor d < n.
    """
    if len(R) == 0:
        raise ValueError("R must be nonempty")
    n = R.n
    present = set(R.elems)
    for d in range(1, n):
        if n % d != 0:
            continue
        size = n // d  # subgroup <d> has this many elements
        if size < 2:
            continue
        for start in range(d):
            if all((start + k * d) % n in present for k in range(size)):
                return False
    return True


# ---------------------------------------------------------------------------
# root matrices and the two codes of an index set
# ---------------------------------------------------------------------------

def _gamma_powers(field: Field, gamma: int, n: int) -> list[int]:
    pows = [1] * n
    for i in range(1, n):
        pows[i] = field.mul(pows[i - 1], gamma)
    if field.mul(pows[n - 1], gamma) != 1:
        raise ValueError("gamma does not have order n")
    if n > 1 and 1 in pows[1:]:
        raise ValueError("gamma does not have order n")
    return pows


def root_matrix(R: IndexSet, gamma: FieldElem) -> Matrix:
    """Rows (1, gamma^i, gamma^(2i), ..., gamma^(i(n-1))) for i in R."""
    field = gamma.field
    n = R.n
    pows = _gamma_powers(field, gamma.value, n)
    data = [[pows[(i * j) % n] for j in range(n)] for i in R]
    return Matrix(field, data, n)


def code_from_generating_set(R: IndexSet, gamma: FieldElem) -> LinearCode:
    M = root_matrix(R, gamma)
    return LinearCode.from_rows(gamma.field, M.data, R.n)


def code_from_defining_set(R: IndexSet, gamma: FieldElem) -> LinearCode:
    M = root_matrix(R, gamma)
    return LinearCode(gamma.field, R.n, kernel(M))


# ---------------------------------------------------------------------------
# the cyclic locating pair
# ---------------------------------------------------------------------------

@dataclass
class CyclicPairReport:
    """Pair plus the instance data entering the cyclic decoding radius.

    delta measures the Cauchy-Davenport deficiency of |aS + bR|; each
    gamma_i the deficiency of dim(B-dual * C^i).  Both are recomputed
    from actual code dimensions, never assumed zero.
    """

    pair: "decoders.PelpPair"
    n: int
    k: int
    delta: int
    gammas: tuple[int, ...]
    radius: int
    s_size: int
    r_size: int
    s_hull: int
    d_r_lower: int
    d_s_lower: int
    d_roos: int
    roos_hypothesis_ok: bool
    s_size_exceeds_t: bool
    d_s_exceeds_t: bool
    # both sides of the half-Roos comparison (ell = 2 only)
    beats_half_roos: bool | None = None
    comparison_rhs_holds: bool | None = None
    notes: list[str] = dc_field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "n": self.n, "k": self.k, "delta": self.delta,
            "gammas": list(self.gammas), "radius": self.radius,
            "s_size": self.s_size, "r_size": self.r_size,
            "s_hull": self.s_hull, "d_r_lower": self.d_r_lower,
            "d_s_lower": self.d_s_lower, "d_roos": self.d_roos,
            "roos_hypothesis_ok": self.roos_hypothesis_ok,
            "s_size_exceeds_t": self.s_size_exceeds_t,
            "d_s_exceeds_t": self.d_s_exceeds_t,
            "beats_half_roos": self.beats_half_roos,
            "comparison_rhs_holds": self.comparison_rhs_holds,
            "t": self.pair.t,
            "validation": self.pair.validation.as_dict(),
            "notes": self.notes,
        }


def cyclic_pelp_pair(S: IndexSet, R: IndexSet, a: int, b: int, ell: int,
                     gamma: FieldElem, d_r_lower: int | None = None,
                     t: int | None = None) -> CyclicPairReport:
    """Build the locating pair with generating sets aS and bR.

    C is the cyclic code over F with parity check M(aS + bR).  Raises,
    naming the hypothesis, when a structural requirement fails: coprime
    a/b, Roos hypothesis for (S, R), nondegeneracy of every cyclic
    subcode of B, or B-dual * C^i filling the whole space.  The decoding
    radius from the dimension inequality is used as t when none is given.
    """
    n = S.n
    if R.n != n:
        raise ValueError("S and R must share one modulus")
    if gcd(a, n) != 1 or gcd(b, n) != 1:
        raise ValueError("a and b must be coprime to n")
    if ell < 1:
        raise ValueError("ell must be >= 1")
    field = gamma.field

    bR = scale_set(b, R)
    if not nondegeneracy_check(bR):
        raise ValueError("condition (ii) violated: some cyclic subcode of B "
                         "is degenerated (bR contains a full subgroup coset)")
    d_r = bch_run_bound(R) if d_r_lower is None else d_r_lower
    hyp_ok, d_roos = roos_check(S, R, d_r)
    if not hyp_ok:
        raise ValueError(
            f"Roos hypothesis violated: |hull(S)| = {interval_hull_size(S)} > "
            f"|S| + d_R - 2 = {len(S) + d_r - 2}")

    aS = scale_set(a, S)
    A = code_from_generating_set(aS, gamma)
    B = code_from_generating_set(bR, gamma)
    Ct = code_from_defining_set(sum_set(aS, bR), gamma)
    k = Ct.k
    delta = (n - k) - (len(S) + len(R) - 1)
    if delta < 0:
        raise AssertionError("negative delta: Cauchy-Davenport violated")

    d_s = bch_run_bound(S)
    pair = decoders.PelpPair(
        A=A, B=B, C=Ct, ell=ell, t=0, family="cyclic",
        meta={
            "s_hull": interval_hull_size(S), "d_s_lower": d_s,
            "d_r_lower": d_r, "d_roos": d_roos,
            "S": S, "R": R, "a": a, "b": b,
        },
    )
    gammas = []
    for i in range(1, ell):
        prod_dim = n - pair.vspace(i + 1).k  # dim(B-dual * C^i)
        if prod_dim >= n:
            raise ValueError(f"condition (i) violated: B-dual * C^{i} is the "
                             f"full space")
        g_i = B.k - pair.vspace(i + 1).k - i * k + i
        if g_i < 0:
            raise AssertionError("negative gamma_i: Cauchy-Davenport violated")
        gammas.append(g_i)

    radius = decoders.decoding_radius(
        "cyclic", {"n": n, "k": k, "s_size": len(S), "delta": delta,
                   "gammas": gammas}, ell)
    pair.t = radius if t is None else t

    beats = rhs_holds = None
    if ell == 2:
        beats = Fraction(d_roos - 1, 2) <= radius
        rhs_holds = k <= Fraction(3 * n + 6 - 3 * delta - 2 * gammas[0]
                                  - 4 * len(S), 5)
    return CyclicPairReport(
        pair=pair, n=n, k=k, delta=delta, gammas=tuple(gammas), radius=radius,
        s_size=len(S), r_size=len(R), s_hull=interval_hull_size(S),
        d_r_lower=d_r, d_s_lower=d_s, d_roos=d_roos, roos_hypothesis_ok=hyp_ok,
        s_size_exceeds_t=len(S) > pair.t, d_s_exceeds_t=d_s > pair.t,
        beats_half_roos=beats, comparison_rhs_holds=rhs_holds,
    )
