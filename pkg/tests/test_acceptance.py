"""Acceptance suite: one test per criterion, each printing a PASS line.

Run with `pytest tests/test_acceptance.py -v -s`.  Monte Carlo pieces are
fully seeded; rate thresholds and runtime caps are asserted as stated.
The locating-pair runs all carry the per-trial structural oracles, whose
aggregate feeds criterion 6.
"""

import itertools
import random
import time

from pelp import bench
from pelp import decoders as dec
from pelp.codes import (LinearCode, dual, is_degenerated, kneser_check,
                        star_product)
from pelp.cyclic import cyclic_pelp_pair, index_set, roos_check, sum_set
from pelp.gf import GF, FieldElem
from pelp.hermitian import one_point_code
from pelp.rs import encode, rs_code, rs_pelp_pair

SEED = 20260809

_ORACLE_TOTALS = {"trials": 0, "failures": 0, "runs": 0}


def _report(name: str, ok: bool, detail: str = ""):
    tag = "PASS" if ok else "FAIL"
    print(f"[{tag}] {name}" + (f": {detail}" if detail else ""))
    assert ok, f"{name}: {detail}"


def _collect_oracles(report):
    for row in report["rows"]:
        _ORACLE_TOTALS["trials"] += row["oracle_trials"]
        _ORACLE_TOTALS["failures"] += row["oracle_failures"]
        assert row["oracle_trials"] == row["trials"]
    _ORACLE_TOTALS["runs"] += 1


def test_criterion_01_half_distance_exactness():
    start = time.monotonic()
    f7 = GF(7)
    C7 = rs_code(f7, None, 3)          # d = 5, half distance 2
    pair7 = rs_pelp_pair(C7, 2, ell=1)
    rng = random.Random(SEED)
    checked = failures = 0
    patterns = [()]
    patterns += [((p, v),) for p in range(7) for v in range(1, 7)]
    patterns += [((p1, v1), (p2, v2))
                 for p1, p2 in itertools.combinations(range(7), 2)
                 for v1 in range(1, 7) for v2 in range(1, 7)]
    for pattern in patterns:
        msg = [rng.randrange(7) for _ in range(3)]
        c = encode(C7, msg)
        y = list(c)
        for pos, val in pattern:
            y[pos] = f7.add(y[pos], val)
        for out in (dec.wb_decode(C7, y, 2), dec.ecp_decode(pair7, y)):
            checked += 1
            if not (out.ok and out.codeword == c):
                failures += 1
    f13 = GF(13)
    C13 = rs_code(f13, None, 3)        # d = 11, half distance 5
    pair13 = rs_pelp_pair(C13, 5, ell=1)
    for i in range(1000):
        trng = bench.trial_rng(SEED, i)
        msg = [trng.randrange(13) for _ in range(3)]
        c = encode(C13, msg)
        y = bench.corrupt(f13, c, 5, trng)
        for out in (dec.wb_decode(C13, y, 5), dec.ecp_decode(pair13, y)):
            checked += 1
            if not (out.ok and out.codeword == c):
                failures += 1
    elapsed = time.monotonic() - start
    _report("criterion 1 (half-distance exactness)",
            failures == 0 and elapsed < 60,
            f"{checked} decodes, {failures} failures, {elapsed:.1f}s")


def test_criterion_02_beyond_half_rs_radius():
    # the success rate at the exact radius is an intrinsic property of the
    # algorithm; a 3000-trial estimate puts it at 91.8% for GF(13)/t=6, so
    # the 90% envelope holds with ~1.2% sampling noise at 500 trials
    start = time.monotonic()
    results = {}
    for params, trials, ts in [({"p": 13, "k": 3}, 500, (6, 7)),
                               ({"p": 2, "m": 6, "k": 10}, 200, (33, 34))]:
        cfg = bench.ExperimentConfig(
            family="rs", algo="pelp", params=params, t_values=list(ts),
            trials=trials, seed=SEED + 2, ell=2, oracle_checks=True)
        report = bench.run_experiment(cfg)
        _collect_oracles(report)
        rates = {row["t"]: row["success_rate"] for row in report["rows"]}
        results[tuple(sorted(params.items()))] = rates
    r13 = results[tuple(sorted({"p": 13, "k": 3}.items()))]
    r64 = results[tuple(sorted({"p": 2, "m": 6, "k": 10}.items()))]
    elapsed = time.monotonic() - start
    ok = (r13[6] >= 0.90 and r13[7] <= 0.10
          and r64[33] >= 0.90 and r64[34] <= 0.10 and elapsed < 300)
    _report("criterion 2 (beyond-half RS radius)", ok,
            f"GF(13): t=6 {r13[6]:.2%} / t=7 {r13[7]:.2%}; "
            f"GF(64): t=33 {r64[33]:.2%} / t=34 {r64[34]:.2%}; {elapsed:.1f}s")


def test_criterion_03_rs_equivalence():
    f13 = GF(13)
    C = rs_code(f13, None, 3)
    pairs = {t: rs_pelp_pair(C, t, 2) for t in range(1, 7)}
    mismatches = dim_mismatches = 0
    for i in range(200):
        trng = bench.trial_rng(SEED + 3, i)
        t = trng.choice(range(1, 7))
        msg = [trng.randrange(13) for _ in range(3)]
        c = encode(C, msg)
        y = bench.corrupt(f13, c, t, trng)
        ds, dm, ok = dec.sol_m_isomorphism_check(C, y, t, 2)
        if not ok or ds != dm:
            dim_mismatches += 1
        o_power = dec.power_decode_rs(C, y, t, 2)
        o_pelp = dec.pelp_decode(pairs[t], y)
        same = o_power.ok == o_pelp.ok and \
            (not o_power.ok or o_power.codeword == o_pelp.codeword)
        if not same:
            mismatches += 1
    _report("criterion 3 (RS equivalence)",
            mismatches == 0 and dim_mismatches == 0,
            f"200 instances, {dim_mismatches} dim / {mismatches} outcome mismatches")


def test_criterion_04_star_and_duality_identities():
    f13 = GF(13)
    rs_cache = {k: rs_code(f13, None, k).code for k in range(1, 14)}
    rs_cache[0] = LinearCode.zero(f13, 13)
    bad = 0
    for k in range(1, 14):
        if dual(rs_cache[k]) != rs_cache[13 - k]:
            bad += 1
    for k, k2 in itertools.combinations_with_replacement(range(1, 13), 2):
        if k + k2 - 1 <= 13:
            if star_product(rs_cache[k], rs_cache[k2]) != rs_cache[k + k2 - 1]:
                bad += 1
    herm_grid = {2: [(2, 3), (2, 5), (3, 4), (4, 3)],
                 3: [(6, 7), (6, 9), (8, 7)],
                 4: [(12, 13), (12, 15), (14, 13)]}
    for q0, cases in herm_grid.items():
        cache = {}
        for m, m2 in cases:
            for mm in (m, m2, m + m2):
                if mm not in cache:
                    cache[mm] = one_point_code(q0, mm).code
            if star_product(cache[m], cache[m2]) != cache[m + m2]:
                bad += 1
    _report("criterion 4 (star-product and duality identities)", bad == 0,
            f"{bad} identity violations")


def test_criterion_05_kneser_sweep():
    rng = random.Random(SEED + 5)
    violations = cd_violations = 0
    fields = [GF(2, 2), GF(7)]
    for i in range(500):
        f = fields[i % 2]
        n = rng.randrange(4, 13)
        A = LinearCode.from_rows(
            f, [[rng.randrange(f.order) for _ in range(n)]
                for _ in range(rng.randrange(1, 6))], n)
        B = LinearCode.from_rows(
            f, [[rng.randrange(f.order) for _ in range(n)]
                for _ in range(rng.randrange(1, 6))], n)
        lhs, rhs, holds = kneser_check(A, B)
        if not holds:
            violations += 1
        AB = star_product(A, B)
        if AB.k > 0 and not is_degenerated(AB):
            if AB.k < A.k + B.k - 1:
                cd_violations += 1
    _report("criterion 5 (Kneser property sweep)",
            violations == 0 and cd_violations == 0,
            f"500 pairs, {violations} Kneser / {cd_violations} Cauchy-Davenport "
            f"violations")


def test_criterion_07_ag_beyond_half():
    start = time.monotonic()
    radius = dec.decoding_radius("ag", {"n": 64, "g": 6, "degG": 12}, 2)
    half_designed = (64 - 12 - 1) // 2
    cfg = bench.ExperimentConfig(
        family="hermitian", algo="pelp", params={"q0": 4, "degG": 12},
        t_values=[radius], trials=200, seed=SEED + 7, ell=2,
        oracle_checks=True)
    report = bench.run_experiment(cfg)
    _collect_oracles(report)
    rate = report["rows"][0]["success_rate"]
    elapsed = time.monotonic() - start
    # decoder soundness within _run_slice raises on any unsound return,
    # so reaching this point certifies 100% soundness of successes
    ok = radius == 26 and radius > half_designed and rate >= 0.70 \
        and elapsed < 600
    _report("criterion 7 (AG beyond-half)", ok,
            f"radius {radius} > half designed {half_designed}, "
            f"success {rate:.2%} over 200 trials, {elapsed:.1f}s")


def test_criterion_08_radius_comparison_table():
    table = bench.radius_table(64, 6, 12, 2)
    ok = (table["pelp"], table["sudan"], table["ag_power"]) == (26, 23, 23) \
        and table["pelp"] > table["sudan"] >= table["ag_power"] \
        and 6 > 2 - 1  # g > ell - 1: the regime where the pair radius wins
    _report("criterion 8 (radius comparison table)", ok,
            f"pelp {table['pelp']} > sudan {table['sudan']} >= "
            f"power {table['ag_power']}")


def test_criterion_09_cyclic_paper_example():
    start = time.monotonic()
    n = 51
    field = GF(5, 16)
    gamma = FieldElem(field, field.nth_root_of_unity(n))
    S = index_set(n, list(range(25)) + [30])
    R = index_set(n, list(range(14)) + [19])
    checks = {}
    checks["sum_set"] = len(sum_set(S, R)) == 45
    hyp_ok, d_roos = roos_check(S, R, 15)
    checks["roos"] = hyp_ok and (d_roos - 1) // 2 == 19
    rep = cyclic_pelp_pair(S, R, 1, 1, 2, gamma)
    checks["k"] = rep.k == 6
    checks["delta"] = rep.delta == 5
    checks["two_delta_plus_gamma"] = 2 * rep.delta + rep.gammas[0] == 12
    checks["radius"] = rep.radius == 23
    checks["nondegenerate"] = rep.roos_hypothesis_ok
    checks["hypotheses_at_t"] = rep.s_size_exceeds_t and rep.d_s_exceeds_t
    # the known minimum distance 45 is taken as given, not recomputed
    checks["beats_half_known_distance"] = rep.radius > (45 - 1) // 2
    cfg = bench.ExperimentConfig(
        family="cyclic", algo="pelp",
        params={"n": n, "p": 5, "S": list(S.elems), "R": list(R.elems),
                "a": 1, "b": 1},
        t_values=[23], trials=50, seed=SEED + 9, ell=2, oracle_checks=True)
    report = bench.run_experiment(cfg)
    _collect_oracles(report)
    rate = report["rows"][0]["success_rate"]
    checks["success_rate"] = rate >= 0.70
    elapsed = time.monotonic() - start
    checks["runtime"] = elapsed < 900
    failed = sorted(k for k, v in checks.items() if not v)
    _report("criterion 9 (cyclic worked example)", all(checks.values()),
            f"failed subchecks: {failed or 'none'}, success {rate:.2%}, "
            f"{elapsed:.1f}s")


def test_criterion_10_determinism(tmp_path):
    def run(cfg_kw, path):
        cfg = bench.ExperimentConfig(csv_path=str(path), **cfg_kw)
        bench.run_experiment(cfg)
        lines = path.read_text().splitlines()
        stripped = [ln if ln.startswith("#") or ln.startswith("family")
                    else ",".join(ln.split(",")[:-1]) for ln in lines]
        return "\n".join(stripped)

    ok = True
    for i, cfg_kw in enumerate([
        dict(family="rs", algo="pelp", params={"p": 13, "k": 3},
             t_values=[5, 6], trials=50, seed=SEED, ell=2),
        dict(family="hermitian", algo="pelp", params={"q0": 4, "degG": 12},
             t_values=[26], trials=20, seed=SEED, ell=2),
    ]):
        a = run(cfg_kw, tmp_path / f"a{i}.csv")
        b = run(cfg_kw, tmp_path / f"b{i}.csv")
        if a != b:
            ok = False
    _report("criterion 10 (bench determinism)", ok,
            "byte-identical CSVs (timing column excluded)")


def test_criterion_06_structural_oracles_aggregate():
    # defined after the Monte Carlo criteria so pytest's file order runs
    # it once criteria 2, 7 and 9 have populated the totals
    ok = (_ORACLE_TOTALS["runs"] >= 3 and _ORACLE_TOTALS["trials"] >= 1450
          and _ORACLE_TOTALS["failures"] == 0)
    _report("criterion 6 (per-trial structural oracles)", ok,
            f"{_ORACLE_TOTALS['trials']} oracle-checked trials across "
            f"{_ORACLE_TOTALS['runs']} runs, {_ORACLE_TOTALS['failures']} failures")
