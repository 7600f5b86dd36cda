"""Seeded Monte Carlo harness for decoding experiments.

Every trial owns an RNG stream derived from (master seed, trial index)
through SHA-256, so results are identical across runs, platforms and
worker counts; aggregation is order-independent counting.  Reports go to
CSV (one row per tested radius, fixed failure-reason columns) and a JSON
summary that also carries the radius formulas' predictions next to the
observed rates.  The error model is uniform: support of size exactly t
chosen uniformly, error values uniform over the nonzero field elements;
it is stated in each report header.

With oracle checks enabled, each locating-pair trial additionally
evaluates the structural statements the decoders rely on (support
nesting, the inclusion chain A(I) <= M <= M_1 <= A, the punctured
decomposition of M, and success-iff-A(I)=M); disagreements are counted
and should always be zero.
"""

from __future__ import annotations

import csv
import hashlib
import json
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field as dc_field
from typing import Sequence

from . import cyclic as _cyclic
from . import decoders as dec
from . import hermitian as _hermitian
from . import rs as _rs
from .codes import shorten
from .gf import GF, Field, FieldElem
from .linalg import Subspace, intersect_all, support, vec_pow, vec_star, vec_sub

ERROR_MODEL = "uniform support, uniform nonzero values"


@dataclass
class ExperimentConfig:
    family: str                 # rs | hermitian | cyclic
    algo: str                   # wb | ecp | power | pelp
    params: dict
    t_values: list[int]
    trials: int
    seed: int
    ell: int = 2
    oracle_checks: bool = False
    jobs: int = 1
    csv_path: str | None = None
    json_path: str | None = None

    @classmethod
    def from_json(cls, text: str) -> "ExperimentConfig":
        raw = json.loads(text)
        known = {f for f in cls.__dataclass_fields__}
        extra = set(raw) - known
        if extra:
            raise ValueError(f"unknown config keys: {sorted(extra)}")
        for key in ("family", "algo", "params", "t_values", "trials", "seed"):
            if key not in raw:
                raise ValueError(f"config is missing {key!r}")
        return cls(**raw)


@dataclass
class TrialRecord:
    trial: int
    t: int
    ok: bool
    success: bool               # decoded word equals the transmitted one
    reason: str | None
    a_ie_eq_m: bool | None
    oracle_ok: bool | None
    ms: float


@dataclass
class RadiusRow:
    t: int
    trials: int
    successes: int
    miscorrections: int         # sound word returned, but not the sent one
    failures: dict[str, int]
    oracle_trials: int
    oracle_failures: int
    mean_ms: float
    records: list[TrialRecord] = dc_field(default_factory=list)


def trial_rng(master_seed: int, trial_index: int) -> random.Random:
    """Counter-based stream: stable across platforms and schedulers."""
    digest = hashlib.sha256(f"{master_seed}:{trial_index}".encode()).digest()
    return random.Random(int.from_bytes(digest[:8], "big"))


def corrupt(field: Field, c: Sequence[int], t: int, rng: random.Random) -> tuple[int, ...]:
    """c plus a weight-exactly-t error with uniform support and values."""
    n = len(c)
    if not 0 <= t <= n:
        raise ValueError(f"error weight {t} out of range 0..{n}")
    y = list(c)
    for pos in rng.sample(range(n), t):
        y[pos] = field.add(y[pos], rng.randrange(1, field.order))
    return tuple(y)


def corrupt_with_seed(field: Field, c: Sequence[int], t: int, seed: int) -> tuple[int, ...]:
    return corrupt(field, c, t, trial_rng(seed, 0))


# ---------------------------------------------------------------------------
# family contexts
# ---------------------------------------------------------------------------

class _Context:
    """Everything one (config, t) slice needs to run trials."""

    def __init__(self, cfg: ExperimentConfig, t: int):
        self.cfg = cfg
        self.t = t
        fam, params = cfg.family, cfg.params
        if fam == "rs":
            field = GF(params["p"], params.get("m", 1))
            pts = params.get("points")
            self.rs = _rs.rs_code(field, pts, params["k"])
            self.field = field
            self.n = self.rs.n
            self.gen_rows = self.rs.code.generator_rows()
            self.code = self.rs.code
            if cfg.algo in ("ecp", "pelp"):
                ell = 1 if cfg.algo == "ecp" else cfg.ell
                self.pair = _rs.rs_pelp_pair(self.rs, t, ell)
        elif fam == "hermitian":
            q0, degG = params["q0"], params["degG"]
            if cfg.algo in ("ecp", "pelp"):
                ell = 1 if cfg.algo == "ecp" else cfg.ell
                self.pair = _hermitian.ag_pelp_pair(q0, degG, t, ell)
                self.herm = self.pair.meta["source"]
            else:
                self.herm = _hermitian.one_point_code(q0, degG)
            self.field = self.herm.field
            self.n = self.herm.n
            self.gen_rows = self.herm.code.generator_rows()
            self.code = self.herm.code
        elif fam == "cyclic":
            n = params["n"]
            p = params["p"]
            m = splitting_degree(p, n)
            field = GF(p, m)
            gamma = FieldElem(field, field.nth_root_of_unity(n))
            S = _cyclic.index_set(n, params["S"])
            R = _cyclic.index_set(n, params["R"])
            report = _cyclic.cyclic_pelp_pair(
                S, R, params.get("a", 1), params.get("b", 1), cfg.ell, gamma,
                d_r_lower=params.get("d_r_lower"), t=t)
            self.report = report
            self.pair = report.pair
            self.field = field
            self.n = n
            self.gen_rows = self.pair.C.generator_rows()
            self.code = self.pair.C
        else:
            raise ValueError(f"unknown family {cfg.family!r}")

    def random_codeword(self, rng: random.Random) -> tuple[int, ...]:
        f = self.field
        word = [0] * self.n
        for row in self.gen_rows:
            cf = rng.randrange(f.order)
            if cf:
                for j, v in enumerate(row):
                    if v:
                        word[j] = f.add(word[j], f.mul(cf, v))
        return tuple(word)

    def decode(self, y: Sequence[int]) -> dec.DecodeOutcome:
        algo = self.cfg.algo
        if algo == "wb":
            return dec.wb_decode(self.rs, y, self.t)
        if algo == "power":
            if self.cfg.family == "rs":
                return dec.power_decode_rs(self.rs, y, self.t, self.cfg.ell)
            return dec.power_decode_ag(self.herm, y, self.t, self.cfg.ell)
        if algo == "ecp":
            return dec.ecp_decode(self.pair, y)
        if algo == "pelp":
            return dec.pelp_decode(self.pair, y)
        raise ValueError(f"unknown algo {algo!r}")

    @property
    def has_pair(self) -> bool:
        return self.cfg.algo in ("ecp", "pelp")


def splitting_degree(p: int, n: int) -> int:
    """Smallest m with n | p^m - 1 (multiplicative order of p mod n)."""
    from math import gcd
    if gcd(p, n) != 1:
        raise ValueError("need gcd(p, n) = 1")
    m, v = 1, p % n
    while v != 1:
        v = v * p % n
        m += 1
    return m


# ---------------------------------------------------------------------------
# per-trial structural oracles
# ---------------------------------------------------------------------------

def pair_trial_oracles(pair: dec.PelpPair, y: Sequence[int], c: Sequence[int],
                       outcome: dec.DecodeOutcome) -> tuple[bool, bool]:
    """Evaluate the white-box statements on one locating-pair trial.

    Returns (a_ie_eq_m, all_checks_ok) where the checks are: support
    nesting of the power errors, A(I) <= M <= M_1 <= A, the punctured
    decomposition of M, and success-iff-A(I)=M.
    """
    f = pair.field
    e = vec_sub(f, y, c)
    Ie = support(e)
    t = len(Ie)

    ok = True
    powers_e = []
    for i in range(1, pair.ell + 1):
        ei = vec_sub(f, vec_pow(f, y, i), vec_pow(f, c, i))
        powers_e.append(ei)
        if not set(support(ei)) <= set(Ie):
            ok = False

    M = dec.compute_M(pair, y)
    Mamb = pair.coeff_to_ambient(M)
    M1amb = pair.coeff_to_ambient(dec.compute_Mi(pair, y, 1))
    AIe = shorten(pair.A, Ie).gen
    if not (AIe.is_subspace_of(Mamb) and Mamb.is_subspace_of(M1amb)
            and M1amb.is_subspace_of(pair.A.gen)):
        ok = False

    if t > 0:
        lhs = Subspace.from_rows(f, [[row[j] for j in Ie]
                                     for row in Mamb.basis.data], t)
        parts = [Subspace.from_rows(f, [[row[j] for j in Ie]
                                        for row in pair.A.gen.basis.data], t)]
        for i in range(1, pair.ell + 1):
            rows = [vec_star(f, powers_e[i - 1], v)
                    for v in pair.vspace(i).gen.basis.data]
            punct = Subspace.from_rows(f, [[row[j] for j in Ie] for row in rows], t)
            parts.append(punct.dual())
        if lhs != intersect_all(parts):
            ok = False

    a_ie_eq_m = AIe == Mamb
    success = outcome.ok and tuple(outcome.codeword) == tuple(c)
    if success != a_ie_eq_m:
        ok = False
    return a_ie_eq_m, ok


# ---------------------------------------------------------------------------
# the experiment driver
# ---------------------------------------------------------------------------

def _run_slice(ctx: "_Context", cfg: ExperimentConfig,
               indices: Sequence[int]) -> list[TrialRecord]:
    t = ctx.t
    records = []
    for idx in indices:
        rng = trial_rng(cfg.seed, idx)
        c = ctx.random_codeword(rng)
        y = corrupt(ctx.field, c, t, rng)
        t0 = time.perf_counter()
        outcome = ctx.decode(y)
        ms = (time.perf_counter() - t0) * 1000.0
        success = outcome.ok and tuple(outcome.codeword) == c
        # soundness is unconditional: a returned word is within distance t
        if outcome.ok:
            distance = sum(1 for a, b in zip(outcome.codeword, y) if a != b)
            if distance > t:
                raise AssertionError("decoder returned a word farther than t")
        a_eq = oracle_ok = None
        if cfg.oracle_checks and ctx.has_pair:
            a_eq, oracle_ok = pair_trial_oracles(ctx.pair, y, c, outcome)
        records.append(TrialRecord(idx, t, outcome.ok, success,
                                   outcome.failure, a_eq, oracle_ok, ms))
    return records


def _pool_entry(args):
    cfg_dict, t, indices = args
    cfg = ExperimentConfig(**cfg_dict)
    return _run_slice(_Context(cfg, t), cfg, list(indices))


def run_experiment(cfg: ExperimentConfig) -> dict:
    """Run all trials; return the report dict and write CSV/JSON if asked."""
    contexts: dict[int, _Context] = {}

    def context_for(t: int) -> "_Context":
        if t not in contexts:
            contexts[t] = _Context(cfg, t)
        return contexts[t]

    rows: list[RadiusRow] = []
    for t in cfg.t_values:
        indices = list(range(cfg.trials))
        if cfg.jobs > 1 and cfg.trials > 1:
            chunks = [indices[i::cfg.jobs] for i in range(cfg.jobs)]
            chunks = [ch for ch in chunks if ch]
            cfg_dict = {k: getattr(cfg, k) for k in cfg.__dataclass_fields__}
            with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
                parts = list(pool.map(_pool_entry,
                                      [(cfg_dict, t, ch) for ch in chunks]))
            records = sorted((r for part in parts for r in part),
                             key=lambda r: r.trial)
        else:
            records = _run_slice(context_for(t), cfg, indices)
        failures = {reason: 0 for reason in dec.FAILURE_REASONS}
        successes = miscorrections = 0
        oracle_trials = oracle_failures = 0
        for r in records:
            if r.success:
                successes += 1
            elif r.ok:
                miscorrections += 1
            else:
                failures[r.reason] += 1
            if r.oracle_ok is not None:
                oracle_trials += 1
                if not r.oracle_ok:
                    oracle_failures += 1
        mean_ms = sum(r.ms for r in records) / len(records) if records else 0.0
        rows.append(RadiusRow(t, cfg.trials, successes, miscorrections,
                              failures, oracle_trials, oracle_failures,
                              mean_ms, records))

    meta_ctx = context_for(cfg.t_values[0])
    report = {
        "config": {
            "family": cfg.family, "algo": cfg.algo, "ell": cfg.ell,
            "params": cfg.params, "t_values": cfg.t_values,
            "trials": cfg.trials, "seed": cfg.seed,
            "oracle_checks": cfg.oracle_checks,
        },
        "error_model": ERROR_MODEL,
        "predicted_radius": _predicted_radius(cfg, meta_ctx),
        "rows": [
            {
                "t": row.t, "trials": row.trials, "successes": row.successes,
                "success_rate": row.successes / row.trials if row.trials else 0.0,
                "miscorrections": row.miscorrections,
                "failures": row.failures,
                "oracle_trials": row.oracle_trials,
                "oracle_failures": row.oracle_failures,
                "mean_ms": row.mean_ms,
            }
            for row in rows
        ],
    }
    if cfg.csv_path:
        write_csv(cfg, rows, cfg.csv_path, meta_ctx)
    if cfg.json_path:
        with open(cfg.json_path, "w") as fh:
            json.dump(report, fh, indent=2)
            fh.write("\n")
    report["_rows"] = rows
    return report


def _predicted_radius(cfg: ExperimentConfig, ctx: "_Context"):
    try:
        if cfg.family == "rs":
            ell = 1 if cfg.algo in ("wb", "ecp") else cfg.ell
            return dec.decoding_radius("rs", {"n": ctx.n, "k": cfg.params["k"]},
                                       ell)
        if cfg.family == "hermitian":
            q0 = cfg.params["q0"]
            params = {"n": q0**3, "g": _hermitian.genus(q0),
                      "degG": cfg.params["degG"]}
            if cfg.algo == "power":
                return dec.decoding_radius("ag_power", params, cfg.ell)
            return dec.decoding_radius("ag", params, cfg.ell)
        if cfg.family == "cyclic":
            return ctx.report.radius
    except (ValueError, KeyError):
        return None
    return None


CSV_COLUMNS = ["family", "q", "n", "k_or_degG", "algo", "ell", "t", "trials",
               "successes", "miscorrections"] \
    + [f"fail_{r}" for r in dec.FAILURE_REASONS] \
    + ["oracle_trials", "oracle_failures", "mean_ms"]


def write_csv(cfg: ExperimentConfig, rows: list[RadiusRow], path: str,
              ctx: "_Context | None" = None) -> None:
    if ctx is None:
        ctx = _Context(cfg, cfg.t_values[0])
    k_or_degG = cfg.params.get("k", cfg.params.get("degG", ctx.code.k))
    with open(path, "w", newline="") as fh:
        fh.write(f"# error model: {ERROR_MODEL}; seed={cfg.seed}\n")
        writer = csv.writer(fh)
        writer.writerow(CSV_COLUMNS)
        for row in rows:
            ell = 1 if cfg.algo in ("wb", "ecp") else cfg.ell
            writer.writerow(
                [cfg.family, ctx.field.order, ctx.n, k_or_degG, cfg.algo,
                 ell, row.t, row.trials, row.successes, row.miscorrections]
                + [row.failures[r] for r in dec.FAILURE_REASONS]
                + [row.oracle_trials, row.oracle_failures,
                   f"{row.mean_ms:.3f}"])


def radius_table(n: int, g: int, degG: int, ell: int) -> dict:
    """The comparison block: locating-pair vs Sudan vs power radii."""
    params = {"n": n, "g": g, "degG": degG}
    return {
        "n": n, "g": g, "degG": degG, "ell": ell,
        "pelp": dec.decoding_radius("ag", params, ell),
        "sudan": dec.decoding_radius("ag_sudan", params, ell),
        "ag_power": dec.decoding_radius("ag_power", params, ell),
        "half_designed": (n - degG - 1) // 2,
    }
