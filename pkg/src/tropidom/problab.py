"""Random-graph formulas and Monte-Carlo experiments, plus the bounds
auditor and the conjecture counterexample search.

Per-trial RNG streams are derived from (master seed, trial index) via numpy's
SeedSequence so batches are reproducible and order-independent.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field

import mpmath
import numpy as np

from . import exact, forge
from .errors import BadParametersError, BudgetExceededError
from .graph import ColouredGraph, degree_profile, is_connected


@dataclass(frozen=True)
class RandomModel:
    n: int
    p: float
    c: int
    seed: int = 0

    def __post_init__(self):
        if not 0 < self.p < 1:
            raise BadParametersError(f"need 0 < p < 1, got {self.p}")

    @property
    def b(self) -> float:
        return 1.0 / (1.0 - self.p)


@dataclass
class TrialRecord:
    trial: int
    seed: tuple[int, int]
    outcome: object  # bool / int / None on per-trial budget failure
    statistic: object
    runtime_ms: float
    error: str | None = None


@dataclass
class ExperimentReport:
    kind: str
    params: dict
    trials: int
    records: list[TrialRecord]
    empirical_mean: float | None
    reference_value: float | None
    stderr: float | None

    def to_json_dict(self) -> dict:
        return {
            "kind": self.kind,
            "params": self.params,
            "trials": self.trials,
            "empirical_mean": self.empirical_mean,
            "reference_value": self.reference_value,
            "stderr": self.stderr,
            "failures": sum(1 for r in self.records if r.error),
        }

    def csv_rows(self) -> list[str]:
        head = "trial,seed,n,p,c,outcome,statistic,runtime_ms"
        rows = [head]
        for r in self.records:
            rows.append(
                f"{r.trial},{r.seed[0]}:{r.seed[1]},{self.params.get('n')},"
                f"{self.params.get('p')},{self.params.get('c')},"
                f"{'' if r.outcome is None else r.outcome},"
                f"{'' if r.statistic is None else r.statistic},{r.runtime_ms:.3f}"
            )
        return rows


def expected_rainbow_count(model: RandomModel) -> float:
    """E(X_c) = C(n,c) (1-(1-p)^c)^(n-c) c!/c^c, evaluated in high precision."""
    n, p, c = model.n, model.p, model.c
    if not 1 <= c <= n:
        raise BadParametersError(f"need 1 <= c <= n, got c={c} n={n}")
    with mpmath.workdps(50):
        val = (
            mpmath.binomial(n, c)
            * (1 - (1 - mpmath.mpf(p)) ** c) ** (n - c)
            * mpmath.factorial(c)
            / mpmath.mpf(c) ** c
        )
        return float(val)


def _window_floor(n: int, p: float) -> int:
    """floor(log_b n - log_b((log_b n) * ln n)); 'log' read as natural log."""
    if n < 3 or not 0 < p < 1:
        raise BadParametersError(f"need n >= 3 and 0 < p < 1, got n={n} p={p}")
    ln_b = math.log(1.0 / (1.0 - p))
    log_b_n = math.log(n) / ln_b
    inner = log_b_n * math.log(n)
    if inner <= 0:
        raise BadParametersError("window formula undefined for these parameters")
    return math.floor(log_b_n - math.log(inner) / ln_b)


def threshold_colours(n: int, p: float) -> int:
    """Largest colour count that a.a.s. still admits a rainbow dominating set."""
    c = _window_floor(n, p) + 2
    if c < 1:
        raise BadParametersError(f"threshold formula yields c={c} < 1 at n={n} p={p}")
    return c


def concentration_window(n: int, p: float) -> tuple[int, int]:
    """Two-point window for the domination number of G(n, p)."""
    low = _window_floor(n, p) + 1
    return (low, low + 1)


def _trial_seed(master: int, idx: int) -> tuple[int, int]:
    return (int(master), int(idx))


def run_threshold_experiment(
    model: RandomModel,
    trials: int,
    budget: int = exact.DEFAULT_BUDGET,
    count_exact: bool | None = None,
) -> ExperimentReport:
    """Sample G(n,p,c) and test rainbow dominating set existence per trial.

    outcome: True/False existence; statistic: exact rainbow-DS count when the
    instance is small enough to enumerate (or when forced via count_exact).
    """
    if count_exact is None:
        count_exact = model.n <= 16
    records = []
    successes = []
    counts = []
    for t in range(trials):
        seed = _trial_seed(model.seed, t)
        t0 = time.perf_counter()
        try:
            g = forge.gen_gnpc(model.n, model.p, model.c, seed=list(seed))
            ok, _, _ = exact.rainbow_exists(g, budget=budget)
            stat = exact.count_rainbow_ds(g, budget=budget) if count_exact else None
            records.append(
                TrialRecord(t, seed, ok, stat, (time.perf_counter() - t0) * 1e3)
            )
            successes.append(1.0 if ok else 0.0)
            if stat is not None:
                counts.append(stat)
        except BudgetExceededError as exc:
            records.append(
                TrialRecord(
                    t, seed, None, None, (time.perf_counter() - t0) * 1e3, str(exc)
                )
            )
    if counts:
        mean = float(np.mean(counts))
        stderr = float(np.std(counts, ddof=1) / math.sqrt(len(counts))) if len(counts) > 1 else None
        reference = expected_rainbow_count(model)
    else:
        mean = float(np.mean(successes)) if successes else None
        stderr = (
            float(math.sqrt(mean * (1 - mean) / len(successes)))
            if successes and len(successes) > 1
            else None
        )
        reference = None
    return ExperimentReport(
        kind="threshold",
        params={"n": model.n, "p": model.p, "c": model.c, "seed": model.seed},
        trials=trials,
        records=records,
        empirical_mean=mean,
        reference_value=reference,
        stderr=stderr,
    )


def success_fraction(report: ExperimentReport) -> float:
    done = [r for r in report.records if r.outcome is not None]
    if not done:
        return 0.0
    return sum(1 for r in done if r.outcome) / len(done)


def run_concentration_experiment(
    n: int, p: float, trials: int, seed: int = 0, budget: int = exact.DEFAULT_BUDGET
) -> ExperimentReport:
    """Exact domination number per trial; outcome is gamma, the summary is the
    fraction of trials landing inside the two-point window."""
    window = concentration_window(n, p)
    records = []
    inside = []
    for t in range(trials):
        tseed = _trial_seed(seed, t)
        t0 = time.perf_counter()
        try:
            g = forge.gen_gnpc(n, p, 1, seed=list(tseed))
            res = exact.gamma(g, budget=budget)
            hit = window[0] <= res.value <= window[1]
            records.append(
                TrialRecord(t, tseed, res.value, int(hit), (time.perf_counter() - t0) * 1e3)
            )
            inside.append(1.0 if hit else 0.0)
        except BudgetExceededError as exc:
            records.append(
                TrialRecord(t, tseed, None, None, (time.perf_counter() - t0) * 1e3, str(exc))
            )
    mean = float(np.mean(inside)) if inside else None
    return ExperimentReport(
        kind="concentration",
        params={"n": n, "p": p, "c": 1, "seed": seed, "window": list(window)},
        trials=trials,
        records=records,
        empirical_mean=mean,
        reference_value=1.0,
        stderr=float(math.sqrt(mean * (1 - mean) / len(inside))) if inside and len(inside) > 1 else None,
    )


def run_expectation_experiment(
    model: RandomModel, trials: int, budget: int = exact.DEFAULT_BUDGET
) -> ExperimentReport:
    """Mean exact rainbow-DS count vs the closed-form expectation."""
    report = run_threshold_experiment(model, trials, budget=budget, count_exact=True)
    return ExperimentReport(
        kind="expectation",
        params=report.params,
        trials=report.trials,
        records=report.records,
        empirical_mean=report.empirical_mean,
        reference_value=expected_rainbow_count(model),
        stderr=report.stderr,
    )


@dataclass(frozen=True)
class BoundEntry:
    bound_id: str
    applicable: bool
    lhs: float | None
    rhs: float | None
    satisfied: bool
    tight: bool = False


@dataclass(frozen=True)
class BoundsReport:
    entries: tuple[BoundEntry, ...]

    @property
    def violations(self) -> tuple[BoundEntry, ...]:
        return tuple(e for e in self.entries if e.applicable and not e.satisfied)

    def entry(self, bound_id: str) -> BoundEntry:
        return next(e for e in self.entries if e.bound_id == bound_id)


def _minimal_edge_bound_k(n: int, m: int, c: int) -> int | None:
    for k in range(1, n - c + 2):
        q = n - k + c - 1
        if q < 0:
            break
        if m >= math.comb(q, 2) + (n - k):
            return k
    return None


def audit_bounds(g: ColouredGraph, gt: int, gamma_val: int) -> BoundsReport:
    """Evaluate every applicable upper-bound statement at the supplied exact
    values gt = gamma^t(g) and gamma_val = gamma(g)."""
    n, m, c = g.n, g.m, g.c
    prof = degree_profile(g)
    delta = prof.delta
    connected = is_connected(g)
    entries = []

    # (i) delta >= n - c  =>  gamma^t = c
    app = delta >= n - c
    entries.append(BoundEntry("i", app, gt, c, (not app) or gt == c, app and gt == c))

    # (ii) gamma^t <= gamma + c - 1
    rhs = gamma_val + c - 1
    entries.append(BoundEntry("ii", True, gt, rhs, gt <= rhs, gt == rhs))

    # (iii) minimal k with m >= C(n-k+c-1, 2) + n - k and n > k + c - 2
    k = _minimal_edge_bound_k(n, m, c)
    app = k is not None
    entries.append(
        BoundEntry("iii", app, gt, k, (not app) or gt <= k, app and gt == k)
    )

    # (iv) connected and n > c  =>  gamma^t <= (n + c - 1) / 2
    app = connected and n > c
    rhs = (n + c - 1) / 2
    entries.append(BoundEntry("iv", app, gt, rhs, (not app) or gt <= rhs, app and gt == rhs))

    # (v) connected  =>  gamma^t = c or gamma^t < (1+ln(d+1))/(d+1) (n-c+1) + c - 1
    app = connected
    rhs = (1 + math.log(delta + 1)) / (delta + 1) * (n - c + 1) + c - 1
    ok = (not app) or gt == c or gt < rhs
    entries.append(BoundEntry("v", app, gt, rhs, ok))

    # (vi) connected, 2 <= delta <= 8, c < n
    app = connected and 2 <= delta <= 8 and c < n
    rhs = (n - c) * delta / (3 * delta - 1) + c + delta * (delta - 2) / (3 * delta - 1)
    entries.append(BoundEntry("vi", app, gt, rhs, (not app) or gt <= rhs))

    # (vii) super-dense: delta > (n-1) - sqrt(n-1)  =>  gamma^t <= c + 1
    app = delta > (n - 1) - math.sqrt(n - 1)
    entries.append(
        BoundEntry("vii", app, gt, c + 1, (not app) or gt <= c + 1, app and gt == c + 1)
    )
    return BoundsReport(entries=tuple(entries))


def _restricted_growth_colourings(n: int, c_max: int):
    """Surjective colourings of n vertices with <= c_max colours, one
    representative per colour permutation class (first-occurrence order)."""
    def rec(prefix, used):
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for k in range(1, min(used + 1, c_max) + 1):
            prefix.append(k)
            yield from rec(prefix, max(used, k))
            prefix.pop()

    yield from rec([], 0)


def _connected_graphs_upto(max_n: int):
    """Non-isomorphic connected graphs with 2..max_n vertices (atlas-backed)."""
    import networkx as nx

    if max_n > 7:
        raise BadParametersError("exhaustive enumeration is limited to n <= 7")
    for G in nx.graph_atlas_g():
        n = G.number_of_nodes()
        if 2 <= n <= max_n and nx.is_connected(G):
            edges = [(u + 1, v + 1) for u, v in G.edges()]
            yield n, edges


@dataclass
class ConjectureReport:
    graphs_checked: int
    colourings_checked: int
    counterexamples: list[dict]
    tightness_by_delta: dict[int, float] = field(default_factory=dict)

    def to_json_dict(self) -> dict:
        return {
            "graphs_checked": self.graphs_checked,
            "colourings_checked": self.colourings_checked,
            "counterexamples": self.counterexamples,
            "tightness_by_delta": {str(k): v for k, v in self.tightness_by_delta.items()},
        }


def search_conjecture(max_n: int, c_max: int = 3) -> ConjectureReport:
    """Exhaustive check of gamma^t <= (n-c+1) delta / (3 delta - 1) + c - 1 on
    connected coloured graphs with c < n. Counterexamples are reported
    verbatim; an empty list is a report, not a proof."""
    graphs = 0
    colourings = 0
    counterexamples = []
    slack_by_delta: dict[int, float] = {}
    for n, edges in _connected_graphs_upto(max_n):
        graphs += 1
        closed = [1 << i for i in range(n)]
        for u, v in edges:
            closed[u - 1] |= 1 << (v - 1)
            closed[v - 1] |= 1 << (u - 1)
        full = (1 << n) - 1
        deg = [closed[i].bit_count() - 1 for i in range(n)]
        delta = min(deg)
        subs = np.arange(1 << n, dtype=np.int64)
        cover = np.zeros(1 << n, dtype=np.int64)
        for i in range(n):
            hit = (subs >> i) & 1 == 1
            cover[hit] |= closed[i]
        dominating = cover == full
        popcnt = np.array([s.bit_count() for s in range(1 << n)], dtype=np.int64)
        for colouring in _restricted_growth_colourings(n, c_max):
            c = max(colouring)
            if c >= n:
                continue
            colourings += 1
            ok = dominating.copy()
            for k in range(1, c + 1):
                cmask = 0
                for i, col in enumerate(colouring):
                    if col == k:
                        cmask |= 1 << i
                ok &= (subs & cmask) != 0
            gt = int(popcnt[ok].min())
            bound = (n - c + 1) * delta / (3 * delta - 1) + c - 1
            slack = bound - gt
            if slack < slack_by_delta.get(delta, math.inf):
                slack_by_delta[delta] = slack
            if gt > bound:
                counterexamples.append(
                    {"n": n, "edges": edges, "colouring": list(colouring), "gamma_t": gt, "bound": bound}
                )
    return ConjectureReport(
        graphs_checked=graphs,
        colourings_checked=colourings,
        counterexamples=counterexamples,
        tightness_by_delta=slack_by_delta,
    )
