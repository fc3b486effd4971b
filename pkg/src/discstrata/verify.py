"""Seeded, exact property harness for the stratification theorems.

Each trial samples a point of a coincident root locus C_mu and checks, on
that single point, every identity the classifiers rely on. Failures are
returned as data; nothing in here raises on a mathematical disagreement.
"""

import hashlib
import json
import time
import traceback
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .multipoly import MultiPoly
from .linalg import rank_at_point
from .resultants import gcd_and_cofactors, resultant, subdiscriminant_at, sylvester_f_fprime
from .strata import (
    CoefficientPoint,
    Partition,
    StratumReport,
    coincident_locus_membership,
    multiplicity_pattern,
    partitions,
    refinements_by_split,
    sample_coincident_locus,
    shifted_resultant,
    stratum_report,
    t_valuation_constant_shift,
    t_valuation_monomial_shift,
)

__all__ = [
    "VERIFY_DEGREES",
    "TrialResult",
    "SuiteReport",
    "derive_seed",
    "run_trial",
    "run_suite",
    "check_rank_formula",
    "check_res_factorization",
    "check_appendix_proposition",
]

VERIFY_DEGREES = range(2, 7)
_MASK64 = (1 << 64) - 1


def derive_seed(seed, partition_index, trial_index):
    """seed XOR a stable 64-bit hash of (partition index, trial index)."""
    digest = hashlib.blake2b(f"{partition_index}:{trial_index}".encode(), digest_size=8)
    return (seed ^ int.from_bytes(digest.digest(), "big")) & _MASK64


# single-point checks ---------------------------------------------------------

def check_rank_formula(gamma):
    """rank M_gamma == 2n - 1 - deg gcd(F_gamma, F'_gamma)."""
    gamma = gamma if isinstance(gamma, CoefficientPoint) else CoefficientPoint(gamma)
    n = gamma.n
    f = gamma.poly()
    d = gcd_and_cofactors(f, f.derivative())[0].degree
    rank = rank_at_point(sylvester_f_fprime(n).evaluate(gamma.coords))
    return rank == 2 * n - 1 - d


def check_res_factorization(gamma):
    """res(F+t, F') == (-1)^(nd) t^d res(F+t, F'/G), right factor nonzero at t=0."""
    gamma = gamma if isinstance(gamma, CoefficientPoint) else CoefficientPoint(gamma)
    n = gamma.n
    f = gamma.poly()
    g, _, cofactor = gcd_and_cofactors(f, f.derivative())
    d = g.degree
    names = ("t",)
    t = MultiPoly.variable(0, names)
    f_t = [MultiPoly.constant(c, names) for c in f.coeffs]
    f_t[0] = f_t[0] + t
    right = resultant(f_t, [MultiPoly.constant(c, names) for c in cofactor.coeffs])
    if right.constant_term() == 0:
        return False
    sign = -1 if (n * d) % 2 else 1
    return shifted_resultant(gamma, 0) == (t ** d * right).scale(sign)


def check_appendix_proposition(gamma, s):
    """Valuation of the x^s-shifted resultant obeys the multiple-root-at-0 rule."""
    gamma = gamma if isinstance(gamma, CoefficientPoint) else CoefficientPoint(gamma)
    n = gamma.n
    v = t_valuation_monomial_shift(gamma, s)
    m = len(multiplicity_pattern(gamma))
    zero_is_multiple = gamma.coords[0] == 0 and gamma.coords[1] == 0
    if v < n - m:
        return False
    if gamma.coords[0] != 0 and v != n - m:
        return False
    return (v == n - m) == (not zero_is_multiple)


# trials --------------------------------------------------------------------

@dataclass(frozen=True)
class TrialResult:
    n: int
    mu: Partition
    seed: int
    gamma: CoefficientPoint
    report: StratumReport | None
    rank_ok: bool
    res_fact_ok: bool
    appendix_ok: bool
    invariants_ok: bool
    failure_detail: str | None = None

    @property
    def passed(self):
        return self.failure_detail is None

    def to_dict(self):
        return {
            "n": self.n,
            "mu": list(self.mu),
            "seed": self.seed,
            "gamma": self.gamma.to_json() if self.gamma is not None else None,
            "report": self.report.to_dict() if self.report is not None else None,
            "rank_ok": self.rank_ok,
            "res_fact_ok": self.res_fact_ok,
            "appendix_ok": self.appendix_ok,
            "invariants_ok": self.invariants_ok,
            "failure_detail": self.failure_detail,
        }


def _invariant_failures(gamma, mu, report):
    n = gamma.n
    problems = []
    pattern = multiplicity_pattern(gamma)
    if pattern != tuple(mu):
        problems.append(f"pattern {pattern} differs from sampled mu {tuple(mu)}")
    m = report.m_gcd
    if not report.consistent:
        problems.append(
            f"classifiers disagree: gcd={report.m_gcd} subdisc={report.m_subdisc} "
            f"order={report.m_order} tval={report.m_tval}"
        )
    if report.ord_D != n - m:
        problems.append(f"ord D = {report.ord_D}, expected n - m = {n - m}")
    tval = t_valuation_constant_shift(gamma)
    if tval != report.ord_D:
        problems.append(f"constant-shift valuation {tval} != ord D {report.ord_D}")
    first = n - m
    chain = [subdiscriminant_at(gamma.coords, j) for j in range(min(first, n - 1) + 1)]
    if any(chain[:first]) or not chain[min(first, n - 1)]:
        problems.append(f"subdiscriminant chain broken: {chain}")
    if not coincident_locus_membership(pattern, mu):
        problems.append(f"pattern {pattern} not in its own locus C_{tuple(mu)}")
    for finer in refinements_by_split(mu):
        if not coincident_locus_membership(pattern, finer):
            problems.append(f"locus nesting: C_{tuple(mu)} not inside C_{tuple(finer)}")
    for other in partitions(n):
        if len(other) < len(mu) and coincident_locus_membership(pattern, other):
            problems.append(f"pattern {pattern} wrongly placed in coarser C_{tuple(other)}")
    if report.on_hypersurface and report.hypersurface_singular != (m <= n - 2):
        problems.append(f"singularity flag {report.hypersurface_singular} with m={m}")
    return problems


def run_trial(n, mu, seed):
    """Sample gamma in C_mu and run every check on it."""
    mu = Partition(mu)
    if mu.n != n:
        raise ValueError(f"{tuple(mu)} is not a partition of {n}")
    gamma = sample_coincident_locus(mu, seed)
    report = None
    rank_ok = res_ok = app_ok = inv_ok = False
    try:
        report = stratum_report(gamma)
        rank_ok = check_rank_formula(gamma)
        res_ok = check_res_factorization(gamma)
        bad_s = [s for s in range(1, n) if not check_appendix_proposition(gamma, s)]
        app_ok = not bad_s
        problems = _invariant_failures(gamma, mu, report)
        inv_ok = not problems
        if not rank_ok:
            problems.append("rank formula violated")
        if not res_ok:
            problems.append("resultant factorization violated")
        if bad_s:
            problems.append(f"appendix valuation contract violated for s in {bad_s}")
        detail = "; ".join(problems) or None
    except Exception:  # a crash is a failure to report, not to propagate
        detail = "exception: " + traceback.format_exc(limit=3)
    return TrialResult(n, mu, seed, gamma, report, rank_ok, res_ok, app_ok, inv_ok, detail)


@dataclass
class SuiteReport:
    n: int
    trials_per_partition: int
    seed: int
    trials: int = 0
    failures: list = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self):
        return not self.failures

    def to_dict(self, include_elapsed=True):
        out = {
            "n": self.n,
            "trials_per_partition": self.trials_per_partition,
            "seed": self.seed,
            "trials": self.trials,
            "passed": self.passed,
            "failures": [f.to_dict() for f in self.failures],
        }
        if include_elapsed:
            out["elapsed"] = round(self.elapsed, 3)
        return out

    def to_json(self, include_elapsed=True, indent=None):
        return json.dumps(self.to_dict(include_elapsed), indent=indent)


def _task(args):
    n, mu, seed, key = args
    return key, run_trial(n, mu, seed)


def run_suite(n, trials_per_partition, seed, workers=1):
    """Run ``trials_per_partition`` trials for every partition of n."""
    if n not in VERIFY_DEGREES:
        raise ValueError(f"verify supports degrees {VERIFY_DEGREES.start}..{VERIFY_DEGREES.stop - 1}")
    start = time.perf_counter()
    tasks = [
        (n, mu, derive_seed(seed, p, t), (p, t))
        for p, mu in enumerate(partitions(n))
        for t in range(trials_per_partition)
    ]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_task, tasks, chunksize=4))
    else:
        results = [_task(a) for a in tasks]
    results.sort(key=lambda kr: kr[0])
    report = SuiteReport(n=n, trials_per_partition=trials_per_partition, seed=seed)
    report.trials = len(results)
    report.failures = [r for _, r in results if not r.passed]
    report.elapsed = time.perf_counter() - start
    return report
