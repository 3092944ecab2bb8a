"""Seeded property suite behind the ``verify`` command.

Each check returns a :class:`CheckResult` with the worst margin seen; a
check passes when that margin is nonnegative.
"""

import math
from dataclasses import dataclass

import numpy as np

from . import bounds as B
from .measures import (
    pure_bipartite_concurrence,
    pure_global_negativity,
    pure_gme_concurrence,
    pure_multipartite_concurrence,
    pure_tangle,
    purity,
)
from .oracle import DEFAULT_SAMPLES, decomposition_upper_bound, sandwich_check
from .states import ghz_w_mixture, noisy_ghz, noisy_w, random_mixed_state, random_pure_state
from .tensor_ops import enumerate_bipartitions, pure_reduction


@dataclass
class CheckResult:
    name: str
    worst_margin: float
    detail: str = ""

    @property
    def passed(self):
        return self.worst_margin >= 0

    def line(self):
        status = "PASS" if self.passed else "FAIL"
        text = f"{status} {self.name:<26} worst_margin={self.worst_margin:.6e}"
        return f"{text}  {self.detail}" if self.detail else text


def _report(state, hook, **kwargs):
    report = B.full_report(state, **kwargs)
    return hook(report) if hook else report


def check_purity_floor(rng, count=200):
    worst = math.inf
    shapes = [(3, 2), (3, 3), (4, 2), (4, 3)]
    for i in range(count):
        n, d = shapes[i % len(shapes)]
        psi = random_pure_state((d,) * n, rng)
        for bp in enumerate_bipartitions(n):
            m = d ** bp.min_size
            worst = min(worst, purity(pure_reduction(psi.amplitudes, psi.dims, bp.x)) - 1 / m + 1e-9)
    return CheckResult("purity-floor", worst)


def check_measure_identities(rng, count=100):
    tangle_err = neg_err = n2_err = 0.0
    for i in range(count):
        dims = ((2, 3)[i % 2],) * (3 + i % 2)
        psi = random_pure_state(dims, rng)
        c = pure_multipartite_concurrence(psi).value
        tangle_err = max(tangle_err, abs(pure_tangle(psi).value - c * c))
        for p in range(1, psi.n_parties + 1):
            bp_val = pure_bipartite_concurrence(psi, [p]).value
            neg_err = max(neg_err, abs(pure_global_negativity(psi, p).value - bp_val))
        pair = random_pure_state(((2, 3)[i % 2],) * 2, rng)
        n2_err = max(n2_err, abs(pure_multipartite_concurrence(pair).value
                                 - pure_bipartite_concurrence(pair, [1]).value))
    return [
        CheckResult("tangle-identity", 1e-10 - tangle_err),
        CheckResult("negativity-identity", 1e-12 - neg_err),
        CheckResult("two-party-identity", 1e-10 - n2_err),
    ]


def check_remarks(rng, count=100):
    worst = math.inf
    for i in range(count):
        d = (2, 3)[i % 2]
        state = random_mixed_state((d,) * 3, 1 + i % 4, rng)
        est = B.ck_estimates(state)
        c3 = float(rng.uniform(0, 2))
        for mode in ("paper", "corrected"):
            worst = min(
                worst,
                1e-12 - abs(B.theorem2_bound(state, est, mode) - B.theorem1_bound(state, est)),
                1e-12 - abs(B.theorem5_bound(state, c3, mode) - B.theorem4_bound(state, c3)),
            )
    return CheckResult("remark-consistency", worst)


def check_pure_soundness(rng, hook=None, count=200):
    """Bounds at exact pure-state estimates never exceed the exact GME concurrence.

    Four-party states are checked in corrected mode only; the printed
    single-party floor does not hold for two-party blocks.
    """
    worst = math.inf
    identity = 0.0
    shapes = [(3, 2), (3, 3), (4, 2)]
    for i in range(count):
        n, d = shapes[i % len(shapes)]
        psi = random_pure_state((d,) * n, rng)
        exact = pure_gme_concurrence(psi).value
        report = _report(psi, hook, mode="paper" if n == 3 else "corrected")
        for entry in report.entries.values():
            if entry.mode in (None, "corrected") or n == 3:
                worst = min(worst, exact + 1e-8 - entry.raw)
        identity = max(identity, abs(report["thm7"].raw - report["thm2"].raw))
    return [
        CheckResult("pure-soundness", worst),
        CheckResult("thm7-thm2-pure-identity", 1e-12 - identity),
    ]


def check_dominance(hook=None, steps=51):
    """Clamped Theorem 1 (Chen-Kai plug-ins) against clamped L1 on the GHZ/W simplex."""
    worst = math.inf
    last = steps - 1
    for i in range(steps):
        for j in range(steps - i):
            report = _report(ghz_w_mixture(i / last, j / last), hook)
            worst = min(worst, report["thm1"].clamped - report["L1"].clamped + 1e-9)
    return CheckResult("theorem3-dominance", worst)


def check_noise_curves(hook=None, steps=101):
    worst = math.inf
    for family, (a, b) in ((noisy_ghz, (1.0, 1.0)), (noisy_w, (0.0, 1.0))):
        for k in range(steps):
            report = _report(family(k / (steps - 1)), hook, a=a, b=b)
            top = report["thm1"].clamped
            worst = min(worst, top - report["L1"].clamped + 1e-9, top - report["L2"].clamped + 1e-9)
    return CheckResult("noise-curve-dominance", worst)


def check_sandwich(rng, hook=None, count=50, samples=DEFAULT_SAMPLES, seed=0):
    worst = math.inf
    failed = []
    for i in range(count):
        state = random_mixed_state((2, 2, 2), int(rng.integers(1, 3)), rng)
        report = _report(state, hook)
        oracle = decomposition_upper_bound(state, samples, seed=seed + 1000 * i)
        verdict = sandwich_check(state, report, oracle, slack=1e-6)
        top = max(e.clamped for e in report.entries.values() if e.available)
        worst = min(worst, oracle.upper_bound + 1e-6 - top)
        if not verdict.passed:
            failed.extend(name for name, _ in verdict.violations)
    detail = f"violating bounds: {', '.join(sorted(set(failed)))}" if failed else ""
    return CheckResult("oracle-sandwich", worst, detail)


def check_clamp_ceiling(rng, hook=None, count=60):
    worst = math.inf
    for i in range(count):
        d = (2, 3)[i % 2]
        state = random_mixed_state((d,) * 3, 1 + i % 3, rng)
        ceiling = math.sqrt(1 - 1 / d)
        for entry in _report(state, hook).entries.values():
            if entry.available:
                worst = min(worst, ceiling + 1e-9 - entry.clamped)
    return CheckResult("clamp-ceiling", worst)


def run_verification(seed=42, samples=DEFAULT_SAMPLES, count=50, hook=None):
    """Run every property; ``hook`` may rewrite each report (fault injection)."""
    rng = np.random.default_rng(seed)
    results = [check_purity_floor(rng)]
    results += check_measure_identities(rng)
    results.append(check_remarks(rng))
    results += check_pure_soundness(rng, hook)
    results.append(check_dominance(hook))
    results.append(check_noise_curves(hook))
    results.append(check_sandwich(rng, hook, count=count, samples=samples, seed=seed))
    results.append(check_clamp_ceiling(rng, hook))
    return results


def format_report(results, seed, samples, count):
    lines = [f"gmebound verify seed={seed} samples={samples} count={count}"]
    lines += [r.line() for r in results]
    failed = sum(not r.passed for r in results)
    lines.append(f"{len(results) - failed}/{len(results)} properties passed")
    return "\n".join(lines) + "\n"
