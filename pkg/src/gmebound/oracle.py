"""Randomized convex-decomposition upper bounds on mixed-state GME concurrence.

Any isometry ``V`` (``K x r``) applied to the eigen-decomposition
``rho = sum_j lam_j |e_j><e_j|`` gives an ensemble
``sqrt(p_i) |psi_i> = sum_j conj(V_ij) sqrt(lam_j) |e_j>`` of ``rho``. The
ensemble-averaged pure GME concurrence is an upper bound on the convex
roof; minimizing over sampled isometries tightens it.
"""

from dataclasses import dataclass, field

import numpy as np

from .bounds import as_pure
from .errors import DomainError
from .linalg import random_unitary
from .measures import pure_gme_concurrence
from .states import Ensemble, PureState, density_of
from .tensor_ops import enumerate_bipartitions

RANK_TOL = 1e-10
WEIGHT_FLOOR = 1e-15
DEFAULT_SAMPLES = 500


@dataclass
class OracleResult:
    upper_bound: float
    best_ensemble: Ensemble
    samples_used: int
    seed: int


def _gme_batch(vectors, dims):
    """Pure GME concurrence of each row of ``vectors`` (rows normalized)."""
    n = len(dims)
    k = vectors.shape[0]
    t = vectors.reshape((k,) + tuple(dims))
    worst = np.full(k, np.inf)
    for bp in enumerate_bipartitions(n):
        # axis 0 is the batch, so party p sits on axis p
        dx = int(np.prod([dims[p - 1] for p in bp.x]))
        c = t.transpose((0,) + bp.x + bp.xbar).reshape(k, dx, -1)
        red = c @ c.conj().transpose(0, 2, 1)
        pur = np.sum(np.abs(red) ** 2, axis=(1, 2))
        worst = np.minimum(worst, 1 - pur)
    return np.sqrt(np.clip(worst, 0, None))


def _ensemble(columns, dims):
    """Weights, unit vectors from the unnormalized members in ``columns`` rows."""
    weights = np.sum(np.abs(columns) ** 2, axis=1)
    keep = weights > WEIGHT_FLOOR
    weights, members = weights[keep], columns[keep] / np.sqrt(weights[keep])[:, None]
    return weights / weights.sum(), members


def decomposition_upper_bound(state, n_samples=DEFAULT_SAMPLES, ensemble_size=None, seed=0):
    """Best ensemble-average GME concurrence over ``n_samples`` decompositions.

    Sample 0 is the bare eigen-decomposition; sample ``k >= 1`` mixes it with
    the first ``rank`` columns of ``random_unitary(ensemble_size, seed + k)``.
    """
    if n_samples < 1:
        raise DomainError("n_samples must be >= 1")
    if isinstance(state, PureState):
        state = density_of(state)
    dims = state.dims
    psi = as_pure(state)
    if psi is not None:
        value = pure_gme_concurrence(psi).value
        return OracleResult(value, Ensemble((1.0,), (psi,)), 1, seed)

    lam, vecs = state.eigh()
    support = lam > RANK_TOL
    rank = int(support.sum())
    if ensemble_size is None:
        ensemble_size = rank + 2
    if ensemble_size < rank:
        raise DomainError(f"ensemble_size {ensemble_size} is below the state rank {rank}")
    # rows of `scaled` are sqrt(lam_j) <e_j|, shape (rank, D)
    scaled = (vecs[:, support] * np.sqrt(lam[support])).T

    best_value, best = np.inf, None
    for k in range(n_samples):
        if k == 0:
            columns = scaled
        else:
            v = random_unitary(ensemble_size, seed + k)[:, :rank]
            columns = v.conj() @ scaled
        weights, members = _ensemble(columns, dims)
        value = float(weights @ _gme_batch(members, dims))
        if value < best_value:
            best_value, best = value, (weights, members)

    weights, members = best
    ensemble = Ensemble(tuple(weights), tuple(PureState(dims, m) for m in members))
    return OracleResult(best_value, ensemble, n_samples, seed)


@dataclass
class Verdict:
    passed: bool
    upper_bound: float
    slack: float
    violations: list = field(default_factory=list)

    def __str__(self):
        if self.passed:
            return f"pass (oracle upper bound {self.upper_bound:.9g})"
        listed = ", ".join(f"{name}={value:.9g}" for name, value in self.violations)
        return f"fail: {listed} exceed oracle upper bound {self.upper_bound:.9g} + {self.slack:g}"


def sandwich_check(state, report, oracle, slack=1e-6):
    """Check every available clamped lower bound against the oracle's upper bound."""
    violations = [
        (name, entry.clamped)
        for name, entry in report.entries.items()
        if entry.available and entry.clamped > oracle.upper_bound + slack
    ]
    return Verdict(not violations, oracle.upper_bound, slack, violations)
