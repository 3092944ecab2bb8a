"""Lower bounds on GME concurrence and the report that collects them.

Every ``theoremN_bound`` returns the raw value, which may be negative.
Since GME concurrence is nonnegative, ``max(0, raw)`` is the operative
bound; :class:`BoundEntry` carries both.

Bounds whose constant comes from the single-party purity floor
``1 - tr rho_x^2 <= 1 - 1/d`` take a ``mode``. ``"paper"`` uses that floor
for every bipartition as printed. ``"corrected"`` uses the floor
``1 - d**-min(|x|, |xbar|)`` that actually holds for multi-party blocks,
summed over all but the least-entangled-capable bipartition. The two modes
coincide for three parties.
"""

import math
from dataclasses import dataclass, field
from typing import Optional

from .errors import DomainError
from .linalg import trace_norm
from .measures import (
    ck_from_norms,
    factor_dims,
    pure_bipartite_concurrence,
    pure_global_negativity,
    pure_multipartite_concurrence,
    pure_tangle,
)
from .states import PureState, density_of
from .tensor_ops import (
    correlation_matrix_ab,
    enumerate_bipartitions,
    partial_transpose,
    realign,
)

MODES = {"paper": "paper-literal", "paper-literal": "paper-literal", "corrected": "corrected"}
PURE_TOL = 1e-10


def _mode(mode):
    try:
        return MODES[mode]
    except KeyError:
        raise DomainError(f"unknown mode {mode!r}; use 'paper' or 'corrected'") from None


def homogeneous_dim(state, n_parties=None, min_parties=2):
    """Common local dimension ``d``; raises for mixed dimensions or wrong ``N``."""
    dims = state.dims
    if len(set(dims)) != 1:
        raise DomainError(f"bounds need equal local dimensions, got {list(dims)}")
    n = len(dims)
    if n_parties is not None and n != n_parties:
        raise DomainError(f"this bound is defined for N={n_parties} parties, got N={n}")
    if n < min_parties:
        raise DomainError(f"this bound needs N >= {min_parties} parties, got N={n}")
    return dims[0]


def _ordered_estimates(estimates, n_parties):
    bps = enumerate_bipartitions(n_parties)
    missing = [bp.label for bp in bps if bp not in estimates]
    if missing:
        raise DomainError(f"missing estimates for bipartitions {missing}")
    return [float(estimates[bp]) for bp in bps]


def _linear_floors(n, d):
    # (d**m - 1) / d**m per canonical bipartition, m the smaller block size
    return sorted((d**bp.min_size - 1) / d**bp.min_size for bp in enumerate_bipartitions(n))


def sum_constant(n, d, mode):
    """Constant subtracted in the concurrence- and negativity-sum bounds."""
    if _mode(mode) == "paper-literal":
        return (2 ** (n - 1) - 2) * math.sqrt((d - 1) / d)
    return sum(math.sqrt(f) for f in _linear_floors(n, d)[1:])


def linear_constant(n, d, mode):
    """Constant subtracted in the tangle bound; its square root serves the C_N bound."""
    if _mode(mode) == "paper-literal":
        return (2 ** (n - 1) - 2) * (d - 1) / d
    return sum(_linear_floors(n, d)[1:])


def theorem1_bound(state, concurrence_estimates):
    """Tripartite bound from the three bipartite concurrences."""
    d = homogeneous_dim(state, n_parties=3)
    c = _ordered_estimates(concurrence_estimates, 3)
    return sum(c) / math.sqrt(2) - 2 * math.sqrt((d - 1) / d)


def theorem2_bound(state, concurrence_estimates, mode="paper"):
    """N-partite bound from all ``2**(N-1) - 1`` bipartite concurrences."""
    d = homogeneous_dim(state)
    n = len(state.dims)
    c = _ordered_estimates(concurrence_estimates, n)
    return sum(c) / math.sqrt(2) - sum_constant(n, d, mode)


def theorem4_bound(state, c3_estimate):
    """Tripartite bound from the tripartite concurrence."""
    d = homogeneous_dim(state, n_parties=3)
    return float(c3_estimate) - math.sqrt(2 * (d - 1) / d)


def theorem5_bound(state, cn_estimate, mode="paper"):
    """N-partite bound from the N-partite concurrence."""
    d = homogeneous_dim(state, min_parties=3)
    n = len(state.dims)
    return 2 ** ((n - 3) / 2) * float(cn_estimate) - math.sqrt(linear_constant(n, d, mode))


def theorem6_bound(state, tangle_estimate, mode="paper"):
    """N-partite bound from the multipartite tangle."""
    d = homogeneous_dim(state, min_parties=3)
    n = len(state.dims)
    return 2 ** (n - 3) * float(tangle_estimate) - linear_constant(n, d, mode)


def theorem7_bound(state, negativity_estimates, mode="paper"):
    """N-partite bound from the global negativities of all bipartitions."""
    d = homogeneous_dim(state)
    n = len(state.dims)
    neg = _ordered_estimates(negativity_estimates, n)
    return sum(neg) / math.sqrt(2) - sum_constant(n, d, mode)


def bipartition_norms(state):
    """``{bp: (||rho^{T_x}||, ||R_x(rho)||)}`` over canonical bipartitions."""
    return {
        bp: (trace_norm(partial_transpose(state, bp.x)), trace_norm(realign(state, bp)))
        for bp in enumerate_bipartitions(len(state.dims))
    }


def ck_estimates(state, norms=None):
    norms = bipartition_norms(state) if norms is None else norms
    return {bp: ck_from_norms(pt, r, min(factor_dims(state.dims, bp))) for bp, (pt, r) in norms.items()}


def negativity_estimates(state, norms=None):
    """Theorem-7 plug-ins; see :func:`measures.negativity_estimate`."""
    norms = bipartition_norms(state) if norms is None else norms
    return {bp: ck_from_norms(pt, 0.0, min(factor_dims(state.dims, bp))) for bp, (pt, _) in norms.items()}


def l1_components(state, norms=None):
    """``(M, N)``: mean partial-transpose and mean realignment trace norms."""
    homogeneous_dim(state, n_parties=3)
    norms = bipartition_norms(state) if norms is None else norms
    pts = [pt for pt, _ in norms.values()]
    rs = [r for _, r in norms.values()]
    return sum(pts) / 3, sum(rs) / 3


def l1_bound(state, norms=None):
    """Tripartite bound built from averaged PPT and realignment norms."""
    d = homogeneous_dim(state, n_parties=3)
    m, n = l1_components(state, norms)
    return (max(m, n) - (1 + 2 * d) / 3) / math.sqrt(d * (d - 1))


def correlation_norms(state, a, b):
    """``{bp: ||M_{a,b}^{x|xbar}||}`` over the three tripartite splits."""
    return {
        bp: trace_norm(correlation_matrix_ab(state, bp, a, b))
        for bp in enumerate_bipartitions(len(state.dims))
    }


def l2_bound(state, a, b, mab_norms=None):
    """Tripartite bound built from the ``M_{a,b}`` correlation matrices."""
    d = homogeneous_dim(state, n_parties=3)
    norms = correlation_norms(state, a, b) if mab_norms is None else mab_norms
    mab = sum(norms.values()) / 3
    return (mab - math.sqrt((1 + a * a) * (1 + b * b)) - 2 * (d - 1) / 3) / math.sqrt(d * (d - 1))


@dataclass
class BoundEntry:
    name: str
    raw: Optional[float]
    estimator: str
    components: dict = field(default_factory=dict)
    mode: Optional[str] = None
    note: str = ""

    @property
    def available(self):
        return self.raw is not None

    @property
    def clamped(self):
        return None if self.raw is None else max(0.0, self.raw)

    def to_dict(self):
        return {
            "raw": self.raw,
            "clamped": self.clamped,
            "available": self.available,
            "estimator": self.estimator,
            "mode": self.mode,
            "components": self.components,
            "note": self.note,
        }


@dataclass
class BoundReport:
    dims: tuple
    pure: bool
    a: float
    b: float
    mode: str
    entries: dict
    norms: dict

    def __getitem__(self, name):
        return self.entries[name]

    def available(self):
        return {k: e for k, e in self.entries.items() if e.available}

    def to_dict(self):
        return {
            "dims": list(self.dims),
            "pure": self.pure,
            "a": self.a,
            "b": self.b,
            "mode": self.mode,
            "bounds": {k: e.to_dict() for k, e in self.entries.items()},
            "norms": self.norms,
        }


def as_pure(state, tol=PURE_TOL):
    """The state vector of a rank-1 density matrix, or ``None``."""
    if isinstance(state, PureState):
        return state
    lam, vecs = state.eigh()
    if lam[-1] < 1 - tol:
        return None
    return PureState.normalized(state.dims, vecs[:, -1])


def _labelled(values, prefix):
    return {f"{prefix}[{bp.label}]": v for bp, v in values.items()}


def full_report(state, a=1.0, b=1.0, mode="paper", cn_estimate=None, tangle_estimate=None):
    """Evaluate every bound applicable to ``state``.

    Pure states (including rank-1 density matrices) use exact pure-state
    measures. Mixed states use the Chen-Kai and PPT plug-ins for the
    bipartite sums; the C_N and tangle bounds need ``cn_estimate`` /
    ``tangle_estimate`` and are marked unavailable otherwise.
    """
    mode = _mode(mode)
    if isinstance(state, PureState):
        psi, state = state, density_of(state)
    else:
        psi = as_pure(state)
    d = homogeneous_dim(state)
    n = len(state.dims)
    norms = bipartition_norms(state)
    bps = list(norms)
    other = "corrected" if mode == "paper-literal" else "paper-literal"
    modes = [mode] if n <= 3 else [mode, other]
    entries = {}

    def add(entry):
        entries[entry.name] = entry

    def name_for(base, m):
        return base if m == mode else f"{base}:{m}"

    if psi is not None:
        conc = {bp: pure_bipartite_concurrence(psi, bp).value for bp in bps}
        negs = {bp: pure_global_negativity(psi, bp).value for bp in bps}
        cn = pure_multipartite_concurrence(psi).value
        tau = pure_tangle(psi).value
        conc_tag = neg_tag = cn_tag = tau_tag = "exact-pure"
    else:
        conc = ck_estimates(state, norms)
        negs = negativity_estimates(state, norms)
        conc_tag, neg_tag = "chen-kai-plugin", "negativity-plugin"
        cn, tau = cn_estimate, tangle_estimate
        cn_tag = tau_tag = "user-supplied"
    conc_comp = _labelled(conc, "C")
    neg_comp = _labelled(negs, "N")
    neg_note = "" if psi is not None else "plug-in estimate sqrt(2/(m(m-1))) (||rho^{T_x}|| - 1)"

    if n == 3:
        add(BoundEntry("thm1", theorem1_bound(state, conc), conc_tag,
                       dict(conc_comp, constant=2 * math.sqrt((d - 1) / d))))
    for m in modes:
        add(BoundEntry(name_for("thm2", m), theorem2_bound(state, conc, m), conc_tag,
                       dict(conc_comp, constant=sum_constant(n, d, m)), mode=m))
    if n == 3:
        raw = None if cn is None else theorem4_bound(state, cn)
        add(BoundEntry("thm4", raw, cn_tag, {"C_N": cn},
                       note="" if raw is not None else "needs a C_3 estimate for mixed states"))
    if n >= 3:
        for m in modes:
            raw = None if cn is None else theorem5_bound(state, cn, m)
            add(BoundEntry(name_for("thm5", m), raw, cn_tag,
                           {"C_N": cn, "constant": math.sqrt(linear_constant(n, d, m))}, mode=m,
                           note="" if raw is not None else "needs a C_N estimate for mixed states"))
        for m in modes:
            raw = None if tau is None else theorem6_bound(state, tau, m)
            add(BoundEntry(name_for("thm6", m), raw, tau_tag,
                           {"tau_N": tau, "constant": linear_constant(n, d, m)}, mode=m,
                           note="" if raw is not None else "needs a tangle estimate for mixed states"))
    for m in modes:
        add(BoundEntry(name_for("thm7", m), theorem7_bound(state, negs, m), neg_tag,
                       dict(neg_comp, constant=sum_constant(n, d, m)), mode=m, note=neg_note))
    if n == 3:
        big_m, big_n = l1_components(state, norms)
        add(BoundEntry("L1", l1_bound(state, norms), "direct",
                       {"M": big_m, "N": big_n,
                        **_labelled({bp: v[0] for bp, v in norms.items()}, "pt_norm"),
                        **_labelled({bp: v[1] for bp, v in norms.items()}, "realign_norm")}))
        mab = correlation_norms(state, a, b)
        add(BoundEntry("L2", l2_bound(state, a, b, mab), "direct",
                       {"a": a, "b": b, "Mab": sum(mab.values()) / 3, **_labelled(mab, "Mab_norm")}))

    norm_table = {bp.label: {"pt_norm": pt, "realign_norm": r} for bp, (pt, r) in norms.items()}
    return BoundReport(tuple(state.dims), psi is not None, float(a), float(b), mode, entries, norm_table)
