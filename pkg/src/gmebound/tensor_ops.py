"""Party-structured reshaping: partial trace, partial transpose, realignment.

Public functions take party subsets with 1-based labels, as in ``{1, 3}``.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .linalg import as_matrix


@dataclass(frozen=True, order=True)
class Bipartition:
    """Split ``x | x-bar`` of ``n_parties`` parties.

    ``mask`` has bit ``i`` set when party ``i + 1`` belongs to ``x``.
    Canonical form keeps party 1 in ``x``.
    """

    n_parties: int
    mask: int

    def __post_init__(self):
        full = (1 << self.n_parties) - 1
        if self.n_parties < 2:
            raise DomainError("a bipartition needs at least two parties")
        if not 0 < self.mask < full:
            raise DomainError(f"mask {self.mask:#b} is empty or the full set")
        if not self.mask & 1:
            object.__setattr__(self, "mask", full ^ self.mask)

    @classmethod
    def from_parties(cls, parties, n_parties):
        parties = _check_subset(parties, n_parties)
        return cls(n_parties, sum(1 << (p - 1) for p in parties))

    @property
    def x(self):
        """Parties in ``x`` (1-based, ascending)."""
        return tuple(i + 1 for i in range(self.n_parties) if self.mask >> i & 1)

    @property
    def xbar(self):
        return tuple(i + 1 for i in range(self.n_parties) if not self.mask >> i & 1)

    @property
    def min_size(self):
        return min(len(self.x), len(self.xbar))

    @property
    def label(self):
        return "".join(map(str, self.x)) + "|" + "".join(map(str, self.xbar))

    def __str__(self):
        return self.label


def enumerate_bipartitions(n_parties):
    """The ``2**(N-1) - 1`` canonical bipartitions, by ascending mask."""
    if n_parties < 2:
        raise DomainError("need at least two parties")
    full = (1 << n_parties) - 1
    return [Bipartition(n_parties, m) for m in range(1, full, 2)]


def enumerate_reductions(n_parties):
    """All ``2**N - 2`` nonempty proper party subsets (1-based tuples)."""
    if n_parties < 2:
        raise DomainError("need at least two parties")
    return [
        tuple(i + 1 for i in range(n_parties) if m >> i & 1)
        for m in range(1, (1 << n_parties) - 1)
    ]


def _check_subset(parties, n_parties):
    if isinstance(parties, Bipartition):
        return parties.x
    parties = tuple(sorted({int(p) for p in parties}))
    if not parties or len(parties) == n_parties:
        raise DomainError(f"party subset {list(parties)} must be nonempty and proper")
    if parties[0] < 1 or parties[-1] > n_parties:
        raise DomainError(f"party labels must lie in 1..{n_parties}, got {list(parties)}")
    return parties


def _split(dims, parties):
    """Zero-based axes of ``x`` and ``x-bar`` plus their factor dimensions."""
    xs = [p - 1 for p in parties]
    xbs = [i for i in range(len(dims)) if i not in xs]
    return xs, xbs, math.prod(dims[i] for i in xs), math.prod(dims[i] for i in xbs)


def _grouped(rho, dims, parties):
    """View ``rho`` as a ``(dx, dxb, dx, dxb)`` tensor in ``(x, x-bar)`` party order."""
    n = len(dims)
    xs, xbs, dx, dxb = _split(dims, parties)
    order = xs + xbs
    t = np.asarray(rho).reshape(dims + dims)
    t = t.transpose(order + [n + i for i in order])
    return t.reshape(dx, dxb, dx, dxb)


def _unpack(state):
    return state.dims, state.rho


def reduce_matrix(rho, dims, keep):
    """Partial trace of a raw matrix keeping the 1-based parties ``keep``."""
    dims = tuple(dims)
    keep = _check_subset(keep, len(dims))
    t = _grouped(rho, dims, keep)
    return np.einsum("ajbj->ab", t)


def partial_trace(state, keep):
    """Reduced density matrix on ``keep``, original party order preserved."""
    dims, rho = _unpack(state)
    return reduce_matrix(rho, dims, keep)


def pure_reduction(amplitudes, dims, keep):
    """``rho_x`` of a pure state, from the coefficient matrix ``psi psi^dagger``."""
    dims = tuple(dims)
    keep = _check_subset(keep, len(dims))
    xs, xbs, dx, dxb = _split(dims, keep)
    c = np.asarray(amplitudes).reshape(dims).transpose(xs + xbs).reshape(dx, dxb)
    return c @ c.conj().T


def transpose_parties(rho, dims, subset):
    dims = tuple(dims)
    subset = _check_subset(subset, len(dims))
    n = len(dims)
    axes = list(range(2 * n))
    for p in subset:
        axes[p - 1], axes[n + p - 1] = n + p - 1, p - 1
    total = math.prod(dims)
    return np.asarray(rho).reshape(dims + dims).transpose(axes).reshape(total, total)


def partial_transpose(state, subset):
    """Transpose the tensor indices of the parties in ``subset``."""
    dims, rho = _unpack(state)
    return transpose_parties(rho, dims, subset)


def realign_matrix(rho, dims, bp):
    dims = tuple(dims)
    parties = _check_subset(bp, len(dims))
    _, _, dx, dxb = _split(dims, parties)
    t = _grouped(rho, dims, parties)
    # R[(i, k), (j, l)] = <i j| rho |k l>
    return t.transpose(0, 2, 1, 3).reshape(dx * dx, dxb * dxb)


def realign(state, bp):
    """Realignment across ``bp``; shape ``dx**2 x dxb**2``."""
    dims, rho = _unpack(state)
    return realign_matrix(rho, dims, bp)


def vec(m):
    """Column-stacking vectorization as an ``(rows*cols) x 1`` matrix."""
    m = as_matrix(m)
    return m.reshape(-1, order="F")[:, None]


def correlation_matrix_ab(state, bp, a, b):
    """Block matrix ``[[a b, a v(rho_xbar)^T], [b v(rho_x), R(rho)]]``.

    ``v`` stacks ``rho^T`` by columns, i.e. ``vec(rho.T)``. That matches the
    row pairing of :func:`realign`, so ``R(rho_x (x) rho_xbar)`` equals
    ``v(rho_x) v(rho_xbar)^T`` also for complex reductions.
    """
    dims, rho = _unpack(state)
    if not isinstance(bp, Bipartition):
        bp = Bipartition.from_parties(bp, len(dims))
    r = realign_matrix(rho, dims, bp)
    v_x = vec(reduce_matrix(rho, dims, bp.x).T)
    v_xb = vec(reduce_matrix(rho, dims, bp.xbar).T)
    top = np.concatenate([[[a * b]], a * v_xb.T], axis=1)
    bottom = np.concatenate([b * v_x, r], axis=1)
    return np.concatenate([top, bottom], axis=0)
