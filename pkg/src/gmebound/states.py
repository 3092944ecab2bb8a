"""Multipartite state model, example families and state-file I/O.

Basis ordering: party 1 is the most significant digit of the composite
index, so ``index = sum_i k_i * prod_{j>i} d_j`` and the ket ``|k1 k2 ... kN>``
reads left to right.
"""

import json
import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import DomainError, PhysicalityError, ShapeError, StateFileError
from .linalg import as_matrix, hermiticity_error

TRACE_TOL = 1e-10
HERMITIAN_TOL = 1e-10
PSD_TOL = -1e-9
NORM_TOL = 1e-10


def _check_dims(dims):
    dims = tuple(int(d) for d in dims)
    if not dims:
        raise DomainError("dims must list at least one party")
    if any(d < 2 for d in dims):
        raise DomainError(f"every local dimension must be >= 2, got {list(dims)}")
    return dims


def _frozen(a):
    a = np.array(a, dtype=complex)
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class MultipartiteState:
    """Density matrix on ``H_1 x ... x H_N`` with local dimensions ``dims``."""

    dims: tuple
    rho: np.ndarray

    def __post_init__(self):
        dims = _check_dims(self.dims)
        rho = as_matrix(self.rho)
        total = math.prod(dims)
        if rho.shape != (total, total):
            raise ShapeError(f"dims {list(dims)} need a {total}x{total} matrix, got {rho.shape}")
        herm = hermiticity_error(rho)
        if herm > HERMITIAN_TOL:
            raise PhysicalityError(f"density matrix is not Hermitian (max deviation {herm:.3g})")
        tr = np.trace(rho)
        if abs(tr - 1) > TRACE_TOL:
            raise PhysicalityError(f"density matrix has trace {tr.real:.12g}, expected 1")
        lam_min = float(np.linalg.eigvalsh(rho)[0])
        if lam_min < PSD_TOL:
            raise PhysicalityError(
                f"density matrix is not positive semidefinite (min eigenvalue {lam_min:.3g})",
                min_eigenvalue=lam_min,
            )
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "rho", _frozen(rho))

    @property
    def n_parties(self):
        return len(self.dims)

    @property
    def dim(self):
        return self.rho.shape[0]

    def eigh(self):
        """Eigenvalues (ascending) and eigenvectors of ``rho``."""
        return np.linalg.eigh(self.rho)


@dataclass(frozen=True, eq=False)
class PureState:
    """Normalized state vector with party structure."""

    dims: tuple
    amplitudes: np.ndarray

    def __post_init__(self):
        dims = _check_dims(self.dims)
        amp = np.asarray(self.amplitudes, dtype=complex).reshape(-1)
        if amp.size != math.prod(dims):
            raise ShapeError(f"dims {list(dims)} need {math.prod(dims)} amplitudes, got {amp.size}")
        norm = np.linalg.norm(amp)
        if abs(norm - 1) > NORM_TOL:
            raise PhysicalityError(f"state vector has norm {norm:.12g}, expected 1")
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "amplitudes", _frozen(amp))

    @property
    def n_parties(self):
        return len(self.dims)

    @classmethod
    def normalized(cls, dims, amplitudes):
        amp = np.asarray(amplitudes, dtype=complex).reshape(-1)
        return cls(dims, amp / np.linalg.norm(amp))


@dataclass(frozen=True, eq=False)
class Ensemble:
    """Weighted pure-state decomposition ``sum_a p_a |psi_a><psi_a|``."""

    weights: tuple
    members: tuple

    def __post_init__(self):
        weights = tuple(float(p) for p in self.weights)
        members = tuple(self.members)
        if len(weights) != len(members) or not members:
            raise DomainError("an ensemble needs one positive weight per member")
        if any(p <= 0 for p in weights):
            raise DomainError("ensemble weights must be strictly positive")
        if abs(sum(weights) - 1) > 1e-10:
            raise DomainError(f"ensemble weights sum to {sum(weights):.12g}, expected 1")
        if len({m.dims for m in members}) != 1:
            raise DomainError("ensemble members have different dims")
        object.__setattr__(self, "weights", weights)
        object.__setattr__(self, "members", members)

    @property
    def dims(self):
        return self.members[0].dims

    def density_matrix(self):
        vecs = np.array([m.amplitudes for m in self.members])
        return (vecs.T * np.asarray(self.weights)) @ vecs.conj()

    def state(self):
        return MultipartiteState(self.dims, self.density_matrix())


def density_of(psi):
    """Rank-1 projector ``|psi><psi|``."""
    v = psi.amplitudes
    return MultipartiteState(psi.dims, np.outer(v, v.conj()))


def basis_state(digits, dims):
    """Computational basis ket ``|k1 k2 ... kN>``."""
    dims = _check_dims(dims)
    amp = np.zeros(math.prod(dims), dtype=complex)
    amp[np.ravel_multi_index(tuple(digits), dims)] = 1
    return PureState(dims, amp)


def ghz(n_parties, d=2):
    """``(1/sqrt d) sum_k |k>^N``."""
    if n_parties < 2:
        raise DomainError("GHZ needs at least two parties")
    dims = (d,) * n_parties
    amp = np.zeros(d**n_parties, dtype=complex)
    step = sum(d**j for j in range(n_parties))
    amp[[k * step for k in range(d)]] = 1 / np.sqrt(d)
    return PureState(dims, amp)


def w(n_parties):
    """Uniform single-excitation qubit state."""
    if n_parties < 2:
        raise DomainError("W needs at least two parties")
    amp = np.zeros(2**n_parties, dtype=complex)
    amp[[2**j for j in range(n_parties)]] = 1 / np.sqrt(n_parties)
    return PureState((2,) * n_parties, amp)


def maximally_mixed(dims):
    dims = _check_dims(dims)
    total = math.prod(dims)
    return MultipartiteState(dims, np.eye(total) / total)


def mix(states, weights):
    """Convex combination of states with equal dims."""
    states = [density_of(s) if isinstance(s, PureState) else s for s in states]
    weights = [float(t) for t in weights]
    if len(states) != len(weights) or not states:
        raise DomainError("mix needs one weight per state")
    if any(t < 0 for t in weights):
        raise DomainError(f"mixing weights must be nonnegative, got {weights}")
    if abs(sum(weights) - 1) > 1e-12:
        raise DomainError(f"mixing weights sum to {sum(weights):.15g}, expected 1")
    if len({s.dims for s in states}) != 1:
        raise DomainError("cannot mix states with different dims")
    rho = sum(t * s.rho for t, s in zip(weights, states))
    return MultipartiteState(states[0].dims, rho)


def ghz_w_mixture(alpha, beta):
    """Three-qubit ``(1-a-b)/8 I + a GHZ + b W``."""
    noise = 1 - alpha - beta
    if -1e-12 < noise < 0:
        noise = 0.0
    return mix(
        [maximally_mixed((2, 2, 2)), density_of(ghz(3)), density_of(w(3))],
        [noise, alpha, beta],
    )


def noisy_ghz(p):
    """Three-qubit GHZ with white noise, visibility ``p``."""
    return mix([maximally_mixed((2, 2, 2)), density_of(ghz(3))], [1 - p, p])


def noisy_w(s):
    """Three-qubit W with white noise, visibility ``s``."""
    return mix([maximally_mixed((2, 2, 2)), density_of(w(3))], [1 - s, s])


def random_pure_state(dims, seed=None):
    """Haar-random pure state."""
    dims = _check_dims(dims)
    rng = np.random.default_rng(seed)
    n = math.prod(dims)
    z = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    return PureState.normalized(dims, z)


def random_mixed_state(dims, rank, seed=None):
    """Random density matrix of the given rank (induced measure)."""
    dims = _check_dims(dims)
    rng = np.random.default_rng(seed)
    n = math.prod(dims)
    g = rng.standard_normal((n, rank)) + 1j * rng.standard_normal((n, rank))
    rho = g @ g.conj().T
    rho = 0.5 * (rho + rho.conj().T)
    return MultipartiteState(dims, rho / np.trace(rho).real)


def _format_row(row):
    return "[" + ", ".join(f"{x:.17g}" for x in row) + "]"


def save_state(state, path):
    """Write ``state`` as JSON with keys ``dims``, ``re`` and ``im``."""
    rows_re = ",\n    ".join(_format_row(r) for r in state.rho.real)
    rows_im = ",\n    ".join(_format_row(r) for r in state.rho.imag)
    text = (
        "{\n"
        f'  "dims": {json.dumps(list(state.dims))},\n'
        f'  "re": [\n    {rows_re}\n  ],\n'
        f'  "im": [\n    {rows_im}\n  ]\n'
        "}\n"
    )
    Path(path).write_text(text, encoding="utf-8")


def _read_block(doc, key, size):
    if key not in doc:
        raise StateFileError(f'missing field "{key}"')
    block = doc[key]
    if not isinstance(block, list) or len(block) != size:
        raise StateFileError(f'field "{key}" must be a list of {size} rows')
    for i, row in enumerate(block):
        if not isinstance(row, list) or len(row) != size:
            raise StateFileError(f'field "{key}" row {i} must hold {size} numbers')
        for j, x in enumerate(row):
            if isinstance(x, bool) or not isinstance(x, (int, float)):
                raise StateFileError(f'field "{key}" entry [{i}][{j}] is not a number: {x!r}')
    return np.array(block, dtype=float)


def load_state(path):
    """Read a state written by :func:`save_state`.

    Raises ``StateFileError`` on malformed content and ``PhysicalityError``
    when the matrix is not a valid density matrix.
    """
    try:
        doc = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise StateFileError(f"{path}: invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    if not isinstance(doc, dict):
        raise StateFileError(f"{path}: top level must be an object")
    dims = doc.get("dims")
    if not isinstance(dims, list) or not dims or not all(isinstance(d, int) and not isinstance(d, bool) for d in dims):
        raise StateFileError(f'{path}: field "dims" must be a nonempty list of integers')
    if any(d < 2 for d in dims):
        raise StateFileError(f'{path}: field "dims" entries must be >= 2, got {dims}')
    size = math.prod(dims)
    try:
        re = _read_block(doc, "re", size)
        im = _read_block(doc, "im", size)
    except StateFileError as exc:
        raise StateFileError(f"{path}: {exc}") from None
    return MultipartiteState(tuple(dims), re + 1j * im)
