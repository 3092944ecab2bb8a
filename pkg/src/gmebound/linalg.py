"""Dense complex-matrix primitives.

Matrices are plain 2-D ``numpy`` arrays. The routines here are thin,
validated wrappers over LAPACK so that the rest of the package has a
single place where shapes and Hermiticity are checked.
"""

import numpy as np

from .errors import DomainError, ShapeError

HERMITIAN_TOL = 1e-10


def as_matrix(a):
    """Return ``a`` as a 2-D complex array, rejecting non-finite entries."""
    m = np.asarray(a, dtype=complex)
    if m.ndim == 1:
        m = m[:, None]
    if m.ndim != 2:
        raise ShapeError(f"expected a 2-D matrix, got an array with ndim={m.ndim}")
    if not np.all(np.isfinite(m)):
        raise DomainError("matrix contains NaN or Inf entries")
    return m


def matmul(a, b):
    a, b = as_matrix(a), as_matrix(b)
    if a.shape[1] != b.shape[0]:
        raise ShapeError(f"cannot multiply {a.shape} by {b.shape}")
    return a @ b


def dagger(a):
    """Conjugate transpose."""
    return as_matrix(a).conj().T


def kron(a, b):
    """Kronecker product, ``a`` index major and ``b`` index minor."""
    return np.kron(as_matrix(a), as_matrix(b))


def hermiticity_error(a):
    """Largest entry of ``|a - a^dagger|``."""
    a = as_matrix(a)
    if a.shape[0] != a.shape[1]:
        raise ShapeError(f"matrix must be square, got {a.shape}")
    return float(np.max(np.abs(a - a.conj().T))) if a.size else 0.0


def hermitian_eigenvalues(a, tol=HERMITIAN_TOL):
    """Ascending real spectrum of a Hermitian matrix.

    Raises
    ------
    ShapeError
        If ``a`` is not square.
    DomainError
        If ``a`` deviates from Hermiticity by more than ``tol``.
    """
    a = as_matrix(a)
    err = hermiticity_error(a)
    if err > tol:
        raise DomainError(f"matrix is not Hermitian (max deviation {err:.3g} > {tol:g})")
    return np.linalg.eigvalsh(0.5 * (a + a.conj().T))


def singular_values(a):
    """Singular values in descending order, ``min(rows, cols)`` of them."""
    return np.linalg.svd(as_matrix(a), compute_uv=False)


def trace_norm(a):
    """Ky Fan (trace) norm: the sum of singular values."""
    return float(np.sum(singular_values(a)))


def random_unitary(n, seed=None):
    """Haar-random ``n x n`` unitary.

    QR of an i.i.d. complex Gaussian matrix, with the phases of the
    diagonal of ``R`` folded back into ``Q`` so the distribution is Haar.
    ``seed`` may be an int or a ``numpy.random.Generator``.
    """
    if n < 1:
        raise DomainError(f"unitary dimension must be >= 1, got {n}")
    rng = np.random.default_rng(seed)
    z = (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))) / np.sqrt(2)
    q, r = np.linalg.qr(z)
    diag = np.diagonal(r)
    phases = diag / np.abs(diag)
    return q * phases
