"""Independent reference implementations used only by the tests.

Everything here is written with explicit index loops or a hand-rolled
Jacobi sweep so it shares no code path with the library.
"""

import itertools
import math

import numpy as np


def jacobi_eigenvalues(h, tol=1e-12, max_sweeps=100):
    """Cyclic Jacobi on the real 2n x 2n embedding of a Hermitian matrix.

    The embedding ``[[Re, -Im], [Im, Re]]`` has every eigenvalue of ``h``
    twice, so the sorted spectrum is read off every second entry.
    """
    h = np.asarray(h, dtype=complex)
    n = h.shape[0]
    a = np.block([[h.real, -h.imag], [h.imag, h.real]]).astype(float)
    m = 2 * n
    for _ in range(max_sweeps):
        off = math.sqrt(np.sum((a - np.diag(np.diag(a))) ** 2))
        if off < tol:
            break
        for p in range(m - 1):
            for q in range(p + 1, m):
                if abs(a[p, q]) < 1e-300:
                    continue
                theta = (a[q, q] - a[p, p]) / (2 * a[p, q])
                t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1))
                c = 1 / math.sqrt(t * t + 1)
                s = t * c
                rot = np.eye(m)
                rot[p, p] = rot[q, q] = c
                rot[p, q], rot[q, p] = s, -s
                a = rot.T @ a @ rot
    return np.sort(np.diag(a))[::2]


def jacobi_trace_norm(a):
    """Trace norm as ``sum sqrt(eig(a^dagger a))`` with the Jacobi solver."""
    a = np.asarray(a, dtype=complex)
    lam = jacobi_eigenvalues(a.conj().T @ a)
    return float(np.sum(np.sqrt(np.clip(lam, 0, None))))


def _digits(index, dims):
    out = []
    for d in reversed(dims):
        out.append(index % d)
        index //= d
    return tuple(reversed(out))


def _index(digits, dims):
    idx = 0
    for k, d in zip(digits, dims):
        idx = idx * d + k
    return idx


def brute_partial_trace(rho, dims, keep):
    """Partial trace by summing matrix elements over the traced digits."""
    keep0 = [p - 1 for p in sorted(keep)]
    kdims = [dims[i] for i in keep0]
    size = math.prod(kdims)
    out = np.zeros((size, size), dtype=complex)
    n = math.prod(dims)
    for i in range(n):
        di = _digits(i, dims)
        for j in range(n):
            dj = _digits(j, dims)
            if any(di[t] != dj[t] for t in range(len(dims)) if t not in keep0):
                continue
            out[_index([di[t] for t in keep0], kdims), _index([dj[t] for t in keep0], kdims)] += rho[i, j]
    return out


def brute_partial_transpose(rho, dims, subset):
    sub0 = {p - 1 for p in subset}
    n = math.prod(dims)
    out = np.zeros((n, n), dtype=complex)
    for i in range(n):
        di = _digits(i, dims)
        for j in range(n):
            dj = _digits(j, dims)
            ni = [dj[t] if t in sub0 else di[t] for t in range(len(dims))]
            nj = [di[t] if t in sub0 else dj[t] for t in range(len(dims))]
            out[_index(ni, dims), _index(nj, dims)] = rho[i, j]
    return out


def brute_realign(rho, dims, x):
    """Entry ``(i*dx + k, j*dxb + l) = <i j|rho|k l>`` in the ``x|xbar`` split."""
    x0 = [p - 1 for p in sorted(x)]
    xb0 = [t for t in range(len(dims)) if t not in x0]
    xd = [dims[t] for t in x0]
    xbd = [dims[t] for t in xb0]
    dx, dxb = math.prod(xd), math.prod(xbd)
    out = np.zeros((dx * dx, dxb * dxb), dtype=complex)
    for i, k in itertools.product(range(dx), repeat=2):
        for j, l in itertools.product(range(dxb), repeat=2):
            row_digits = [0] * len(dims)
            col_digits = [0] * len(dims)
            for t, v in zip(x0, _digits(i, xd)):
                row_digits[t] = v
            for t, v in zip(xb0, _digits(j, xbd)):
                row_digits[t] = v
            for t, v in zip(x0, _digits(k, xd)):
                col_digits[t] = v
            for t, v in zip(xb0, _digits(l, xbd)):
                col_digits[t] = v
            out[i * dx + k, j * dxb + l] = rho[_index(row_digits, dims), _index(col_digits, dims)]
    return out


def brute_gme_concurrence(amplitudes, dims):
    """Pure GME concurrence from brute-force reductions over every party subset."""
    n = len(dims)
    rho = np.outer(amplitudes, np.conj(amplitudes))
    best = math.inf
    for r in range(1, n):
        for subset in itertools.combinations(range(1, n + 1), r):
            red = brute_partial_trace(rho, dims, subset)
            best = min(best, 1 - float(np.real(np.trace(red @ red))))
    return math.sqrt(max(best, 0.0))
