"""Dense complex linear algebra for the small (dim <= 8) matrices used here.

Matrices are plain ``numpy`` complex arrays. The Hermitian eigensolver is a
cyclic Jacobi method with complex Givens rotations, run on Python scalars
because at these sizes that is faster than numpy's per-call overhead.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, NoConvergence, NotHermitian, NotPSD

MAX_DIM = 8
TOL_HERMITIAN = 1e-12
TOL_JACOBI = 1e-12
MAX_SWEEPS = 100
PSD_CLAMP = -1e-10


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues in non-increasing order plus the solver's final relative off-diagonal norm."""

    values: np.ndarray
    residual: float = 0.0

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __getitem__(self, i):
        return self.values[i]


def as_matrix(m):
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DimensionMismatch(f"expected a square matrix, got shape {m.shape}")
    return m


def hermiticity_deviation(m):
    """max |m_ij - conj(m_ji)| (absolute)."""
    m = as_matrix(m)
    return float(np.max(np.abs(m - m.conj().T))) if m.size else 0.0


def check_hermitian(m, tol=TOL_HERMITIAN):
    m = as_matrix(m)
    scale = float(np.max(np.abs(m))) if m.size else 0.0
    dev = hermiticity_deviation(m)
    if dev > tol * scale:
        raise NotHermitian(dev)
    return m


def _jacobi(a, want_vectors, tol, max_sweeps):
    """In-place cyclic Jacobi on a list-of-lists Hermitian matrix.

    Returns (diagonal, vectors-or-None, residual), where the residual is the
    off-diagonal Frobenius norm divided by max(1, ||a||_F).
    """
    n = len(a)
    v = [[1.0 + 0j if i == j else 0j for j in range(n)] for i in range(n)] if want_vectors else None
    norm = max(1.0, math.sqrt(sum(abs(x) ** 2 for row in a for x in row)))

    def off_norm():
        return math.sqrt(2.0 * sum(abs(a[p][q]) ** 2 for p in range(n) for q in range(p + 1, n)))

    for _ in range(max_sweeps):
        off = off_norm() / norm
        if off <= tol:
            return [a[i][i].real for i in range(n)], v, off
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p][q]
                r = abs(apq)
                if r == 0.0:
                    continue
                app = a[p][p].real
                aqq = a[q][q].real
                phase = apq / r
                tau = (aqq - app) / (2.0 * r)
                if abs(tau) > 1e150:
                    t = 0.5 / tau
                else:
                    t = math.copysign(1.0, tau) / (abs(tau) + math.sqrt(1.0 + tau * tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                sp = s * phase  # J[p][q]
                sq = -s * phase.conjugate()  # J[q][p]
                # A <- A J  (columns p, q)
                for k in range(n):
                    akp = a[k][p]
                    akq = a[k][q]
                    a[k][p] = c * akp + sq * akq
                    a[k][q] = sp * akp + c * akq
                # A <- J^H A  (rows p, q)
                spc = sp.conjugate()
                sqc = sq.conjugate()
                rp = a[p]
                rq = a[q]
                for k in range(n):
                    apk = rp[k]
                    aqk = rq[k]
                    rp[k] = c * apk + sqc * aqk
                    rq[k] = spc * apk + c * aqk
                a[p][p] = complex(app - t * r, 0.0)
                a[q][q] = complex(aqq + t * r, 0.0)
                a[p][q] = 0j
                a[q][p] = 0j
                if want_vectors:
                    for k in range(n):
                        vkp = v[k][p]
                        vkq = v[k][q]
                        v[k][p] = c * vkp + sq * vkq
                        v[k][q] = sp * vkp + c * vkq
    off = off_norm() / norm
    if off <= tol:
        return [a[i][i].real for i in range(n)], v, off
    raise NoConvergence(f"Jacobi did not converge in {max_sweeps} sweeps (off-diagonal norm {off:.3e})")


def _prepare(m):
    m = check_hermitian(m)
    if m.shape[0] > MAX_DIM:
        raise DimensionMismatch(f"dimension {m.shape[0]} exceeds {MAX_DIM}")
    h = (m + m.conj().T) / 2
    return [[complex(x) for x in row] for row in h.tolist()]


def hermitian_eigh(m, tol=TOL_JACOBI, max_sweeps=MAX_SWEEPS):
    """Eigenvalues (descending), eigenvectors as columns, and residual."""
    a = _prepare(m)
    vals, vecs, off = _jacobi(a, True, tol, max_sweeps)
    order = sorted(range(len(vals)), key=lambda i: -vals[i])
    values = np.array([vals[i] for i in order])
    vectors = np.array(vecs, dtype=complex)[:, order] if vecs else np.zeros((0, 0), dtype=complex)
    return values, vectors, off


def hermitian_spectrum(m, tol=TOL_JACOBI):
    """Real eigenvalues of a Hermitian matrix, sorted in non-increasing order."""
    a = _prepare(m)
    vals, _, off = _jacobi(a, False, tol, MAX_SWEEPS)
    return Spectrum(np.array(sorted(vals, reverse=True)), off)


def hermitian_sqrt(m):
    """Principal square root of a Hermitian PSD matrix.

    Eigenvalues in [-1e-10, 0) are clamped to zero.
    """
    values, vectors, _ = hermitian_eigh(m)
    if len(values) and values[-1] < PSD_CLAMP:
        raise NotPSD(-values[-1])
    values = np.clip(values, 0.0, None)
    r = (vectors * np.sqrt(values)) @ vectors.conj().T
    return (r + r.conj().T) / 2


def _pair(a, b):
    return as_matrix(a), as_matrix(b)


def matmul(a, b):
    a, b = _pair(a, b)
    if a.shape != b.shape:
        raise DimensionMismatch(f"matmul of {a.shape} and {b.shape}")
    return a @ b


def add(a, b):
    a, b = _pair(a, b)
    if a.shape != b.shape:
        raise DimensionMismatch(f"add of {a.shape} and {b.shape}")
    return a + b


def scale(a, z):
    return complex(z) * as_matrix(a)


def adjoint(a):
    return as_matrix(a).conj().T


def trace(a):
    return complex(np.trace(as_matrix(a)))


def kron(a, b):
    a, b = _pair(a, b)
    if a.shape[0] * b.shape[0] > MAX_DIM:
        raise DimensionMismatch(f"kron dimension {a.shape[0] * b.shape[0]} exceeds {MAX_DIM}")
    return np.kron(a, b)


SIGMA_Y = np.array([[0, -1j], [1j, 0]])
