"""Density matrices: validation, zero-padding, partial trace and transpose."""

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import linalg
from .errors import DimensionMismatch, NoSplit, NotHermitian, NotPSD, TraceNotOne

TOL_TRACE = 1e-9
TOL_PSD = 1e-10

# linear index (1-based) -> spin projections (m1, m2)
INDEX_MAP = {
    1: (Fraction(1, 2), Fraction(1, 2)),
    2: (Fraction(1, 2), Fraction(-1, 2)),
    3: (Fraction(-1, 2), Fraction(1, 2)),
    4: (Fraction(-1, 2), Fraction(-1, 2)),
}
SPIN_TO_INDEX = {v: k for k, v in INDEX_MAP.items()}


@dataclass(frozen=True)
class DensityMatrix:
    mat: np.ndarray
    split: tuple | None = None

    @property
    def dim(self):
        return self.mat.shape[0]

    def with_split(self, d_a, d_b):
        if d_a * d_b != self.dim:
            raise DimensionMismatch(f"split {d_a}x{d_b} does not factor dimension {self.dim}")
        return DensityMatrix(self.mat, (d_a, d_b))


@dataclass(frozen=True)
class PaddedState:
    """A state embedded in a larger matrix with zero rows/columns.

    ``placement[i]`` is the 0-based padded index of original index ``i``.
    """

    original: DensityMatrix
    padded: DensityMatrix
    placement: tuple = field(default=())


def _unwrap(m):
    if isinstance(m, DensityMatrix):
        return m.mat
    if isinstance(m, PaddedState):
        return m.padded.mat
    return linalg.as_matrix(m)


def validation_report(m):
    """Measured deviation for each density-matrix property.

    ``hermiticity`` is relative to the largest entry; ``trace`` is |tr - 1|;
    ``positivity`` is max(0, -min eigenvalue), or inf if the spectrum cannot
    be computed because the matrix is not Hermitian.
    """
    m = _unwrap(m)
    scale = float(np.max(np.abs(m))) if m.size else 0.0
    herm = linalg.hermiticity_deviation(m)
    report = {
        "hermiticity": herm / scale if scale else 0.0,
        "trace": abs(np.trace(m) - 1.0),
    }
    try:
        min_eig = linalg.hermitian_spectrum(m).values[-1]
        report["positivity"] = max(0.0, -float(min_eig))
    except NotHermitian:
        report["positivity"] = float("inf")
    return report


def validate(m, split=None, tol_trace=TOL_TRACE, tol_psd=TOL_PSD):
    """Check the density-matrix properties and wrap ``m`` as a DensityMatrix."""
    m = _unwrap(m)
    if not 2 <= m.shape[0] <= linalg.MAX_DIM:
        raise DimensionMismatch(f"density matrices must have dimension 2..{linalg.MAX_DIM}, got {m.shape[0]}")
    linalg.check_hermitian(m)
    tr_dev = abs(np.trace(m) - 1.0)
    if tr_dev > tol_trace:
        raise TraceNotOne(tr_dev)
    min_eig = linalg.hermitian_spectrum(m).values[-1]
    if min_eig < -tol_psd:
        raise NotPSD(-min_eig, f"positivity violated: minimum eigenvalue {min_eig:.6g}")
    state = DensityMatrix(m.copy())
    if split is not None:
        state = state.with_split(*split)
    return state


def pad_qutrit_to_4(q):
    """Append a zero row and column to a 3x3 state (corner placement)."""
    q = q if isinstance(q, DensityMatrix) else DensityMatrix(linalg.as_matrix(q))
    if q.dim != 3:
        raise DimensionMismatch(f"expected a qutrit (3x3), got {q.dim}x{q.dim}")
    out = np.zeros((4, 4), dtype=complex)
    out[:3, :3] = q.mat
    return PaddedState(q, DensityMatrix(out, (2, 2)), (0, 1, 2))


def pad_4_to_6(m):
    """Embed a 4x4 state in rows/columns 2..5 of a 6x6 matrix, split 2x3."""
    m = m if isinstance(m, DensityMatrix) else DensityMatrix(linalg.as_matrix(m))
    if m.dim != 4:
        raise DimensionMismatch(f"expected a 4x4 state, got {m.dim}x{m.dim}")
    out = np.zeros((6, 6), dtype=complex)
    out[1:5, 1:5] = m.mat
    return PaddedState(m, DensityMatrix(out, (2, 3)), (1, 2, 3, 4))


def _split_of(m, split):
    if split is None and isinstance(m, (DensityMatrix, PaddedState)):
        split = (m.padded if isinstance(m, PaddedState) else m).split
    if split is None:
        raise NoSplit("bipartite split (dA, dB) is required")
    mat = _unwrap(m)
    d_a, d_b = split
    if d_a * d_b != mat.shape[0]:
        raise DimensionMismatch(f"split {d_a}x{d_b} does not factor dimension {mat.shape[0]}")
    return mat, d_a, d_b


def partial_trace(m, keep="A", split=None):
    """Reduced matrix on factor ``keep`` ('A' or 'B')."""
    mat, d_a, d_b = _split_of(m, split)
    t = mat.reshape(d_a, d_b, d_a, d_b)
    if keep == "A":
        return DensityMatrix(np.einsum("ibjb->ij", t))
    if keep == "B":
        return DensityMatrix(np.einsum("aiaj->ij", t))
    raise ValueError(f"keep must be 'A' or 'B', got {keep!r}")


def partial_transpose(m, side="B", split=None):
    mat, d_a, d_b = _split_of(m, split)
    t = mat.reshape(d_a, d_b, d_a, d_b)
    if side == "B":
        t = t.transpose(0, 3, 2, 1)
    elif side == "A":
        t = t.transpose(2, 1, 0, 3)
    else:
        raise ValueError(f"side must be 'A' or 'B', got {side!r}")
    return t.reshape(d_a * d_b, d_a * d_b)


def artificial_qubit_reductions(p):
    """The two 2x2 'qubit' matrices obtained from a padded qutrit.

    With r the qutrit (1-based entries), these are
    [[r11 + r22, r13], [r31, r33]] and [[r11 + r33, r12], [r21, r22]].
    """
    if not isinstance(p, PaddedState) or p.original.dim != 3:
        raise DimensionMismatch("artificial reductions need a 3 -> 4 padded state")
    r = p.original.mat
    first = np.array([[r[0, 0] + r[1, 1], r[0, 2]], [r[2, 0], r[2, 2]]])
    second = np.array([[r[0, 0] + r[2, 2], r[0, 1]], [r[1, 0], r[1, 1]]])
    return DensityMatrix(first), DensityMatrix(second)


def random_density(dim, seed):
    """Ginibre-ensemble state G G^dag / tr(G G^dag)."""
    if not 2 <= dim <= linalg.MAX_DIM:
        raise DimensionMismatch(f"dim must be in 2..{linalg.MAX_DIM}, got {dim}")
    rng = np.random.default_rng(seed)
    g = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    rho = g @ g.conj().T
    rho = (rho + rho.conj().T) / 2
    return DensityMatrix(rho / np.trace(rho).real)


def random_real_density(dim, seed):
    """Real-symmetric variant of :func:`random_density`."""
    rng = np.random.default_rng(seed)
    g = rng.standard_normal((dim, dim))
    rho = g @ g.T
    rho = (rho + rho.T) / 2
    return DensityMatrix((rho / np.trace(rho)).astype(complex))
