"""PPT negativity, spin-flip concurrence and the product-state test."""

import math
from dataclasses import dataclass

import numpy as np

from . import linalg
from .density import DensityMatrix, PaddedState, pad_qutrit_to_4, partial_trace, partial_transpose
from .errors import DimensionMismatch, NotReal
from .linalg import Spectrum

ENTANGLED_SLACK = 1e-9

YY = np.kron(linalg.SIGMA_Y, linalg.SIGMA_Y)


@dataclass(frozen=True)
class EntanglementReport:
    ppt_spectrum: Spectrum
    negativity_sum: float
    entangled_by_ppt: bool
    concurrence: float
    lambda_c: tuple

    @property
    def negativity_excess(self):
        return max(0.0, self.negativity_sum - 1.0)


def _mat(m):
    if isinstance(m, PaddedState):
        return m.padded.mat
    if isinstance(m, DensityMatrix):
        return m.mat
    return linalg.as_matrix(m)


def ppt_negativity(m, split=(2, 2), side="B"):
    """Spectrum of the partial transpose, sum of |eigenvalues|, entangled flag."""
    pt = partial_transpose(_mat(m), side, split)
    spec = linalg.hermitian_spectrum(pt)
    total = float(np.sum(np.abs(spec.values)))
    return spec, total, total > 1.0 + ENTANGLED_SLACK


def negativity(q):
    """PPT negativity parameter of a qutrit via its 3 -> 4 zero padding."""
    padded = q if isinstance(q, PaddedState) else pad_qutrit_to_4(q)
    if padded.original.dim != 3:
        raise DimensionMismatch("negativity expects a qutrit")
    return ppt_negativity(padded.padded.mat, (2, 2), "B")


def spin_flip(m):
    """(sigma_y x sigma_y) conj(m) (sigma_y x sigma_y)."""
    m = _mat(m)
    if m.shape != (4, 4):
        raise DimensionMismatch(f"spin flip needs a 4x4 matrix, got {m.shape}")
    return YY @ m.conj() @ YY


def flip_product_spectrum(m):
    """Eigenvalues of m * spin_flip(m), via the isospectral sqrt(m) spin_flip(m) sqrt(m)."""
    m = _mat(m)
    root = linalg.hermitian_sqrt(m)
    h = root @ spin_flip(m) @ root
    return linalg.hermitian_spectrum((h + h.conj().T) / 2)


def _flip_singular_values(m):
    # sqrt(m) Y conj(sqrt(m)) has singular values sqrt(lambda_i); read them off
    # the Hermitian dilation [[0, A], [A^H, 0]] to avoid squaring tiny values.
    root = linalg.hermitian_sqrt(m)
    a = root @ YY @ root.conj()
    dilation = np.zeros((8, 8), dtype=complex)
    dilation[:4, 4:] = a
    dilation[4:, :4] = a.conj().T
    values = linalg.hermitian_spectrum(dilation).values
    return np.clip(values[:4], 0.0, None)


def concurrence_from_lambdas(lambdas):
    roots = [math.sqrt(max(0.0, float(x))) for x in sorted(lambdas, reverse=True)]
    return min(1.0, max(0.0, roots[0] - sum(roots[1:])))


def concurrence(m):
    """Concurrence and the four eigenvalues of m * spin_flip(m), descending."""
    m = _mat(m)
    if m.shape != (4, 4):
        raise DimensionMismatch(f"concurrence needs a 4x4 state, got {m.shape}")
    sv = _flip_singular_values(m)
    value = min(1.0, max(0.0, float(sv[0] - sv[1] - sv[2] - sv[3])))
    return value, tuple(float(s * s) for s in sv)


def closed_form_lambda_real(q):
    """lambda^C for a real qutrit from the 2x2 block it leaves after padding.

    Only entries 22, 23, 32, 33 enter; two of the four values are zero.
    """
    r = q.original.mat if isinstance(q, PaddedState) else _mat(q)
    if r.shape != (3, 3):
        raise DimensionMismatch("closed-form lambda^C needs a qutrit")
    if np.max(np.abs(r.imag)) > 1e-14:
        raise NotReal(f"imaginary part {np.max(np.abs(r.imag)):.3e} exceeds 1e-14")
    r = r.real
    r22, r23, r32, r33 = r[1, 1], r[1, 2], r[2, 1], r[2, 2]
    radical = math.sqrt(max(0.0, r23**2 - 2 * r23 * r32 + r32**2 + 4 * r22 * r33))
    half = (r23**2 + r32**2) / 2
    cross = (r23 + r32) * radical / 2
    lam1 = half + cross + r22 * r33
    lam2 = half - cross + r22 * r33
    return tuple(sorted((lam1, lam2, 0.0, 0.0), reverse=True))


def is_product_state(m, tol=1e-12, split=None):
    """True iff m equals the tensor product of its own two reductions within ``tol``."""
    if split is None and isinstance(m, DensityMatrix):
        split = m.split
    mat = _mat(m)
    ra = partial_trace(mat, "A", split)
    rb = partial_trace(mat, "B", split)
    return float(np.max(np.abs(mat - np.kron(ra.mat, rb.mat)))) <= tol


def entanglement_report(m, split=(2, 2)):
    """Full report for a qutrit (padded internally) or a 4x4 state."""
    mat = _mat(m)
    if mat.shape == (3, 3):
        mat = pad_qutrit_to_4(mat).padded.mat
    spec, total, flag = ppt_negativity(mat, split, "B")
    value, lambdas = concurrence(mat)
    return EntanglementReport(spec, total, flag, value, lambdas)
