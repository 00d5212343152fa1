"""Product basis e <-> total-spin basis g for two spin-1/2 particles.

g1 = |1,1> = e1, g2 = |1,0> = (e2 + e3)/sqrt2, g3 = |1,-1> = e4,
g4 = |0,0> = (e2 - e3)/sqrt2. Column j of ``C`` holds g_j in the e basis.
"""

from dataclasses import dataclass

import numpy as np

from .density import DensityMatrix
from .errors import DimensionMismatch, SingletDominant

_R = 1 / np.sqrt(2)

C = np.array(
    [
        [1, 0, 0, 0],
        [0, _R, 0, _R],
        [0, _R, 0, -_R],
        [0, 0, 1, 0],
    ],
    dtype=complex,
)


@dataclass(frozen=True)
class SpinBasisLabel:
    j: int
    m: int

    def __post_init__(self):
        if self.j not in (0, 1) or abs(self.m) > self.j:
            raise ValueError(f"invalid (j, m) = ({self.j}, {self.m})")


G_LABELS = (SpinBasisLabel(1, 1), SpinBasisLabel(1, 0), SpinBasisLabel(1, -1), SpinBasisLabel(0, 0))
SINGLET = 3


def _mat4(m):
    mat = m.mat if isinstance(m, DensityMatrix) else np.asarray(m, dtype=complex)
    if mat.shape != (4, 4):
        raise DimensionMismatch(f"expected a 4x4 matrix, got {mat.shape}")
    return mat


def to_g_basis(m):
    return DensityMatrix(C.conj().T @ _mat4(m) @ C)


def to_e_basis(m):
    return DensityMatrix(C @ _mat4(m) @ C.conj().T)


def symmetric_truncation(m, renormalize=True):
    """Zero the singlet row/column of a g-basis matrix.

    Returns (matrix, singlet_weight). Without renormalization the trace is
    1 - singlet_weight.
    """
    mat = _mat4(m).copy()
    weight = float(mat[SINGLET, SINGLET].real)
    mat[SINGLET, :] = 0
    mat[:, SINGLET] = 0
    if renormalize:
        if weight >= 1 - 1e-12:
            raise SingletDominant(f"singlet weight {weight:.6g}: nothing left to renormalize")
        mat /= 1 - weight
    return mat, weight


def qutrit_from_symmetric(m):
    """Spin-1 part of a two-qubit state as a normalized qutrit."""
    trunc, _ = symmetric_truncation(to_g_basis(m), renormalize=True)
    return DensityMatrix(trunc[:3, :3].copy())
