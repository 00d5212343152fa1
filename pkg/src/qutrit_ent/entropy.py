"""Von Neumann entropies and the subadditivity information I_q = S1 + S2 - S12."""

import enum
import math
from dataclasses import dataclass

import numpy as np

from . import linalg
from .density import (
    DensityMatrix,
    PaddedState,
    artificial_qubit_reductions,
    pad_4_to_6,
    pad_qutrit_to_4,
    partial_trace,
)
from .errors import DimensionMismatch, DomainError, NoSplit

ZERO_EIG = 1e-15


class Route(enum.Enum):
    TWO_QUBIT = "two-qubit"
    PADDED_QUTRIT = "padded-qutrit"
    PADDED_6X6 = "padded-6x6"


@dataclass(frozen=True)
class EntropyReport:
    s1: float
    s2: float
    s12: float
    iq: float
    route: Route


def entropy_from_eigenvalues(values):
    """-sum(l ln l) with eigenvalues clamped to [0, 1] and 0 ln 0 = 0."""
    total = 0.0
    for lam in values:
        lam = min(max(float(lam), 0.0), 1.0)
        if lam > ZERO_EIG:
            total -= lam * math.log(lam)
    return total


def von_neumann_entropy(m):
    """Entropy in nats, computed from the spectrum (no matrix logarithm)."""
    if isinstance(m, PaddedState):
        m = m.padded
    mat = m.mat if isinstance(m, DensityMatrix) else m
    return entropy_from_eigenvalues(linalg.hermitian_spectrum(mat).values)


def _report(r1, r2, joint, route):
    s1 = von_neumann_entropy(r1)
    s2 = von_neumann_entropy(r2)
    s12 = von_neumann_entropy(joint)
    return EntropyReport(s1, s2, s12, s1 + s2 - s12, route)


def subadditivity_report(m, route=None):
    """Entropies of both reductions and the whole state, plus I_q.

    ``m`` may be a 4x4 two-qubit state (``Route.TWO_QUBIT``), a qutrit or its
    3 -> 4 padding (``Route.PADDED_QUTRIT``), or a 4x4 state to be embedded
    as 6x6 with a 2x3 split (``Route.PADDED_6X6``). When ``route`` is None it
    is inferred: 3x3 and 3 -> 4 paddings use the padded-qutrit route, a 6x6
    padding the 6x6 route, anything else needs a split.
    """
    if route is None:
        route = _infer_route(m)
    route = Route(route)
    if route is Route.PADDED_QUTRIT:
        padded = m if isinstance(m, PaddedState) else pad_qutrit_to_4(m)
        r1, r2 = artificial_qubit_reductions(padded)
        return _report(r1, r2, padded.padded, route)
    if route is Route.PADDED_6X6:
        padded = m if isinstance(m, PaddedState) else pad_4_to_6(m)
        if padded.padded.dim != 6:
            raise DimensionMismatch("6x6 route needs a 4 -> 6 padding")
        r1 = partial_trace(padded, "A")
        r2 = partial_trace(padded, "B")
        return _report(r1, r2, padded.padded, route)
    # two-qubit
    state = m.padded if isinstance(m, PaddedState) else m
    if not isinstance(state, DensityMatrix):
        state = DensityMatrix(linalg.as_matrix(state), (2, 2))
    if state.split is None:
        if state.dim != 4:
            raise NoSplit("two-qubit route needs a split or a 4x4 matrix")
        state = state.with_split(2, 2)
    r1 = partial_trace(state, "A")
    r2 = partial_trace(state, "B")
    return _report(r1, r2, state, route)


def _infer_route(m):
    if isinstance(m, PaddedState):
        return Route.PADDED_QUTRIT if m.original.dim == 3 else Route.PADDED_6X6
    mat = m.mat if isinstance(m, DensityMatrix) else np.asarray(m)
    if mat.shape[0] == 3:
        return Route.PADDED_QUTRIT
    return Route.TWO_QUBIT


def iq_curve_eq16(grid):
    """(b, I_q) pairs for the diagonal qutrit family over ``grid``."""
    from .families import build_eq16

    out = []
    for b in grid:
        b = float(b)
        if not -1.0 <= b <= 0.5:
            raise DomainError(f"b = {b} outside [-1, 1/2]")
        out.append((b, subadditivity_report(build_eq16(b), Route.PADDED_QUTRIT).iq))
    return out
