"""The diagonal one-parameter qutrit family and the two-parameter (p, b) family.

    eq16(b)    = diag(1 + b, 1 + b, 1 - 2b) / 3,      -1 <= b <= 1/2
    eq22(p, b) = [[p, 0, 0], [0, 1 - 2p, b], [0, b, p]], b^2 <= p (1 - 2p)
"""

import math
import warnings
from dataclasses import dataclass, field

import numpy as np

from .density import pad_qutrit_to_4, validate
from .entropy import Route, subadditivity_report
from .errors import DomainError, EmptyGrid, NegativeRadicand
from .measures import concurrence, negativity

DOMAIN_TOL = 1e-12


def check_eq16(b):
    if not (-1.0 - DOMAIN_TOL <= b <= 0.5 + DOMAIN_TOL):
        raise DomainError(f"b = {b} outside [-1, 1/2]: eigenvalue (1-2b)/3 or (1+b)/3 is negative")


def check_eq22(p, b):
    if p < -DOMAIN_TOL:
        raise DomainError(f"p = {p} < 0")
    if 1 - 2 * p < -DOMAIN_TOL:
        raise DomainError(f"1 - 2p = {1 - 2 * p} < 0")
    if b * b > p * (1 - 2 * p) + DOMAIN_TOL:
        raise DomainError(f"b^2 = {b * b:.6g} exceeds p(1-2p) = {p * (1 - 2 * p):.6g}")


def in_plot_box(p, b):
    """The plotting range 0 < p < 1/2, 2p^2 - p <= b <= 0."""
    return 0 < p < 0.5 and 2 * p * p - p <= b <= 0


def build_eq16(b):
    check_eq16(b)
    return validate(np.diag([1 + b, 1 + b, 1 - 2 * b]).astype(complex) / 3)


def build_eq22(p, b):
    check_eq22(p, b)
    if not in_plot_box(p, b):
        warnings.warn(f"(p, b) = ({p}, {b}) is outside the plotted range 2p^2 - p <= b <= 0", stacklevel=2)
    mat = np.array([[p, 0, 0], [0, 1 - 2 * p, b], [0, b, p]], dtype=complex)
    return validate(mat)


def closed_form_negativity_eq22(p, b):
    """Sum of |eigenvalues| of the partial transpose, term by term."""
    check_eq22(p, b)
    root = math.sqrt(4 * b * b + p * p)
    return abs(1 - 2 * p) + abs(p) + abs(p / 2 - root / 2) + abs(p / 2 + root / 2)


def closed_form_concurrence_eq22(p, b):
    check_eq22(p, b)
    x = p - 2 * p * p
    if x < -DOMAIN_TOL:
        raise NegativeRadicand(f"p - 2p^2 = {x}")
    s = math.sqrt(max(x, 0.0))
    minus = p + b * b - 2 * p * p - 2 * b * s
    plus = p + b * b - 2 * p * p + 2 * b * s
    for r in (minus, plus):
        if r < -DOMAIN_TOL:
            raise NegativeRadicand(f"radicand {r:.3e} < 0")
    # Each radicand equals (s -/+ b)^2; the square root of the expanded form
    # loses half the digits when it cancels to zero at the domain edge.
    return max(0.0, abs(s - b) - abs(s + b))


def grid_axis(lo, hi, count):
    """``count`` evenly spaced points from lo to hi, endpoints included."""
    count = int(count)
    if count < 1:
        raise EmptyGrid("grid axis needs at least one point")
    if count == 1:
        return [float(lo)]
    return [float(x) for x in np.linspace(lo, hi, count)]


@dataclass
class SweepRow:
    b: float
    p: float | None = None
    iq: float | None = None
    negativity_sum: float | None = None
    concurrence: float | None = None
    closed_negativity: float | None = None
    closed_concurrence: float | None = None
    skipped: bool = False
    reason: str = field(default="", repr=False)

    @property
    def negativity_excess(self):
        if self.negativity_sum is None:
            return None
        return max(0.0, self.negativity_sum - 1.0)


def _diagnose(q):
    rep = subadditivity_report(q, Route.PADDED_QUTRIT)
    _, total, _ = negativity(q)
    conc, _ = concurrence(pad_qutrit_to_4(q).padded)
    return rep.iq, total, conc


def sweep_eq16(b_grid):
    if not b_grid:
        raise EmptyGrid("empty b grid")
    rows = []
    for b in b_grid:
        try:
            q = build_eq16(b)
        except DomainError as exc:
            rows.append(SweepRow(b=b, skipped=True, reason=str(exc)))
            continue
        iq, total, conc = _diagnose(q)
        rows.append(SweepRow(b=b, iq=iq, negativity_sum=total, concurrence=conc))
    return rows


def sweep_eq22(p_grid, b_grid, plot_box=False):
    """Rows ordered by p then b. Points off the PSD domain (or off the plotted
    range when ``plot_box``) are kept as skipped rows."""
    if not p_grid or not b_grid:
        raise EmptyGrid("empty p or b grid")
    rows = []
    for p in p_grid:
        for b in b_grid:
            try:
                check_eq22(p, b)
                if plot_box and not in_plot_box(p, b):
                    raise DomainError("outside plotted range")
            except DomainError as exc:
                rows.append(SweepRow(b=b, p=p, skipped=True, reason=str(exc)))
                continue
            with warnings.catch_warnings():
                warnings.simplefilter("ignore")
                q = build_eq22(p, b)
            iq, total, conc = _diagnose(q)
            closed_c = closed_form_concurrence_eq22(p, b) if b <= 0 else None
            rows.append(
                SweepRow(
                    b=b,
                    p=p,
                    iq=iq,
                    negativity_sum=total,
                    concurrence=conc,
                    closed_negativity=closed_form_negativity_eq22(p, b),
                    closed_concurrence=closed_c,
                )
            )
    return rows


def sweep(family, grids, plot_box=False):
    """Dispatch on ``family`` ('eq16' or 'eq22'); ``grids`` are point lists."""
    if family == "eq16":
        return sweep_eq16(grids[0])
    if family == "eq22":
        return sweep_eq22(grids[0], grids[1], plot_box)
    raise ValueError(f"unknown family {family!r}")


def as_state(row):
    """Rebuild the density matrix a sweep row was computed from."""
    if row.p is None:
        return build_eq16(row.b)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        return build_eq22(row.p, row.b)

