"""Entanglement and entropy diagnostics for qutrit states via zero padding."""

from .bases import C, qutrit_from_symmetric, symmetric_truncation, to_e_basis, to_g_basis
from .density import (
    DensityMatrix,
    PaddedState,
    artificial_qubit_reductions,
    pad_4_to_6,
    pad_qutrit_to_4,
    partial_trace,
    partial_transpose,
    random_density,
    validate,
)
from .entropy import EntropyReport, Route, iq_curve_eq16, subadditivity_report, von_neumann_entropy
from .linalg import Spectrum, hermitian_spectrum, hermitian_sqrt
from .measures import (
    EntanglementReport,
    closed_form_lambda_real,
    concurrence,
    entanglement_report,
    is_product_state,
    negativity,
    spin_flip,
)

__version__ = "0.1.0"
