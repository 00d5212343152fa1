import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from qutrit_ent import bases
from qutrit_ent import density as dm
from qutrit_ent import linalg
from qutrit_ent.entropy import von_neumann_entropy
from qutrit_ent.errors import DimensionMismatch, SingletDominant
from qutrit_ent.measures import concurrence

seeds = st.integers(0, 2**32 - 1)
R = 1 / np.sqrt(2)
E = np.eye(4)


def test_columns_are_the_spin_states():
    np.testing.assert_allclose(bases.C[:, 0], E[0])
    np.testing.assert_allclose(bases.C[:, 1], (E[1] + E[2]) * R)
    np.testing.assert_allclose(bases.C[:, 2], E[3])
    np.testing.assert_allclose(bases.C[:, 3], (E[1] - E[2]) * R)
    assert [(lab.j, lab.m) for lab in bases.G_LABELS] == [(1, 1), (1, 0), (1, -1), (0, 0)]
    with pytest.raises(ValueError):
        bases.SpinBasisLabel(0, 1)


def test_unitary():
    assert np.max(np.abs(bases.C @ bases.C.conj().T - np.eye(4))) <= 1e-12
    assert np.max(np.abs(bases.C.conj().T @ bases.C - np.eye(4))) <= 1e-12
    assert np.all(bases.C.imag == 0)


def test_to_g_basis_examples():
    np.testing.assert_allclose(bases.to_g_basis(np.eye(4) / 4).mat, np.eye(4) / 4, atol=1e-16)
    psi = (E[1] + E[2]) * R
    g = bases.to_g_basis(np.outer(psi, psi)).mat
    expected = np.zeros((4, 4))
    expected[1, 1] = 1
    np.testing.assert_allclose(g, expected, atol=1e-15)
    with pytest.raises(DimensionMismatch):
        bases.to_g_basis(np.eye(3))


@given(seeds)
def test_basis_change_preserves_state(seed):
    rho = dm.random_density(4, seed).mat
    g = bases.to_g_basis(rho).mat
    np.testing.assert_allclose(linalg.hermitian_spectrum(g).values, linalg.hermitian_spectrum(rho).values, atol=1e-10)
    assert abs(np.trace(g) - 1) < 1e-10
    dm.validate(g)
    assert von_neumann_entropy(g) == pytest.approx(von_neumann_entropy(rho), abs=1e-10)
    np.testing.assert_allclose(bases.to_e_basis(g).mat, rho, atol=1e-15)


@given(seeds)
def test_singlet_weight(seed):
    g = bases.to_g_basis(dm.random_density(4, seed))
    raw, weight = bases.symmetric_truncation(g, renormalize=False)
    assert 0 <= weight <= 1
    assert weight == pytest.approx(1 - np.trace(raw).real, abs=1e-12)
    assert not raw[3].any() and not raw[:, 3].any()


def test_truncation_examples():
    triplet = np.diag([0.5, 0.3, 0.2, 0.0]).astype(complex)
    out, weight = bases.symmetric_truncation(triplet)
    np.testing.assert_array_equal(out, triplet)
    assert weight == 0
    out, weight = bases.symmetric_truncation(np.eye(4) / 4, renormalize=True)
    np.testing.assert_allclose(out, np.diag([1, 1, 1, 0]) / 3, atol=1e-15)
    assert weight == pytest.approx(0.25, abs=1e-12)
    singlet = np.zeros((4, 4))
    singlet[3, 3] = 1
    with pytest.raises(SingletDominant):
        bases.symmetric_truncation(singlet, renormalize=True)
    out, weight = bases.symmetric_truncation(singlet, renormalize=False)
    assert weight == 1 and not out.any()


def test_qutrit_from_symmetric_examples():
    up = np.zeros((4, 4))
    up[0, 0] = 1
    np.testing.assert_allclose(bases.qutrit_from_symmetric(up).mat, np.diag([1, 0, 0]), atol=1e-15)
    psi = (E[1] + E[2]) * R
    np.testing.assert_allclose(bases.qutrit_from_symmetric(np.outer(psi, psi)).mat, np.diag([0, 1, 0]), atol=1e-15)
    np.testing.assert_allclose(bases.qutrit_from_symmetric(np.eye(4) / 4).mat, np.eye(3) / 3, atol=1e-15)
    down = np.zeros((4, 4))
    down[3, 3] = 1
    np.testing.assert_allclose(bases.qutrit_from_symmetric(down).mat, np.diag([0, 0, 1]), atol=1e-15)
    chi = (E[1] - E[2]) * R
    with pytest.raises(SingletDominant):
        bases.qutrit_from_symmetric(np.outer(chi, chi))


@given(seeds)
def test_qutrit_from_symmetric_is_valid(seed):
    dm.validate(bases.qutrit_from_symmetric(dm.random_density(4, seed)))


def test_entanglement_depends_on_basis():
    psi = (E[1] + E[2]) * R
    rho_e = np.outer(psi, psi).astype(complex)
    value, _ = concurrence(rho_e)
    assert value == pytest.approx(1, abs=1e-9)
    g = bases.to_g_basis(rho_e).mat
    off = g - np.diag(np.diag(g))
    assert np.linalg.norm(off) <= 1e-15
    # the same matrix read as a two-qubit state in its own basis is a product state
    value, _ = concurrence(g)
    assert value == pytest.approx(0, abs=1e-9)
