import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from qutrit_ent import density as dm
from qutrit_ent import linalg
from qutrit_ent.errors import DimensionMismatch, NoSplit, NotReal
from qutrit_ent.measures import (
    closed_form_lambda_real,
    concurrence,
    concurrence_from_lambdas,
    entanglement_report,
    flip_product_spectrum,
    is_product_state,
    negativity,
    spin_flip,
)
from qutrit_ent.polyroots import charpoly, quartic_roots

from conftest import bell_state, eq22_matrix, random_unitary

seeds = st.integers(0, 2**32 - 1)


def negativity_law(p, b):
    return 1 - p + math.sqrt(p * p + 4 * b * b)


def test_negativity_law_constant():
    assert negativity_law(0.4, -0.2) == pytest.approx(1.1656854249492380, abs=1e-15)


def test_negativity_examples():
    spec, total, flag = negativity(np.eye(3) / 3)
    assert total == pytest.approx(1, abs=1e-15) and not flag
    spec, total, flag = negativity(eq22_matrix(0.4, -0.2))
    assert total == pytest.approx(negativity_law(0.4, -0.2), abs=1e-12)
    assert flag
    # brute-force eigenvalues: {1-2p, p, (p +- sqrt(p^2 + 4b^2))/2}
    p, b = 0.4, -0.2
    root = math.sqrt(p * p + 4 * b * b)
    np.testing.assert_allclose(spec.values, sorted([1 - 2 * p, p, (p + root) / 2, (p - root) / 2], reverse=True), atol=1e-14)


@given(st.floats(0.001, 0.499), st.floats(-1, 1))
def test_negativity_flag_iff_b_nonzero(p, t):
    b = t * math.sqrt(p * (1 - 2 * p))
    _, total, flag = negativity(eq22_matrix(p, b))
    assert total == pytest.approx(negativity_law(p, b), abs=1e-9)
    if flag:
        assert b != 0
    # excess ~ 2 b^2 / p, so tiny |b| sits below the 1e-9 slack
    if negativity_law(p, b) - 1 > 2e-9:
        assert flag


@given(seeds)
def test_negativity_baseline(seed):
    spec, total, flag = negativity(dm.random_density(3, seed))
    assert total >= 1 - 1e-9
    if spec.values[-1] >= 0:
        assert total == pytest.approx(1, abs=1e-9)
    assert flag == (total > 1 + 1e-9)


def test_spin_flip_explicit_form():
    rho = dm.random_density(3, 3).mat
    r = lambda i, j: rho[i - 1, j - 1].conjugate()
    expected = np.array(
        [
            [0, 0, 0, 0],
            [0, r(3, 3), r(3, 2), -r(3, 1)],
            [0, r(2, 3), r(2, 2), -r(2, 1)],
            [0, -r(1, 3), -r(1, 2), r(1, 1)],
        ]
    )
    np.testing.assert_allclose(spin_flip(dm.pad_qutrit_to_4(rho)), expected, atol=1e-16)


def test_spin_flip_examples():
    np.testing.assert_allclose(spin_flip(np.eye(4) / 4), np.eye(4) / 4)
    p, b = 0.4, -0.2
    flipped = spin_flip(dm.pad_qutrit_to_4(eq22_matrix(p, b)))
    assert flipped[1, 1] == pytest.approx(p) and flipped[1, 2] == pytest.approx(b)
    assert flipped[2, 2] == pytest.approx(1 - 2 * p) and flipped[3, 3] == pytest.approx(p)
    with pytest.raises(DimensionMismatch):
        spin_flip(np.eye(3))


@given(seeds)
def test_spin_flip_involution(seed):
    rho = dm.random_density(4, seed).mat
    np.testing.assert_allclose(spin_flip(spin_flip(rho)), rho, atol=1e-15)


def test_concurrence_bell():
    value, lambdas = concurrence(bell_state())
    assert value == pytest.approx(1, abs=1e-9)
    np.testing.assert_allclose(lambdas, [1, 0, 0, 0], atol=1e-12)


def test_concurrence_no_coherence():
    q = np.diag([0.2, 0.5, 0.3]).astype(complex)
    value, lambdas = concurrence(dm.pad_qutrit_to_4(q))
    assert value == pytest.approx(0, abs=1e-12)
    np.testing.assert_allclose(lambdas[:2], [0.15, 0.15], atol=1e-12)


def test_concurrence_eq22_spot():
    value, lambdas = concurrence(dm.pad_qutrit_to_4(eq22_matrix(0.4, -0.2)))
    assert value == pytest.approx(0.4, abs=1e-9)
    s = math.sqrt(0.4 * 0.2)
    np.testing.assert_allclose(lambdas, [(-0.2 - s) ** 2, (-0.2 + s) ** 2, 0, 0], atol=1e-12)


def test_closed_form_lambda_examples():
    lam = closed_form_lambda_real(eq22_matrix(0.4, -0.2))
    s = math.sqrt(0.4 * 0.2)
    np.testing.assert_allclose(lam, [(-0.2 - s) ** 2, (-0.2 + s) ** 2, 0, 0], atol=1e-15)
    assert lam[0] == pytest.approx(0.233137084989848, abs=1e-12)
    assert lam[1] == pytest.approx(0.006862915010152, abs=1e-12)
    lam = closed_form_lambda_real(np.diag([0.2, 0.5, 0.3]))
    assert lam == pytest.approx((0.15, 0.15, 0, 0))
    with pytest.raises(NotReal):
        closed_form_lambda_real(dm.random_density(3, 1).mat)


@given(seeds)
def test_closed_form_matches_numeric_for_real_states(seed):
    q = dm.random_real_density(3, seed).mat
    _, lambdas = concurrence(dm.pad_qutrit_to_4(q))
    np.testing.assert_allclose(lambdas, closed_form_lambda_real(q), atol=1e-9)


@given(seeds)
def test_hermitian_equivalent_matches_charpoly(seed):
    rho = dm.random_density(4, seed).mat
    oracle = sorted((z.real for z in quartic_roots(charpoly(rho @ spin_flip(rho)))), reverse=True)
    np.testing.assert_allclose(flip_product_spectrum(rho).values, oracle, atol=1e-8)
    _, lambdas = concurrence(rho)
    np.testing.assert_allclose(lambdas, oracle, atol=1e-8)


@given(seeds, st.integers(3, 4))
def test_concurrence_range_and_formula(seed, dim):
    rho = dm.random_density(dim, seed)
    if dim == 3:
        rho = dm.pad_qutrit_to_4(rho)
    value, lambdas = concurrence(rho)
    assert 0 <= value <= 1 + 1e-9
    assert list(lambdas) == sorted(lambdas, reverse=True)
    assert value == pytest.approx(concurrence_from_lambdas(lambdas), abs=1e-12)


@given(seeds)
def test_local_unitary_invariance(seed):
    rng = np.random.default_rng(seed)
    rho = dm.random_density(4, seed).mat
    # mix in a Bell state so the tested values are not all zero
    rho = 0.5 * rho + 0.5 * bell_state()
    u = np.kron(random_unitary(rng, 2), random_unitary(rng, 2))
    before, _ = concurrence(rho)
    after, _ = concurrence(u @ rho @ u.conj().T)
    assert abs(before - after) <= 1e-8


@given(seeds)
def test_product_pure_state_has_zero_concurrence(seed):
    rng = np.random.default_rng(seed)
    a = rng.standard_normal(2) + 1j * rng.standard_normal(2)
    b = rng.standard_normal(2) + 1j * rng.standard_normal(2)
    psi = np.kron(a / np.linalg.norm(a), b / np.linalg.norm(b))
    value, _ = concurrence(np.outer(psi, psi.conj()))
    assert value == pytest.approx(0, abs=1e-9)


def test_is_product_state():
    prod = np.kron(dm.random_density(2, 1).mat, dm.random_density(2, 2).mat)
    assert is_product_state(prod, split=(2, 2))
    assert is_product_state(np.eye(4) / 4, split=(2, 2))
    assert not is_product_state(bell_state(), split=(2, 2))
    diff = bell_state() - np.eye(4) / 4
    assert np.max(np.abs(diff)) == pytest.approx(0.5)
    assert is_product_state(dm.DensityMatrix(prod, (2, 2)))
    with pytest.raises(NoSplit):
        is_product_state(prod)


def test_entanglement_report_for_qutrit_and_two_qubit():
    rep = entanglement_report(eq22_matrix(0.4, -0.2))
    assert rep.negativity_sum == pytest.approx(negativity_law(0.4, -0.2), abs=1e-12)
    assert rep.negativity_excess == pytest.approx(negativity_law(0.4, -0.2) - 1, abs=1e-12)
    assert rep.entangled_by_ppt
    assert rep.concurrence == pytest.approx(0.4, abs=1e-9)
    rep = entanglement_report(bell_state())
    assert rep.negativity_sum == pytest.approx(2, abs=1e-12)
    assert rep.concurrence == pytest.approx(1, abs=1e-9)
    assert linalg.hermitian_spectrum(np.eye(2)).values.tolist() == [1, 1]
