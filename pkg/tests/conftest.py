import hypothesis
import numpy as np
import pytest

hypothesis.settings.register_profile("default", max_examples=60, deadline=None)
hypothesis.settings.register_profile("fast", max_examples=10, deadline=None)
hypothesis.settings.load_profile("default")

ACCEPTANCE_LINES = []


def random_hermitian(rng, n, lo=-1.0, hi=1.0):
    a = rng.uniform(lo, hi, (n, n)) + 1j * rng.uniform(lo, hi, (n, n))
    return (a + a.conj().T) / 2


def random_unitary(rng, n):
    z = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def bell_state():
    rho = np.zeros((4, 4), dtype=complex)
    rho[0, 0] = rho[0, 3] = rho[3, 0] = rho[3, 3] = 0.5
    return rho


def eq22_matrix(p, b):
    return np.array([[p, 0, 0], [0, 1 - 2 * p, b], [0, b, p]], dtype=complex)


def eq16_matrix(b):
    return np.diag([1 + b, 1 + b, 1 - 2 * b]).astype(complex) / 3


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
