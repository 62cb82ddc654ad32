import numpy as np
import pytest

from thermoent.corpus import EXAMPLES, load_all
from thermoent.hamiltonian import HamiltonianSpec, normalize_spec
from thermoent.linalg import BipartiteShape, random_unitary

ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def corpus():
    return load_all()


@pytest.fixture(params=EXAMPLES)
def example(request, corpus):
    return corpus[request.param]


def random_spec(shape: BipartiteShape, rng) -> HamiltonianSpec:
    """Random orthonormal eigenvectors and eigenvalues uniform on [0, 5]."""
    U = random_unitary(shape.D, rng)
    h = rng.uniform(0.0, 5.0, shape.D)
    return normalize_spec(HamiltonianSpec(shape, h, U.T, "random"))


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def bell_phi_plus():
    v = np.array([1, 0, 0, 1]) / np.sqrt(2)
    return np.outer(v, v.conj())
