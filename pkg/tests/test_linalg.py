import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from conftest import bell_phi_plus
from thermoent.errors import NotHermitian, NotSquare, NotUnitVector, ShapeMismatch, UnsupportedDimension
from thermoent.linalg import (
    QUBIT_QUBIT,
    QUBIT_QUTRIT,
    BipartiteShape,
    condition_on_factor,
    eig_hermitian,
    min_eigenvalue,
    partial_transpose,
    random_density_matrix,
    tensor_product,
)

SX = np.array([[0, 1], [1, 0]])
SZ = np.diag([1.0, -1.0])


def random_hermitian(n, rng):
    G = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    return G + G.conj().T


def assert_eigensystem(A, w, V):
    scale = 1 + np.max(np.sum(np.abs(A), axis=1))
    n = A.shape[0]
    assert np.all(np.diff(w) >= 0)
    assert np.max(np.abs(A @ V - V * w)) <= 1e-10 * scale
    assert np.max(np.abs(V.conj().T @ V - np.eye(n))) <= 1e-10
    assert np.max(np.abs((V * w) @ V.conj().T - A)) <= 1e-9 * scale


class TestEigHermitian:
    def test_identity(self):
        w, V = eig_hermitian(np.eye(4))
        np.testing.assert_array_equal(w, np.ones(4))
        assert_eigensystem(np.eye(4), w, V)

    def test_diagonal_keeps_canonical_basis(self):
        w, V = eig_hermitian(np.diag([0, 1.5, 7, 8]))
        np.testing.assert_array_equal(w, [0, 1.5, 7, 8])
        np.testing.assert_allclose(np.abs(V), np.eye(4))

    def test_pauli_x(self):
        w, V = eig_hermitian(SX)
        np.testing.assert_allclose(w, [-1, 1], atol=1e-15)
        minus = np.array([1, -1]) / np.sqrt(2)
        assert abs(abs(np.vdot(minus, V[:, 0])) - 1) < 1e-14

    @pytest.mark.parametrize("n", [2, 3, 4, 6])
    def test_random_hermitian(self, n):
        rng = np.random.default_rng(n)
        for _ in range(50):
            A = random_hermitian(n, rng)
            w, V = eig_hermitian(A)
            assert_eigensystem(A, w, V)
            np.testing.assert_allclose(w, np.linalg.eigvalsh(A), atol=1e-12)

    def test_degenerate_spectrum(self):
        rng = np.random.default_rng(7)
        U, _ = np.linalg.qr(random_hermitian(6, rng))
        A = (U * np.array([1, 1, 1, 2, 2, 5.0])) @ U.conj().T
        w, V = eig_hermitian(A)
        np.testing.assert_allclose(w, [1, 1, 1, 2, 2, 5], atol=1e-13)
        assert_eigensystem(A, w, V)

    @settings(max_examples=60, deadline=None)
    @given(
        re=arrays(np.float64, (4, 4), elements=st.floats(-10, 10)),
        im=arrays(np.float64, (4, 4), elements=st.floats(-10, 10)),
    )
    def test_hypothesis_residuals(self, re, im):
        G = re + 1j * im
        A = G + G.conj().T
        w, V = eig_hermitian(A)
        assert_eigensystem(A, w, V)

    def test_rejects_non_square(self):
        with pytest.raises(NotSquare):
            eig_hermitian(np.zeros((2, 3)))

    def test_rejects_non_hermitian(self):
        with pytest.raises(NotHermitian):
            eig_hermitian([[0, 1], [0, 0]])

    def test_tolerance_is_configurable(self):
        A = np.array([[1, 1e-9], [0, 1]])
        with pytest.raises(NotHermitian):
            eig_hermitian(A)
        eig_hermitian(A, hermiticity_tol=1e-8)


class TestPartialTranspose:
    def test_index_layout(self):
        rho = np.arange(16).reshape(4, 4)
        expected = np.array([[0, 1, 8, 9], [4, 5, 12, 13], [2, 3, 10, 11], [6, 7, 14, 15]])
        np.testing.assert_array_equal(partial_transpose(rho, QUBIT_QUBIT), expected)
        expected2 = np.array([[0, 4, 2, 6], [1, 5, 3, 7], [8, 12, 10, 14], [9, 13, 11, 15]])
        np.testing.assert_array_equal(partial_transpose(rho, QUBIT_QUBIT, side=2), expected2)

    def test_block_definition_qutrit(self):
        rho = np.arange(36).reshape(6, 6)
        pt = partial_transpose(rho, QUBIT_QUTRIT)
        for i in range(2):
            for j in range(2):
                for k in range(3):
                    for l in range(3):
                        assert pt[3 * i + k, 3 * j + l] == rho[3 * j + k, 3 * i + l]

    @pytest.mark.parametrize("shape", [QUBIT_QUBIT, QUBIT_QUTRIT])
    def test_maximally_mixed_is_fixed(self, shape):
        tau = np.eye(shape.D) / shape.D
        np.testing.assert_array_equal(partial_transpose(tau, shape), tau)

    def test_bell_state_spectrum(self):
        w = np.linalg.eigvalsh(partial_transpose(bell_phi_plus(), QUBIT_QUBIT))
        np.testing.assert_allclose(w, [-0.5, 0.5, 0.5, 0.5], atol=1e-15)

    def test_product_state(self):
        rng = np.random.default_rng(3)
        r1, r2 = random_density_matrix(2, rng), random_density_matrix(3, rng)
        pt = partial_transpose(np.kron(r1, r2), QUBIT_QUTRIT)
        np.testing.assert_allclose(pt, np.kron(r1.T, r2), atol=1e-15)
        assert np.linalg.eigvalsh(pt)[0] >= -1e-15

    @pytest.mark.parametrize("shape", [QUBIT_QUBIT, QUBIT_QUTRIT])
    def test_involution_trace_hermiticity(self, shape):
        rng = np.random.default_rng(11)
        for _ in range(20):
            rho = random_density_matrix(shape.D, rng)
            pt = partial_transpose(rho, shape)
            np.testing.assert_array_equal(partial_transpose(pt, shape), rho)
            assert np.trace(pt) == np.trace(rho)
            np.testing.assert_array_equal(pt, pt.conj().T)

    @pytest.mark.parametrize("shape", [QUBIT_QUBIT, QUBIT_QUTRIT])
    def test_side_independent_spectrum(self, shape):
        rng = np.random.default_rng(5)
        for _ in range(100):
            rho = random_density_matrix(shape.D, rng)
            a = min_eigenvalue(partial_transpose(rho, shape, 1))
            b = min_eigenvalue(partial_transpose(rho, shape, 2))
            assert abs(a - b) <= 1e-10

    def test_stack(self):
        rng = np.random.default_rng(0)
        stack = np.array([random_density_matrix(6, rng) for _ in range(3)])
        pts = partial_transpose(stack, QUBIT_QUTRIT)
        for r, p in zip(stack, pts):
            np.testing.assert_array_equal(partial_transpose(r, QUBIT_QUTRIT), p)

    def test_shape_mismatch(self):
        with pytest.raises(ShapeMismatch):
            partial_transpose(np.eye(4), QUBIT_QUTRIT)


class TestMinEigenvalue:
    def test_bell(self):
        assert min_eigenvalue(partial_transpose(bell_phi_plus(), QUBIT_QUBIT)) == pytest.approx(-0.5, abs=1e-14)

    def test_maximally_mixed(self):
        assert min_eigenvalue(np.eye(4) / 4) == 0.25

    def test_non_hermitian(self):
        with pytest.raises(NotHermitian):
            min_eigenvalue([[1, 2], [0, 1]])


class TestTensorProduct:
    def test_identities(self):
        np.testing.assert_array_equal(tensor_product(np.eye(2), np.eye(2)), np.eye(4))

    def test_projectors(self):
        out = tensor_product(np.diag([1, 0]), np.diag([1, 0, 0]))
        np.testing.assert_array_equal(out, np.diag([1, 0, 0, 0, 0, 0]))

    def test_spectrum_with_identity(self):
        w, _ = eig_hermitian(tensor_product(SZ, np.eye(2)))
        np.testing.assert_allclose(w, [-1, -1, 1, 1])

    def test_trace_multiplicative(self):
        rng = np.random.default_rng(2)
        A, B = random_hermitian(2, rng), random_hermitian(3, rng)
        assert np.trace(tensor_product(A, B)) == pytest.approx(np.trace(A) * np.trace(B))


class TestConditionOnFactor:
    def test_identity(self):
        phi = np.array([0.6, 0.8j, 0])
        np.testing.assert_allclose(condition_on_factor(np.eye(6), QUBIT_QUTRIT, 2, phi), np.eye(2))
        psi = np.array([0.6, 0.8])
        np.testing.assert_allclose(condition_on_factor(np.eye(6), QUBIT_QUTRIT, 1, psi), np.eye(3))

    def test_zz_on_up(self):
        out = condition_on_factor(np.kron(SZ, SZ), QUBIT_QUBIT, 2, [1, 0])
        np.testing.assert_array_equal(out, SZ)

    def test_non_interacting(self):
        rng = np.random.default_rng(4)
        H1, H2 = random_hermitian(2, rng), random_hermitian(3, rng)
        H = np.kron(H1, np.eye(3)) + np.kron(np.eye(2), H2)
        phi = rng.standard_normal(3) + 1j * rng.standard_normal(3)
        phi /= np.linalg.norm(phi)
        expected = H1 + np.vdot(phi, H2 @ phi) * np.eye(2)
        np.testing.assert_allclose(condition_on_factor(H, QUBIT_QUTRIT, 2, phi), expected, atol=1e-13)

    @pytest.mark.parametrize("side", [1, 2])
    def test_matches_definition(self, side):
        rng = np.random.default_rng(side)
        H = random_hermitian(6, rng)
        d = 2 if side == 1 else 3
        m = 5 - d
        fixed = rng.standard_normal(d) + 1j * rng.standard_normal(d)
        fixed /= np.linalg.norm(fixed)
        A = condition_on_factor(H, QUBIT_QUTRIT, side, fixed)
        for _ in range(5):
            x = rng.standard_normal(m) + 1j * rng.standard_normal(m)
            y = rng.standard_normal(m) + 1j * rng.standard_normal(m)
            kx = np.kron(fixed, x) if side == 1 else np.kron(x, fixed)
            ky = np.kron(fixed, y) if side == 1 else np.kron(y, fixed)
            assert np.vdot(x, A @ y) == pytest.approx(np.vdot(kx, H @ ky), abs=1e-12)
        np.testing.assert_allclose(A, A.conj().T, atol=1e-14)

    def test_rejects_non_unit(self):
        with pytest.raises(NotUnitVector):
            condition_on_factor(np.eye(4), QUBIT_QUBIT, 2, [1, 1])

    def test_rejects_wrong_length(self):
        with pytest.raises(ShapeMismatch):
            condition_on_factor(np.eye(4), QUBIT_QUBIT, 2, [1, 0, 0])
        with pytest.raises(ShapeMismatch):
            condition_on_factor(np.eye(6), QUBIT_QUBIT, 2, [1, 0])


def test_shape_restricted_to_supported_systems():
    assert BipartiteShape(2, 3).D == 6
    for d1, d2 in [(3, 3), (2, 4), (3, 2)]:
        with pytest.raises(UnsupportedDimension):
            BipartiteShape(d1, d2)
