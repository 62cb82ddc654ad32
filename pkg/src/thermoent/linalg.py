"""Small dense complex linear algebra on qubit/qubit and qubit/qutrit spaces.

Composite basis index convention: ``n = i * d2 + k`` for qubit index ``i``
and second-factor index ``k``, i.e. the ordering produced by ``np.kron``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import (
    NoConvergence,
    NotHermitian,
    NotSquare,
    NotUnitVector,
    ShapeMismatch,
    UnsupportedDimension,
)

HERMITICITY_TOL = 1e-10
JACOBI_OFF_TOL = 1e-14
JACOBI_MAX_SWEEPS = 100


@dataclass(frozen=True)
class BipartiteShape:
    """Dimensions of a qubit (first factor) coupled to a qubit or qutrit."""

    d1: int = 2
    d2: int = 2

    def __post_init__(self):
        if self.d1 != 2 or self.d2 not in (2, 3):
            raise UnsupportedDimension(
                f"only 2x2 and 2x3 systems are supported, got {self.d1}x{self.d2}"
            )

    @property
    def D(self) -> int:
        return self.d1 * self.d2

    def factor_dim(self, side: int) -> int:
        if side == 1:
            return self.d1
        if side == 2:
            return self.d2
        raise ValueError(f"side must be 1 or 2, got {side!r}")


QUBIT_QUBIT = BipartiteShape(2, 2)
QUBIT_QUTRIT = BipartiteShape(2, 3)


class HermitianEigensystem(NamedTuple):
    """Ascending eigenvalues and matching unit eigenvectors (as columns)."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


def _as_square(A) -> np.ndarray:
    A = np.asarray(A, dtype=complex)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise NotSquare(f"expected a square matrix, got shape {A.shape}")
    return A


def check_hermitian(A, tol: float = HERMITICITY_TOL) -> np.ndarray:
    A = _as_square(A)
    dev = np.max(np.abs(A - A.conj().T), initial=0.0)
    if dev > tol:
        raise NotHermitian(f"|A - A^H|_max = {dev:.3e} exceeds {tol:g}")
    return A


def _off_norm(A: np.ndarray) -> float:
    off = A[~np.eye(A.shape[0], dtype=bool)]
    return float(np.linalg.norm(off))


def eig_hermitian(A, hermiticity_tol: float = HERMITICITY_TOL) -> HermitianEigensystem:
    """Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi rotations.

    Each rotation first removes the phase of the pivot ``A[p, q]`` and then
    applies the real symmetric Jacobi rotation to the resulting 2x2 block.
    Sweeps stop once the off-diagonal Frobenius norm drops below
    ``1e-14 * max(1, ||A||_F)``.

    Eigenvalues are returned ascending; ties keep the column order of the
    converged rotation matrix.
    """
    A = check_hermitian(A, hermiticity_tol)
    n = A.shape[0]
    a = 0.5 * (A + A.conj().T)
    V = np.eye(n, dtype=complex)
    scale = max(1.0, float(np.linalg.norm(a)))

    for _ in range(JACOBI_MAX_SWEEPS):
        if _off_norm(a) <= JACOBI_OFF_TOL * scale:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                b = a[p, q]
                mag = abs(b)
                if mag <= 1e-3 * JACOBI_OFF_TOL * scale:
                    # negligible (possibly subnormal) pivot: its phase is not computable
                    a[p, q] = a[q, p] = 0.0
                    continue
                phase = b / mag
                app, aqq = a[p, p].real, a[q, q].real
                theta = 0.5 * np.arctan2(2.0 * mag, aqq - app)
                c, s = np.cos(theta), np.sin(theta)
                # columns: (c, -s e^{-i phi}) and (s, c e^{-i phi})
                J = np.array([[c, s], [-s * phase.conjugate(), c * phase.conjugate()]])
                idx = [p, q]
                a[:, idx] = a[:, idx] @ J
                a[idx, :] = J.conj().T @ a[idx, :]
                a[q, p] = a[p, q] = 0.0
                V[:, idx] = V[:, idx] @ J
    else:
        if _off_norm(a) > JACOBI_OFF_TOL * scale:
            raise NoConvergence(f"Jacobi did not converge in {JACOBI_MAX_SWEEPS} sweeps")

    w = np.real(np.diag(a))
    order = np.argsort(w, kind="stable")
    return HermitianEigensystem(w[order], V[:, order])


def eigvalsh_stack(A) -> np.ndarray:
    """Ascending eigenvalues of a stack of Hermitian matrices (LAPACK)."""
    return np.linalg.eigvalsh(np.asarray(A))


def min_eigenvalue(A, hermiticity_tol: float = HERMITICITY_TOL) -> float:
    return float(eig_hermitian(A, hermiticity_tol).eigenvalues[0])


def partial_transpose(rho, shape: BipartiteShape, side: int = 1) -> np.ndarray:
    """Transpose ``rho`` on one tensor factor (``side=1`` is the qubit).

    Works on a single ``D x D`` matrix or on a stack ``(..., D, D)``.
    """
    rho = np.asarray(rho)
    D = shape.D
    if rho.shape[-2:] != (D, D):
        raise ShapeMismatch(f"expected trailing shape ({D}, {D}), got {rho.shape}")
    lead = rho.shape[:-2]
    r = rho.reshape(*lead, shape.d1, shape.d2, shape.d1, shape.d2)
    n = len(lead)
    axes = list(range(n))
    if side == 1:
        axes += [n + 2, n + 1, n, n + 3]
    elif side == 2:
        axes += [n, n + 3, n + 2, n + 1]
    else:
        raise ValueError(f"side must be 1 or 2, got {side!r}")
    return r.transpose(axes).reshape(*lead, D, D)


def tensor_product(A, B) -> np.ndarray:
    return np.kron(np.asarray(A), np.asarray(B))


def condition_on_factor(H, shape: BipartiteShape, side: int, phi) -> np.ndarray:
    """Operator left on the complementary factor after fixing one factor to ``phi``.

    For ``side=2`` the result ``A`` acts on the qubit with
    ``<psi|A|psi'> = <psi (x) phi| H |psi' (x) phi>``; ``side=1`` fixes the
    qubit instead. ``phi`` may be a stack ``(..., d)``, giving ``(..., m, m)``.
    """
    H = np.asarray(H, dtype=complex)
    if H.shape != (shape.D, shape.D):
        raise ShapeMismatch(f"H has shape {H.shape}, expected ({shape.D}, {shape.D})")
    phi = np.asarray(phi, dtype=complex)
    d = shape.factor_dim(side)
    if phi.shape[-1] != d:
        raise ShapeMismatch(f"vector of length {phi.shape[-1]} on factor of dimension {d}")
    norms = np.linalg.norm(phi, axis=-1)
    if np.any(np.abs(norms - 1.0) > 1e-12):
        raise NotUnitVector(f"conditioning vector has norm {np.max(norms):.15g}")
    H4 = H.reshape(shape.d1, shape.d2, shape.d1, shape.d2)
    if side == 2:
        return np.einsum("...k,ikjl,...l->...ij", phi.conj(), H4, phi)
    return np.einsum("...i,ikjl,...j->...kl", phi.conj(), H4, phi)


def random_density_matrix(D: int, rng: np.random.Generator) -> np.ndarray:
    """Full-rank random state ``G G^H / tr(G G^H)`` with complex-normal ``G``."""
    G = rng.standard_normal((D, D)) + 1j * rng.standard_normal((D, D))
    rho = G @ G.conj().T
    rho = 0.5 * (rho + rho.conj().T)
    return rho / np.trace(rho).real


def random_unit_vectors(shape, rng: np.random.Generator) -> np.ndarray:
    """Haar-random unit vectors: normalized complex-normal draws along the last axis."""
    v = rng.standard_normal(shape) + 1j * rng.standard_normal(shape)
    return v / np.linalg.norm(v, axis=-1, keepdims=True)


def random_unitary(D: int, rng: np.random.Generator) -> np.ndarray:
    """Orthonormalized complex-normal matrix (columns are orthonormal)."""
    G = rng.standard_normal((D, D)) + 1j * rng.standard_normal((D, D))
    Q, R = np.linalg.qr(G)
    return Q * (np.diag(R) / np.abs(np.diag(R)))
