"""Hamiltonians in spectral form and their thermal (Gibbs) states.

Temperatures are plain floats in the units of the eigenvalues (Boltzmann's
constant absorbed into H); ``math.inf`` is the infinite-temperature state,
the maximally mixed state ``I/D``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace

import numpy as np

from .errors import DimensionMismatch, NegativeTemperature, NotOrthonormal
from .linalg import BipartiteShape

INFINITY = math.inf
ORTHONORMAL_TOL = 1e-8
DEGENERACY_TOL = 1e-9
SMALL_T_CUTOFF = 1e-12


@dataclass(frozen=True, eq=False)
class HamiltonianSpec:
    """Spectral data of a Hamiltonian: ``H = sum_j h_j |e_j><e_j|``.

    ``eigenvectors`` holds one eigenvector per row, in the composite basis.
    """

    shape: BipartiteShape
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    label: str = ""
    _matrix: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        h = np.array(self.eigenvalues, dtype=float)
        E = np.array(self.eigenvectors, dtype=complex)
        D = self.shape.D
        if h.shape != (D,):
            raise DimensionMismatch(f"expected {D} eigenvalues, got {h.size}")
        if E.shape != (D, D):
            raise DimensionMismatch(f"expected {D} eigenvectors of length {D}, got shape {E.shape}")
        h.flags.writeable = False
        E.flags.writeable = False
        H = (E.T * h) @ E.conj()
        H = 0.5 * (H + H.conj().T)
        H.flags.writeable = False
        object.__setattr__(self, "eigenvalues", h)
        object.__setattr__(self, "eigenvectors", E)
        object.__setattr__(self, "_matrix", H)

    @property
    def D(self) -> int:
        return self.shape.D

    @property
    def matrix(self) -> np.ndarray:
        return self._matrix

    @property
    def is_constant(self) -> bool:
        return bool(np.ptp(self.eigenvalues) <= DEGENERACY_TOL)

    def ground_indices(self) -> np.ndarray:
        h = self.eigenvalues
        return np.flatnonzero(h - h.min() <= DEGENERACY_TOL)

    def spectral_gap(self) -> float:
        """Distance from the ground level to the first excited level (0 if constant)."""
        h = np.sort(self.eigenvalues)
        above = h[h - h[0] > DEGENERACY_TOL]
        return float(above[0] - h[0]) if above.size else 0.0


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    matrix: np.ndarray
    shape: BipartiteShape

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=complex)
        if m.shape != (self.shape.D, self.shape.D):
            raise DimensionMismatch(f"state has shape {m.shape}, expected D={self.shape.D}")
        object.__setattr__(self, "matrix", m)

    def check(self, herm_tol=1e-10, trace_tol=1e-12, psd_tol=1e-12):
        """Raise ``ValueError`` unless the matrix is a valid state within tolerance."""
        m = self.matrix
        if np.max(np.abs(m - m.conj().T)) > herm_tol:
            raise ValueError("density matrix is not Hermitian")
        if abs(np.trace(m) - 1.0) > trace_tol:
            raise ValueError(f"trace {np.trace(m).real!r} differs from 1")
        if np.linalg.eigvalsh(m)[0] < -psd_tol:
            raise ValueError("density matrix has a negative eigenvalue")
        return self


def check_orthonormal(vectors, tol: float = ORTHONORMAL_TOL) -> None:
    """Raise :class:`NotOrthonormal` naming the worst row pair of the Gram matrix."""
    E = np.asarray(vectors, dtype=complex)
    gram = E.conj() @ E.T
    dev = np.abs(gram - np.eye(len(E)))
    i, j = np.unravel_index(np.argmax(dev), dev.shape)
    if dev[i, j] > tol:
        raise NotOrthonormal((int(min(i, j)), int(max(i, j))), complex(gram[i, j]), tol)


def normalize_spec(raw: HamiltonianSpec) -> HamiltonianSpec:
    """Validate orthonormality and shift the spectrum so its minimum is 0."""
    check_orthonormal(raw.eigenvectors)
    h = raw.eigenvalues - raw.eigenvalues.min()
    return replace(raw, eigenvalues=h)


def from_matrix(H, shape: BipartiteShape, label: str = "") -> HamiltonianSpec:
    """Build a normalized spec from a Hermitian matrix (eigenvectors from LAPACK)."""
    w, V = np.linalg.eigh(np.asarray(H, dtype=complex))
    return normalize_spec(HamiltonianSpec(shape, w, V.T, label))


def _check_temperature(T) -> np.ndarray:
    T = np.asarray(T, dtype=float)
    if np.any(np.isnan(T)) or np.any(T < 0):
        raise NegativeTemperature(f"temperatures must be >= 0, got {T!r}")
    return T


def gibbs_weights(spec: HamiltonianSpec, T) -> np.ndarray:
    """Boltzmann weights of each eigenvector; vectorized over ``T``.

    Returns shape ``(D,)`` for scalar ``T`` and ``(n, D)`` for an array of
    ``n`` temperatures. ``T = 0`` (or below the underflow cutoff) gives the
    uniform mixture over the ground level, ``T = inf`` the uniform mixture
    over all levels.
    """
    T = _check_temperature(T)
    scalar = T.ndim == 0
    T = np.atleast_1d(T)
    h = spec.eigenvalues
    shifted = h - h.min()
    cutoff = SMALL_T_CUTOFF * max(float(np.max(np.abs(h))), 0.0)

    w = np.empty((T.size, h.size))
    cold = T <= cutoff
    hot = np.isinf(T)
    mid = ~(cold | hot)
    if np.any(cold):
        ground = (shifted <= DEGENERACY_TOL).astype(float)
        w[cold] = ground / ground.sum()
    if np.any(hot):
        w[hot] = 1.0 / h.size
    if np.any(mid):
        x = np.exp(-shifted[None, :] / T[mid, None])
        w[mid] = x / x.sum(axis=1, keepdims=True)
    return w[0] if scalar else w


def _states_from_weights(spec: HamiltonianSpec, w: np.ndarray) -> np.ndarray:
    E = spec.eigenvectors
    return np.einsum("...j,ja,jb->...ab", w, E, E.conj())


def gibbs_state(spec: HamiltonianSpec, T: float) -> DensityMatrix:
    """Thermal state ``exp(-H/T) / tr exp(-H/T)`` including the limits 0 and inf."""
    return DensityMatrix(_states_from_weights(spec, gibbs_weights(spec, float(T))), spec.shape)


def gibbs_matrices(spec: HamiltonianSpec, temperatures) -> np.ndarray:
    """Stack of thermal density matrices, shape ``(n, D, D)``."""
    return _states_from_weights(spec, gibbs_weights(spec, np.atleast_1d(temperatures)))


def ground_state(spec: HamiltonianSpec) -> DensityMatrix:
    return gibbs_state(spec, 0.0)


def energy(spec: HamiltonianSpec, T):
    """Mean energy ``U(T) = tr(rho_T H)``; vectorized over ``T``."""
    w = gibbs_weights(spec, T)
    u = w @ spec.eigenvalues
    return float(u) if np.ndim(u) == 0 else u


def purity(rho) -> float:
    """``tr(rho^2)`` for a state or a raw matrix."""
    m = rho.matrix if isinstance(rho, DensityMatrix) else np.asarray(rho)
    return float(np.sum(np.abs(m) ** 2))


def thermal_purity(spec: HamiltonianSpec, T):
    """Purity of the Gibbs state computed from the weights; vectorized over ``T``."""
    w = gibbs_weights(spec, T)
    p = np.sum(w**2, axis=-1)
    return float(p) if np.ndim(p) == 0 else p
