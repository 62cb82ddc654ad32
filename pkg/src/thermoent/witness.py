"""Lowest product-state energy and the energy-witness temperature.

The minimum of ``<psi (x) phi|H|psi (x) phi>`` over unit vectors equals the
minimum energy over all separable states, since the energy is linear in the
state. Any thermal state whose mean energy lies below that value is
entangled.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from .errors import EtaAboveMeanEnergy, ResolutionTooSmall
from .hamiltonian import INFINITY, HamiltonianSpec, energy
from .linalg import condition_on_factor, random_unit_vectors
from .rootfind import bisect, expand_upper

DEFAULT_RESTARTS = 64
DEFAULT_SEED = 0
MAX_SWEEPS = 500
SWEEP_TOL = 1e-12
TEMPERATURE_TOL = 1e-9
# eta within this (relative) distance of the ground energy is the ground energy
ETA_GROUND_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class ProductAnsatz:
    psi: np.ndarray
    phi: np.ndarray
    value: float


@dataclass(frozen=True, eq=False)
class EtaResult:
    eta: float
    best: ProductAnsatz
    restarts_used: int
    sweeps: int
    oracle_value: float | None = None


def product_energy(spec: HamiltonianSpec, psi, phi):
    v = np.einsum("...i,...k->...ik", psi, phi).reshape(*np.shape(psi)[:-1], spec.D)
    e = np.einsum("...a,ab,...b->...", v.conj(), spec.matrix, v).real
    return float(e) if np.ndim(e) == 0 else e


def _ground_vectors(A):
    w, V = np.linalg.eigh(A)
    return w[..., 0], V[..., :, 0]


def _seesaw(spec, psi, phi, max_sweeps=MAX_SWEEPS, tol=SWEEP_TOL):
    """Alternating minimization on a batch of starting points.

    Returns final vectors, energies and the per-sweep energy history
    (shape ``(sweeps + 1, batch)``; row 0 is the starting energy).
    """
    H, shape = spec.matrix, spec.shape
    current = product_energy(spec, psi, phi)
    history = [current]
    for _ in range(max_sweeps):
        _, psi = _ground_vectors(condition_on_factor(H, shape, 2, phi))
        new, phi = _ground_vectors(condition_on_factor(H, shape, 1, psi))
        history.append(new)
        done = np.all(current - new < tol)
        current = new
        if done:
            break
    return psi, phi, current, np.array(history)


def seesaw_descent(spec: HamiltonianSpec, psi, phi, max_sweeps: int = MAX_SWEEPS):
    """Run the alternating minimization from one starting pair.

    Returns the final :class:`ProductAnsatz` and the energy after each sweep.
    """
    psi = np.asarray(psi, dtype=complex)
    phi = np.asarray(phi, dtype=complex)
    psi = psi / np.linalg.norm(psi)
    phi = phi / np.linalg.norm(phi)
    p, f, e, hist = _seesaw(spec, psi[None], phi[None], max_sweeps)
    return ProductAnsatz(p[0], f[0], float(e[0])), hist[:, 0]


def _structured_starts(spec):
    """Leading Schmidt pair of every eigenvector plus the product basis.

    Near a degenerate product minimum the see-saw only converges
    sublinearly, so these starts land on such minima exactly.
    """
    d1, d2 = spec.shape.d1, spec.shape.d2
    U, _, Vh = np.linalg.svd(spec.eigenvectors.reshape(-1, d1, d2))
    eye1, eye2 = np.eye(d1, dtype=complex), np.eye(d2, dtype=complex)
    psi = np.concatenate([U[:, :, 0], np.repeat(eye1, d2, axis=0)])
    phi = np.concatenate([Vh[:, 0, :], np.tile(eye2, (d1, 1))])
    return psi, phi


def eta_seesaw(
    spec: HamiltonianSpec, restarts: int = DEFAULT_RESTARTS, seed: int = DEFAULT_SEED
) -> EtaResult:
    """Minimal product-state energy from ``restarts`` random starts.

    Starts are Haar-random pairs drawn from a Philox (counter-based)
    generator keyed by ``seed``, so results do not depend on platform.
    A few deterministic starts (see ``_structured_starts``) are added.
    """
    if restarts < 1:
        raise ValueError("restarts must be >= 1")
    rng = np.random.Generator(np.random.Philox(seed))
    psi = random_unit_vectors((restarts, spec.shape.d1), rng)
    phi = random_unit_vectors((restarts, spec.shape.d2), rng)
    fixed_psi, fixed_phi = _structured_starts(spec)
    psi = np.concatenate([psi, fixed_psi])
    phi = np.concatenate([phi, fixed_phi])
    psi, phi, values, history = _seesaw(spec, psi, phi)
    k = int(np.argmin(values))
    best = ProductAnsatz(psi[k], phi[k], float(values[k]))
    return EtaResult(best.value, best, restarts, len(history) - 1)


def _qubit_grid(resolution: int) -> np.ndarray:
    theta = np.linspace(0.0, np.pi, resolution)
    alpha = np.linspace(0.0, 2 * np.pi, resolution, endpoint=False)
    t, a = np.meshgrid(theta, alpha, indexing="ij")
    v = np.stack([np.cos(t / 2), np.exp(1j * a) * np.sin(t / 2)], axis=-1)
    return v.reshape(-1, 2)


def _qutrit_grid(resolution: int) -> np.ndarray:
    amp = np.linspace(0.0, np.pi / 2, resolution)
    phase = np.linspace(0.0, 2 * np.pi, resolution, endpoint=False)
    a, b, g, d = np.meshgrid(amp, amp, phase, phase, indexing="ij")
    v = np.stack(
        [
            np.cos(a) + 0j,
            np.sin(a) * np.cos(b) * np.exp(1j * g),
            np.sin(a) * np.sin(b) * np.exp(1j * d),
        ],
        axis=-1,
    )
    return v.reshape(-1, 3)


def default_oracle_resolution(spec: HamiltonianSpec) -> int:
    return 32 if spec.shape.d2 == 2 else 16


def eta_grid_oracle(spec: HamiltonianSpec, resolution: int | None = None, block: int = 16) -> float:
    """Brute-force product-state minimum over a fixed angle grid, then one polish.

    The qubit factor is parametrized by two angles and the second factor by
    two (qubit) or four (qutrit) angles, each sampled at ``resolution``
    points; every combination is evaluated.
    """
    if resolution is None:
        resolution = default_oracle_resolution(spec)
    if resolution < 8:
        raise ResolutionTooSmall(f"resolution must be >= 8, got {resolution}")
    psis = _qubit_grid(resolution)
    phis = _qubit_grid(resolution) if spec.shape.d2 == 2 else _qutrit_grid(resolution)
    d2 = spec.shape.d2
    # E[a, p] = sum_kl B[a,k,l] conj(phi[p,k]) phi[p,l]
    outer = (phis.conj()[:, :, None] * phis[:, None, :]).reshape(len(phis), d2 * d2)
    B = condition_on_factor(spec.matrix, spec.shape, 1, psis).reshape(len(psis), d2 * d2)

    best, arg = np.inf, (0, 0)
    for start in range(0, len(psis), block):
        E = (B[start : start + block] @ outer.T).real
        k = int(np.argmin(E))
        if E.flat[k] < best:
            a, p = np.unravel_index(k, E.shape)
            best, arg = float(E[a, p]), (start + a, p)
    polished, _ = seesaw_descent(spec, psis[arg[0]], phis[arg[1]])
    return min(best, polished.value)


def t_h(spec: HamiltonianSpec, eta: float) -> float:
    """Temperature at which the mean energy reaches ``eta``.

    Every thermal state below it is entangled. Returns 0 when ``eta`` does
    not exceed the ground energy (up to rounding of the see-saw minimum).
    """
    scale = max(1.0, float(np.max(np.abs(spec.eigenvalues))))
    if eta <= energy(spec, 0.0) + ETA_GROUND_TOL * scale:
        return 0.0
    mean = energy(spec, INFINITY)
    if eta >= mean:
        raise EtaAboveMeanEnergy(f"eta = {eta!r} is not below the mean energy {mean!r}")
    above = lambda T: energy(spec, T) > eta
    hi = expand_upper(above)
    lo, hi = bisect(above, 0.0, hi, TEMPERATURE_TOL)
    return 0.5 * (lo + hi)


def witness_violations(spec: HamiltonianSpec, temperature_h: float, temperatures, entangled) -> list[float]:
    """Temperatures below ``temperature_h`` whose state was not found entangled.

    A non-empty result means the numerical eta was too large; it is reported
    with a warning rather than raised.
    """
    temperatures = np.asarray(temperatures)
    bad = (temperatures < temperature_h) & ~np.asarray(entangled, dtype=bool)
    out = [float(t) for t in temperatures[bad]]
    if out:
        warnings.warn(
            f"{spec.label or 'hamiltonian'}: {len(out)} temperatures below T_H = "
            f"{temperature_h:.6g} are not entangled; eta may be overestimated",
            stacklevel=2,
        )
    return out
