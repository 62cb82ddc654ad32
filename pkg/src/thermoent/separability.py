"""Entanglement decisions for 2x2 and 2x3 systems.

For these dimensions a state is separable iff its partial transpose is
positive semidefinite, and the separability modulus (the largest weight
``t`` such that ``t*rho + (1-t)*I/D`` is separable) has the closed form
``1 / (1 + D*|min(lambda_min, 0)|)``.

Default tolerances
------------------
``ZERO_TOL`` is the resolution at which a negative partial-transpose
eigenvalue counts as entanglement. Thermal states with a product ground
state typically have ``lambda_min`` of order ``-exp(-c/T)`` just above
``T = 0``; such states are only entangled below double-precision resolution
and ``ZERO_TOL = 1e-9`` treats them as separable. ``MARGINAL_TOL`` marks
verdicts that sit inside this resolution band.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import UnsupportedDimension
from .hamiltonian import DensityMatrix, purity
from .linalg import BipartiteShape, eigvalsh_stack, partial_transpose

ZERO_TOL = 1e-9
MARGINAL_TOL = 1e-8

# Purity at or below which every state is separable. For 2x3 the exact
# constant is only known to lie in [1/5, 7/32]; 1/5 is the certified end.
PURITY_BOUND = {4: 1.0 / 3.0, 6: 1.0 / 5.0}

# Smallest possible modulus: 1 / (1 + D/2) for a maximally entangled state.
MIN_MODULUS = {4: 1.0 / 3.0, 6: 1.0 / 4.0}


@dataclass(frozen=True)
class EntanglementVerdict:
    lambda_min: float
    modulus: float
    robustness: float
    entangled: bool
    marginal: bool


def _check_dim(shape: BipartiteShape) -> int:
    if shape.D not in (4, 6):
        raise UnsupportedDimension(f"exact separability needs D in (4, 6), got {shape.D}")
    return shape.D


def pt_min_eigenvalue(matrix, shape: BipartiteShape):
    """Smallest eigenvalue of the qubit partial transpose; vectorized over stacks."""
    lam = eigvalsh_stack(partial_transpose(matrix, shape))[..., 0]
    return float(lam) if np.ndim(lam) == 0 else lam


def separability_modulus(lambda_min, D: int):
    neg = np.minimum(lambda_min, 0.0)
    ell = 1.0 / (1.0 + D * np.abs(neg))
    return float(ell) if np.ndim(ell) == 0 else ell


def random_robustness(modulus):
    return 1.0 / modulus - 1.0


def analyze(
    rho: DensityMatrix, zero_tol: float = ZERO_TOL, marginal_tol: float = MARGINAL_TOL
) -> EntanglementVerdict:
    """PPT verdict, separability modulus and random robustness of ``rho``."""
    D = _check_dim(rho.shape)
    lam = pt_min_eigenvalue(rho.matrix, rho.shape)
    ell = separability_modulus(lam, D)
    return EntanglementVerdict(
        lambda_min=lam,
        modulus=ell,
        robustness=random_robustness(ell),
        entangled=lam < -zero_tol,
        marginal=abs(lam) <= marginal_tol,
    )


def purity_bound(shape: BipartiteShape) -> float:
    return PURITY_BOUND[_check_dim(shape)]


def purity_detector(rho: DensityMatrix) -> bool:
    """True certifies separability (purity at or below the critical value).

    False is inconclusive.
    """
    return purity(rho) <= purity_bound(rho.shape)
