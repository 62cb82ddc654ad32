"""Temperature scans and critical temperatures of the thermal family.

Along ``T -> rho_T`` the separable temperatures form a closed set that
contains ``[T_S, inf]``; the entangled ones are a finite union of open
intervals below ``T_S``. :func:`find_segments` locates every boundary on
``[0, T_*]``, where ``T_*`` is the temperature at which the purity drops to
the separability bound (above it, separability is guaranteed).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import minimize_scalar

from . import __version__
from .hamiltonian import HamiltonianSpec, energy, gibbs_matrices, thermal_purity
from .rootfind import bisect, expand_upper
from .separability import (
    MARGINAL_TOL,
    ZERO_TOL,
    pt_min_eigenvalue,
    purity_bound,
    separability_modulus,
)
from .witness import DEFAULT_RESTARTS, DEFAULT_SEED, eta_seesaw, t_h

DEFAULT_GRID = 4096
DEFAULT_REFINE_TOL = 1e-6
TEMPERATURE_TOL = 1e-9
DIP_WINDOW = 1e-4
BOUNDARY_RESIDUAL = 1e-10

SCENARIOS = ("trivial", "normal", "separable-then-entangled", "abnormal")


@dataclass(frozen=True)
class ThermalPoint:
    T: float
    energy: float
    purity: float
    lambda_min: float
    modulus: float


@dataclass(frozen=True)
class Segment:
    start: float
    end: float
    kind: str  # "separable", "entangled" or "marginal"

    @property
    def midpoint(self) -> float:
        return 0.5 * (self.start + self.end)


@dataclass
class SegmentReport:
    t_h: float | None
    t_e: float
    boundaries: list[float]
    t_s: float
    t_star: float
    segments: list[Segment]
    scenario: str
    wehrl_pair: tuple[float, float] | None
    touches: list[float] = field(default_factory=list)
    lambda_at_zero: float = 0.0


def lambda_min_at(spec: HamiltonianSpec, T):
    """Minimal partial-transpose eigenvalue of the Gibbs state(s) at ``T``."""
    lam = pt_min_eigenvalue(gibbs_matrices(spec, T), spec.shape)
    return float(lam[0]) if np.ndim(T) == 0 else lam


def thermal_points(spec: HamiltonianSpec, temperatures) -> list[ThermalPoint]:
    T = np.asarray(temperatures, dtype=float)
    lam = lambda_min_at(spec, T)
    ell = separability_modulus(lam, spec.D)
    U = energy(spec, T)
    P = thermal_purity(spec, T)
    return [ThermalPoint(*map(float, row)) for row in zip(T, U, P, lam, ell)]


def scan(spec: HamiltonianSpec, t_max: float, points: int, t_min: float = 0.0) -> list[ThermalPoint]:
    """Uniform grid of thermal points on ``[t_min, t_max]`` inclusive."""
    if points < 2:
        raise ValueError("points must be >= 2")
    if not t_max > t_min:
        raise ValueError("t_max must exceed t_min")
    return thermal_points(spec, np.linspace(t_min, t_max, points))


def t_star(spec: HamiltonianSpec) -> float:
    """Temperature where the Gibbs-state purity reaches the separability bound.

    Returns 0 when the ground state is already at or below the bound (this
    includes Hamiltonians proportional to the identity).
    """
    bound = purity_bound(spec.shape)
    if thermal_purity(spec, 0.0) <= bound:
        return 0.0
    below = lambda T: thermal_purity(spec, T) <= bound
    lo, hi = bisect(below, 0.0, expand_upper(below), TEMPERATURE_TOL)
    return float(hi)


def classify_scenario(t_e: float, t_s: float) -> str:
    if t_s == 0.0:
        return "trivial"
    if t_e == 0.0:
        return "separable-then-entangled"
    if t_e == t_s:
        return "normal"
    return "abnormal"


class _Locator:
    """Sign structure of ``lambda_min + zero_tol`` along temperature."""

    def __init__(self, spec, zero_tol, marginal_tol, refine_tol):
        self.spec = spec
        self.zero_tol = zero_tol
        self.marginal_tol = marginal_tol
        self.refine_tol = refine_tol

    def lam(self, T):
        return lambda_min_at(self.spec, T)

    def separable(self, T) -> bool:
        return self.lam(T) >= -self.zero_tol

    def boundary(self, a: float, b: float) -> float:
        """Refine a bracket across which the verdict flips; return the separable end."""
        left_sep = self.separable(a)
        flipped = lambda T: self.separable(T) != left_sep

        def residual_ok(lo, hi):
            edge = lo if left_sep else hi
            return self.lam(edge) + self.zero_tol <= BOUNDARY_RESIDUAL

        lo, hi = bisect(flipped, a, b, self.refine_tol, until=residual_ok)
        return float(lo if left_sep else hi)

    def extremum(self, a, m, b, sign):
        """Golden-section refinement of a grid minimum (sign=1) or maximum (sign=-1)."""
        f = lambda T: sign * self.lam(min(max(T, a), b))
        res = minimize_scalar(f, bracket=(a, m, b), method="golden")
        return float(res.x), sign * float(res.fun)


def find_segments(
    spec: HamiltonianSpec,
    grid_points: int = DEFAULT_GRID,
    refine_tol: float = DEFAULT_REFINE_TOL,
    *,
    eta: float | None = None,
    zero_tol: float = ZERO_TOL,
    marginal_tol: float = MARGINAL_TOL,
) -> SegmentReport:
    """Locate all separable/entangled segments of the thermal family on ``[0, T_*]``.

    Sign changes of ``lambda_min + zero_tol`` on a uniform grid are bisected
    to ``refine_tol``. Grid-level dips of ``lambda_min`` toward zero from
    above (within ``1e-4``) are refined by golden section so that entangled
    windows narrower than the grid step are not missed; bumps toward zero
    from below are treated the same way. A refined extremum that only
    reaches the marginal band is recorded as a touch and does not split a
    segment.

    Boundary temperatures are assigned to the separable side. ``eta``, when
    given, yields ``t_h``.
    """
    loc = _Locator(spec, zero_tol, marginal_tol, refine_tol)
    ts = t_star(spec)
    lam0 = loc.lam(0.0)
    boundaries: list[float] = []
    touches: list[float] = []

    if ts > 0.0:
        T = np.linspace(0.0, ts, grid_points)
        lam = loc.lam(T)
        sep = lam >= -zero_tol
        for i in np.flatnonzero(sep[1:] != sep[:-1]):
            boundaries.append(loc.boundary(T[i], T[i + 1]))

        inner = np.arange(1, grid_points - 1)
        l, c, r = lam[inner - 1], lam[inner], lam[inner + 1]
        dips = inner[(c < l) & (c < r) & sep[inner] & (c <= DIP_WINDOW) & (l > marginal_tol) & (r > marginal_tol)]
        bumps = inner[(c > l) & (c > r) & ~sep[inner] & (c >= -DIP_WINDOW) & (l < -marginal_tol) & (r < -marginal_tol)]
        for i, sign in [(i, 1.0) for i in dips] + [(i, -1.0) for i in bumps]:
            a, b = T[i - 1], T[i + 1]
            Tm, value = loc.extremum(a, T[i], b, sign)
            crosses = value < -zero_tol if sign > 0 else value >= -zero_tol
            if crosses:
                boundaries += [loc.boundary(a, Tm), loc.boundary(Tm, b)]
            elif abs(value) <= marginal_tol:
                touches.append(Tm)
        boundaries.sort()

    edges = [0.0] + boundaries + [ts]
    segments = []
    for a, b in zip(edges[:-1], edges[1:]):
        mid = 0.5 * (a + b)
        lm = loc.lam(mid)
        if lm < -zero_tol:
            kind = "entangled"
        elif abs(lm) <= marginal_tol or any(a <= t <= b for t in touches):
            kind = "marginal"
        else:
            kind = "separable"
        segments.append(Segment(a, b, kind))

    entangled = [s for s in segments if s.kind == "entangled"]
    t_e = 0.0 if lam0 >= -zero_tol else boundaries[0]
    t_s = entangled[-1].end if entangled else 0.0

    wehrl = None
    for s, nxt in zip(segments[:-1], segments[1:]):
        if s.kind != "entangled" and nxt.kind == "entangled" and s.end > s.start:
            wehrl = (float(s.midpoint), float(nxt.midpoint))
            break

    return SegmentReport(
        t_h=None if eta is None else t_h(spec, eta),
        t_e=t_e,
        boundaries=boundaries,
        t_s=t_s,
        t_star=ts,
        segments=segments,
        scenario=classify_scenario(t_e, t_s),
        wehrl_pair=wehrl,
        touches=sorted(touches),
        lambda_at_zero=lam0,
    )


def critical_temperatures(
    spec: HamiltonianSpec,
    *,
    restarts: int = DEFAULT_RESTARTS,
    seed: int = DEFAULT_SEED,
    grid_points: int = DEFAULT_GRID,
    refine_tol: float = DEFAULT_REFINE_TOL,
    skip_eta: bool = False,
    zero_tol: float = ZERO_TOL,
    marginal_tol: float = MARGINAL_TOL,
):
    """Full pipeline: eta by see-saw (unless skipped), then segment analysis.

    Returns ``(SegmentReport, EtaResult | None)``.
    """
    eta_result = None if skip_eta else eta_seesaw(spec, restarts, seed)
    report = find_segments(
        spec,
        grid_points,
        refine_tol,
        eta=None if eta_result is None else eta_result.eta,
        zero_tol=zero_tol,
        marginal_tol=marginal_tol,
    )
    return report, eta_result


def _t6(x):
    return None if x is None else float(f"{x:.6g}")


def report_dict(
    spec: HamiltonianSpec,
    report: SegmentReport,
    eta_result=None,
    *,
    restarts: int | None = None,
    seed: int | None = None,
    grid_points: int = DEFAULT_GRID,
    refine_tol: float = DEFAULT_REFINE_TOL,
    zero_tol: float = ZERO_TOL,
    marginal_tol: float = MARGINAL_TOL,
) -> dict:
    """Serializable report with a stable key order; temperatures at 6 significant digits."""
    return {
        "label": spec.label,
        "version": __version__,
        "dims": [spec.shape.d1, spec.shape.d2],
        "t_h": _t6(report.t_h),
        "t_e": _t6(report.t_e),
        "boundaries": [_t6(b) for b in report.boundaries],
        "t_s": _t6(report.t_s),
        "t_star": _t6(report.t_star),
        "scenario": report.scenario,
        "segments": [
            {"start": _t6(s.start), "end": _t6(s.end), "kind": s.kind} for s in report.segments
        ],
        "wehrl_pair": None if report.wehrl_pair is None else [_t6(t) for t in report.wehrl_pair],
        "touches": [_t6(t) for t in report.touches],
        "lambda_at_zero": float(f"{report.lambda_at_zero:.10g}"),
        "eta": None if eta_result is None else float(f"{eta_result.eta:.12g}"),
        "restarts": None if eta_result is None else restarts,
        "seed": None if eta_result is None else seed,
        "tolerances": {
            "zero_tol": zero_tol,
            "marginal_tol": marginal_tol,
            "refine_tol": refine_tol,
            "grid_points": grid_points,
        },
    }


def segment_report_from_dict(d: dict) -> SegmentReport:
    return SegmentReport(
        t_h=d["t_h"],
        t_e=d["t_e"],
        boundaries=list(d["boundaries"]),
        t_s=d["t_s"],
        t_star=d["t_star"],
        segments=[Segment(s["start"], s["end"], s["kind"]) for s in d["segments"]],
        scenario=d["scenario"],
        wehrl_pair=None if d["wehrl_pair"] is None else tuple(d["wehrl_pair"]),
        touches=list(d["touches"]),
        lambda_at_zero=d["lambda_at_zero"],
    )


__all__ = [
    "ThermalPoint",
    "Segment",
    "SegmentReport",
    "SCENARIOS",
    "scan",
    "thermal_points",
    "t_star",
    "find_segments",
    "critical_temperatures",
    "classify_scenario",
    "lambda_min_at",
    "report_dict",
    "segment_report_from_dict",
]
