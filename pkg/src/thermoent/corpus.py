"""Bundled example Hamiltonians and their reference critical temperatures."""

from __future__ import annotations

from importlib import resources

from .fileformat import parse_hamiltonian
from .hamiltonian import HamiltonianSpec

EXAMPLES = (
    "fig1",
    "fig1-variant",
    "fig2-solid",
    "fig2-dashed",
    "fig3",
    "fig3-variant",
    "fig3-inset-1",
    "fig3-inset-1.5",
    "fig4",
)

# Published critical temperatures (3-4 significant digits). "boundaries"
# lists every sign change of the minimal partial-transpose eigenvalue.
REFERENCE = {
    "fig1": dict(
        t_h=0.0, t_e=0.0, boundaries=[0.159, 2.356], t_s=2.356, t_star=5.40,
        scenario="separable-then-entangled",
    ),
    "fig1-variant": dict(t_e=0.0, boundaries=[], t_s=0.0, scenario="trivial"),
    "fig2-solid": dict(t_h=0.73, t_e=0.97, boundaries=[0.97], t_s=0.97, t_star=1.04, scenario="normal"),
    "fig2-dashed": dict(
        t_h=0.377, t_e=1.823, boundaries=[1.823], t_s=1.823, t_star=2.181, scenario="normal"
    ),
    "fig3": dict(
        t_h=0.13, t_e=0.296, boundaries=[0.296, 0.334, 0.571], t_s=0.571, t_star=2.76,
        scenario="abnormal",
    ),
    "fig3-variant": dict(t_e=0.699, boundaries=[0.699], t_s=0.699, scenario="normal"),
    "fig3-inset-1": dict(scenario="abnormal"),
    "fig3-inset-1.5": dict(scenario="abnormal"),
    "fig4": dict(
        t_h=0.0, t_e=0.0, boundaries=[0.0355, 0.467, 0.476, 0.923], t_s=0.923, t_star=2.645,
        scenario="separable-then-entangled",
    ),
}


def example_text(name: str) -> str:
    if name not in EXAMPLES:
        raise KeyError(f"unknown example {name!r}; choose from {', '.join(EXAMPLES)}")
    return resources.files("thermoent").joinpath("data", f"{name}.ham").read_text()


def load_example(name: str) -> HamiltonianSpec:
    return parse_hamiltonian(example_text(name))


def load_all() -> dict[str, HamiltonianSpec]:
    return {name: load_example(name) for name in EXAMPLES}
